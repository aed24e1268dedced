// Copyright 2026 The ludus authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUDUS_BOLTZMANN_HPP
#define LUDUS_BOLTZMANN_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ludus/coopgame.hpp"
#include "ludus/rng.hpp"

namespace ludus {
namespace boltz {

/// b_S proportional to e^{v_S T}. T = +infinity concentrates uniformly on
/// the maximizers, -infinity on the minimizers, 0 is uniform.
struct BoltzmannDist {
  double parameter = 0.0;  // T (may be +-infinity)
  std::vector<double> probabilities;
  double log_partition = 0.0;  // ln Z_T (infinite at the limits)
};

inline BoltzmannDist boltzmann_distribution(const std::vector<double>& v, double t) {
  if (v.empty()) throw std::invalid_argument("boltzmann_distribution: empty potential");
  BoltzmannDist d;
  d.parameter = t;
  d.probabilities.assign(v.size(), 0.0);
  if (std::isinf(t)) {
    double target = v[0];
    for (double x : v) target = (t > 0) ? std::max(target, x) : std::min(target, x);
    size_t count = 0;
    for (double x : v) {
      if (x == target) ++count;
    }
    for (size_t s = 0; s < v.size(); ++s) {
      if (v[s] == target) d.probabilities[s] = 1.0 / static_cast<double>(count);
    }
    d.log_partition = std::numeric_limits<double>::infinity();
    return d;
  }
  // max-shift for numerical stability
  double m = v[0] * t;
  for (double x : v) m = std::max(m, x * t);
  double total = 0.0;
  for (size_t s = 0; s < v.size(); ++s) {
    d.probabilities[s] = std::exp(v[s] * t - m);
    total += d.probabilities[s];
  }
  for (auto& p : d.probabilities) p /= total;
  d.log_partition = m + std::log(total);
  return d;
}

inline double expected_value(const BoltzmannDist& d, const std::vector<double>& v) {
  if (v.size() != d.probabilities.size())
    throw std::invalid_argument("expected_value: length mismatch");
  double mu = 0.0;
  for (size_t s = 0; s < v.size(); ++s) mu += v[s] * d.probabilities[s];
  return mu;
}

/// Natural-log entropy H(b) = -sum b ln b, with 0 ln 0 = 0.
inline double entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

inline double entropy(const BoltzmannDist& d) { return entropy(d.probabilities); }

inline double mean_at(const std::vector<double>& v, double t) {
  double m = v[0] * t;
  for (double x : v) m = std::max(m, x * t);
  double total = 0.0, weighted = 0.0;
  for (double x : v) {
    double w = std::exp(x * t - m);
    total += w;
    weighted += x * w;
  }
  return weighted / total;
}

/// Unique parameter T with mu(T) = target (mu is nondecreasing; strictly
/// increasing unless v is constant). Returns +-infinity at the extreme
/// targets and 0 for constant potentials.
inline double temperature_solve(const std::vector<double>& v, double target) {
  if (v.empty()) throw std::invalid_argument("temperature_solve: empty potential");
  double lo = v[0], hi = v[0];
  for (double x : v) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (target < lo || target > hi)
    throw std::invalid_argument("temperature_solve: target outside [min v, max v]");
  if (lo == hi) return 0.0;
  if (target == hi) return std::numeric_limits<double>::infinity();
  if (target == lo) return -std::numeric_limits<double>::infinity();
  double t_lo = -1.0, t_hi = 1.0;
  while (mean_at(v, t_lo) > target && t_lo > -1e15) t_lo *= 2.0;
  while (mean_at(v, t_hi) < target && t_hi < 1e15) t_hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (t_lo + t_hi);
    if (mean_at(v, mid) < target) {
      t_lo = mid;
    } else {
      t_hi = mid;
    }
  }
  return 0.5 * (t_lo + t_hi);
}

/// Thermodynamic form b_S proportional to e^{-v_S / (k_B theta)} with
/// temperature theta > 0; a reparametrization of the T-form via
/// T = -1/(k_B theta).
inline BoltzmannDist physical_distribution(const std::vector<double>& v, double theta,
                                           double boltzmann_constant = 1.0) {
  if (!(theta > 0.0) || !(boltzmann_constant > 0.0))
    throw std::invalid_argument("physical_distribution: theta and k_B must be > 0");
  return boltzmann_distribution(v, -1.0 / (boltzmann_constant * theta));
}

/// Marginal conventions for the Boltzmann value. MarginalDef uses
/// d_i v(S) (sign-symmetric in membership); SymmetricDiff uses
/// v(S xor {i}) - v(S), which negates the marginal for members.
enum class Convention { MarginalDef, SymmetricDiff };

/// Expected marginal under the Boltzmann distribution on all coalitions.
inline std::vector<double> boltzmann_value(const coop::TuGame<double>& game, double t,
                                           Convention conv = Convention::MarginalDef) {
  const int n = game.players();
  BoltzmannDist d = boltzmann_distribution(game.raw(), t);
  std::vector<double> phi(n, 0.0);
  for (coop::Mask s = 0; s < game.coalition_count(); ++s) {
    if (d.probabilities[s] == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      double dv = (conv == Convention::MarginalDef)
                      ? coop::marginal(game, i, s)
                      : game.value(s ^ (coop::Mask{1} << i)) - game.value(s);
      phi[i] += dv * d.probabilities[s];
    }
  }
  return phi;
}

// ---- Metropolis dynamics ----

/// Joint strategy space of a finite set of agents; states are mixed-radix
/// flat indices with agent 0 least significant. For a coalition lattice
/// (all strategy counts 2) the flat index IS the coalition bitmask.
struct ProfileSpace {
  std::vector<int> strategy_counts;

  size_t state_count() const {
    size_t total = 1;
    for (int k : strategy_counts) total *= static_cast<size_t>(k);
    return total;
  }
  int agent_count() const { return static_cast<int>(strategy_counts.size()); }
  int digit(size_t state, int agent) const {
    for (int a = 0; a < agent; ++a) state /= static_cast<size_t>(strategy_counts[a]);
    return static_cast<int>(state % static_cast<size_t>(strategy_counts[agent]));
  }
  size_t with_digit(size_t state, int agent, int value) const {
    size_t stride = 1;
    for (int a = 0; a < agent; ++a) stride *= static_cast<size_t>(strategy_counts[a]);
    int cur = digit(state, agent);
    return state + (static_cast<size_t>(value) - static_cast<size_t>(cur)) * stride;
  }

  static ProfileSpace coalition_lattice(int players) {
    ProfileSpace s;
    s.strategy_counts.assign(static_cast<size_t>(players), 2);
    return s;
  }
};

struct MetropolisResult {
  std::vector<size_t> trajectory;     // visited states, initial state first
  std::vector<double> empirical;      // tail distribution (burn-in discarded)
  size_t accepted = 0;
};

namespace detail {

inline void check_chain_inputs(const ProfileSpace& space, const std::vector<double>& v,
                               const std::vector<double>& agent_probs,
                               const std::vector<std::vector<double>>& proposal_probs) {
  if (v.size() != space.state_count())
    throw std::invalid_argument("metropolis: potential has wrong length");
  if (static_cast<int>(agent_probs.size()) != space.agent_count())
    throw std::invalid_argument("metropolis: one pick probability per agent required");
  for (double p : agent_probs) {
    if (!(p > 0.0)) throw std::invalid_argument("metropolis: agent probabilities must be > 0");
  }
  if (static_cast<int>(proposal_probs.size()) != space.agent_count())
    throw std::invalid_argument("metropolis: one proposal distribution per agent required");
  for (int a = 0; a < space.agent_count(); ++a) {
    if (static_cast<int>(proposal_probs[a].size()) != space.strategy_counts[a])
      throw std::invalid_argument("metropolis: proposal distribution length mismatch");
    for (double q : proposal_probs[a]) {
      if (!(q > 0.0))
        throw std::invalid_argument("metropolis: proposal probabilities must be > 0");
    }
  }
}

inline size_t pick_index(const std::vector<double>& weights, double total, Rng* rng) {
  double u = rng->next_double() * total;
  double acc = 0.0;
  for (size_t i = 0; i + 1 < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace detail

/// Simulates the coalition/strategy formation chain: pick an agent, let it
/// propose a strategy, always accept improvements, accept deteriorations
/// with probability e^{(v(new)-v(old)) T}. T >= 0.
inline MetropolisResult metropolis_chain(const ProfileSpace& space,
                                         const std::vector<double>& v, double t,
                                         const std::vector<double>& agent_probs,
                                         const std::vector<std::vector<double>>& proposal_probs,
                                         long long steps, uint64_t seed,
                                         size_t initial_state = 0,
                                         double burn_in = 0.2) {
  detail::check_chain_inputs(space, v, agent_probs, proposal_probs);
  if (t < 0.0) throw std::invalid_argument("metropolis: T must be >= 0");
  if (initial_state >= space.state_count())
    throw std::invalid_argument("metropolis: initial state out of range");
  double p_total = 0.0;
  for (double p : agent_probs) p_total += p;
  std::vector<double> q_totals;
  for (const auto& q : proposal_probs) {
    double qt = 0.0;
    for (double x : q) qt += x;
    q_totals.push_back(qt);
  }
  Rng rng(seed);
  MetropolisResult out;
  out.trajectory.reserve(static_cast<size_t>(steps) + 1);
  out.trajectory.push_back(initial_state);
  size_t state = initial_state;
  for (long long step = 0; step < steps; ++step) {
    int agent = static_cast<int>(detail::pick_index(agent_probs, p_total, &rng));
    int proposal = static_cast<int>(
        detail::pick_index(proposal_probs[agent], q_totals[agent], &rng));
    size_t candidate = space.with_digit(state, agent, proposal);
    double delta = v[candidate] - v[state];
    bool accept = delta > 0.0 || rng.next_double() < std::exp(delta * t);
    if (accept) {
      if (candidate != state) ++out.accepted;
      state = candidate;
    }
    out.trajectory.push_back(state);
  }
  size_t skip = static_cast<size_t>(burn_in * static_cast<double>(out.trajectory.size()));
  out.empirical.assign(space.state_count(), 0.0);
  size_t counted = out.trajectory.size() - skip;
  for (size_t k = skip; k < out.trajectory.size(); ++k) out.empirical[out.trajectory[k]] += 1.0;
  for (auto& e : out.empirical) e /= static_cast<double>(counted);
  return out;
}

/// The chain's exact one-step transition matrix, row-stochastic
/// (entry [x][y] = probability of moving x -> y). Small spaces only.
inline std::vector<std::vector<double>> metropolis_transition_matrix(
    const ProfileSpace& space, const std::vector<double>& v, double t,
    const std::vector<double>& agent_probs,
    const std::vector<std::vector<double>>& proposal_probs) {
  detail::check_chain_inputs(space, v, agent_probs, proposal_probs);
  if (t < 0.0) throw std::invalid_argument("metropolis: T must be >= 0");
  const size_t states = space.state_count();
  if (states > 4096)
    throw std::invalid_argument("metropolis_transition_matrix: space too large");
  double p_total = 0.0;
  for (double p : agent_probs) p_total += p;
  std::vector<std::vector<double>> m(states, std::vector<double>(states, 0.0));
  for (size_t x = 0; x < states; ++x) {
    for (int a = 0; a < space.agent_count(); ++a) {
      double q_total = 0.0;
      for (double q : proposal_probs[a]) q_total += q;
      for (int y = 0; y < space.strategy_counts[a]; ++y) {
        double rate = (agent_probs[a] / p_total) * (proposal_probs[a][y] / q_total);
        size_t to = space.with_digit(x, a, y);
        double delta = v[to] - v[x];
        double accept = delta > 0.0 ? 1.0 : std::exp(delta * t);
        m[x][to] += rate * accept;
        m[x][x] += rate * (1.0 - accept);
      }
    }
  }
  return m;
}

struct AnnealingResult {
  size_t best_state = 0;
  double best_value = 0.0;
  size_t final_state = 0;
};

/// Single-agent Metropolis with a nondecreasing schedule step -> T; returns
/// the best state visited.
inline AnnealingResult simulated_annealing(const std::vector<double>& v,
                                           const std::function<double(long long)>& schedule,
                                           long long steps, uint64_t seed,
                                           size_t initial_state = 0) {
  if (v.empty()) throw std::invalid_argument("simulated_annealing: empty potential");
  if (initial_state >= v.size())
    throw std::invalid_argument("simulated_annealing: initial state out of range");
  Rng rng(seed);
  AnnealingResult out;
  size_t state = initial_state;
  out.best_state = state;
  out.best_value = v[state];
  double prev_t = -std::numeric_limits<double>::infinity();
  for (long long step = 0; step < steps; ++step) {
    double t = schedule(step);
    if (t < prev_t) throw std::invalid_argument("simulated_annealing: schedule decreased");
    if (t < 0.0) throw std::invalid_argument("simulated_annealing: T must be >= 0");
    prev_t = t;
    size_t candidate = rng.next_below(v.size());
    double delta = v[candidate] - v[state];
    if (delta > 0.0 || rng.next_double() < std::exp(delta * t)) state = candidate;
    if (v[state] > out.best_value) {
      out.best_value = v[state];
      out.best_state = state;
    }
  }
  out.final_state = state;
  return out;
}

/// Geometric annealing schedule T_t = t0 * growth^t (growth >= 1).
inline std::function<double(long long)> geometric_schedule(double t0, double growth) {
  if (t0 < 0.0 || growth < 1.0)
    throw std::invalid_argument("geometric_schedule: need t0 >= 0 and growth >= 1");
  return [t0, growth](long long step) { return t0 * std::pow(growth, static_cast<double>(step)); };
}

}  // namespace boltz
}  // namespace ludus

#endif  // LUDUS_BOLTZMANN_HPP
