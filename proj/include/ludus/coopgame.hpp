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

#ifndef LUDUS_COOPGAME_HPP
#define LUDUS_COOPGAME_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ludus/lp.hpp"
#include "ludus/rational.hpp"
#include "ludus/rng.hpp"

namespace ludus {
namespace coop {

using Mask = uint32_t;

/// TU game on n players: one value per coalition bitmask. Instantiated with
/// double for general analysis and with Rational where exactness matters
/// (LP interop, core membership, Shapley on voting games).
template <class V>
class TuGame {
 public:
  explicit TuGame(int n) : n_(n) {
    if (n < 1 || n > 24) throw std::invalid_argument("TuGame: need 1 <= n <= 24");
    values_.assign(size_t{1} << n, V(0));
  }

  int players() const { return n_; }
  Mask full_mask() const { return (n_ == 32) ? ~Mask{0} : ((Mask{1} << n_) - 1); }
  size_t coalition_count() const { return values_.size(); }

  const V& value(Mask s) const { return values_[s]; }
  V& value(Mask s) { return values_[s]; }
  const V& operator[](Mask s) const { return values_[s]; }
  V& operator[](Mask s) { return values_[s]; }

  const std::vector<V>& raw() const { return values_; }

 private:
  int n_;
  std::vector<V> values_;
};

using TuGameD = TuGame<double>;
using TuGameQ = TuGame<Rational>;

template <class V>
struct value_traits {
  static V tolerance() { return V(0); }
  static bool leq(const V& a, const V& b, const V&) { return a <= b; }
};
template <>
struct value_traits<double> {
  static double tolerance() { return 1e-9; }
  static bool leq(double a, double b, double tol) { return a <= b + tol; }
};

inline double as_double(double v) { return v; }
inline double as_double(const Rational& v) { return v.to_double(); }

inline int popcount(Mask s) { return __builtin_popcount(s); }

/// x(S) for an allocation x.
template <class V>
V mask_sum(const std::vector<V>& x, Mask s) {
  V total(0);
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (s & (Mask{1} << i)) total += x[i];
  }
  return total;
}

// ---- transforms ----

template <class V>
TuGame<V> zero_normalize(const TuGame<V>& v) {
  TuGame<V> r = v;
  V base = v.value(0);
  for (Mask s = 0; s < r.coalition_count(); ++s) r[s] -= base;
  return r;
}

/// v*(S) = v(N) - v(N\S).
template <class V>
TuGame<V> dual_game(const TuGame<V>& v) {
  TuGame<V> r(v.players());
  Mask full = v.full_mask();
  for (Mask s = 0; s <= full; ++s) r[s] = v.value(full) - v.value(full & ~s);
  return r;
}

/// Zeta transform: result(S) = sum of v(T) over T subseteq S.
template <class V>
TuGame<V> mobius_transform(const TuGame<V>& w) {
  TuGame<V> r = w;
  for (int i = 0; i < w.players(); ++i) {
    Mask bit = Mask{1} << i;
    for (Mask s = 0; s < r.coalition_count(); ++s) {
      if (s & bit) r[s] += r[s ^ bit];
    }
  }
  return r;
}

/// Inverse of the zeta transform; outputs the Harsanyi dividends of v.
template <class V>
TuGame<V> mobius_inverse(const TuGame<V>& v) {
  TuGame<V> r = v;
  for (int i = 0; i < v.players(); ++i) {
    Mask bit = Mask{1} << i;
    for (Mask s = 0; s < r.coalition_count(); ++s) {
      if (s & bit) r[s] -= r[s ^ bit];
    }
  }
  return r;
}

/// Coefficients of v over the unanimity basis (nonzero dividends only).
template <class V>
std::map<Mask, V> unanimity_decomposition(const TuGame<V>& v) {
  TuGame<V> d = mobius_inverse(v);
  std::map<Mask, V> coeff;
  for (Mask s = 0; s < d.coalition_count(); ++s) {
    if (!(d[s] == V(0))) coeff[s] = d[s];
  }
  return coeff;
}

// ---- marginal values ----

/// d_i v(S): the change player i (0-based) can effect at S.
template <class V>
V marginal(const TuGame<V>& v, int i, Mask s) {
  if (i < 0 || i >= v.players()) throw std::invalid_argument("marginal: bad player");
  Mask bit = Mask{1} << i;
  if (s & bit) return v.value(s) - v.value(s ^ bit);
  return v.value(s | bit) - v.value(s);
}

/// Primal Monge (marginal) vector of the arrangement pi (a permutation of
/// 0..n-1; pi[k] joins k-th).
template <class V>
std::vector<V> marginal_vector(const TuGame<V>& v, const std::vector<int>& pi) {
  std::vector<V> x(v.players());
  Mask s = 0;
  for (int k = 0; k < v.players(); ++k) {
    Mask bit = Mask{1} << pi[k];
    x[pi[k]] = v.value(s | bit) - v.value(s);
    s |= bit;
  }
  return x;
}

// ---- linear values ----

template <class V>
std::vector<V> shapley(const TuGame<V>& v) {
  const int n = v.players();
  // weight for |S| = s is 1 / (n * binom(n-1, s))
  std::vector<long long> binom(n, 1);
  for (int s = 1; s < n; ++s) binom[s] = binom[s - 1] * (n - s) / s;
  std::vector<V> phi(n, V(0));
  for (int i = 0; i < n; ++i) {
    Mask bit = Mask{1} << i;
    for (Mask s = 0; s < v.coalition_count(); ++s) {
      if (s & bit) continue;
      V w = V(1) / (V(n) * V(binom[popcount(s)]));
      phi[i] += w * (v.value(s | bit) - v.value(s));
    }
  }
  return phi;
}

/// Exact Shapley value as the average marginal vector over all n! orders
/// (enumeration; n <= 9 or so).
template <class V>
std::vector<V> shapley_exhaustive(const TuGame<V>& v) {
  const int n = v.players();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<V> total(n, V(0));
  long long orders = 0;
  do {
    auto x = marginal_vector(v, pi);
    for (int i = 0; i < n; ++i) total[i] += x[i];
    ++orders;
  } while (std::next_permutation(pi.begin(), pi.end()));
  for (auto& t : total) t /= V(orders);
  return total;
}

/// Monte-Carlo Shapley: average of marginal vectors over `samples` orders
/// drawn uniformly with the given seed. Unbiased for shapley(v).
inline std::vector<double> shapley_sampled(const TuGame<double>& v, long long samples,
                                           uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("shapley_sampled: samples < 1");
  Rng rng(seed);
  std::vector<double> total(v.players(), 0.0);
  for (long long it = 0; it < samples; ++it) {
    auto pi = rng.permutation(v.players());
    auto x = marginal_vector(v, pi);
    for (int i = 0; i < v.players(); ++i) total[i] += x[i];
  }
  for (auto& t : total) t /= static_cast<double>(samples);
  return total;
}

template <class V>
std::vector<V> banzhaf(const TuGame<V>& v) {
  const int n = v.players();
  std::vector<V> phi(n, V(0));
  V denom = V(1);
  for (int k = 0; k < n - 1; ++k) denom *= V(2);
  for (int i = 0; i < n; ++i) {
    Mask bit = Mask{1} << i;
    V total(0);
    for (Mask s = 0; s < v.coalition_count(); ++s) {
      if (s & bit) continue;
      total += v.value(s | bit) - v.value(s);
    }
    phi[i] = total / denom;
  }
  return phi;
}

/// Random value: per player i, a probability distribution pi_i over the
/// coalitions S not containing i; the value is the expected marginal.
template <class V>
std::vector<V> random_value(const TuGame<V>& v,
                            const std::vector<std::vector<V>>& pi) {
  const int n = v.players();
  if (static_cast<int>(pi.size()) != n)
    throw std::invalid_argument("random_value: need one distribution per player");
  std::vector<V> out(n, V(0));
  for (int i = 0; i < n; ++i) {
    if (pi[i].size() != v.coalition_count())
      throw std::invalid_argument("random_value: distribution has wrong length");
    Mask bit = Mask{1} << i;
    V total(0);
    for (Mask s = 0; s < v.coalition_count(); ++s) {
      if (s & bit) {
        if (!(pi[i][s] == V(0)))
          throw std::invalid_argument("random_value: mass on coalition containing player");
        continue;
      }
      total += pi[i][s];
      out[i] += pi[i][s] * (v.value(s | bit) - v.value(s));
    }
    if (std::abs(as_double(total - V(1))) > 1e-12)
      throw std::invalid_argument("random_value: distribution does not sum to 1");
  }
  return out;
}

// ---- core ----

enum class CoreMode { Profit, Cost };

/// Checks the 2^n coalition inequalities plus the efficiency equality.
template <class V>
bool core_contains(const TuGame<V>& v, const std::vector<V>& x,
                   CoreMode mode = CoreMode::Profit) {
  if (static_cast<int>(x.size()) != v.players())
    throw std::invalid_argument("core_contains: allocation has wrong length");
  const V tol = value_traits<V>::tolerance();
  V xn = mask_sum(x, v.full_mask());
  if (!(value_traits<V>::leq(xn, v.value(v.full_mask()), tol) &&
        value_traits<V>::leq(v.value(v.full_mask()), xn, tol)))
    return false;
  for (Mask s = 0; s <= v.full_mask(); ++s) {
    V xs = mask_sum(x, s);
    bool ok = (mode == CoreMode::Profit) ? value_traits<V>::leq(v.value(s), xs, tol)
                                         : value_traits<V>::leq(xs, v.value(s), tol);
    if (!ok) return false;
  }
  return true;
}

struct CoreReport {
  bool nonempty = false;
  std::vector<Rational> witness;  // allocation with x(N) = v(N) when nonempty
  Rational deficit;               // optimum - v(N) when empty
};

/// LP feasibility test: minimize x(N) subject to x(S) >= v(S) for all
/// nonempty S. Free allocations are handled by a positive/negative split.
/// The exact LP route is capped at n <= 16 (2^n constraint rows).
inline CoreReport core_nonempty(const TuGame<Rational>& v) {
  const int n = v.players();
  if (n > 16) throw std::invalid_argument("core_nonempty: n > 16 not supported exactly");
  const Mask full = v.full_mask();
  lp::LinearProgram p;
  p.sense = lp::Sense::Minimize;
  p.objective.assign(2 * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    p.objective[i] = Rational(1);
    p.objective[n + i] = Rational(-1);
  }
  // x(S) >= v(S)  becomes  -x(S) <= -v(S)
  for (Mask s = 1; s <= full; ++s) {
    std::vector<Rational> row(2 * n, Rational(0));
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) {
        row[i] = Rational(-1);
        row[n + i] = Rational(1);
      }
    }
    p.constraint_matrix.push_back(std::move(row));
    p.rhs.push_back(-v.value(s));
  }
  auto sol = lp::solve(p);
  if (sol.status != lp::Status::Optimal)
    throw std::runtime_error("core_nonempty: core LP should always be solvable");
  CoreReport rep;
  Rational opt = sol.value;
  rep.deficit = opt - v.value(full);
  rep.nonempty = !(rep.deficit > Rational(0));
  if (rep.nonempty) {
    rep.witness.resize(n);
    for (int i = 0; i < n; ++i) rep.witness[i] = sol.primal[i] - sol.primal[n + i];
  }
  return rep;
}

// ---- Monge algorithm ----

/// Arrangement sorting c descending; equal components by ascending index.
template <class V>
std::vector<int> monge_order(const std::vector<V>& c) {
  std::vector<int> pi(c.size());
  std::iota(pi.begin(), pi.end(), 0);
  std::stable_sort(pi.begin(), pi.end(), [&c](int a, int b) { return c[b] < c[a]; });
  return pi;
}

template <class V>
std::vector<V> monge_primal(const TuGame<V>& v, const std::vector<V>& c) {
  if (static_cast<int>(c.size()) != v.players())
    throw std::invalid_argument("monge_primal: c has wrong length");
  return marginal_vector(v, monge_order(c));
}

/// Dual Monge vector, supported on the chain sets of the arrangement.
template <class V>
std::map<Mask, V> monge_dual(const TuGame<V>& v, const std::vector<V>& c) {
  if (static_cast<int>(c.size()) != v.players())
    throw std::invalid_argument("monge_dual: c has wrong length");
  auto pi = monge_order(c);
  std::map<Mask, V> y;
  Mask s = 0;
  for (size_t k = 0; k < pi.size(); ++k) {
    s |= Mask{1} << pi[k];
    y[s] = (k + 1 < pi.size()) ? (c[pi[k]] - c[pi[k + 1]]) : c[pi[k]];
  }
  return y;
}

/// [v](c) = c . x^pi = sum_S v(S) y^pi_S.
template <class V>
V monge_extension(const TuGame<V>& v, const std::vector<V>& c) {
  auto x = monge_primal(v, c);
  V total(0);
  for (int i = 0; i < v.players(); ++i) total += c[i] * x[i];
  return total;
}

/// Choquet integral of f >= 0 against v (ascending tail-set telescoping).
template <class V>
V choquet_integral(const TuGame<V>& v, const std::vector<V>& f) {
  if (static_cast<int>(f.size()) != v.players())
    throw std::invalid_argument("choquet_integral: f has wrong length");
  for (const auto& x : f) {
    if (x < V(0)) throw std::invalid_argument("choquet_integral: f must be nonnegative");
  }
  std::vector<int> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&f](int a, int b) { return f[a] < f[b]; });
  // A_k = players ranked k..n-1 (upper tail), A_n = empty
  Mask tail = 0;
  for (int i : order) tail |= Mask{1} << i;
  V total(0);
  for (size_t k = 0; k < order.size(); ++k) {
    Mask next = tail & ~(Mask{1} << order[k]);
    total += f[order[k]] * (v.value(tail) - v.value(next));
    tail = next;
  }
  return total;
}

// ---- super/submodularity ----

template <class V>
bool is_supermodular_allpairs(const TuGame<V>& v) {
  if (v.players() > 12)
    throw std::invalid_argument("is_supermodular_allpairs: n too large, use local check");
  const Mask full = v.full_mask();
  for (Mask s = 0; s <= full; ++s) {
    for (Mask t = s; t <= full; ++t) {
      if (v.value(s & t) + v.value(s | t) < v.value(s) + v.value(t)) return false;
    }
  }
  return true;
}

template <class V>
bool is_supermodular_local(const TuGame<V>& v) {
  const int n = v.players();
  const Mask full = v.full_mask();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mask ij = (Mask{1} << i) | (Mask{1} << j);
      for (Mask s = 0; s <= full; ++s) {
        if (s & ij) continue;
        if (v.value(s | (Mask{1} << i)) + v.value(s | (Mask{1} << j)) >
            v.value(s) + v.value(s | ij))
          return false;
      }
    }
  }
  return true;
}

template <class V>
bool is_supermodular(const TuGame<V>& v) {
  return v.players() <= 12 ? is_supermodular_allpairs(v) : is_supermodular_local(v);
}

template <class V>
bool is_submodular(const TuGame<V>& v) {
  TuGame<V> neg(v.players());
  for (Mask s = 0; s < v.coalition_count(); ++s) neg[s] = V(0) - v.value(s);
  return is_supermodular(neg);
}

// ---- partition equilibria ----

/// Utility of player i when N splits into (S, N\S): the player's marginal
/// within its own side of the partition.
template <class V>
V partition_utility(const TuGame<V>& v, int i, Mask s) {
  Mask bit = Mask{1} << i;
  Mask side = (s & bit) ? s : (v.full_mask() & ~s);
  return v.value(side) - v.value(side & ~bit);
}

/// Checks whether the split (S, N\S) is stable against single-player side
/// switches. Supermodular games make the grand coalition a Profit (gain)
/// equilibrium; zero-normalized submodular games make it a Cost one.
template <class V>
bool is_partition_equilibrium(const TuGame<V>& v, Mask s, CoreMode mode) {
  for (int i = 0; i < v.players(); ++i) {
    V here = partition_utility(v, i, s);
    V there = partition_utility(v, i, s ^ (Mask{1} << i));
    bool improves = (mode == CoreMode::Profit) ? (here < there) : (there < here);
    if (improves) return false;
  }
  return true;
}

// ---- generators ----

template <class V>
TuGame<V> unanimity_game(int n, Mask t) {
  TuGame<V> v(n);
  for (Mask s = 0; s < v.coalition_count(); ++s) v[s] = ((s & t) == t) ? V(1) : V(0);
  return v;
}

template <class V>
TuGame<V> dirac_game(int n, Mask t) {
  TuGame<V> v(n);
  v[t] = V(1);
  return v;
}

template <class V>
TuGame<V> additive_game(const std::vector<V>& weights) {
  TuGame<V> v(static_cast<int>(weights.size()));
  for (Mask s = 0; s < v.coalition_count(); ++s) v[s] = mask_sum(weights, s);
  return v;
}

template <class V>
TuGame<V> voting_game(const std::vector<V>& weights, const V& threshold) {
  for (const auto& w : weights) {
    if (w < V(0)) throw std::invalid_argument("voting_game: negative weight");
  }
  TuGame<V> v(static_cast<int>(weights.size()));
  for (Mask s = 0; s < v.coalition_count(); ++s)
    v[s] = (mask_sum(weights, s) >= threshold) ? V(1) : V(0);
  return v;
}

template <class V>
struct NetworkGame {
  TuGame<V> game;                 // cost game c(S), n users
  std::vector<V> greedy_charges;  // the greedy chain's marginal charges
  std::vector<int> greedy_order;  // user added at each greedy step (0-based)
};

/// Connection cost game: cost[i][j] is the link cost between nodes i and j,
/// node 0 is the supply; c(S) = minimum spanning connection cost of the
/// users S plus the supply node.
template <class V>
NetworkGame<V> network_game(const std::vector<std::vector<V>>& cost) {
  const int m = static_cast<int>(cost.size());  // nodes incl. supply
  if (m < 1) throw std::invalid_argument("network_game: empty cost matrix");
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("network_game: cost matrix not square");
    for (const auto& x : row) {
      if (x < V(0)) throw std::invalid_argument("network_game: negative cost");
    }
  }
  const int n = m - 1;  // users 1..n, stored 0-based in the game
  NetworkGame<V> out{TuGame<V>(n), {}, {}};
  // Prim's algorithm over node set {0} + S for every coalition S.
  for (Mask s = 0; s < out.game.coalition_count(); ++s) {
    std::vector<int> nodes{0};
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) nodes.push_back(i + 1);
    }
    std::vector<bool> in_tree(nodes.size(), false);
    std::vector<V> best(nodes.size(), V(0));
    std::vector<bool> has_best(nodes.size(), false);
    in_tree[0] = true;
    for (size_t k = 1; k < nodes.size(); ++k) {
      best[k] = cost[0][nodes[k]];
      has_best[k] = true;
    }
    V total(0);
    for (size_t added = 1; added < nodes.size(); ++added) {
      size_t pick = 0;
      for (size_t k = 1; k < nodes.size(); ++k) {
        if (in_tree[k] || !has_best[k]) continue;
        if (pick == 0 || best[k] < best[pick]) pick = k;
      }
      total += best[pick];
      in_tree[pick] = true;
      for (size_t k = 1; k < nodes.size(); ++k) {
        if (in_tree[k]) continue;
        V c2 = cost[nodes[pick]][nodes[k]];
        if (!has_best[k] || c2 < best[k]) {
          best[k] = c2;
          has_best[k] = true;
        }
      }
    }
    out.game[s] = total;
  }
  // Greedy chain (G_0..G_n): repeatedly add the cheapest next user.
  Mask chain = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (chain & (Mask{1} << i)) continue;
      if (pick < 0 || out.game[chain | (Mask{1} << i)] < out.game[chain | (Mask{1} << pick)])
        pick = i;
    }
    out.greedy_charges.push_back(out.game[chain | (Mask{1} << pick)] - out.game[chain]);
    out.greedy_order.push_back(pick);
    chain |= Mask{1} << pick;
  }
  // report charges in player order
  std::vector<V> by_player(n, V(0));
  for (int step = 0; step < n; ++step) by_player[out.greedy_order[step]] = out.greedy_charges[step];
  out.greedy_charges = std::move(by_player);
  return out;
}

struct ProductionGame {
  TuGame<Rational> game;
  std::vector<Rational> shadow_prices;      // optimal dual of the grand coalition LP
  std::vector<Rational> market_allocation;  // w*_s = sum_i y*_i b_{is}
};

/// Linear production game: v(S) = max c.x s.t. A x <= pooled resources of S.
/// requirements: m x k; c: k; holdings: m x n (column s = player s's stock).
inline ProductionGame linear_production_game(
    const std::vector<std::vector<Rational>>& requirements,
    const std::vector<Rational>& prices,
    const std::vector<std::vector<Rational>>& holdings) {
  const size_t m = requirements.size();
  if (holdings.size() != m)
    throw std::invalid_argument("linear_production_game: holdings rows != materials");
  const size_t n = holdings.empty() ? 0 : holdings[0].size();
  ProductionGame out{TuGame<Rational>(static_cast<int>(n)), {}, {}};
  lp::LinearProgram p;
  p.sense = lp::Sense::Maximize;
  p.objective = prices;
  p.constraint_matrix = requirements;
  p.rhs.assign(m, Rational(0));
  for (Mask s = 0; s < out.game.coalition_count(); ++s) {
    for (size_t i = 0; i < m; ++i) {
      Rational pooled(0);
      for (size_t j = 0; j < n; ++j) {
        if (s & (Mask{1} << j)) pooled += holdings[i][j];
      }
      p.rhs[i] = pooled;
    }
    auto sol = lp::solve(p);
    if (sol.status == lp::Status::Unbounded)
      throw std::domain_error("linear_production_game: unbounded production LP");
    if (sol.status == lp::Status::Infeasible)
      throw std::domain_error("linear_production_game: infeasible production LP");
    out.game[s] = sol.value;
    if (s == out.game.full_mask()) {
      out.shadow_prices = sol.dual;
      out.market_allocation.assign(n, Rational(0));
      for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < m; ++i)
          out.market_allocation[j] += sol.dual[i] * holdings[i][j];
      }
    }
  }
  return out;
}

/// Minimum of c.x over the core (supermodular games have the Monge value).
inline Rational core_minimum(const TuGame<Rational>& v, const std::vector<Rational>& c) {
  const int n = v.players();
  if (n > 16) throw std::invalid_argument("core_minimum: n > 16 not supported exactly");
  const Mask full = v.full_mask();
  lp::LinearProgram p;
  p.sense = lp::Sense::Minimize;
  p.objective.assign(2 * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    p.objective[i] = c[i];
    p.objective[n + i] = Rational(0) - c[i];
  }
  auto add_row = [&p, n](Mask s, int sign, const Rational& rhs) {
    std::vector<Rational> row(2 * n, Rational(0));
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) {
        row[i] = Rational(sign);
        row[n + i] = Rational(-sign);
      }
    }
    p.constraint_matrix.push_back(std::move(row));
    p.rhs.push_back(rhs);
  };
  for (Mask s = 1; s < full; ++s) add_row(s, -1, -v.value(s));  // x(S) >= v(S)
  add_row(full, 1, v.value(full));                              // x(N) <= v(N)
  add_row(full, -1, -v.value(full));                            // x(N) >= v(N)
  auto sol = lp::solve(p);
  if (sol.status != lp::Status::Optimal)
    throw std::domain_error("core_minimum: core is empty or LP failed");
  return sol.value;
}

}  // namespace coop
}  // namespace ludus

#endif  // LUDUS_COOPGAME_HPP
