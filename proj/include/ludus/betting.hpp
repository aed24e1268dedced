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

#ifndef LUDUS_BETTING_HPP
#define LUDUS_BETTING_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ludus {
namespace bet {

/// Win probability p, payoff multiple rho per unit staked on success,
/// bankroll B. The surplus rate is r = rho - 1.
struct SimpleBet {
  double p = 0.5;
  double rho = 2.0;
  double bankroll = 1.0;

  double q() const { return 1.0 - p; }
  double surplus() const { return rho - 1.0; }

  void validate() const {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("SimpleBet: p outside [0,1]");
    if (rho < 0.0) throw std::invalid_argument("SimpleBet: rho < 0");
    if (!(bankroll > 0.0)) throw std::invalid_argument("SimpleBet: bankroll <= 0");
  }
};

/// Expected log bankroll when the fraction a of it is staked:
/// U(a) = q ln(1-a) + p ln(1 + r a) + ln B.  U(1) = -infinity when q > 0.
inline double log_utility(const SimpleBet& bet, double a) {
  bet.validate();
  if (a < 0.0 || a > 1.0) throw std::invalid_argument("log_utility: a outside [0,1]");
  double lnb = std::log(bet.bankroll);
  double u = lnb;
  if (bet.q() > 0.0) {
    if (a == 1.0) return -std::numeric_limits<double>::infinity();
    u += bet.q() * std::log(1.0 - a);
  }
  if (bet.p > 0.0) u += bet.p * std::log(1.0 + bet.surplus() * a);
  return u;
}

/// The fortune-formula fraction p - q/r, clamped to [0,1]. A bet with no
/// surplus is declined entirely (unless it cannot lose).
inline double kelly_fraction(const SimpleBet& bet) {
  bet.validate();
  if (bet.q() == 0.0) return 1.0;
  if (bet.surplus() <= 0.0) return 0.0;
  double a = bet.p - bet.q() / bet.surplus();
  if (a < 0.0) return 0.0;
  if (a > 1.0) return 1.0;
  return a;
}

/// Odds 1:rho with zero expected gain: rho = (1 - p) / p.
inline double fair_odds(double p) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("fair_odds: need 0 < p <= 1");
  return (1.0 - p) / p;
}

/// Expected gain per unit staked at odds 1:rho when the event has
/// probability p: (rho + 1) p - 1.
inline double expected_gain(double p, double rho) { return (rho + 1.0) * p - 1.0; }

/// k mutually exclusive outcomes with probabilities p_i and odds 1:rho_i.
struct AlternativesBet {
  std::vector<double> p;
  std::vector<double> rho;

  void validate() const {
    if (p.empty() || p.size() != rho.size())
      throw std::invalid_argument("AlternativesBet: sizes differ or empty");
    double total = 0.0;
    for (double x : p) {
      if (!(x > 0.0)) throw std::invalid_argument("AlternativesBet: p_i must be > 0");
      total += x;
    }
    if (std::abs(total - 1.0) > 1e-9)
      throw std::invalid_argument("AlternativesBet: probabilities do not sum to 1");
    for (double x : rho) {
      if (!(x > 0.0)) throw std::invalid_argument("AlternativesBet: rho_i must be > 0");
    }
  }
};

struct AlternativesPlan {
  std::vector<double> allocation;  // a* = p, independent of the odds
  double log_utility = 0.0;        // U(p,p) = sum p_i ln(p_i rho_i)
};

/// Bet your belief: the log-optimal split is the probability estimate
/// itself; under fair odds rho_i = 1/p_i the optimal utility is 0.
inline AlternativesPlan optimal_alternatives(const AlternativesBet& bet) {
  bet.validate();
  AlternativesPlan plan;
  plan.allocation = bet.p;
  for (size_t i = 0; i < bet.p.size(); ++i)
    plan.log_utility += bet.p[i] * std::log(bet.p[i] * bet.rho[i]);
  return plan;
}

/// Expected log utility of an arbitrary full-investment split a under
/// belief p (diverges to -infinity when some a_i = 0 with p_i > 0).
inline double alternatives_utility(const AlternativesBet& bet, const std::vector<double>& a) {
  bet.validate();
  if (a.size() != bet.p.size())
    throw std::invalid_argument("alternatives_utility: allocation length mismatch");
  double u = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) return -std::numeric_limits<double>::infinity();
    u += bet.p[i] * std::log(a[i] * bet.rho[i]);
  }
  return u;
}

struct GrowthReport {
  std::vector<double> allocation;  // s / n
  double growth = 1.0;             // prod (s_i rho_i)^{s_i} / n^n
  double log_growth = 0.0;
};

/// Hindsight-optimal proportional strategy for observed frequencies.
inline GrowthReport growth_from_frequencies(const std::vector<long long>& counts,
                                            const std::vector<double>& rho) {
  if (counts.empty() || counts.size() != rho.size())
    throw std::invalid_argument("growth_from_frequencies: sizes differ or empty");
  long long n = 0;
  for (long long s : counts) {
    if (s < 0) throw std::invalid_argument("growth_from_frequencies: negative count");
    n += s;
  }
  if (n == 0) throw std::invalid_argument("growth_from_frequencies: all counts zero");
  GrowthReport rep;
  rep.allocation.resize(counts.size());
  double logb = -static_cast<double>(n) * std::log(static_cast<double>(n));
  for (size_t i = 0; i < counts.size(); ++i) {
    rep.allocation[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
    if (counts[i] > 0)
      logb += static_cast<double>(counts[i]) * std::log(static_cast<double>(counts[i]) * rho[i]);
  }
  rep.log_growth = logb;
  rep.growth = std::exp(logb);
  return rep;
}

struct DoublingReport {
  int max_rounds = 0;      // k = floor(log2 B)
  double ruin_prob = 1.0;  // (1-w)^k
  double success_prob = 0.0;
};

/// Doubling strategy with budget B and per-round win probability w: at most
/// k = floor(log2 B) doublings are affordable; the whole budget is lost
/// with probability (1-w)^k, otherwise the net gain is +1.
inline DoublingReport doubling_analysis(double budget, double win_prob) {
  if (budget < 1.0) throw std::invalid_argument("doubling_analysis: budget < 1");
  if (!(win_prob > 0.0) || !(win_prob < 1.0))
    throw std::invalid_argument("doubling_analysis: need 0 < w < 1");
  DoublingReport rep;
  int k = 0;
  double cap = 2.0;  // 2^(k+1)
  while (cap <= budget) {
    cap *= 2.0;
    ++k;
  }
  rep.max_rounds = k;
  rep.ruin_prob = std::pow(1.0 - win_prob, k);
  rep.success_prob = 1.0 - rep.ruin_prob;
  return rep;
}

struct DoublingAccounting {
  std::vector<long long> stakes;  // 1, 2, 4, ...
  long long lost_before = 0;      // sum of stakes before the winning round
  long long payout = 0;           // 2^round
  long long net = 0;              // always +1
};

/// Cash accounting when the win comes exactly at `round` (1-based).
inline DoublingAccounting doubling_accounting(int round) {
  if (round < 1 || round > 62) throw std::invalid_argument("doubling_accounting: bad round");
  DoublingAccounting acc;
  for (int j = 0; j < round; ++j) acc.stakes.push_back(1ll << j);
  for (int j = 0; j + 1 < round; ++j) acc.lost_before += acc.stakes[j];
  acc.payout = 2ll << (round - 1);  // winning stake pays 2x
  acc.net = acc.payout - acc.lost_before - acc.stakes.back();
  return acc;
}

struct StPetersburgReport {
  double expected_return_partial = 0.0;  // sum_{n<=N} 2^n / 2^n = N
  double log2_utility_partial = 0.0;     // sum_{n<=N} n / 2^n  -> 2
  double prob_return_covers_fee = 0.0;   // exact tail probability
};

/// Truncated St. Petersburg diagnostics. The expected return grows without
/// bound (one unit per toss horizon) while the expected log2 utility stays
/// below 2. The tail probability of covering the fee is exact, not
/// truncated: for a fee of 100 it is 1/64 (about 1.6%, not below 1%).
inline StPetersburgReport st_petersburg(double fee, int n_max) {
  if (n_max < 1) throw std::invalid_argument("st_petersburg: n_max < 1");
  StPetersburgReport rep;
  rep.expected_return_partial = static_cast<double>(n_max);
  for (int n = 1; n <= n_max; ++n)
    rep.log2_utility_partial += static_cast<double>(n) / std::pow(2.0, n);
  if (fee <= 2.0) {
    rep.prob_return_covers_fee = 1.0;
  } else {
    int n0 = 1;
    double cap = 2.0;
    while (cap < fee) {
      cap *= 2.0;
      ++n0;
    }
    rep.prob_return_covers_fee = std::pow(2.0, 1 - n0);
  }
  return rep;
}

// ---- information ----

/// Information content of an event observed with probability p, in bits.
inline double information(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("information: p outside [0,1]");
  if (p == 0.0) return std::numeric_limits<double>::infinity();
  return -std::log2(p);
}

/// Base-2 entropy with the 0 log 0 = 0 convention.
inline double entropy2(const std::vector<double>& dist) {
  double h = 0.0;
  for (double p : dist) {
    if (p < 0.0) throw std::invalid_argument("entropy2: negative probability");
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

/// Communication channel: trust[x][y] is the probability that the truth is
/// x when y is reported (every column y is a distribution over x), together
/// with a distribution over the reports y.
struct Channel {
  std::vector<std::vector<double>> trust;
  std::vector<double> input;

  size_t size() const { return trust.size(); }

  void validate() const {
    const size_t k = trust.size();
    if (k == 0) throw std::invalid_argument("Channel: empty");
    for (const auto& row : trust) {
      if (row.size() != k) throw std::invalid_argument("Channel: trust matrix not square");
    }
    for (size_t y = 0; y < k; ++y) {
      double total = 0.0;
      for (size_t x = 0; x < k; ++x) {
        if (trust[x][y] < 0.0) throw std::invalid_argument("Channel: negative entry");
        total += trust[x][y];
      }
      if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("Channel: column does not sum to 1");
    }
    if (input.size() != k) throw std::invalid_argument("Channel: input length mismatch");
    double total = 0.0;
    for (double p : input) {
      if (p < 0.0) throw std::invalid_argument("Channel: negative input probability");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
      throw std::invalid_argument("Channel: input does not sum to 1");
  }
};

/// Marginal distribution of the truth under the report distribution.
inline std::vector<double> truth_marginal(const Channel& ch) {
  ch.validate();
  std::vector<double> out(ch.size(), 0.0);
  for (size_t x = 0; x < ch.size(); ++x) {
    for (size_t y = 0; y < ch.size(); ++y) out[x] += ch.input[y] * ch.trust[x][y];
  }
  return out;
}

/// H(X|Y): expected base-2 entropy of the truth given the report.
inline double conditional_entropy(const Channel& ch) {
  ch.validate();
  double h = 0.0;
  for (size_t y = 0; y < ch.size(); ++y) {
    std::vector<double> col(ch.size());
    for (size_t x = 0; x < ch.size(); ++x) col[x] = ch.trust[x][y];
    h += ch.input[y] * entropy2(col);
  }
  return h;
}

/// T(X|Y) = H(X) - H(X|Y), the utility gain the channel provides.
inline double transmission_rate(const Channel& ch) {
  return entropy2(truth_marginal(ch)) - conditional_entropy(ch);
}

struct CapacityReport {
  double capacity = 0.0;      // bits; lower bound at the stopping tolerance
  double gap = 0.0;           // certified upper minus lower bound, bits
  std::vector<double> input;  // maximizing report distribution
  int iterations = 0;
};

/// Channel capacity sup_input T by alternating maximization. Stops when the
/// certified gap between the capacity bounds drops below `tolerance` bits.
inline CapacityReport channel_capacity(const std::vector<std::vector<double>>& trust,
                                       double tolerance = 1e-9) {
  Channel probe{trust, std::vector<double>(trust.size(),
                                           1.0 / static_cast<double>(trust.size()))};
  probe.validate();
  const size_t k = trust.size();
  std::vector<double> q(k, 1.0 / static_cast<double>(k));
  CapacityReport rep;
  const int max_iters = 200000;
  for (int it = 1; it <= max_iters; ++it) {
    std::vector<double> out(k, 0.0);
    for (size_t x = 0; x < k; ++x) {
      for (size_t y = 0; y < k; ++y) out[x] += q[y] * trust[x][y];
    }
    // per-report divergence D_y = KL(trust(.|y) || out), in nats
    std::vector<double> d(k, 0.0);
    for (size_t y = 0; y < k; ++y) {
      for (size_t x = 0; x < k; ++x) {
        if (trust[x][y] > 0.0) d[y] += trust[x][y] * std::log(trust[x][y] / out[x]);
      }
    }
    double lower = 0.0, upper = d[0];
    for (size_t y = 0; y < k; ++y) {
      lower += q[y] * d[y];
      upper = std::max(upper, d[y]);
    }
    rep.capacity = lower / std::log(2.0);
    rep.gap = (upper - lower) / std::log(2.0);
    rep.input = q;
    rep.iterations = it;
    if (rep.gap <= tolerance) break;
    double norm = 0.0;
    for (size_t y = 0; y < k; ++y) {
      q[y] *= std::exp(d[y]);
      norm += q[y];
    }
    for (auto& x : q) x /= norm;
  }
  return rep;
}

}  // namespace bet
}  // namespace ludus

#endif  // LUDUS_BETTING_HPP
