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

#ifndef LUDUS_ZEROSUM_HPP
#define LUDUS_ZEROSUM_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ludus/lp.hpp"
#include "ludus/rational.hpp"

namespace ludus {
namespace zerosum {

/// Two-person zero-sum game: the row player maximizes U, the column player
/// minimizes it.
struct MatrixGame {
  std::vector<std::vector<Rational>> payoff;  // m x n

  size_t rows() const { return payoff.size(); }
  size_t cols() const { return payoff.empty() ? 0 : payoff[0].size(); }

  void validate() const {
    if (payoff.empty() || payoff[0].empty())
      throw std::invalid_argument("MatrixGame: need at least one row and column");
    for (const auto& row : payoff) {
      if (row.size() != payoff[0].size())
        throw std::invalid_argument("MatrixGame: payoff matrix is not rectangular");
    }
  }
};

struct MixedProfile {
  std::vector<Rational> row_dist;
  std::vector<Rational> col_dist;
};

/// Saddle points: cells that are simultaneously a column maximum and a row
/// minimum. Indices are 0-based.
inline std::vector<std::pair<size_t, size_t>> pure_equilibria(const MatrixGame& g) {
  g.validate();
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t i = 0; i < g.rows(); ++i) {
    for (size_t j = 0; j < g.cols(); ++j) {
      bool col_max = true, row_min = true;
      for (size_t r = 0; r < g.rows(); ++r) {
        if (g.payoff[r][j] > g.payoff[i][j]) col_max = false;
      }
      for (size_t c = 0; c < g.cols(); ++c) {
        if (g.payoff[i][c] < g.payoff[i][j]) row_min = false;
      }
      if (col_max && row_min) out.emplace_back(i, j);
    }
  }
  return out;
}

struct RandomizedSolution {
  MixedProfile profile;
  Rational value;
};

/// Equilibrium of the randomized game via the primal/dual pair of linear
/// programs (max z below the column payoffs / min w above the row payoffs
/// over the probability simplex). The payoff matrix is shifted positive so
/// the value variable can live in the nonnegative orthant; the shift cancels
/// in the reported value.
inline RandomizedSolution solve_randomized(const MatrixGame& g) {
  g.validate();
  const size_t m = g.rows(), n = g.cols();
  Rational shift(0);
  for (const auto& row : g.payoff) {
    for (const auto& u : row) {
      if (u.abs() > shift) shift = u.abs();
    }
  }
  shift += Rational(1);

  // Row player's LP over (x_1..x_m, z): max z
  //   s.t. z - sum_i (u_ij + shift) x_i <= 0  for every column j
  //        sum_i x_i  <= 1,  -sum_i x_i <= -1
  lp::LinearProgram rowlp;
  rowlp.sense = lp::Sense::Maximize;
  rowlp.objective.assign(m + 1, Rational(0));
  rowlp.objective[m] = Rational(1);
  for (size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(m + 1, Rational(0));
    for (size_t i = 0; i < m; ++i) row[i] = -(g.payoff[i][j] + shift);
    row[m] = Rational(1);
    rowlp.constraint_matrix.push_back(std::move(row));
    rowlp.rhs.push_back(Rational(0));
  }
  {
    std::vector<Rational> ones(m + 1, Rational(1)), negs(m + 1, Rational(-1));
    ones[m] = Rational(0);
    negs[m] = Rational(0);
    rowlp.constraint_matrix.push_back(std::move(ones));
    rowlp.rhs.push_back(Rational(1));
    rowlp.constraint_matrix.push_back(std::move(negs));
    rowlp.rhs.push_back(Rational(-1));
  }

  // Column player's LP over (y_1..y_n, w): min w
  //   s.t. sum_j (u_ij + shift) y_j - w <= 0  for every row i
  //        sum_j y_j == 1 (two inequalities)
  lp::LinearProgram collp;
  collp.sense = lp::Sense::Minimize;
  collp.objective.assign(n + 1, Rational(0));
  collp.objective[n] = Rational(1);
  for (size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (size_t j = 0; j < n; ++j) row[j] = g.payoff[i][j] + shift;
    row[n] = Rational(-1);
    collp.constraint_matrix.push_back(std::move(row));
    collp.rhs.push_back(Rational(0));
  }
  {
    std::vector<Rational> ones(n + 1, Rational(1)), negs(n + 1, Rational(-1));
    ones[n] = Rational(0);
    negs[n] = Rational(0);
    collp.constraint_matrix.push_back(std::move(ones));
    collp.rhs.push_back(Rational(1));
    collp.constraint_matrix.push_back(std::move(negs));
    collp.rhs.push_back(Rational(-1));
  }

  auto rowsol = lp::solve(rowlp);
  auto colsol = lp::solve(collp);
  if (rowsol.status != lp::Status::Optimal || colsol.status != lp::Status::Optimal)
    throw std::runtime_error("solve_randomized: simplex-constrained LP failed");
  if (rowsol.value != colsol.value)
    throw std::runtime_error("solve_randomized: minimax equality violated");

  RandomizedSolution out;
  out.profile.row_dist.assign(rowsol.primal.begin(), rowsol.primal.begin() + m);
  out.profile.col_dist.assign(colsol.primal.begin(), colsol.primal.begin() + n);
  out.value = rowsol.value - shift;
  return out;
}

/// Expected payoff x^T U y of a mixed profile, exact.
inline Rational expected_payoff(const MatrixGame& g, const MixedProfile& p) {
  Rational total(0);
  for (size_t i = 0; i < g.rows(); ++i) {
    for (size_t j = 0; j < g.cols(); ++j)
      total += p.row_dist[i] * g.payoff[i][j] * p.col_dist[j];
  }
  return total;
}

// ---- Lagrange / LP games ----

/// The data (c, A, b) of the LP-game with L(x,y) = c.x + y.(b - Ax).
struct LpGame {
  std::vector<Rational> c;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;

  void validate() const {
    if (a.size() != b.size())
      throw std::invalid_argument("LpGame: |b| != number of rows");
    for (const auto& row : a) {
      if (row.size() != c.size())
        throw std::invalid_argument("LpGame: row width != |c|");
    }
  }

  lp::LinearProgram primal() const {
    lp::LinearProgram p;
    p.sense = lp::Sense::Maximize;
    p.objective = c;
    p.constraint_matrix = a;
    p.rhs = b;
    return p;
  }
};

struct KktReport {
  bool feasible = false;        // K0: x >= 0 and b - Ax >= 0
  bool complementary = false;   // K1: y.(b - Ax) = 0
  bool stationary = false;      // K2: (c - A^T y)_j <= 0, = 0 where x_j > 0
  bool all() const { return feasible && complementary && stationary; }
};

/// Checks the three KKT conditions for the linear case. For LP-games they
/// hold together exactly when (x, y) is an equilibrium of the Lagrange game.
inline KktReport kkt_check(const LpGame& g, const std::vector<Rational>& x,
                           const std::vector<Rational>& y) {
  g.validate();
  if (x.size() != g.c.size() || y.size() != g.b.size())
    throw std::invalid_argument("kkt_check: dimension mismatch");
  for (const auto& yi : y) {
    if (yi.sign() < 0) throw std::invalid_argument("kkt_check: y must be nonnegative");
  }
  KktReport rep;
  std::vector<Rational> slack(g.b.size());
  rep.feasible = true;
  for (const auto& xj : x) {
    if (xj.sign() < 0) rep.feasible = false;
  }
  for (size_t i = 0; i < g.b.size(); ++i) {
    Rational ax(0);
    for (size_t j = 0; j < x.size(); ++j) ax += g.a[i][j] * x[j];
    slack[i] = g.b[i] - ax;
    if (slack[i].sign() < 0) rep.feasible = false;
  }
  Rational ys(0);
  for (size_t i = 0; i < y.size(); ++i) ys += y[i] * slack[i];
  rep.complementary = ys.is_zero();
  rep.stationary = true;
  for (size_t j = 0; j < x.size(); ++j) {
    Rational grad = g.c[j];
    for (size_t i = 0; i < y.size(); ++i) grad -= g.a[i][j] * y[i];
    if (grad.sign() > 0) rep.stationary = false;
    if (x[j].sign() > 0 && !grad.is_zero()) rep.stationary = false;
  }
  return rep;
}

struct ShadowPrices {
  lp::Status status = lp::Status::Infeasible;
  std::vector<Rational> prices;  // optimal dual y* when status == Optimal
};

/// Optimal dual prices of the materials: a slack material is worth nothing.
inline ShadowPrices shadow_prices(const LpGame& g) {
  g.validate();
  auto sol = lp::solve(g.primal());
  ShadowPrices out;
  out.status = sol.status;
  if (sol.status == lp::Status::Optimal) out.prices = sol.dual;
  return out;
}

// ---- finite n-person strategic games ----

/// Dense utility tensors, one per player, over the joint pure-strategy
/// space. Desk scale: at most 4 players with at most 6 strategies each.
class StrategicGame {
 public:
  explicit StrategicGame(std::vector<int> shape) : shape_(std::move(shape)) {
    if (shape_.empty() || shape_.size() > 4)
      throw std::invalid_argument("StrategicGame: 1..4 players supported");
    size_t cells = 1;
    for (int s : shape_) {
      if (s < 1 || s > 6)
        throw std::invalid_argument("StrategicGame: 1..6 strategies per player");
      cells *= static_cast<size_t>(s);
    }
    utils_.assign(shape_.size(), std::vector<double>(cells, 0.0));
  }

  static StrategicGame from_bimatrix(const std::vector<std::vector<double>>& a,
                                     const std::vector<std::vector<double>>& b) {
    if (a.empty() || a.size() != b.size() || a[0].size() != b[0].size())
      throw std::invalid_argument("from_bimatrix: shapes differ");
    StrategicGame g({static_cast<int>(a.size()), static_cast<int>(a[0].size())});
    for (size_t i = 0; i < a.size(); ++i) {
      for (size_t j = 0; j < a[0].size(); ++j) {
        g.at(0, {static_cast<int>(i), static_cast<int>(j)}) = a[i][j];
        g.at(1, {static_cast<int>(i), static_cast<int>(j)}) = b[i][j];
      }
    }
    return g;
  }

  int players() const { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const { return shape_; }

  double& at(int player, const std::vector<int>& profile) {
    return utils_[player][flat(profile)];
  }
  double at(int player, const std::vector<int>& profile) const {
    return utils_[player][flat(profile)];
  }

  /// Iterates all pure profiles, calling f(profile, flat_index).
  template <class F>
  void for_each_profile(F&& f) const {
    const size_t cells = utils_[0].size();
    std::vector<int> idx(shape_.size());
    for (size_t fi = 0; fi < cells; ++fi) {
      size_t rem = fi;
      for (size_t p = shape_.size(); p-- > 0;) {
        idx[p] = static_cast<int>(rem % static_cast<size_t>(shape_[p]));
        rem /= static_cast<size_t>(shape_[p]);
      }
      f(idx, fi);
    }
  }

  size_t flat(const std::vector<int>& profile) const {
    if (profile.size() != shape_.size())
      throw std::invalid_argument("StrategicGame: profile shape mismatch");
    size_t f = 0;
    for (size_t p = 0; p < shape_.size(); ++p) {
      if (profile[p] < 0 || profile[p] >= shape_[p])
        throw std::invalid_argument("StrategicGame: strategy out of range");
      f = f * static_cast<size_t>(shape_[p]) + static_cast<size_t>(profile[p]);
    }
    return f;
  }

 private:
  std::vector<int> shape_;
  std::vector<std::vector<double>> utils_;
};

/// Expected utilities under independent mixing: the product-distribution sum,
/// multilinear in each player's distribution.
inline std::vector<double> nperson_expected_utility(
    const StrategicGame& g, const std::vector<std::vector<double>>& profile) {
  if (static_cast<int>(profile.size()) != g.players())
    throw std::invalid_argument("nperson_expected_utility: one distribution per player");
  for (int p = 0; p < g.players(); ++p) {
    if (static_cast<int>(profile[p].size()) != g.shape()[p])
      throw std::invalid_argument("nperson_expected_utility: distribution length mismatch");
  }
  std::vector<double> out(g.players(), 0.0);
  g.for_each_profile([&](const std::vector<int>& idx, size_t) {
    double weight = 1.0;
    for (int p = 0; p < g.players(); ++p) weight *= profile[p][idx[p]];
    if (weight == 0.0) return;
    for (int p = 0; p < g.players(); ++p) out[p] += weight * g.at(p, idx);
  });
  return out;
}

enum class Mode { Gain, Cost };

/// True when no player can improve by a unilateral pure deviation
/// (sufficient by multilinearity). Gain: larger is better; Cost: smaller.
inline bool verify_mixed_equilibrium(const StrategicGame& g,
                                     const std::vector<std::vector<double>>& profile,
                                     Mode mode, double eps = 1e-9) {
  auto base = nperson_expected_utility(g, profile);
  for (int p = 0; p < g.players(); ++p) {
    for (int k = 0; k < g.shape()[p]; ++k) {
      auto deviated = profile;
      deviated[p].assign(static_cast<size_t>(g.shape()[p]), 0.0);
      deviated[p][k] = 1.0;
      double u = nperson_expected_utility(g, deviated)[p];
      if (mode == Mode::Gain ? (u > base[p] + eps) : (u < base[p] - eps)) return false;
    }
  }
  return true;
}

}  // namespace zerosum
}  // namespace ludus

#endif  // LUDUS_ZEROSUM_HPP
