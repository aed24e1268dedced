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

#ifndef LUDUS_LP_HPP
#define LUDUS_LP_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ludus/rational.hpp"

namespace ludus {
namespace lp {

enum class Sense { Maximize, Minimize };
enum class Status { Optimal, Infeasible, Unbounded };

/// max (or min) objective . x  subject to  constraint_matrix . x <= rhs, x >= 0.
struct LinearProgram {
  Sense sense = Sense::Maximize;
  std::vector<Rational> objective;                  // length n
  std::vector<std::vector<Rational>> constraint_matrix;  // m rows of length n
  std::vector<Rational> rhs;                        // length m
};

/// Optimal solutions carry exact primal/dual certificates. For Minimize the
/// dual is sign-flipped so that objective . primal == rhs . dual still holds
/// exactly.
struct LpSolution {
  Status status = Status::Infeasible;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  Rational value;
};

namespace detail {

inline void check_shape(const LinearProgram& p) {
  const size_t m = p.constraint_matrix.size();
  if (p.rhs.size() != m)
    throw std::invalid_argument("lp: |rhs| != number of constraint rows");
  for (const auto& row : p.constraint_matrix) {
    if (row.size() != p.objective.size())
      throw std::invalid_argument("lp: row width != |objective|");
  }
}

/// Dense simplex tableau over exact rationals. Bland's smallest-index rule
/// everywhere, which guarantees termination.
class Tableau {
 public:
  Tableau(const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& a,
          const std::vector<Rational>& b)
      : n_(c.size()), m_(a.size()) {
    // Layout: columns [0,n) structural, [n,n+m) slacks, then artificials.
    sigma_.assign(m_, 1);
    size_t art_count = 0;
    for (size_t i = 0; i < m_; ++i) {
      if (b[i].sign() < 0) {
        sigma_[i] = -1;
        ++art_count;
      }
    }
    cols_ = n_ + m_ + art_count;
    rows_.assign(m_, std::vector<Rational>(cols_ + 1));
    basis_.assign(m_, 0);
    artificial_start_ = n_ + m_;
    size_t next_art = artificial_start_;
    for (size_t i = 0; i < m_; ++i) {
      Rational flip = (sigma_[i] < 0) ? Rational(-1) : Rational(1);
      for (size_t j = 0; j < n_; ++j) rows_[i][j] = flip * a[i][j];
      rows_[i][n_ + i] = flip;
      rows_[i][cols_] = flip * b[i];
      if (sigma_[i] < 0) {
        rows_[i][next_art] = Rational(1);
        basis_[i] = next_art++;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  bool needs_phase1() const { return artificial_start_ < cols_; }

  /// Phase I: maximize -(sum of artificials). Returns true when feasible.
  bool run_phase1() {
    std::vector<Rational> cost(cols_);
    for (size_t j = artificial_start_; j < cols_; ++j) cost[j] = Rational(-1);
    simplex(cost);
    if (objective_value(cost).sign() < 0) return false;
    purge_artificials();
    return true;
  }

  /// Phase II with the structural objective; returns false when unbounded.
  bool run_phase2(const std::vector<Rational>& c_structural) {
    std::vector<Rational> cost(cols_);
    for (size_t j = 0; j < n_; ++j) cost[j] = c_structural[j];
    return simplex(cost);
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][cols_];
    }
    return x;
  }

  /// Reads the dual off the slack columns' reduced costs. Row negation in
  /// the setup cancels against the flipped slack sign, so the value is the
  /// dual of the original row either way.
  std::vector<Rational> dual(const std::vector<Rational>& c_structural) const {
    std::vector<Rational> cost(cols_);
    for (size_t j = 0; j < n_; ++j) cost[j] = c_structural[j];
    std::vector<Rational> y(m_);
    for (size_t i = 0; i < m_; ++i) {
      size_t col = n_ + i;
      Rational z;
      for (size_t r = 0; r < m_; ++r) z += cost[basis_[r]] * rows_[r][col];
      y[i] = z;  // c_j of a slack is 0
    }
    return y;
  }

 private:
  size_t n_, m_, cols_, artificial_start_;
  std::vector<int> sigma_;
  std::vector<std::vector<Rational>> rows_;  // each row: cols_ coeffs + rhs
  std::vector<size_t> basis_;
  std::vector<bool> dead_col_;  // artificials retired after phase I

  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational v;
    for (size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rows_[i][cols_];
    return v;
  }

  bool column_allowed(size_t j) const {
    return dead_col_.empty() || !dead_col_[j];
  }

  // Returns false iff unbounded.
  bool simplex(const std::vector<Rational>& cost) {
    for (;;) {
      // reduced costs: z_j - c_j; entering = smallest j with negative value
      size_t enter = cols_;
      for (size_t j = 0; j < cols_; ++j) {
        if (!column_allowed(j)) continue;
        bool basic = false;
        for (size_t i = 0; i < m_; ++i) {
          if (basis_[i] == j) { basic = true; break; }
        }
        if (basic) continue;
        Rational z;
        for (size_t i = 0; i < m_; ++i) z += cost[basis_[i]] * rows_[i][j];
        if (z - cost[j] < Rational(0)) { enter = j; break; }
      }
      if (enter == cols_) return true;  // optimal
      size_t leave = m_;
      Rational best_ratio;
      for (size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter].sign() > 0) {
          Rational ratio = rows_[i][cols_] / rows_[i][enter];
          if (leave == m_ || ratio < best_ratio ||
              (ratio == best_ratio && basis_[i] < basis_[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave == m_) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  void pivot(size_t r, size_t j) {
    Rational p = rows_[r][j];
    for (auto& v : rows_[r]) v /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][j].is_zero()) continue;
      Rational f = rows_[i][j];
      for (size_t k = 0; k <= cols_; ++k) rows_[i][k] -= f * rows_[r][k];
    }
    basis_[r] = j;
  }

  /// After a feasible phase I, drive any basic artificial out of the basis
  /// (its value is 0) and retire all artificial columns.
  void purge_artificials() {
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < artificial_start_) continue;
      size_t j = 0;
      for (; j < artificial_start_; ++j) {
        if (!rows_[i][j].is_zero()) break;
      }
      if (j < artificial_start_) {
        pivot(i, j);
      }
      // else: redundant all-zero row; the artificial stays basic at 0 and
      // is harmless since its column never re-enters.
    }
    dead_col_.assign(cols_, false);
    for (size_t j = artificial_start_; j < cols_; ++j) dead_col_[j] = true;
  }
};

}  // namespace detail

/// Solves the program with the primal simplex method (two phases, Bland's
/// rule). All arithmetic is exact, so Optimal solutions satisfy strong
/// duality with zero gap, identically.
inline LpSolution solve(const LinearProgram& p) {
  detail::check_shape(p);
  const size_t n = p.objective.size();
  std::vector<Rational> c = p.objective;
  if (p.sense == Sense::Minimize) {
    for (auto& v : c) v = -v;
  }
  detail::Tableau t(c, p.constraint_matrix, p.rhs);
  LpSolution sol;
  if (t.needs_phase1() && !t.run_phase1()) {
    sol.status = Status::Infeasible;
    return sol;
  }
  if (!t.run_phase2(c)) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.primal = t.primal();
  sol.dual = t.dual(c);
  sol.value = Rational();
  for (size_t j = 0; j < n; ++j) sol.value += p.objective[j] * sol.primal[j];
  if (p.sense == Sense::Minimize) {
    for (auto& y : sol.dual) y = -y;
  }
  return sol;
}

inline bool primal_feasible(const LinearProgram& p, const std::vector<Rational>& x) {
  if (x.size() != p.objective.size()) return false;
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  for (size_t i = 0; i < p.constraint_matrix.size(); ++i) {
    Rational ax;
    for (size_t j = 0; j < x.size(); ++j) ax += p.constraint_matrix[i][j] * x[j];
    if (ax > p.rhs[i]) return false;
  }
  return true;
}

inline bool dual_feasible(const LinearProgram& p, const std::vector<Rational>& y) {
  if (y.size() != p.rhs.size()) return false;
  const int want = (p.sense == Sense::Maximize) ? 1 : -1;
  for (const auto& v : y) {
    if (v.sign() * want < 0) return false;
  }
  // Maximize: A^T y >= c;  Minimize (y <= 0): A^T y <= c.
  for (size_t j = 0; j < p.objective.size(); ++j) {
    Rational aty;
    for (size_t i = 0; i < p.rhs.size(); ++i) aty += p.constraint_matrix[i][j] * y[i];
    if (want > 0 ? aty < p.objective[j] : aty > p.objective[j]) return false;
  }
  return true;
}

/// Re-checks an Optimal solution: primal feasibility, dual feasibility and
/// exact equality of the two objective values.
inline bool duality_certificate(const LinearProgram& p, const LpSolution& sol) {
  if (sol.status != Status::Optimal) return false;
  if (!primal_feasible(p, sol.primal) || !dual_feasible(p, sol.dual)) return false;
  Rational cx, by;
  for (size_t j = 0; j < p.objective.size(); ++j) cx += p.objective[j] * sol.primal[j];
  for (size_t i = 0; i < p.rhs.size(); ++i) by += p.rhs[i] * sol.dual[i];
  return cx == by;
}

}  // namespace lp
}  // namespace ludus

#endif  // LUDUS_LP_HPP
