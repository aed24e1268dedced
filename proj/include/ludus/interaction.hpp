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

#ifndef LUDUS_INTERACTION_HPP
#define LUDUS_INTERACTION_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ludus/coopgame.hpp"

namespace ludus {
namespace qi {

/// Explicit complex arithmetic on pairs of doubles.
struct Complex {
  double re = 0.0, im = 0.0;

  friend Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(Complex a, Complex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(double s, Complex a) { return {s * a.re, s * a.im}; }
  Complex conj() const { return {re, -im}; }
  double abs2() const { return re * re + im * im; }
  double abs() const { return std::sqrt(abs2()); }
};

using CMatrix = std::vector<std::vector<Complex>>;
using CVector = std::vector<Complex>;
using RMatrix = std::vector<std::vector<double>>;

inline void check_square(size_t rows, size_t cols, const char* what) {
  if (rows == 0 || rows != cols) throw std::invalid_argument(std::string(what) + ": not square");
}

inline CMatrix to_complex(const RMatrix& a) {
  CMatrix c(a.size(), CVector(a.empty() ? 0 : a[0].size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) c[i][j] = {a[i][j], 0.0};
  }
  return c;
}

inline CMatrix adjoint(const CMatrix& c) {
  CMatrix a(c[0].size(), CVector(c.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    for (size_t j = 0; j < c[i].size(); ++j) a[j][i] = c[i][j].conj();
  }
  return a;
}

inline double frobenius_norm(const CMatrix& c) {
  double total = 0.0;
  for (const auto& row : c) {
    for (const auto& x : row) total += x.abs2();
  }
  return std::sqrt(total);
}

inline double frobenius_norm(const RMatrix& a) {
  double total = 0.0;
  for (const auto& row : a) {
    for (double x : row) total += x * x;
  }
  return std::sqrt(total);
}

/// <A|B> = sum A_xy conj(B_xy) (the euclidean inner product for real input).
inline Complex inner(const CMatrix& a, const CMatrix& b) {
  Complex total;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) total = total + a[i][j] * b[i][j].conj();
  }
  return total;
}

inline double inner(const RMatrix& a, const RMatrix& b) {
  double total = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) total += a[i][j] * b[i][j];
  }
  return total;
}

inline bool is_selfadjoint(const CMatrix& c, double tol = 1e-9) {
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].size() != c.size()) return false;
    for (size_t j = 0; j < c.size(); ++j) {
      Complex diff = c[i][j] - c[j][i].conj();
      if (diff.abs() > tol) return false;
    }
  }
  return true;
}

// ---- symmetry decomposition and hermitian representation ----

/// A = A+ + A- with A+ = (A + A^T)/2 symmetric and A- = (A - A^T)/2 skew.
inline std::pair<RMatrix, RMatrix> symmetry_decomposition(const RMatrix& a) {
  check_square(a.size(), a.empty() ? 0 : a[0].size(), "symmetry_decomposition");
  const size_t n = a.size();
  RMatrix plus(n, std::vector<double>(n)), minus(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      plus[i][j] = 0.5 * (a[i][j] + a[j][i]);
      minus[i][j] = 0.5 * (a[i][j] - a[j][i]);
    }
  }
  return {plus, minus};
}

/// A-hat = A+ + i A-, always selfadjoint; an isomorphism preserving norms.
inline CMatrix hermitian_map(const RMatrix& a) {
  auto [plus, minus] = symmetry_decomposition(a);
  CMatrix c(a.size(), CVector(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) c[i][j] = {plus[i][j], minus[i][j]};
  }
  return c;
}

/// Recovers A = Re(C) + Im(C) from a selfadjoint C.
inline RMatrix hermitian_inverse(const CMatrix& c) {
  check_square(c.size(), c.empty() ? 0 : c[0].size(), "hermitian_inverse");
  if (!is_selfadjoint(c))
    throw std::invalid_argument("hermitian_inverse: matrix is not selfadjoint");
  RMatrix a(c.size(), std::vector<double>(c.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    for (size_t j = 0; j < c.size(); ++j) a[i][j] = c[i][j].re + c[i][j].im;
  }
  return a;
}

// ---- spectral decomposition ----

struct SpectralForm {
  std::vector<double> eigenvalues;   // descending
  std::vector<CVector> eigenvectors; // unit vectors, same order
};

/// Cyclic Jacobi with two-sided complex rotations. Sweeps until the
/// off-diagonal Frobenius mass falls below 1e-12 of the matrix norm.
inline SpectralForm spectral_decomposition(const CMatrix& input) {
  check_square(input.size(), input.empty() ? 0 : input[0].size(), "spectral_decomposition");
  const size_t n = input.size();
  if (n > 64) throw std::invalid_argument("spectral_decomposition: dimension > 64");
  if (!is_selfadjoint(input))
    throw std::invalid_argument("spectral_decomposition: matrix is not selfadjoint");
  CMatrix c = input;
  // symmetrize exactly so rounding in the input cannot bias the sweep
  for (size_t i = 0; i < n; ++i) {
    c[i][i].im = 0.0;
    for (size_t j = i + 1; j < n; ++j) {
      Complex avg = {0.5 * (c[i][j].re + c[j][i].re), 0.5 * (c[i][j].im - c[j][i].im)};
      c[i][j] = avg;
      c[j][i] = avg.conj();
    }
  }
  CMatrix v(n, CVector(n));
  for (size_t i = 0; i < n; ++i) v[i][i] = {1.0, 0.0};
  const double norm = std::max(frobenius_norm(c), 1e-300);
  const double target = 1e-12 * norm;

  auto off_mass = [&c, n]() {
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (i != j) total += c[i][j].abs2();
      }
    }
    return std::sqrt(total);
  };

  for (int sweep = 0; sweep < 100 && off_mass() > target; ++sweep) {
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        Complex b = c[p][q];
        double babs = b.abs();
        if (babs <= 1e-300) continue;
        double apq_phase_re = b.re / babs, apq_phase_im = b.im / babs;
        double tau = (c[p][p].re - c[q][q].re) / (2.0 * babs);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double cs = 1.0 / std::sqrt(1.0 + t * t);
        double sg = t * cs;
        // s = sigma * e^{-i phi}
        Complex s{sg * apq_phase_re, -sg * apq_phase_im};
        // M = C U, then C' = U^* M;  U: col p = (cs, s), col q = (-conj(s), cs)
        for (size_t k = 0; k < n; ++k) {
          Complex mp = cs * c[k][p] + c[k][q] * s;
          Complex mq = Complex{-1.0, 0.0} * s.conj() * c[k][p] + cs * c[k][q];
          c[k][p] = mp;
          c[k][q] = mq;
        }
        for (size_t k = 0; k < n; ++k) {
          Complex rp = cs * c[p][k] + s.conj() * c[q][k];
          Complex rq = Complex{-1.0, 0.0} * s * c[p][k] + cs * c[q][k];
          c[p][k] = rp;
          c[q][k] = rq;
        }
        for (size_t k = 0; k < n; ++k) {
          Complex vp = cs * v[k][p] + v[k][q] * s;
          Complex vq = Complex{-1.0, 0.0} * s.conj() * v[k][p] + cs * v[k][q];
          v[k][p] = vp;
          v[k][q] = vq;
        }
      }
    }
  }

  // collect, order descending; ties by the first index of the dominant
  // eigenvector component
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<size_t> dominant(n, 0);
  for (size_t k = 0; k < n; ++k) {
    double best = -1.0;
    for (size_t i = 0; i < n; ++i) {
      if (v[i][k].abs2() > best + 1e-15) {
        best = v[i][k].abs2();
        dominant[k] = i;
      }
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (c[a][a].re != c[b][b].re) return c[a][a].re > c[b][b].re;
    return dominant[a] < dominant[b];
  });
  SpectralForm out;
  for (size_t k : order) {
    out.eigenvalues.push_back(c[k][k].re);
    CVector vec(n);
    for (size_t i = 0; i < n; ++i) vec[i] = v[i][k];
    // phase convention: dominant component real and nonnegative
    Complex d = vec[dominant[k]];
    double dabs = d.abs();
    if (dabs > 0) {
      Complex phase{d.re / dabs, -d.im / dabs};
      for (auto& x : vec) x = x * phase;
    }
    out.eigenvectors.push_back(std::move(vec));
  }
  return out;
}

/// Reassembles sum_k lambda_k U_k U_k^* (testing aid).
inline CMatrix reconstruct(const SpectralForm& sf) {
  const size_t n = sf.eigenvalues.size();
  CMatrix c(n, CVector(n));
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        c[i][j] = c[i][j] + sf.eigenvalues[k] * (sf.eigenvectors[k][i] *
                                                 sf.eigenvectors[k][j].conj());
      }
    }
  }
  return c;
}

// ---- measurement ----

struct Measurement {
  std::vector<double> distribution;  // p_x = |<v|U_x>|^2
  double expectation = 0.0;          // sum lambda_x p_x = <v|Cv>
};

/// Observing the selfadjoint C in state v: the eigenvalue distribution
/// induced by v over the eigenbasis and its expectation.
inline Measurement measurement(const CMatrix& c, const CVector& v) {
  if (v.size() != c.size()) throw std::invalid_argument("measurement: dimension mismatch");
  auto sf = spectral_decomposition(c);
  Measurement m;
  m.distribution.resize(v.size());
  for (size_t k = 0; k < v.size(); ++k) {
    Complex amp;
    for (size_t i = 0; i < v.size(); ++i) amp = amp + sf.eigenvectors[k][i].conj() * v[i];
    m.distribution[k] = amp.abs2();
    m.expectation += sf.eigenvalues[k] * m.distribution[k];
  }
  return m;
}

/// <v|Cv> computed directly (cross-check for measurement expectations).
inline Complex quadratic_form(const CMatrix& c, const CVector& v) {
  Complex total;
  for (size_t i = 0; i < c.size(); ++i) {
    Complex cv;
    for (size_t j = 0; j < c.size(); ++j) cv = cv + c[i][j] * v[j];
    total = total + v[i].conj() * cv;
  }
  return total;
}

// ---- interaction states ----

/// p_xy = |A_xy|^2 / ||A||^2: which pair is interacting when inspected.
inline RMatrix interaction_probabilities(const RMatrix& a) {
  check_square(a.size(), a.empty() ? 0 : a[0].size(), "interaction_probabilities");
  double norm2 = 0.0;
  for (const auto& row : a) {
    for (double x : row) norm2 += x * x;
  }
  if (norm2 <= 0.0) throw std::invalid_argument("interaction_probabilities: zero state");
  RMatrix p(a.size(), std::vector<double>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) p[i][j] = a[i][j] * a[i][j] / norm2;
  }
  return p;
}

/// Expected potential <A|F.A> = sum F_xy |A_xy|^2 in the state A.
inline double expected_potential(const RMatrix& f, const RMatrix& a) {
  if (f.size() != a.size()) throw std::invalid_argument("expected_potential: size mismatch");
  auto p = interaction_probabilities(a);
  double total = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].size() != a.size()) throw std::invalid_argument("expected_potential: size mismatch");
    for (size_t j = 0; j < f.size(); ++j) total += f[i][j] * p[i][j];
  }
  return total;
}

/// v(sigma) = sum_S v(S) |A_SS|^2 for a state over the coalition lattice.
inline double coop_expectation(const coop::TuGame<double>& game, const RMatrix& state) {
  if (state.size() != game.coalition_count())
    throw std::invalid_argument("coop_expectation: state index set must be the coalitions");
  auto p = interaction_probabilities(state);
  double total = 0.0;
  for (size_t s = 0; s < game.coalition_count(); ++s)
    total += game.value(static_cast<coop::Mask>(s)) * p[s][s];
  return total;
}

// ---- principal components ----

struct PrincipalComponent {
  RMatrix v_plus;   // a a^T + b b^T
  RMatrix v_minus;  // b a^T - a b^T
  RMatrix v;        // the sum; hermitian_map(v) = vv*
};

inline PrincipalComponent principal_component(const CVector& state) {
  const size_t n = state.size();
  double norm2 = 0.0;
  for (const auto& x : state) norm2 += x.abs2();
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw std::invalid_argument("principal_component: state is not unit norm");
  PrincipalComponent pc;
  pc.v_plus.assign(n, std::vector<double>(n));
  pc.v_minus.assign(n, std::vector<double>(n));
  pc.v.assign(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      double a_i = state[i].re, b_i = state[i].im;
      double a_j = state[j].re, b_j = state[j].im;
      pc.v_plus[i][j] = a_i * a_j + b_i * b_j;
      pc.v_minus[i][j] = b_i * a_j - a_i * b_j;
      pc.v[i][j] = pc.v_plus[i][j] + pc.v_minus[i][j];
    }
  }
  return pc;
}

// ---- Markov evolutions ----

/// Column-stochastic transition: entry [i][j] is the probability of moving
/// to i from j; distributions evolve as p_{t+1} = M p_t.
inline void validate_transition(const RMatrix& m) {
  check_square(m.size(), m.empty() ? 0 : m[0].size(), "markov transition");
  for (size_t j = 0; j < m.size(); ++j) {
    double total = 0.0;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i][j] < -1e-12)
        throw std::invalid_argument("markov transition: negative entry");
      total += m[i][j];
    }
    if (std::abs(total - 1.0) > 1e-9)
      throw std::invalid_argument("markov transition: column does not sum to 1");
  }
}

struct MarkovEvolution {
  std::vector<double> observed;      // pi_t = v* P_t v for t = 0..steps
  std::vector<double> final_state;   // p^(steps)
};

/// Observes the diagonal density P_t of the chain through the state v:
/// with v = e_S this is exactly the probability of finding S at time t.
inline MarkovEvolution markov_evolution(const RMatrix& transition,
                                        const std::vector<double>& p0, const CVector& v,
                                        int steps) {
  validate_transition(transition);
  if (p0.size() != transition.size() || v.size() != transition.size())
    throw std::invalid_argument("markov_evolution: dimension mismatch");
  if (steps < 0) throw std::invalid_argument("markov_evolution: negative steps");
  std::vector<double> p = p0;
  MarkovEvolution out;
  auto observe = [&]() {
    double pi = 0.0;
    for (size_t s = 0; s < p.size(); ++s) pi += p[s] * v[s].abs2();
    out.observed.push_back(pi);
  };
  observe();
  for (int t = 0; t < steps; ++t) {
    std::vector<double> next(p.size(), 0.0);
    for (size_t i = 0; i < p.size(); ++i) {
      for (size_t j = 0; j < p.size(); ++j) next[i] += transition[i][j] * p[j];
    }
    p = std::move(next);
    observe();
  }
  out.final_state = std::move(p);
  return out;
}

// ---- fuzzy coalitions ----

struct FuzzyState {
  std::vector<double> amplitudes;  // v = sqrt(w) / ||sqrt(w)||
  double scale = 0.0;              // ||sqrt(w)||^2 = sum w_i
};

/// Normalizes a fuzzy coalition (membership probabilities) to a state
/// vector; w_i = scale * |v_i|^2 recovers the inputs.
inline FuzzyState fuzzy_to_state(const std::vector<double>& w) {
  double total = 0.0;
  for (double x : w) {
    if (x < 0.0 || x > 1.0)
      throw std::invalid_argument("fuzzy_to_state: memberships must lie in [0,1]");
    total += x;
  }
  if (total <= 0.0) throw std::invalid_argument("fuzzy_to_state: zero coalition");
  FuzzyState out;
  out.scale = total;
  out.amplitudes.resize(w.size());
  for (size_t i = 0; i < w.size(); ++i) out.amplitudes[i] = std::sqrt(w[i] / total);
  return out;
}

}  // namespace qi
}  // namespace ludus

#endif  // LUDUS_INTERACTION_HPP
