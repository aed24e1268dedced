#include "doctest.h"

#include <cmath>
#include <vector>

#include "ludus/interaction.hpp"
#include "ludus/rng.hpp"

namespace qi = ludus::qi;
using qi::CMatrix;
using qi::Complex;
using qi::CVector;
using qi::RMatrix;

namespace {

RMatrix random_real(ludus::Rng* rng, size_t n) {
  RMatrix a(n, std::vector<double>(n));
  for (auto& row : a) {
    for (auto& x : row) x = rng->next_double(-2.0, 2.0);
  }
  return a;
}

CMatrix random_hermitian(ludus::Rng* rng, size_t n) {
  CMatrix c(n, CVector(n));
  for (size_t i = 0; i < n; ++i) {
    c[i][i] = {rng->next_double(-2.0, 2.0), 0.0};
    for (size_t j = i + 1; j < n; ++j) {
      Complex z{rng->next_double(-2.0, 2.0), rng->next_double(-2.0, 2.0)};
      c[i][j] = z;
      c[j][i] = z.conj();
    }
  }
  return c;
}

CVector random_state(ludus::Rng* rng, size_t n) {
  CVector v(n);
  double norm2 = 0.0;
  for (auto& x : v) {
    x = {rng->next_double(-1.0, 1.0), rng->next_double(-1.0, 1.0)};
    norm2 += x.abs2();
  }
  double s = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x = s * x;
  return v;
}

double matrix_distance(const CMatrix& a, const CMatrix& b) {
  double total = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) total += (a[i][j] - b[i][j]).abs2();
  }
  return std::sqrt(total);
}

}  // namespace

TEST_CASE("symmetry decomposition") {
  SUBCASE("symmetric matrices decompose as (A, 0)") {
    RMatrix a{{1, 2}, {2, 5}};
    auto [plus, minus] = qi::symmetry_decomposition(a);
    CHECK(plus == a);
    for (const auto& row : minus) {
      for (double x : row) CHECK(x == 0.0);
    }
  }
  SUBCASE("worked example [[1,2],[0,1]]") {
    RMatrix a{{1, 2}, {0, 1}};
    auto [plus, minus] = qi::symmetry_decomposition(a);
    CHECK(plus == RMatrix{{1, 1}, {1, 1}});
    CHECK(minus == RMatrix{{0, 1}, {-1, 0}});
  }
  SUBCASE("orthogonal parts satisfy the Pythagoras identity") {
    ludus::Rng rng(401);
    for (int it = 0; it < 30; ++it) {
      auto a = random_real(&rng, 1 + rng.next_below(5));
      auto [plus, minus] = qi::symmetry_decomposition(a);
      CHECK(qi::inner(plus, minus) == doctest::Approx(0.0).epsilon(1e-12));
      double n2 = qi::frobenius_norm(a);
      double parts = std::sqrt(std::pow(qi::frobenius_norm(plus), 2) +
                               std::pow(qi::frobenius_norm(minus), 2));
      CHECK(n2 == doctest::Approx(parts).epsilon(1e-12));
    }
  }
  SUBCASE("non-square input is rejected") {
    RMatrix bad{{1, 2, 3}, {4, 5, 6}};
    CHECK_THROWS_AS(qi::symmetry_decomposition(bad), std::invalid_argument);
  }
}

TEST_CASE("hermitian representation") {
  SUBCASE("symmetric matrices map to themselves") {
    RMatrix a{{2, 3}, {3, -1}};
    auto c = qi::hermitian_map(a);
    for (size_t i = 0; i < 2; ++i) {
      for (size_t j = 0; j < 2; ++j) {
        CHECK(c[i][j].re == a[i][j]);
        CHECK(c[i][j].im == 0.0);
      }
    }
  }
  SUBCASE("the skew example maps to i*A and is selfadjoint") {
    RMatrix a{{0, 1}, {-1, 0}};
    auto c = qi::hermitian_map(a);
    CHECK(qi::is_selfadjoint(c));
    CHECK(c[0][1].im == 1.0);
    CHECK(c[1][0].im == -1.0);
    CHECK(c[0][1].re == 0.0);
  }
  SUBCASE("round trip is exact and the norm is preserved") {
    ludus::Rng rng(409);
    for (int it = 0; it < 30; ++it) {
      auto a = random_real(&rng, 1 + rng.next_below(6));
      auto c = qi::hermitian_map(a);
      CHECK(qi::is_selfadjoint(c, 1e-15));
      auto back = qi::hermitian_inverse(c);
      for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < a.size(); ++j)
          CHECK(back[i][j] == doctest::Approx(a[i][j]).epsilon(1e-15));
      }
      CHECK(qi::frobenius_norm(c) == doctest::Approx(qi::frobenius_norm(a)).epsilon(1e-13));
    }
  }
  SUBCASE("inverse rejects non-selfadjoint matrices") {
    CMatrix bad{{Complex{0, 0}, Complex{1, 0}}, {Complex{2, 0}, Complex{0, 0}}};
    CHECK_THROWS_AS(qi::hermitian_inverse(bad), std::invalid_argument);
  }
}

TEST_CASE("spectral decomposition") {
  SUBCASE("identity: all eigenvalues 1, exact reconstruction") {
    CMatrix eye(3, CVector(3));
    for (int i = 0; i < 3; ++i) eye[i][i] = {1.0, 0.0};
    auto sf = qi::spectral_decomposition(eye);
    for (double l : sf.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(matrix_distance(qi::reconstruct(sf), eye) <= 1e-12);
  }
  SUBCASE("[[0,-i],[i,0]] has eigenvalues +1 and -1") {
    CMatrix c{{Complex{0, 0}, Complex{0, -1}}, {Complex{0, 1}, Complex{0, 0}}};
    auto sf = qi::spectral_decomposition(c);
    CHECK(std::abs(sf.eigenvalues[0] - 1.0) <= 1e-12);
    CHECK(std::abs(sf.eigenvalues[1] + 1.0) <= 1e-12);
  }
  SUBCASE("real diagonal matrices keep their diagonal, sorted") {
    CMatrix c(3, CVector(3));
    c[0][0] = {2, 0};
    c[1][1] = {-1, 0};
    c[2][2] = {5, 0};
    auto sf = qi::spectral_decomposition(c);
    CHECK(sf.eigenvalues == std::vector<double>{5.0, 2.0, -1.0});
  }
  SUBCASE("random hermitian matrices: residual and unitarity within 1e-9") {
    ludus::Rng rng(419);
    for (int it = 0; it < 25; ++it) {
      size_t n = 2 + rng.next_below(31);  // up to 32x32
      auto c = random_hermitian(&rng, n);
      auto sf = qi::spectral_decomposition(c);
      double norm = qi::frobenius_norm(c);
      CHECK(matrix_distance(qi::reconstruct(sf), c) <= 1e-9 * std::max(norm, 1.0));
      // Gram matrix of the eigenvector family vs identity
      double gram_err = 0.0;
      for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
          Complex g;
          for (size_t i = 0; i < n; ++i)
            g = g + sf.eigenvectors[a][i] * sf.eigenvectors[b][i].conj();
          if (a == b) g = g - Complex{1.0, 0.0};
          gram_err += g.abs2();
        }
      }
      CHECK(std::sqrt(gram_err) <= 1e-9);
      // eigenvalues descending
      for (size_t k = 0; k + 1 < n; ++k) CHECK(sf.eigenvalues[k] >= sf.eigenvalues[k + 1]);
    }
  }
  SUBCASE("eigenpairs of symmetric real matrices satisfy A v = lambda v") {
    ludus::Rng rng(421);
    for (int it = 0; it < 10; ++it) {
      auto a = random_real(&rng, 8);
      auto [plus, minus] = qi::symmetry_decomposition(a);
      auto c = qi::to_complex(plus);
      auto sf = qi::spectral_decomposition(c);
      double trace = 0.0, sum_l = 0.0, frob2 = 0.0, sum_l2 = 0.0;
      for (size_t i = 0; i < 8; ++i) trace += plus[i][i];
      for (double l : sf.eigenvalues) {
        sum_l += l;
        sum_l2 += l * l;
      }
      frob2 = std::pow(qi::frobenius_norm(plus), 2);
      CHECK(trace == doctest::Approx(sum_l).epsilon(1e-9));
      CHECK(frob2 == doctest::Approx(sum_l2).epsilon(1e-9));
      for (size_t k = 0; k < 8; ++k) {
        double resid = 0.0;
        for (size_t i = 0; i < 8; ++i) {
          Complex av;
          for (size_t j = 0; j < 8; ++j) av = av + c[i][j] * sf.eigenvectors[k][j];
          resid += (av - sf.eigenvalues[k] * sf.eigenvectors[k][i]).abs2();
        }
        CHECK(std::sqrt(resid) <= 1e-8);
      }
    }
  }
  SUBCASE("non-selfadjoint input is rejected") {
    CMatrix bad{{Complex{0, 0}, Complex{1, 1}}, {Complex{1, 1}, Complex{0, 0}}};
    CHECK_THROWS_AS(qi::spectral_decomposition(bad), std::invalid_argument);
  }
  SUBCASE("the 64x64 boundary case stays accurate; 65x65 is rejected") {
    ludus::Rng rng(457);
    auto c = random_hermitian(&rng, 64);
    auto sf = qi::spectral_decomposition(c);
    CHECK(matrix_distance(qi::reconstruct(sf), c) <= 1e-9 * qi::frobenius_norm(c));
    auto too_big = random_hermitian(&rng, 65);
    CHECK_THROWS_AS(qi::spectral_decomposition(too_big), std::invalid_argument);
  }
}

TEST_CASE("measurement") {
  SUBCASE("identity observable reads out |v_x|^2") {
    CMatrix eye(4, CVector(4));
    for (int i = 0; i < 4; ++i) eye[i][i] = {1.0, 0.0};
    ludus::Rng rng(431);
    auto v = random_state(&rng, 4);
    auto m = qi::measurement(eye, v);
    // all eigenvalues equal 1: the distribution over the (standard) basis
    for (size_t k = 0; k < 4; ++k) CHECK(m.distribution[k] == doctest::Approx(v[k].abs2()));
    CHECK(m.expectation == doctest::Approx(1.0));
  }
  SUBCASE("an eigenvector measures as a point mass at its eigenvalue") {
    CMatrix c{{Complex{2, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-3, 0}}};
    CVector e1{{1, 0}, {0, 0}};
    auto m = qi::measurement(c, e1);
    CHECK(m.expectation == doctest::Approx(2.0));
    double mass = 0.0;
    for (size_t k = 0; k < 2; ++k) {
      if (m.distribution[k] > 0.5) mass = m.distribution[k];
    }
    CHECK(mass == doctest::Approx(1.0));
  }
  SUBCASE("two routes to the expectation agree on random instances") {
    ludus::Rng rng(433);
    for (int it = 0; it < 25; ++it) {
      auto c = random_hermitian(&rng, 4);
      auto v = random_state(&rng, 4);
      auto m = qi::measurement(c, v);
      double total = 0.0;
      for (double p : m.distribution) {
        CHECK(p >= -1e-12);
        total += p;
      }
      CHECK(std::abs(total - 1.0) <= 1e-9);
      Complex direct = qi::quadratic_form(c, v);
      CHECK(std::abs(direct.im) <= 1e-12);
      CHECK(std::abs(direct.re - m.expectation) <= 1e-9);
    }
  }
}

TEST_CASE("interaction states") {
  SUBCASE("a single unit entry is a point interaction") {
    RMatrix a{{0, 1}, {0, 0}};
    auto p = qi::interaction_probabilities(a);
    CHECK(p[0][1] == 1.0);
    RMatrix f{{3, 7}, {-2, 5}};
    CHECK(qi::expected_potential(f, a) == doctest::Approx(7.0));
  }
  SUBCASE("uniform magnitudes average the potential") {
    RMatrix a{{0.5, -0.5}, {0.5, 0.5}};
    RMatrix f{{1, 2}, {3, 4}};
    CHECK(qi::expected_potential(f, a) == doctest::Approx(2.5));
  }
  SUBCASE("diagonal TU embedding recovers coalition values") {
    ludus::coop::TuGame<double> v(2);
    v[0b01] = 2.0;
    v[0b10] = -1.0;
    v[0b11] = 5.0;
    for (ludus::coop::Mask s = 0; s < 4; ++s) {
      RMatrix state(4, std::vector<double>(4, 0.0));
      state[s][s] = 1.0;
      CHECK(qi::coop_expectation(v, state) == doctest::Approx(v[s]));
    }
    // uniform diagonal state: the mean over all coalitions
    RMatrix uniform(4, std::vector<double>(4, 0.0));
    for (int s = 0; s < 4; ++s) uniform[s][s] = 0.5;
    CHECK(qi::coop_expectation(v, uniform) == doctest::Approx((0.0 + 2.0 - 1.0 + 5.0) / 4));
    // off-diagonal-only states see nothing
    RMatrix off(4, std::vector<double>(4, 0.0));
    off[0][3] = 1.0;
    CHECK(qi::coop_expectation(v, off) == doctest::Approx(0.0));
  }
}

TEST_CASE("principal components") {
  SUBCASE("real states give V = vv^T with no skew part") {
    CVector v{{0.6, 0}, {0.8, 0}};
    auto pc = qi::principal_component(v);
    CHECK(pc.v_minus == RMatrix{{0, 0}, {0, 0}});
    CHECK(pc.v[0][0] == doctest::Approx(0.36));
    CHECK(pc.v[0][1] == doctest::Approx(0.48));
    CHECK(pc.v[1][1] == doctest::Approx(0.64));
  }
  SUBCASE("(1+i)/sqrt(2) e1 collapses to e1 e1^T") {
    double s = 1.0 / std::sqrt(2.0);
    CVector v{{s, s}, {0, 0}};
    auto pc = qi::principal_component(v);
    CHECK(pc.v_plus[0][0] == doctest::Approx(1.0));
    CHECK(pc.v_minus[0][0] == doctest::Approx(0.0));
    CHECK(pc.v[0][0] == doctest::Approx(1.0));
    CHECK(pc.v[1][1] == doctest::Approx(0.0));
  }
  SUBCASE("hermitian_map(V) = v v* and the norm is 1") {
    ludus::Rng rng(439);
    for (int it = 0; it < 25; ++it) {
      auto v = random_state(&rng, 1 + rng.next_below(6));
      auto pc = qi::principal_component(v);
      auto mapped = qi::hermitian_map(pc.v);
      double err = 0.0;
      for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j)
          err += (mapped[i][j] - v[i] * v[j].conj()).abs2();
      }
      CHECK(std::sqrt(err) <= 1e-12);
      CHECK(qi::frobenius_norm(pc.v) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("Markov evolutions") {
  SUBCASE("identity transitions observe a constant") {
    RMatrix eye{{1, 0}, {0, 1}};
    CVector v{{0.6, 0}, {0.8, 0}};
    auto ev = qi::markov_evolution(eye, {0.3, 0.7}, v, 5);
    for (double pi : ev.observed) CHECK(pi == doctest::Approx(ev.observed[0]));
  }
  SUBCASE("v = e_S tracks the S-coordinate of the chain") {
    RMatrix m{{0.5, 0.25}, {0.5, 0.75}};
    CVector e0{{1, 0}, {0, 0}};
    std::vector<double> p{1.0, 0.0};
    auto ev = qi::markov_evolution(m, p, e0, 4);
    // hand-rolled chain as oracle
    std::vector<double> q = p;
    for (int t = 0; t <= 4; ++t) {
      CHECK(ev.observed[t] == doctest::Approx(q[0]));
      std::vector<double> next{m[0][0] * q[0] + m[0][1] * q[1],
                               m[1][0] * q[0] + m[1][1] * q[1]};
      q = next;
    }
  }
  SUBCASE("doubly stochastic aperiodic chains converge to uniform") {
    RMatrix m{{0.5, 0.2, 0.3}, {0.3, 0.5, 0.2}, {0.2, 0.3, 0.5}};
    CVector e1{{0, 0}, {1, 0}, {0, 0}};
    auto ev = qi::markov_evolution(m, {1.0, 0.0, 0.0}, e1, 300);
    CHECK(ev.observed.back() == doctest::Approx(1.0 / 3).epsilon(1e-9));
  }
  SUBCASE("non-stochastic transitions are rejected") {
    RMatrix bad{{0.5, 0.2}, {0.4, 0.8}};
    CVector v{{1, 0}, {0, 0}};
    CHECK_THROWS_AS(qi::markov_evolution(bad, {1.0, 0.0}, v, 2), std::invalid_argument);
  }
}

TEST_CASE("fuzzy coalitions normalize to states") {
  SUBCASE("an indicator becomes a basis state with scale 1") {
    auto st = qi::fuzzy_to_state({0.0, 1.0, 0.0});
    CHECK(st.scale == doctest::Approx(1.0));
    CHECK(st.amplitudes == std::vector<double>{0.0, 1.0, 0.0});
  }
  SUBCASE("the all-ones coalition becomes uniform with scale n") {
    auto st = qi::fuzzy_to_state(std::vector<double>(4, 1.0));
    CHECK(st.scale == doctest::Approx(4.0));
    for (double a : st.amplitudes) CHECK(a * a == doctest::Approx(0.25));
  }
  SUBCASE("(1/4, 3/4) is already unit mass") {
    auto st = qi::fuzzy_to_state({0.25, 0.75});
    CHECK(st.scale == doctest::Approx(1.0));
    CHECK(st.amplitudes[0] * st.amplitudes[0] == doctest::Approx(0.25));
    CHECK(st.amplitudes[1] * st.amplitudes[1] == doctest::Approx(0.75));
  }
  SUBCASE("w_i = scale * |v_i|^2 recovers the memberships") {
    ludus::Rng rng(443);
    for (int it = 0; it < 20; ++it) {
      std::vector<double> w(rng.next_int(1, 6));
      for (auto& x : w) x = rng.next_double(0.0, 1.0);
      w[rng.next_below(w.size())] = 0.5;  // guarantee nonzero
      auto st = qi::fuzzy_to_state(w);
      for (size_t i = 0; i < w.size(); ++i)
        CHECK(st.scale * st.amplitudes[i] * st.amplitudes[i] ==
              doctest::Approx(w[i]).epsilon(1e-12));
    }
  }
  SUBCASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(qi::fuzzy_to_state({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(qi::fuzzy_to_state({1.5}), std::invalid_argument);
  }
}
