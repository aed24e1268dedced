#include "doctest.h"

#include <cmath>
#include <vector>

#include "ludus/betting.hpp"
#include "ludus/rng.hpp"

namespace bet = ludus::bet;

TEST_CASE("kelly fraction") {
  SUBCASE("the 1-in-10 chance of a 100x return stakes 1/11") {
    bet::SimpleBet b{0.1, 100.0, 1.0};
    CHECK(bet::kelly_fraction(b) == doctest::Approx(1.0 / 11).epsilon(1e-12));
  }
  SUBCASE("even odds with p = 0.6 stakes 0.2") {
    bet::SimpleBet b{0.6, 2.0, 1.0};
    CHECK(bet::kelly_fraction(b) == doctest::Approx(0.2).epsilon(1e-12));
  }
  SUBCASE("unfavorable bets stake nothing") {
    CHECK(bet::kelly_fraction({0.1, 2.0, 1.0}) == 0.0);   // p < q/r
    CHECK(bet::kelly_fraction({0.9, 1.0, 1.0}) == 0.0);   // r = 0
    CHECK(bet::kelly_fraction({0.5, 0.5, 1.0}) == 0.0);   // r < 0
  }
  SUBCASE("a sure thing stakes everything") {
    CHECK(bet::kelly_fraction({1.0, 3.0, 1.0}) == 1.0);
  }
}

TEST_CASE("log utility") {
  bet::SimpleBet b{0.5, 3.0, 2.0};
  CHECK(bet::log_utility(b, 0.0) == doctest::Approx(std::log(2.0)));
  CHECK(bet::log_utility(b, 1.0) == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(bet::log_utility(b, -0.1), std::invalid_argument);
  // the certain win has finite utility at a = 1
  CHECK(bet::log_utility({1.0, 3.0, 1.0}, 1.0) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("kelly fraction maximizes the log utility on a grid") {
  ludus::Rng rng(101);
  int tested = 0;
  while (tested < 100) {
    double p = rng.next_double(0.05, 0.95);
    double r = rng.next_double(0.1, 20.0);
    double interior = p - (1.0 - p) / r;
    if (interior <= 0.0 || interior >= 1.0) continue;
    ++tested;
    bet::SimpleBet b{p, r + 1.0, 1.0};
    double astar = bet::kelly_fraction(b);
    const double step = 1e-4;
    double best_a = 0.0, best_u = bet::log_utility(b, 0.0);
    for (double a = step; a < 1.0; a += step) {
      double u = bet::log_utility(b, a);
      if (u > best_u) {
        best_u = u;
        best_a = a;
      }
    }
    CHECK(std::abs(best_a - astar) <= step + 1e-12);
  }
}

TEST_CASE("log-optimal betting never ruins the bankroll") {
  ludus::Rng rng(103);
  for (int it = 0; it < 20; ++it) {
    double p = rng.next_double(0.2, 0.9);
    double r = rng.next_double(0.5, 10.0);
    bet::SimpleBet b{p, r + 1.0, 1.0};
    double a = bet::kelly_fraction(b);
    if (a >= 1.0) continue;
    double bank = 1.0;
    for (int round = 0; round < 2000; ++round) {
      bank *= (rng.next_double() < p) ? (1.0 + r * a) : (1.0 - a);
      CHECK(bank > 0.0);
    }
  }
}

TEST_CASE("fair odds") {
  CHECK(bet::fair_odds(0.5) == doctest::Approx(1.0));
  CHECK(bet::fair_odds(1.0 / 37) == doctest::Approx(36.0));
  CHECK_THROWS_AS(bet::fair_odds(0.0), std::invalid_argument);
  // round trip: fair odds have zero expected gain
  ludus::Rng rng(107);
  for (int it = 0; it < 30; ++it) {
    double p = rng.next_double(0.01, 1.0);
    CHECK(bet::expected_gain(p, bet::fair_odds(p)) == doctest::Approx(0.0).epsilon(1e-12));
  }
  // roulette: offered odds 1:18 on a single number lose on average
  CHECK(bet::expected_gain(1.0 / 37, 18.0) == doctest::Approx(19.0 / 37 - 1));
  CHECK(bet::expected_gain(1.0 / 37, 18.0) < 0.0);
  // de Mere: no six in four rolls at even odds
  double p_mere = std::pow(5.0 / 6.0, 4);
  CHECK(p_mere == doctest::Approx(625.0 / 1296));
  CHECK(bet::expected_gain(p_mere, 1.0) == doctest::Approx(2 * p_mere - 1));
  CHECK(bet::expected_gain(p_mere, 1.0) < 0.0);
}

TEST_CASE("betting on alternatives") {
  SUBCASE("fair odds give zero optimal utility") {
    ludus::Rng rng(109);
    for (int it = 0; it < 20; ++it) {
      int k = rng.next_int(2, 6);
      auto p = rng.distribution(k);
      bet::AlternativesBet b;
      b.p = p;
      for (double x : p) b.rho.push_back(1.0 / x);
      auto plan = bet::optimal_alternatives(b);
      CHECK(plan.allocation == p);
      CHECK(plan.log_utility == doctest::Approx(0.0).epsilon(1e-9));
    }
  }
  SUBCASE("uniform two-way bet at odds 1:3") {
    bet::AlternativesBet b{{0.5, 0.5}, {3.0, 3.0}};
    auto plan = bet::optimal_alternatives(b);
    CHECK(plan.allocation == std::vector<double>{0.5, 0.5});
    CHECK(plan.log_utility == doctest::Approx(std::log(1.5)));
  }
  SUBCASE("degenerate single outcome") {
    bet::AlternativesBet b{{1.0}, {1.0}};
    auto plan = bet::optimal_alternatives(b);
    CHECK(plan.allocation == std::vector<double>{1.0});
  }
  SUBCASE("bet-your-belief dominance is strict away from p") {
    ludus::Rng rng(113);
    for (int it = 0; it < 40; ++it) {
      int k = rng.next_int(2, 5);
      bet::AlternativesBet b;
      b.p = rng.distribution(k);
      for (int i = 0; i < k; ++i) b.rho.push_back(rng.next_double(0.5, 5.0));
      auto a = rng.distribution(k);
      double diff = 0.0;
      for (int i = 0; i < k; ++i) diff = std::max(diff, std::abs(a[i] - b.p[i]));
      if (diff < 1e-6) continue;
      CHECK(bet::alternatives_utility(b, a) <
            bet::optimal_alternatives(b).log_utility);
    }
  }
}

TEST_CASE("growth from observed frequencies") {
  SUBCASE("all mass on one fair outcome") {
    bet::GrowthReport rep = bet::growth_from_frequencies({10, 0}, {1.0, 7.0});
    CHECK(rep.allocation == std::vector<double>{1.0, 0.0});
    CHECK(rep.growth == doctest::Approx(1.0));
  }
  SUBCASE("two outcomes at double odds break even") {
    auto rep = bet::growth_from_frequencies({1, 1}, {2.0, 2.0});
    CHECK(rep.growth == doctest::Approx(1.0));
  }
  SUBCASE("uniform counts at odds k break even") {
    for (int k = 2; k <= 4; ++k) {
      std::vector<long long> counts(k, 5);
      std::vector<double> rho(k, static_cast<double>(k));
      CHECK(bet::growth_from_frequencies(counts, rho).growth == doctest::Approx(1.0));
    }
  }
  SUBCASE("empty and zero inputs rejected") {
    CHECK_THROWS_AS(bet::growth_from_frequencies({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(bet::growth_from_frequencies({0, 0}, {1.0, 1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("doubling strategy") {
  SUBCASE("budget 32 at roulette: five rounds, success above 95%") {
    auto rep = bet::doubling_analysis(32.0, 18.0 / 37);
    CHECK(rep.max_rounds == 5);
    CHECK(rep.ruin_prob == doctest::Approx(std::pow(19.0 / 37, 5)).epsilon(1e-12));
    CHECK(rep.success_prob == doctest::Approx(1.0 - std::pow(19.0 / 37, 5)));
    CHECK(rep.success_prob > 0.95);
  }
  SUBCASE("budget 1 affords no doubling") {
    auto rep = bet::doubling_analysis(1.0, 0.5);
    CHECK(rep.max_rounds == 0);
    CHECK(rep.ruin_prob == 1.0);
  }
  SUBCASE("accounting of a win at round 5") {
    auto acc = bet::doubling_accounting(5);
    CHECK(acc.stakes == std::vector<long long>{1, 2, 4, 8, 16});
    CHECK(acc.lost_before == 15);
    CHECK(acc.payout == 32);
    CHECK(acc.net == 1);  // 32 - (15 + 16)
  }
  SUBCASE("the net gain is +1 at every round") {
    for (int round = 1; round <= 20; ++round)
      CHECK(bet::doubling_accounting(round).net == 1);
  }
}

TEST_CASE("St. Petersburg diagnostics") {
  SUBCASE("partial expected return grows one per toss") {
    CHECK(bet::st_petersburg(4.0, 10).expected_return_partial == 10.0);
  }
  SUBCASE("the 100-euro fee is covered with probability exactly 1/64") {
    auto rep = bet::st_petersburg(100.0, 10);
    CHECK(rep.prob_return_covers_fee == doctest::Approx(1.0 / 64).epsilon(1e-15));
    CHECK(rep.prob_return_covers_fee > 0.01);  // the folklore "< 1%" is off
  }
  SUBCASE("log2 utility partial sums approach 2 from below") {
    auto rep = bet::st_petersburg(4.0, 20);
    CHECK(rep.log2_utility_partial == doctest::Approx(1.999979).epsilon(1e-6));
    CHECK(rep.log2_utility_partial < 2.0);
    double prev = 0.0;
    for (int n = 1; n <= 12; ++n) {
      double cur = bet::st_petersburg(4.0, n).log2_utility_partial;
      CHECK(cur > prev);
      prev = cur;
    }
  }
  SUBCASE("small fees are always covered") {
    CHECK(bet::st_petersburg(2.0, 5).prob_return_covers_fee == 1.0);
  }
}

TEST_CASE("information and entropy") {
  CHECK(bet::information(0.5) == doctest::Approx(1.0));
  CHECK(bet::entropy2(std::vector<double>(8, 0.125)) == doctest::Approx(3.0));
  CHECK(bet::entropy2({1.0, 0.0}) == 0.0);
}

TEST_CASE("channels") {
  SUBCASE("perfect channel transmits H(X)") {
    bet::Channel ch{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {0.5, 0.25, 0.25}};
    CHECK(bet::conditional_entropy(ch) == doctest::Approx(0.0));
    CHECK(bet::transmission_rate(ch) == doctest::Approx(bet::entropy2(ch.input)));
  }
  SUBCASE("a channel ignoring its report transmits nothing") {
    bet::Channel ch{{{0.3, 0.3}, {0.7, 0.7}}, {0.6, 0.4}};
    CHECK(bet::transmission_rate(ch) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("rates are nonnegative and bounded by log2 k") {
    ludus::Rng rng(127);
    for (int it = 0; it < 40; ++it) {
      int k = rng.next_int(2, 5);
      bet::Channel ch;
      ch.trust.assign(k, std::vector<double>(k, 0.0));
      for (int y = 0; y < k; ++y) {
        auto col = rng.distribution(k);
        for (int x = 0; x < k; ++x) ch.trust[x][y] = col[x];
      }
      ch.input = rng.distribution(k);
      double t = bet::transmission_rate(ch);
      CHECK(t >= -1e-12);
      CHECK(t <= bet::entropy2(bet::truth_marginal(ch)) + 1e-12);
      CHECK(t <= std::log2(static_cast<double>(k)) + 1e-12);
    }
  }
  SUBCASE("invalid channels are rejected") {
    bet::Channel bad{{{0.5, 0.5}, {0.4, 0.5}}, {0.5, 0.5}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }
}

TEST_CASE("channel capacity") {
  SUBCASE("perfect k-ary channels have capacity log2 k") {
    for (int k = 2; k <= 5; ++k) {
      std::vector<std::vector<double>> perfect(k, std::vector<double>(k, 0.0));
      for (int i = 0; i < k; ++i) perfect[i][i] = 1.0;
      auto rep = bet::channel_capacity(perfect, 1e-10);
      CHECK(rep.capacity == doctest::Approx(std::log2(k)).epsilon(1e-8));
      CHECK(rep.gap <= 1e-10);
    }
  }
  SUBCASE("binary symmetric channel with flip 0.1") {
    std::vector<std::vector<double>> bsc{{0.9, 0.1}, {0.1, 0.9}};
    auto rep = bet::channel_capacity(bsc, 1e-10);
    double h = -(0.1 * std::log2(0.1) + 0.9 * std::log2(0.9));
    CHECK(rep.capacity == doctest::Approx(1.0 - h).epsilon(1e-8));
  }
  SUBCASE("useless channels have zero capacity") {
    std::vector<std::vector<double>> useless{{0.5, 0.5}, {0.5, 0.5}};
    auto rep = bet::channel_capacity(useless, 1e-12);
    CHECK(rep.capacity == doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("non-stochastic matrices are rejected") {
    std::vector<std::vector<double>> bad{{0.9, 0.2}, {0.2, 0.9}};
    CHECK_THROWS_AS(bet::channel_capacity(bad, 1e-9), std::invalid_argument);
  }
}
