#include "latroute/objectives.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "latroute/errors.hpp"
#include "latroute/generators.hpp"
#include "support/testers.hpp"

using namespace latroute;

TEST_CASE("ratio objective divides the criteria") {
  CHECK(eval_ratio({10.0, 5.0}) == 2.0);
  CHECK(eval_ratio({7.0, 7.0}) == 1.0);
}

TEST_CASE("ratio on gadget paths orders by length") {
  // On a gadget with n = 3, lambda = 1: cost lambda*n + L, time L.
  const double lambda_n = 3.0;
  double previous = eval_ratio({lambda_n + 1.0, 1.0});
  for (int length = 2; length <= 6; ++length) {
    const double current =
        eval_ratio({lambda_n + 1.0 + (length - 1), static_cast<double>(length)});
    CHECK(current < previous);  // longer path, better ratio
    previous = current;
  }
}

TEST_CASE("ratio is scale invariant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const CriteriaVector v{0.1 + uniform_unit(rng) * 9.0,
                           0.1 + uniform_unit(rng) * 9.0};
    const double c = 0.01 + uniform_unit(rng) * 100.0;
    CHECK(eval_ratio({c * v[0], c * v[1]}) ==
          doctest::Approx(eval_ratio(v)).epsilon(1e-12));
  }
}

TEST_CASE("normal cdf matches an independent quadrature oracle") {
  CHECK(std_normal_cdf(0.0) == 0.5);
  for (double x = -4.0; x <= 4.0; x += 0.125) {
    const double expected = static_cast<double>(testing::phi_oracle(x));
    CHECK(std::fabs(std_normal_cdf(x) - expected) <= 1e-12);
  }
  CHECK(std_normal_cdf(-3.0) ==
        doctest::Approx(0.0013498980316300945).epsilon(1e-12));
  CHECK(std_normal_cdf(-2.0) ==
        doctest::Approx(0.0227501319481792072).epsilon(1e-12));
}

TEST_CASE("normal cdf symmetry") {
  for (double x = 0.0; x <= 6.0; x += 0.37) {
    CHECK(std::fabs(std_normal_cdf(x) + std_normal_cdf(-x) - 1.0) <= 1e-14);
  }
}

TEST_CASE("deadline objective hits the documented anchors") {
  DeadlineSpec spec;
  spec.deadline = 10.0;
  spec.variance_floor = 1.0;
  CHECK(eval_deadline({10.0, 3.7}, spec) == 0.5);
  const double sigma = 2.0;
  CHECK(eval_deadline({10.0 + 3.0 * sigma, sigma * sigma}, spec) ==
        doctest::Approx(0.0013499).epsilon(1e-3));
  CHECK(eval_deadline({10.0 + 2.0 * sigma, sigma * sigma}, spec) ==
        doctest::Approx(0.0227501).epsilon(1e-3));
}

TEST_CASE("deadline objective is non-monotone past the deadline") {
  DeadlineSpec spec;
  spec.deadline = 5.0;
  spec.variance_floor = 1.0;
  // decreasing in the mean
  double previous = eval_deadline({5.5, 2.0}, spec);
  for (double mean = 6.0; mean < 9.0; mean += 0.5) {
    const double current = eval_deadline({mean, 2.0}, spec);
    CHECK(current < previous);
    previous = current;
  }
  // increasing in the variance once late
  previous = eval_deadline({7.0, 0.5}, spec);
  for (double variance = 1.0; variance < 5.0; variance += 0.5) {
    const double current = eval_deadline({7.0, variance}, spec);
    CHECK(current > previous);
    previous = current;
  }
}

TEST_CASE("deadline Lipschitz bound formulas") {
  DeadlineSpec spec;
  spec.deadline = 1.0;
  spec.variance_floor = 1e24;  // drift ~ 0
  CHECK(deadline_lipschitz_bound(spec) == doctest::Approx(9.852).epsilon(1e-9));
  spec.regime = 2;
  CHECK(deadline_lipschitz_bound(spec) ==
        doctest::Approx(4.745 * 2.0 / 2.0).epsilon(1e-9));
  CHECK(2.0 * kPhiRatioBound == doctest::Approx(6.568).epsilon(1e-15));

  spec.regime = 3;
  spec.deadline = 6.0;
  spec.variance_floor = 4.0;  // drift 3
  CHECK(deadline_lipschitz_bound(spec) ==
        doctest::Approx(3.284 * 6.0).epsilon(1e-12));
}

TEST_CASE("deadline guarantee clauses and caps") {
  DeadlineSpec spec;
  spec.deadline = 8.0;
  spec.variance_floor = 4.0;

  // tiny epsilon: the exponential term collapses to 1
  const auto tight = deadline_guarantee(1e-12, 10, spec, 0.4);
  REQUIRE(tight.has_value());
  CHECK(*tight == doctest::Approx(1.0).epsilon(1e-6));

  // huge epsilon, value only above Phi(-3): the 384.62 cap binds
  const auto cap3 = deadline_guarantee(10.0, 10, spec, 0.002);
  REQUIRE(cap3.has_value());
  CHECK(*cap3 == kDeadlineCapRegime3);

  // huge epsilon, value above Phi(-2): the tighter 21.93 cap binds
  const auto cap2 = deadline_guarantee(10.0, 10, spec, 0.4);
  REQUIRE(cap2.has_value());
  CHECK(*cap2 == kDeadlineCapRegime2);

  // too small for either clause
  CHECK_FALSE(deadline_guarantee(0.1, 10, spec, 0.001).has_value());
  // not a strictly-late value
  CHECK_FALSE(deadline_guarantee(0.1, 10, spec, 0.5).has_value());

  // between the clause thresholds the regime-3 clause applies alone
  const auto mid = deadline_guarantee(0.001, 5, spec, 0.01);
  REQUIRE(mid.has_value());
  CHECK(*mid ==
        doctest::Approx(std::pow(1.001, 6.568 * (3.0 + 4.0) * 5)).epsilon(1e-12));
}

TEST_CASE("hazard-style ratio of the normal stays under its bound") {
  double worst = 0;
  const int points = 100'000;
  for (int i = 0; i < points; ++i) {
    const double x = -3.0 + 3.0 * static_cast<double>(i) / points;
    worst = std::max(worst, std_normal_pdf(x) / std_normal_cdf(x));
  }
  CHECK(worst <= kPhiRatioBound);
  CHECK(worst > 3.28);  // the bound is tight near the left end
}

TEST_CASE("deadline objective obeys its Lipschitz constant empirically") {
  const double deadline = 10.0;
  const double variance_floor = 4.0;
  DeadlineSpec spec;
  spec.deadline = deadline;
  spec.variance_floor = variance_floor;
  const double beta = deadline_lipschitz_bound(spec);

  std::mt19937_64 rng(99);
  const auto draw_point = [&](double& x, double& y) {
    y = variance_floor * (1.0 + uniform_unit(rng) * 49.0);
    x = deadline + uniform_unit(rng) * 3.0 * std::sqrt(y);
  };
  for (int trial = 0; trial < 10'000; ++trial) {
    double x1, y1, x2, y2;
    draw_point(x1, y1);
    draw_point(x2, y2);
    const double lhs = std::fabs(std::log(eval_deadline({x1, y1}, spec)) -
                                 std::log(eval_deadline({x2, y2}, spec)));
    const double rhs = beta * (std::fabs(std::log(x1) - std::log(x2)) +
                               std::fabs(std::log(y1) - std::log(y2)));
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("generic wrapper matches the built-in ratio") {
  const auto generic = make_generic_objective(
      2, Sense::minimize,
      [](const CriteriaVector& c) { return c[0] / c[1]; }, std::nullopt,
      "xy-ratio");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const CriteriaVector v{0.1 + uniform_unit(rng) * 9.0,
                           0.1 + uniform_unit(rng) * 9.0};
    CHECK(generic.evaluate(v) == eval_ratio(v));
  }
}

TEST_CASE("candidate ranking is a deterministic total order") {
  const CriteriaVector a{1.0, 2.0};
  const CriteriaVector b{1.0, 3.0};
  CHECK(ranks_before(Sense::minimize, 1.0, a, 2, 2.0, b, 1));
  CHECK(ranks_before(Sense::maximize, 2.0, a, 2, 1.0, b, 1));
  // equal value: lexicographically smaller criteria win
  CHECK(ranks_before(Sense::minimize, 1.0, a, 5, 1.0, b, 1));
  CHECK_FALSE(ranks_before(Sense::minimize, 1.0, b, 1, 1.0, a, 5));
  // equal value and criteria: fewer hops win
  CHECK(ranks_before(Sense::minimize, 1.0, a, 1, 1.0, a, 2));
  CHECK_FALSE(ranks_before(Sense::minimize, 1.0, a, 2, 1.0, a, 2));
}

TEST_CASE("objective names parse into specs") {
  CHECK(parse_objective_spec("ratio").kind == ObjectiveSpec::Kind::ratio);

  const auto deadline = parse_objective_spec("deadline:D=3.5,regime=2");
  CHECK(deadline.kind == ObjectiveSpec::Kind::deadline);
  CHECK(deadline.deadline_d == 3.5);
  CHECK(deadline.regime == 2);

  const auto dfrac = parse_objective_spec("deadline:dfrac=0.9");
  CHECK(dfrac.deadline_dfrac == 0.9);
  CHECK(dfrac.regime == 3);

  const auto linear = parse_objective_spec("linear:k=2");
  CHECK(linear.kind == ObjectiveSpec::Kind::linear);
  CHECK(linear.linear_criterion == 1);

  CHECK_THROWS_AS((void)parse_objective_spec("unknown"), Error);
  CHECK_THROWS_AS((void)parse_objective_spec("deadline"), Error);
  CHECK_THROWS_AS((void)parse_objective_spec("deadline:D=1,dfrac=2"), Error);
  CHECK_THROWS_AS((void)parse_objective_spec("deadline:D=1,regime=5"), Error);
  CHECK_THROWS_AS((void)parse_objective_spec("linear:k=0"), Error);
  CHECK_THROWS_AS((void)parse_objective_spec("ratio:x=1"), Error);
}

TEST_CASE("deadline preparation computes the variance floor and regime") {
  // two routes: mean 4 var 9 and mean 6 var 2
  const Graph g(3, 2, false,
                {{0, 1, {2.0, 4.5}},
                 {1, 2, {2.0, 4.5}},
                 {0, 2, {6.0, 2.0}}});
  const auto late = prepare_deadline(g, 0, 2, 3.0);
  CHECK(late.spec.variance_floor == 2.0);  // min-variance path
  CHECK(late.min_mean == 4.0);
  CHECK(late.all_late);

  const auto monotone = prepare_deadline(g, 0, 2, 5.0);
  CHECK_FALSE(monotone.all_late);
}
