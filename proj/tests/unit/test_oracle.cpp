#include "latroute/oracle.hpp"

#include <vector>

#include "doctest.h"
#include "latroute/errors.hpp"
#include "latroute/generators.hpp"
#include "latroute/objectives.hpp"

using namespace latroute;

TEST_CASE("a single edge yields exactly one walk") {
  const Graph g(2, 2, false, {{0, 1, {1.0, 2.0}}});
  EnumerationConfig config;
  config.max_hops = 1;
  std::vector<Walk> walks;
  const auto stats = enumerate_walks(
      g, 0, 1, config,
      [&](const Walk& walk, const CriteriaVector&, double) {
        walks.push_back(walk);
      });
  CHECK(stats.yielded == 1);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0] == Walk{0});
}

TEST_CASE("a source self-loop multiplies the walk count") {
  // edge 0: s -> t, edge 1: loop at s; 3 hops allow
  // t, loop+t, loop+loop+t
  const Graph g(2, 2, false, {{0, 1, {1.0, 1.0}}, {0, 0, {1.0, 1.0}}});
  EnumerationConfig config;
  config.max_hops = 3;
  std::vector<Walk> walks;
  enumerate_walks(g, 0, 1, config,
                  [&](const Walk& walk, const CriteriaVector&, double) {
                    walks.push_back(walk);
                  });
  REQUIRE(walks.size() == 3);
}

TEST_CASE("closed-form counts on path and loop graphs") {
  // path 0 -> 1 -> 2 -> 3: exactly one s-t walk regardless of slack
  const Graph path(4, 1, false,
                   {{0, 1, {1.0}}, {1, 2, {1.0}}, {2, 3, {1.0}}});
  EnumerationConfig config;
  config.max_hops = 6;
  std::uint64_t count = 0;
  enumerate_walks(path, 0, 3, config,
                  [&](const Walk&, const CriteriaVector&, double) { ++count; });
  CHECK(count == 1);

  // loop at s then edge to t: max_hops walks
  const Graph loop(2, 1, false, {{0, 0, {1.0}}, {0, 1, {1.0}}});
  for (int h = 1; h <= 5; ++h) {
    EnumerationConfig c2;
    c2.max_hops = h;
    std::uint64_t n = 0;
    enumerate_walks(loop, 0, 1, c2,
                    [&](const Walk&, const CriteriaVector&, double) { ++n; });
    CHECK(n == static_cast<std::uint64_t>(h));
  }
}

TEST_CASE("walks are yielded with exact criteria and budget sums") {
  const Graph g(2, 2, true, {{0, 0, {1.5, 2.5, 0.25}}, {0, 1, {1.0, 1.0, 1.0}}});
  EnumerationConfig config;
  config.max_hops = 3;
  enumerate_walks(g, 0, 1, config,
                  [&](const Walk& walk, const CriteriaVector& criteria,
                      double budget) {
                    CHECK(criteria == criteria_sum(g, walk));
                    CHECK(budget == column_sum(g, walk, 2));
                  });
}

TEST_CASE("the budget filter prunes infeasible walks") {
  const Graph g(2, 2, true,
                {{0, 1, {10.0, 5.0, 1.0}}, {0, 1, {4.0, 8.0, 3.0}}});
  EnumerationConfig config;
  config.max_hops = 1;
  config.budget = 2.0;
  std::vector<Walk> walks;
  enumerate_walks(g, 0, 1, config,
                  [&](const Walk& walk, const CriteriaVector&, double) {
                    walks.push_back(walk);
                  });
  REQUIRE(walks.size() == 1);
  CHECK(walks[0] == Walk{0});
}

TEST_CASE("a budget exactly met is still feasible") {
  const Graph g(2, 1, true, {{0, 1, {1.0, 2.0}}});
  EnumerationConfig config;
  config.max_hops = 1;
  config.budget = 2.0;
  std::uint64_t count = 0;
  enumerate_walks(g, 0, 1, config,
                  [&](const Walk&, const CriteriaVector&, double) { ++count; });
  CHECK(count == 1);
}

TEST_CASE("the cap converts blowups into a diagnostic") {
  GridSpec spec;
  spec.rows = 5;
  spec.cols = 5;
  spec.seed = 3;
  const Graph g = generate_grid(spec);
  EnumerationConfig config;
  config.max_hops = 12;
  config.max_walks = 1000;
  CHECK_THROWS_AS(enumerate_walks(g, 0, 24, config,
                                  [](const Walk&, const CriteriaVector&,
                                     double) {}),
                  EnumerationTooLarge);
}

TEST_CASE("corner-to-corner enumeration scale on the 5x5 grid") {
  // Structural counts, independent of the weight draw.
  GridSpec spec;
  spec.rows = 5;
  spec.cols = 5;
  spec.seed = 12345;
  const Graph g = generate_grid(spec);
  EnumerationConfig config;
  config.max_hops = 12;
  const auto stats = enumerate_walks(
      g, 0, 24, config, [](const Walk&, const CriteriaVector&, double) {});
  CHECK(stats.yielded == 29404);
  CHECK(stats.expansions == 1629446);
}

TEST_CASE("exact optimum on a unique-path instance") {
  const Graph g(3, 2, false, {{0, 1, {1.0, 2.0}}, {1, 2, {2.0, 2.0}}});
  EnumerationConfig config;
  config.max_hops = 2;
  const auto best = exact_optimum(g, 0, 2, config, make_ratio_objective());
  CHECK(best.walk == Walk{0, 1});
  CHECK(best.value == doctest::Approx(3.0 / 4.0));
}

TEST_CASE("ratio optimum on a gadget is the longest path") {
  // acyclic base: every walk is simple, path lengths 1..4
  const Graph base(6, 1, false,
                   {{0, 1, {1.0}},
                    {1, 2, {1.0}},
                    {2, 3, {1.0}},
                    {3, 4, {1.0}},
                    {4, 5, {1.0}},
                    {0, 2, {1.0}},
                    {2, 5, {1.0}},
                    {0, 5, {1.0}}});
  const Graph gadget = generate_ratio_gadget(base, 0, 1.0);
  EnumerationConfig config;
  config.max_hops = 5;
  const auto best = exact_optimum(gadget, 0, 5, config, make_ratio_objective());
  std::size_t longest = 0;
  enumerate_walks(gadget, 0, 5, config,
                  [&](const Walk& walk, const CriteriaVector&, double) {
                    longest = std::max(longest, walk.size());
                  });
  CHECK(best.walk.size() == longest);
  CHECK(longest == 5);
}

TEST_CASE("an all-late deadline optimum may spend hops on a loop") {
  // 0 -> 1 -> 2 with a high-variance loop at 1; every path misses the
  // deadline, so extra variance helps.
  const Graph g(3, 2, false,
                {{0, 1, {5.0, 1.0}}, {1, 2, {5.0, 1.0}}, {1, 1, {0.2, 4.0}}});
  DeadlineSpec spec;
  spec.deadline = 2.0;
  spec.variance_floor = 2.0;
  const auto objective = make_deadline_objective(spec);

  EnumerationConfig simple;
  simple.max_hops = 2;
  const auto loop_free = exact_optimum(g, 0, 2, simple, objective);

  EnumerationConfig slack;
  slack.max_hops = 6;
  const auto with_slack = exact_optimum(g, 0, 2, slack, objective);

  CHECK(with_slack.value >= loop_free.value);
  CHECK(with_slack.walk.size() > loop_free.walk.size());
}

TEST_CASE("no feasible walk raises NoFeasiblePath") {
  const Graph g(3, 2, false, {{0, 1, {1.0, 1.0}}});
  EnumerationConfig config;
  config.max_hops = 4;
  CHECK_THROWS_AS((void)exact_optimum(g, 0, 2, config, make_ratio_objective()),
                  NoFeasiblePath);
}
