#include "latroute/graph.hpp"

#include <random>

#include "doctest.h"
#include "latroute/errors.hpp"
#include "latroute/generators.hpp"
#include "latroute/oracle.hpp"
#include "support/testers.hpp"

using namespace latroute;

TEST_CASE("validate accepts a well-formed two-vertex instance") {
  const Graph g(2, 2, false, {{0, 1, {1.0, 2.0}}});
  CHECK(validate(g).ok());
}

TEST_CASE("validate flags a zero weight with its position") {
  const Graph g(2, 2, false, {{0, 1, {0.0, 2.0}}});
  const auto report = validate(g);
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].message ==
        "non-positive weight at edge 0, criterion 1");
}

TEST_CASE("validate flags out-of-range vertex indices") {
  const Graph g(2, 2, false, {{0, 5, {1.0, 2.0}}});
  const auto report = validate(g);
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].message.find("out of range") != std::string::npos);
}

TEST_CASE("validate flags weight-vector length mismatches") {
  const Graph g(2, 2, false, {{0, 1, {1.0}}});
  const auto report = validate(g);
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].message.find("length mismatch") != std::string::npos);
}

TEST_CASE("validate flags non-finite weights") {
  const Graph g(2, 2, false,
                {{0, 1, {std::numeric_limits<double>::infinity(), 1.0}}});
  CHECK_FALSE(validate(g).ok());
}

TEST_CASE("validate collects every defect of a malformed instance") {
  const Graph g(2, 2, false,
                {{0, 1, {-1.0, 2.0}}, {0, 9, {1.0, 1.0}}, {1, 0, {1.0}}});
  CHECK(validate(g).issues.size() == 3);
}

TEST_CASE("criteria_sum over a single edge") {
  const Graph g(2, 2, false, {{0, 1, {3.0, 4.0}}});
  CHECK(criteria_sum(g, {0}) == CriteriaVector{3.0, 4.0});
}

TEST_CASE("criteria_sum counts a looped edge with multiplicity") {
  const Graph g(1, 2, false, {{0, 0, {3.0, 4.0}}});
  CHECK(criteria_sum(g, {0, 0}) == CriteriaVector{6.0, 8.0});
}

TEST_CASE("criteria_sum of a two-edge walk") {
  const Graph g(3, 2, false, {{0, 1, {1.0, 2.0}}, {1, 2, {10.0, 1.0}}});
  CHECK(criteria_sum(g, {0, 1}) == CriteriaVector{11.0, 3.0});
}

TEST_CASE("criteria_sum of the empty walk is zero") {
  const Graph g(2, 2, false, {{0, 1, {3.0, 4.0}}});
  CHECK(criteria_sum(g, {}) == CriteriaVector{0.0, 0.0});
}

TEST_CASE("criteria_sum rejects non-incident consecutive edges") {
  const Graph g(4, 1, false, {{0, 1, {1.0}}, {2, 3, {1.0}}});
  CHECK_THROWS_AS((void)criteria_sum(g, {0, 1}), InvalidWalk);
}

TEST_CASE("criteria_sum rejects out-of-range edge indices") {
  const Graph g(2, 1, false, {{0, 1, {1.0}}});
  CHECK_THROWS_AS((void)criteria_sum(g, {3}), InvalidWalk);
}

TEST_CASE("column_sum reaches the budget column") {
  const Graph g(2, 1, true, {{0, 1, {3.0, 7.0}}});
  CHECK(column_sum(g, {0}, 1) == 7.0);
  CHECK_THROWS_AS((void)column_sum(g, {0}, 2), Error);
}

TEST_CASE("min_max_edge_weights scans per criterion") {
  const Graph g(2, 2, false, {{0, 1, {1.0, 5.0}}, {1, 0, {2.0, 3.0}}});
  const auto mm = min_max_edge_weights(g);
  CHECK(mm.min == std::vector<double>{1.0, 3.0});
  CHECK(mm.max == std::vector<double>{2.0, 5.0});
}

TEST_CASE("min_max_edge_weights on a single edge") {
  const Graph g(2, 2, false, {{0, 1, {2.0, 2.0}}});
  const auto mm = min_max_edge_weights(g);
  CHECK(mm.min == mm.max);
  CHECK(mm.min == std::vector<double>{2.0, 2.0});
}

TEST_CASE("min_max_edge_weights rejects an empty edge set") {
  const Graph g(2, 2, false, {});
  CHECK_THROWS_AS((void)min_max_edge_weights(g), Error);
}

TEST_CASE("out-edge adjacency includes parallels and self-loops") {
  const Graph g(2, 1, false,
                {{0, 1, {1.0}}, {0, 1, {2.0}}, {0, 0, {3.0}}, {1, 0, {4.0}}});
  CHECK(g.out_edges(0).size() == 3);
  CHECK(g.out_edges(1).size() == 1);
}

TEST_CASE("walk additivity under concatenation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGraphSpec spec;
    spec.vertex_count = 6;
    spec.seed = 1000 + static_cast<std::uint64_t>(trial);
    const Graph g = generate_random_graph(spec);
    const Walk walk = testing::random_walk(g, 0, 8, rng);
    if (walk.empty()) {
      continue;
    }
    const std::size_t cut = rng() % (walk.size() + 1);
    const Walk left(walk.begin(), walk.begin() + static_cast<long>(cut));
    const Walk right(walk.begin() + static_cast<long>(cut), walk.end());
    const auto all = criteria_sum(g, walk);
    const auto a = criteria_sum(g, left);
    // right is not a walk from s; sum its edges directly
    CriteriaVector b(a.size(), 0.0);
    for (const EdgeId e : right) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        b[k] += g.edge(e).weights[k];
      }
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
      CHECK(all[k] == doctest::Approx(a[k] + b[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("criteria of bounded walks stay inside the box") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomGraphSpec spec;
    spec.vertex_count = 5;
    spec.seed = seed;
    const Graph g = generate_random_graph(spec);
    const auto mm = min_max_edge_weights(g);
    const int gamma = 5;
    EnumerationConfig config;
    config.max_hops = gamma;
    enumerate_all_walks(g, 0, config,
                        [&](const Walk&, const CriteriaVector& criteria,
                            double) {
                          for (std::size_t k = 0; k < criteria.size(); ++k) {
                            CHECK(criteria[k] >= mm.min[k] * (1 - 1e-12));
                            CHECK(criteria[k] <=
                                  gamma * mm.max[k] * (1 + 1e-12));
                          }
                        });
  }
}
