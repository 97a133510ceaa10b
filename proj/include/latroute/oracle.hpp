#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "latroute/graph.hpp"
#include "latroute/objectives.hpp"

namespace latroute {

/// Bounds for exhaustive walk enumeration. max_walks caps the number of
/// sub-walks explored (prefix extensions plus yields) so an exponential
/// instance aborts with a diagnostic instead of hanging.
struct EnumerationConfig {
  int max_hops = 1;
  std::optional<double> budget;
  std::uint64_t max_walks = 50'000'000;
};

struct EnumerationStats {
  std::uint64_t yielded = 0;     // walks passed to the visitor
  std::uint64_t expansions = 0;  // sub-walks explored (every edge append)
};

using WalkVisitor =
    std::function<void(const Walk&, const CriteriaVector&, double budget_sum)>;

/// Depth-first enumeration of every s-t walk with 1..max_hops edges (and
/// budget sum <= budget when set), each yielded exactly once with its exact
/// criteria sums. Streaming: walks are never materialized as a set. Throws
/// EnumerationTooLarge past the cap.
EnumerationStats enumerate_walks(const Graph& graph, VertexId s, VertexId t,
                                 const EnumerationConfig& config,
                                 const WalkVisitor& visit);

/// Same enumeration without an endpoint filter: yields walks from s to every
/// vertex. The verification backbone for table-coverage checks.
EnumerationStats enumerate_all_walks(const Graph& graph, VertexId s,
                                     const EnumerationConfig& config,
                                     const WalkVisitor& visit);

struct OracleOptimum {
  Walk walk;
  double value = 0;
  CriteriaVector criteria;
  EnumerationStats stats;
};

/// Exact constrained optimum by brute force, with ties broken exactly as in
/// the solver's final scan. Throws NoFeasiblePath when no walk qualifies.
OracleOptimum exact_optimum(const Graph& graph, VertexId s, VertexId t,
                            const EnumerationConfig& config,
                            const Objective& objective);

}  // namespace latroute
