#include "latroute/oracle.hpp"

#include <optional>
#include <vector>

#include "latroute/errors.hpp"

namespace latroute {

namespace {

// Depth-first streaming enumeration. Each frame keeps the full running sums
// so backtracking never un-adds doubles: the yielded criteria are the exact
// left-to-right sums along the walk, bitwise identical to criteria_sum.
EnumerationStats enumerate_impl(const Graph& graph, VertexId s,
                                std::optional<VertexId> target,
                                const EnumerationConfig& config,
                                const WalkVisitor& visit) {
  if (s < 0 || s >= graph.vertex_count()) {
    throw Error("enumeration: source out of range");
  }
  if (config.max_hops < 1) {
    throw Error("enumeration: max_hops must be at least 1");
  }

  struct Frame {
    VertexId vertex;
    std::size_t next = 0;
    CriteriaVector sums;
    double budget = 0;
  };

  const auto d = static_cast<std::size_t>(graph.criteria_count());
  const bool has_budget = graph.has_budget_weight();

  EnumerationStats stats;
  Walk walk;
  std::vector<Frame> stack;
  stack.push_back({s, 0, CriteriaVector(d, 0.0), 0.0});

  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto out = graph.out_edges(frame.vertex);
    if (static_cast<int>(walk.size()) >= config.max_hops ||
        frame.next >= out.size()) {
      stack.pop_back();
      if (!walk.empty()) {
        walk.pop_back();
      }
      continue;
    }

    const EdgeId e = out[frame.next++];
    const Edge& edge = graph.edge(e);
    if (++stats.expansions > config.max_walks) {
      throw EnumerationTooLarge(
          "enumeration cap of " + std::to_string(config.max_walks) +
          " sub-walks exceeded; shrink max_hops or raise the cap");
    }

    Frame next;
    next.vertex = edge.head;
    next.sums = frame.sums;
    for (std::size_t k = 0; k < d; ++k) {
      next.sums[k] += edge.weights[k];
    }
    next.budget = frame.budget + (has_budget ? edge.weights[d] : 0.0);
    if (config.budget && next.budget > *config.budget) {
      continue;  // positive weights: no extension can become feasible again
    }

    walk.push_back(e);
    if (!target || next.vertex == *target) {
      ++stats.yielded;
      visit(walk, next.sums, next.budget);
    }
    stack.push_back(std::move(next));
  }
  return stats;
}

}  // namespace

EnumerationStats enumerate_walks(const Graph& graph, VertexId s, VertexId t,
                                 const EnumerationConfig& config,
                                 const WalkVisitor& visit) {
  if (t < 0 || t >= graph.vertex_count()) {
    throw Error("enumeration: target out of range");
  }
  return enumerate_impl(graph, s, t, config, visit);
}

EnumerationStats enumerate_all_walks(const Graph& graph, VertexId s,
                                     const EnumerationConfig& config,
                                     const WalkVisitor& visit) {
  return enumerate_impl(graph, s, std::nullopt, config, visit);
}

OracleOptimum exact_optimum(const Graph& graph, VertexId s, VertexId t,
                            const EnumerationConfig& config,
                            const Objective& objective) {
  if (objective.criteria_count != graph.criteria_count()) {
    throw Error("oracle: objective dimension mismatch");
  }
  OracleOptimum best;
  bool found = false;
  best.stats = enumerate_walks(
      graph, s, t, config,
      [&](const Walk& walk, const CriteriaVector& criteria, double) {
        const double value = objective.evaluate(criteria);
        if (!found ||
            ranks_before(objective.sense, value, criteria,
                         static_cast<int>(walk.size()), best.value,
                         best.criteria, static_cast<int>(best.walk.size()))) {
          found = true;
          best.walk = walk;
          best.value = value;
          best.criteria = criteria;
        }
      });
  if (!found) {
    throw NoFeasiblePath("oracle: no feasible walk from " + std::to_string(s) +
                         " to " + std::to_string(t));
  }
  return best;
}

}  // namespace latroute
