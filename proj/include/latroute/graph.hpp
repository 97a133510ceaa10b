#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace latroute {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Per-path criteria sums, one entry per criterion.
using CriteriaVector = std::vector<double>;

// A walk as the sequence of traversed edge indices. Vertices and edges may
// repeat; edge indices disambiguate parallel edges. The empty walk stays at
// the source.
using Walk = std::vector<EdgeId>;

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  // criteria_count entries, plus one trailing budget entry when the graph
  // carries a budget column.
  std::vector<double> weights;
};

/// Directed multigraph with positive multi-criteria edge weights. Parallel
/// edges and self-loops are allowed. Immutable after construction and safe
/// to share read-only across concurrent solves.
///
/// Construction never throws on malformed data; run validate() to collect
/// every defect of an ingested instance at once. The out-edge adjacency
/// skips edges whose endpoints are out of range, so lookups stay total even
/// on unvalidated graphs.
class Graph {
 public:
  Graph(VertexId vertex_count, int criteria_count, bool has_budget_weight,
        std::vector<Edge> edges);

  VertexId vertex_count() const { return vertex_count_; }
  int criteria_count() const { return criteria_count_; }
  bool has_budget_weight() const { return has_budget_weight_; }

  // Number of weight entries per edge: criteria_count (+1 with budget).
  int weight_width() const {
    return criteria_count_ + (has_budget_weight_ ? 1 : 0);
  }

  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const EdgeId> out_edges(VertexId v) const;

 private:
  VertexId vertex_count_;
  int criteria_count_;
  bool has_budget_weight_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> adj_edges_;
  std::vector<std::size_t> adj_offsets_;
};

struct ValidationIssue {
  EdgeId edge = -1;  // -1 for graph-level issues
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

/// Checks every edge for strictly positive, finite weights, in-range
/// endpoints, and the expected weight-vector length. Report-style: collects
/// all violations instead of stopping at the first.
ValidationReport validate(const Graph& graph);

/// Componentwise sum of the first criteria_count weight entries along the
/// walk, counting repeated edges with multiplicity. The empty walk sums to
/// zeros. Throws InvalidWalk if consecutive edges are not incident or an
/// edge index is out of range.
CriteriaVector criteria_sum(const Graph& graph, const Walk& walk);

/// Sum of one weight column (0-based; criteria_count selects the budget
/// column) along the walk. Same walk checks as criteria_sum.
double column_sum(const Graph& graph, const Walk& walk, int column);

struct MinMaxWeights {
  std::vector<double> min;  // one entry per weight column
  std::vector<double> max;
};

/// Per-column minimum and maximum edge weight over all edges, covering the
/// budget column when present. Throws Error on an empty edge set.
MinMaxWeights min_max_edge_weights(const Graph& graph);

}  // namespace latroute
