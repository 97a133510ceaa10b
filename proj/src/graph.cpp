#include "latroute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "latroute/errors.hpp"

namespace latroute {

Graph::Graph(VertexId vertex_count, int criteria_count, bool has_budget_weight,
             std::vector<Edge> edges)
    : vertex_count_(vertex_count),
      criteria_count_(criteria_count),
      has_budget_weight_(has_budget_weight),
      edges_(std::move(edges)) {
  const auto n = static_cast<std::size_t>(std::max<VertexId>(vertex_count_, 0));
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges_) {
    if (e.tail >= 0 && e.tail < vertex_count_ && e.head >= 0 &&
        e.head < vertex_count_) {
      ++degree[static_cast<std::size_t>(e.tail)];
    }
  }
  adj_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    adj_offsets_[v + 1] = adj_offsets_[v] + degree[v];
  }
  adj_edges_.resize(adj_offsets_[n]);
  std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (EdgeId i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[static_cast<std::size_t>(i)];
    if (e.tail >= 0 && e.tail < vertex_count_ && e.head >= 0 &&
        e.head < vertex_count_) {
      adj_edges_[cursor[static_cast<std::size_t>(e.tail)]++] = i;
    }
  }
}

std::span<const EdgeId> Graph::out_edges(VertexId v) const {
  if (v < 0 || v >= vertex_count_) {
    return {};
  }
  const auto begin = adj_offsets_[static_cast<std::size_t>(v)];
  const auto end = adj_offsets_[static_cast<std::size_t>(v) + 1];
  return {adj_edges_.data() + begin, end - begin};
}

std::string ValidationReport::to_string() const {
  if (ok()) {
    return "valid";
  }
  std::ostringstream out;
  for (const ValidationIssue& issue : issues) {
    out << issue.message << '\n';
  }
  return out.str();
}

ValidationReport validate(const Graph& graph) {
  ValidationReport report;
  auto add = [&report](EdgeId e, std::string message) {
    report.issues.push_back({e, std::move(message)});
  };

  if (graph.vertex_count() <= 0) {
    add(-1, "vertex count must be positive");
  }
  if (graph.criteria_count() <= 0) {
    add(-1, "criteria count must be positive");
  }

  const int width = graph.weight_width();
  for (EdgeId i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edge(i);
    const std::string at = "edge " + std::to_string(i);
    if (e.tail < 0 || e.tail >= graph.vertex_count()) {
      add(i, at + ": tail vertex index out of range");
    }
    if (e.head < 0 || e.head >= graph.vertex_count()) {
      add(i, at + ": head vertex index out of range");
    }
    if (static_cast<int>(e.weights.size()) != width) {
      add(i, at + ": weight-vector length mismatch (expected " +
                 std::to_string(width) + ", got " +
                 std::to_string(e.weights.size()) + ")");
      continue;
    }
    for (int k = 0; k < width; ++k) {
      const double w = e.weights[static_cast<std::size_t>(k)];
      if (!std::isfinite(w)) {
        add(i, "non-finite weight at " + at + ", criterion " +
                   std::to_string(k + 1));
      } else if (!(w > 0)) {
        add(i, "non-positive weight at " + at + ", criterion " +
                   std::to_string(k + 1));
      }
    }
  }
  return report;
}

namespace {

void check_walk(const Graph& graph, const Walk& walk) {
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const EdgeId e = walk[i];
    if (e < 0 || e >= graph.edge_count()) {
      throw InvalidWalk("walk references edge " + std::to_string(e) +
                        " outside [0, " + std::to_string(graph.edge_count()) +
                        ")");
    }
    if (i > 0 && graph.edge(walk[i - 1]).head != graph.edge(e).tail) {
      throw InvalidWalk("walk edges " + std::to_string(walk[i - 1]) + " and " +
                        std::to_string(e) + " are not incident");
    }
  }
}

}  // namespace

CriteriaVector criteria_sum(const Graph& graph, const Walk& walk) {
  check_walk(graph, walk);
  CriteriaVector sum(static_cast<std::size_t>(graph.criteria_count()), 0.0);
  for (const EdgeId e : walk) {
    const Edge& edge = graph.edge(e);
    for (int k = 0; k < graph.criteria_count(); ++k) {
      sum[static_cast<std::size_t>(k)] +=
          edge.weights[static_cast<std::size_t>(k)];
    }
  }
  return sum;
}

double column_sum(const Graph& graph, const Walk& walk, int column) {
  if (column < 0 || column >= graph.weight_width()) {
    throw Error("weight column " + std::to_string(column) + " out of range");
  }
  check_walk(graph, walk);
  double sum = 0;
  for (const EdgeId e : walk) {
    sum += graph.edge(e).weights[static_cast<std::size_t>(column)];
  }
  return sum;
}

MinMaxWeights min_max_edge_weights(const Graph& graph) {
  if (graph.edge_count() == 0) {
    throw Error("min_max_edge_weights: graph has no edges");
  }
  const auto width = static_cast<std::size_t>(graph.weight_width());
  MinMaxWeights result;
  result.min.assign(width, std::numeric_limits<double>::infinity());
  result.max.assign(width, -std::numeric_limits<double>::infinity());
  for (const Edge& e : graph.edges()) {
    for (std::size_t k = 0; k < width; ++k) {
      result.min[k] = std::min(result.min[k], e.weights[k]);
      result.max[k] = std::max(result.max[k], e.weights[k]);
    }
  }
  return result;
}

}  // namespace latroute
