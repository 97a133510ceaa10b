#include "latroute/generators.hpp"

#include <vector>

#include "latroute/errors.hpp"

namespace latroute {

Graph generate_grid(const GridSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) {
    throw Error("grid: rows and cols must be positive");
  }
  if (!(spec.weight_low > 0) || !(spec.weight_low < spec.weight_high)) {
    throw Error("grid: need 0 < weight_low < weight_high");
  }
  if (spec.criteria_count < 1) {
    throw Error("grid: criteria_count must be positive");
  }

  std::mt19937_64 rng(spec.seed);
  const auto vid = [&spec](int r, int c) {
    return static_cast<VertexId>(r * spec.cols + c);
  };
  const auto draw_weights = [&]() {
    std::vector<double> weights;
    weights.reserve(static_cast<std::size_t>(spec.criteria_count));
    for (int k = 0; k < spec.criteria_count; ++k) {
      weights.push_back(uniform_in(rng, spec.weight_low, spec.weight_high));
    }
    return weights;
  };

  std::vector<Edge> edges;
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      // right neighbor, then down neighbor; forward arc before reverse
      const int dr[2] = {0, 1};
      const int dc[2] = {1, 0};
      for (int dir = 0; dir < 2; ++dir) {
        const int r2 = r + dr[dir];
        const int c2 = c + dc[dir];
        if (r2 >= spec.rows || c2 >= spec.cols) {
          continue;
        }
        edges.push_back({vid(r, c), vid(r2, c2), draw_weights()});
        if (spec.bidirectional) {
          edges.push_back({vid(r2, c2), vid(r, c), draw_weights()});
        }
      }
    }
  }
  return Graph(static_cast<VertexId>(spec.rows * spec.cols),
               spec.criteria_count, false, std::move(edges));
}

Graph generate_ratio_gadget(const Graph& base, VertexId s, double lambda) {
  if (s < 0 || s >= base.vertex_count()) {
    throw Error("gadget: source out of range");
  }
  if (!(lambda > 0)) {
    throw Error("gadget: lambda must be positive");
  }
  const double source_cost =
      lambda * static_cast<double>(base.vertex_count()) + 1.0;
  std::vector<Edge> edges;
  edges.reserve(base.edges().size());
  for (const Edge& e : base.edges()) {
    const bool at_source = e.tail == s || e.head == s;
    edges.push_back({e.tail, e.head, {at_source ? source_cost : 1.0, 1.0}});
  }
  return Graph(base.vertex_count(), 2, false, std::move(edges));
}

Graph generate_random_graph(const RandomGraphSpec& spec) {
  if (spec.vertex_count < 2) {
    throw Error("random graph: need at least 2 vertices");
  }
  if (!(spec.weight_low > 0) || !(spec.weight_low < spec.weight_high)) {
    throw Error("random graph: need 0 < weight_low < weight_high");
  }

  std::mt19937_64 rng(spec.seed);
  const auto draw_weights = [&]() {
    std::vector<double> weights;
    const int width = spec.criteria_count + (spec.with_budget ? 1 : 0);
    weights.reserve(static_cast<std::size_t>(width));
    for (int k = 0; k < spec.criteria_count; ++k) {
      weights.push_back(uniform_in(rng, spec.weight_low, spec.weight_high));
    }
    if (spec.with_budget) {
      weights.push_back(uniform_in(rng, spec.budget_low, spec.budget_high));
    }
    return weights;
  };

  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < spec.vertex_count; ++v) {
    edges.push_back({v, v + 1, draw_weights()});
  }
  for (VertexId u = 0; u < spec.vertex_count; ++u) {
    for (VertexId v = 0; v < spec.vertex_count; ++v) {
      // Parallel arcs over the chain are fine: the model is a multigraph.
      const double p =
          u == v ? spec.edge_probability / 4 : spec.edge_probability;
      if (uniform_unit(rng) < p) {
        edges.push_back({u, v, draw_weights()});
      }
    }
  }
  return Graph(spec.vertex_count, spec.criteria_count, spec.with_budget,
               std::move(edges));
}

}  // namespace latroute
