#include "latroute/baselines.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "latroute/errors.hpp"

namespace latroute {

namespace {

void check_route(const Graph& graph, VertexId s, VertexId t) {
  if (s < 0 || s >= graph.vertex_count() || t < 0 ||
      t >= graph.vertex_count()) {
    throw Error("route endpoints out of range");
  }
}

Walk walk_from_parents(const std::vector<EdgeId>& parent_edge,
                       const Graph& graph, VertexId s, VertexId t) {
  Walk walk;
  VertexId v = t;
  while (v != s) {
    const EdgeId e = parent_edge[static_cast<std::size_t>(v)];
    walk.push_back(e);
    v = graph.edge(e).tail;
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace

ShortestPathResult shortest_path_single_criterion(const Graph& graph,
                                                  VertexId s, VertexId t,
                                                  int column) {
  check_route(graph, s, t);
  if (column < 0 || column >= graph.weight_width()) {
    throw Error("shortest path: weight column out of range");
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(graph.vertex_count()),
                           kInf);
  std::vector<EdgeId> parent_edge(
      static_cast<std::size_t>(graph.vertex_count()), -1);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;

  dist[static_cast<std::size_t>(s)] = 0;
  queue.emplace(0.0, s);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(v)]) {
      continue;
    }
    for (const EdgeId e : graph.out_edges(v)) {
      const Edge& edge = graph.edge(e);
      const double nd = d + edge.weights[static_cast<std::size_t>(column)];
      if (nd < dist[static_cast<std::size_t>(edge.head)]) {
        dist[static_cast<std::size_t>(edge.head)] = nd;
        parent_edge[static_cast<std::size_t>(edge.head)] = e;
        queue.emplace(nd, edge.head);
      }
    }
  }

  if (dist[static_cast<std::size_t>(t)] == kInf) {
    throw NoFeasiblePath("no path from " + std::to_string(s) + " to " +
                         std::to_string(t));
  }
  return {dist[static_cast<std::size_t>(t)],
          walk_from_parents(parent_edge, graph, s, t)};
}

int min_hop(const Graph& graph, VertexId s, VertexId t) {
  check_route(graph, s, t);
  if (s == t) {
    return 0;
  }
  std::vector<int> hops(static_cast<std::size_t>(graph.vertex_count()), -1);
  std::queue<VertexId> queue;
  hops[static_cast<std::size_t>(s)] = 0;
  queue.push(s);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (const EdgeId e : graph.out_edges(v)) {
      const VertexId u = graph.edge(e).head;
      if (hops[static_cast<std::size_t>(u)] < 0) {
        hops[static_cast<std::size_t>(u)] =
            hops[static_cast<std::size_t>(v)] + 1;
        if (u == t) {
          return hops[static_cast<std::size_t>(u)];
        }
        queue.push(u);
      }
    }
  }
  throw NoFeasiblePath("no path from " + std::to_string(s) + " to " +
                       std::to_string(t));
}

}  // namespace latroute
