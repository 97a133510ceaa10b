#pragma once

#include "latroute/graph.hpp"

namespace latroute {

struct ShortestPathResult {
  double value = 0;
  Walk walk;
};

/// Exact minimum of one weight column over s-t paths (Dijkstra; all weights
/// are positive by graph invariant), with a witness path. column is 0-based
/// and may select the budget column. Throws NoFeasiblePath when t is
/// unreachable. s == t yields value 0 and the empty walk.
ShortestPathResult shortest_path_single_criterion(const Graph& graph,
                                                  VertexId s, VertexId t,
                                                  int column);

/// Minimum edge count of any s-t path (BFS). Throws NoFeasiblePath when t is
/// unreachable; 0 when s == t.
int min_hop(const Graph& graph, VertexId s, VertexId t);

}  // namespace latroute
