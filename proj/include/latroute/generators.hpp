#pragma once

#include <cstdint>
#include <random>

#include "latroute/graph.hpp"

namespace latroute {

// Seeded draws use std::mt19937_64, whose output sequence is fixed by the
// standard, mapped to doubles with an explicit 53-bit construction; the same
// seed reproduces the same instance on every platform.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform_unit_positive(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

struct GridSpec {
  int rows = 1;
  int cols = 1;
  double weight_low = 0.1;
  double weight_high = 5.0;
  std::uint64_t seed = 0;
  bool bidirectional = true;
  int criteria_count = 2;
};

/// rows x cols lattice; vertex (r, c) is r*cols + c. Each undirected
/// adjacency becomes two arcs when bidirectional. Arcs are emitted row-major
/// per cell, right neighbor before down neighbor, forward arc before
/// reverse, with criteria drawn independently from
/// [weight_low, weight_high) in that order.
Graph generate_grid(const GridSpec& spec);

/// Hard-instance construction for the ratio objective: keeps the base
/// topology (base weights ignored) and sets d=2 weights
/// (lambda*n + 1, 1) on every edge incident to s and (1, 1) elsewhere.
/// Under the ratio objective the optimum is the longest path.
Graph generate_ratio_gadget(const Graph& base, VertexId s, double lambda);

struct RandomGraphSpec {
  VertexId vertex_count = 2;
  int criteria_count = 2;
  bool with_budget = false;
  // Probability of an arc per ordered vertex pair; self-loops at a quarter
  // of that.
  double edge_probability = 0.35;
  double weight_low = 0.1;
  double weight_high = 5.0;
  double budget_low = 0.5;
  double budget_high = 2.0;
  std::uint64_t seed = 0;
};

/// Random multigraph for verification: a 0 -> 1 -> ... -> n-1 chain (so the
/// standard test route 0 to n-1 always exists) plus Bernoulli extra arcs and
/// occasional self-loops.
Graph generate_random_graph(const RandomGraphSpec& spec);

}  // namespace latroute
