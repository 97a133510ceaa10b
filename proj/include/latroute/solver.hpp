#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "latroute/graph.hpp"
#include "latroute/lattice.hpp"
#include "latroute/objectives.hpp"

namespace latroute {

/// One stored sub-path: the vertex it reaches, its exact criteria sums, and
/// a parent link for reconstruction. The root record (the empty walk at s)
/// has hops 0, empty criteria, and no parent.
struct PathRecord {
  VertexId vertex = 0;
  std::int32_t hops = 0;
  CriteriaVector criteria;
  double budget_value = 0;  // running budget sum; 0 without a budget column
  std::int64_t parent = -1;
  EdgeId via_edge = -1;
};

/// Append-only arena of path records. Records are immutable once added;
/// replaced table occupants stay in the arena because later records may
/// reference them as parents.
class RecordStore {
 public:
  std::int64_t add(PathRecord record) {
    records_.push_back(std::move(record));
    return static_cast<std::int64_t>(records_.size()) - 1;
  }

  const PathRecord& operator[](std::int64_t id) const {
    return records_[static_cast<std::size_t>(id)];
  }

  std::int64_t size() const {
    return static_cast<std::int64_t>(records_.size());
  }

 private:
  std::deque<PathRecord> records_;
};

/// Follows parent links back to the root and returns the edge sequence in
/// forward order. Throws Error on a corrupt chain (a cycle or a parent hop
/// count that does not decrease).
Walk reconstruct_walk(const RecordStore& store, std::int64_t record_id);

struct SolveOptions {
  // Cap on records allocated over the whole solve (replaced occupants
  // included); exceeding it aborts with ResourceExceeded.
  std::uint64_t memory_cap = 20'000'000;

  // Keep the record arena and final bucket occupancy in the result.
  bool keep_table = false;

  // Also keep the full occupancy timeline (every insert and replacement),
  // enabling reconstruction of the table state after any iteration.
  bool record_history = false;
};

struct SolveStats {
  // Cumulative bucket-held records after each iteration 1..gamma.
  std::vector<std::uint64_t> stored_records_per_iteration;
  std::uint64_t extensions_attempted = 0;
  double wall_time_s = 0;
  std::uint64_t lattice_cells = 0;  // |Gamma|
  int gamma = 0;                    // effective hop bound
};

struct OccupancyEvent {
  VertexId vertex = 0;
  std::uint64_t bucket = 0;
  std::int32_t iteration = 0;
  std::int64_t record = -1;
};

struct SolveResult {
  Walk best_walk;
  double best_value = 0;
  CriteriaVector best_criteria;
  double best_budget = 0;  // budget variant: budget sum of the returned walk
  int best_hops = 0;
  SolveStats stats;

  // (1+epsilon)^(beta*d*gamma) when the objective declares beta.
  std::optional<double> guarantee_factor;

  // Filled per SolveOptions.
  RecordStore store;
  std::vector<OccupancyEvent> final_occupancy;
  std::vector<OccupancyEvent> history;
};

/// Hop-constrained solve: builds bucketed sub-path tables over gamma
/// iterations, extending each (i-1)-hop occupant along its out-edges and
/// keeping a candidate only when its bucket at the head vertex is still
/// empty, then scans every record at t (any hop count) under the objective.
///
/// Requires a validated graph, objective.criteria_count == graph criteria,
/// gamma >= 1, epsilon > 0. Throws NoFeasiblePath when no record reaches t
/// and ResourceExceeded past the record cap.
SolveResult solve_hop_constrained(const Graph& graph, VertexId s, VertexId t,
                                  int gamma, const Objective& objective,
                                  double epsilon,
                                  const SolveOptions& options = {});

/// Budget-constrained solve over the graph's extra budget column: derives
/// the hop bound from the budget slack, then runs the table iteration where
/// a candidate is stored only if its budget sum is within budget and it
/// strictly improves (lowers) the bucket occupant's budget. The returned
/// walk always satisfies the budget.
SolveResult solve_budget_constrained(const Graph& graph, VertexId s,
                                     VertexId t, double budget,
                                     const Objective& objective,
                                     double epsilon,
                                     const SolveOptions& options = {});

/// Hop bound sufficient for every budget-feasible s-t walk:
///   ceil((budget - min budget path) / min budget edge weight + min hops).
/// Throws NoFeasiblePath when t is unreachable or the cheapest path already
/// exceeds the budget.
int hop_bound_for_budget(const Graph& graph, VertexId s, VertexId t,
                         double budget);

}  // namespace latroute
