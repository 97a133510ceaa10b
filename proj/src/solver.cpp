#include "latroute/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latroute/baselines.hpp"
#include "latroute/errors.hpp"

namespace latroute {

Walk reconstruct_walk(const RecordStore& store, std::int64_t record_id) {
  if (record_id < 0 || record_id >= store.size()) {
    throw Error("reconstruct_walk: record id out of range");
  }
  Walk walk;
  std::int64_t id = record_id;
  std::int32_t guard = store[record_id].hops;
  while (store[id].parent >= 0) {
    if (guard-- <= 0) {
      throw Error("reconstruct_walk: corrupt parent chain (cycle suspected)");
    }
    walk.push_back(store[id].via_edge);
    id = store[id].parent;
  }
  if (static_cast<std::int32_t>(walk.size()) != store[record_id].hops ||
      store[id].hops != 0) {
    throw Error("reconstruct_walk: corrupt parent chain (hop mismatch)");
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

namespace {

constexpr std::uint64_t kNoBucket = ~std::uint64_t{0};

struct FrontierEntry {
  std::int64_t record;
  std::uint64_t bucket;  // kNoBucket for the root
};

class TableEngine {
 public:
  TableEngine(const Graph& graph, VertexId s, VertexId t, int gamma,
              const Objective& objective, double epsilon,
              const SolveOptions& options, std::optional<double> budget)
      : graph_(graph),
        s_(s),
        t_(t),
        gamma_(gamma),
        objective_(objective),
        epsilon_(epsilon),
        options_(options),
        budget_(budget) {
    if (s < 0 || s >= graph.vertex_count() || t < 0 ||
        t >= graph.vertex_count()) {
      throw Error("solve: route endpoints out of range");
    }
    if (gamma < 1) {
      throw Error("solve: hop bound must be at least 1");
    }
    if (!(epsilon > 0)) {
      throw Error("solve: epsilon must be positive");
    }
    if (objective.criteria_count != graph.criteria_count()) {
      throw Error("solve: objective expects " +
                  std::to_string(objective.criteria_count) +
                  " criteria, graph has " +
                  std::to_string(graph.criteria_count()));
    }
    if (graph.edge_count() == 0) {
      throw NoFeasiblePath("solve: graph has no edges");
    }

    const MinMaxWeights bounds = min_max_edge_weights(graph);
    const auto d = static_cast<std::size_t>(graph.criteria_count());
    spec_ = make_lattice_spec(
        epsilon, {bounds.min.begin(), bounds.min.begin() + d},
        {bounds.max.begin(), bounds.max.begin() + d}, gamma);
    lattice_cells_ = lattice_size(spec_);
  }

  SolveResult run() {
    const auto start = std::chrono::steady_clock::now();
    table_.assign(static_cast<std::size_t>(graph_.vertex_count()), {});

    PathRecord root;
    root.vertex = s_;
    const std::int64_t root_id = store_.add(std::move(root));
    std::vector<FrontierEntry> frontier{{root_id, kNoBucket}};
    std::vector<FrontierEntry> next;

    SolveStats stats;
    stats.gamma = gamma_;
    stats.lattice_cells = lattice_cells_;
    stats.stored_records_per_iteration.reserve(
        static_cast<std::size_t>(gamma_));

    for (std::int32_t iteration = 1; iteration <= gamma_; ++iteration) {
      // Budget variant: freeze the worklist before extending. A record that
      // was superseded within its own creation iteration is not part of the
      // previous table state and drops out; one replaced later, during this
      // iteration, still owes its extensions and must not be filtered
      // mid-loop.
      if (budget_) {
        std::erase_if(frontier, [this](const FrontierEntry& entry) {
          if (entry.bucket == kNoBucket) {
            return false;
          }
          const auto& slots =
              table_[static_cast<std::size_t>(store_[entry.record].vertex)];
          const auto it = slots.find(entry.bucket);
          return it == slots.end() || it->second != entry.record;
        });
      }
      next.clear();
      for (const FrontierEntry& entry : frontier) {
        extend(entry.record, iteration, stats, next);
      }
      stats.stored_records_per_iteration.push_back(held_);
      frontier.swap(next);
      if (frontier.empty()) {
        break;
      }
    }
    while (stats.stored_records_per_iteration.size() <
           static_cast<std::size_t>(gamma_)) {
      stats.stored_records_per_iteration.push_back(held_);
    }

    SolveResult result = scan_destination();
    stats.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    result.stats = std::move(stats);
    if (objective_.lipschitz_beta) {
      result.guarantee_factor =
          std::pow(1.0 + epsilon_, *objective_.lipschitz_beta *
                                       graph_.criteria_count() * gamma_);
    }
    if (options_.keep_table) {
      for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
        for (const auto& [bucket, id] : table_[static_cast<std::size_t>(v)]) {
          result.final_occupancy.push_back({v, bucket, store_[id].hops, id});
        }
      }
      result.store = std::move(store_);
    }
    if (options_.record_history) {
      result.history = std::move(history_);
    }
    return result;
  }

 private:
  void extend(std::int64_t record_id, std::int32_t iteration,
              SolveStats& stats, std::vector<FrontierEntry>& next) {
    // Deque-backed store: the reference stays valid while children are added.
    const PathRecord& rec = store_[record_id];
    const auto d = static_cast<std::size_t>(graph_.criteria_count());
    for (const EdgeId e : graph_.out_edges(rec.vertex)) {
      const Edge& edge = graph_.edge(e);
      ++stats.extensions_attempted;

      double budget_value = 0;
      if (budget_) {
        budget_value = rec.budget_value + edge.weights[d];
        if (budget_value > *budget_) {
          continue;
        }
      }

      CriteriaVector criteria;
      if (rec.hops == 0) {
        criteria.assign(edge.weights.begin(),
                        edge.weights.begin() + static_cast<long>(d));
      } else {
        criteria = rec.criteria;
        for (std::size_t k = 0; k < d; ++k) {
          criteria[k] += edge.weights[k];
        }
      }
      const std::uint64_t bucket =
          flat_index(spec_, bucket_index(criteria, spec_));

      auto& slots = table_[static_cast<std::size_t>(edge.head)];
      const auto it = slots.find(bucket);
      const bool empty = it == slots.end();
      const bool improves =
          budget_ && !empty && budget_value < store_[it->second].budget_value;
      if (!empty && !improves) {
        continue;
      }

      // Records allocated excluding the root, counting this one.
      const auto would_hold = static_cast<std::uint64_t>(store_.size());
      if (would_hold > options_.memory_cap) {
        throw ResourceExceeded(options_.memory_cap, would_hold);
      }
      PathRecord child;
      child.vertex = edge.head;
      child.hops = iteration;
      child.criteria = std::move(criteria);
      child.budget_value = budget_value;
      child.parent = record_id;
      child.via_edge = e;
      const std::int64_t child_id = store_.add(std::move(child));
      if (empty) {
        slots.emplace(bucket, child_id);
        ++held_;
      } else {
        it->second = child_id;
      }
      next.push_back({child_id, bucket});
      if (options_.record_history) {
        history_.push_back({edge.head, bucket, iteration, child_id});
      }
    }
  }

  SolveResult scan_destination() {
    const auto& slots = table_[static_cast<std::size_t>(t_)];
    if (slots.empty()) {
      throw NoFeasiblePath(
          budget_ ? "no budget-feasible walk reaches the destination"
                  : "destination unreachable within the hop bound");
    }
    std::int64_t best_id = -1;
    double best_value = 0;
    for (const auto& [bucket, id] : slots) {
      const PathRecord& rec = store_[id];
      const double value = objective_.evaluate(rec.criteria);
      if (best_id < 0 ||
          ranks_before(objective_.sense, value, rec.criteria, rec.hops,
                       best_value, store_[best_id].criteria,
                       store_[best_id].hops)) {
        best_id = id;
        best_value = value;
      }
    }

    SolveResult result;
    const PathRecord& best = store_[best_id];
    result.best_walk = reconstruct_walk(store_, best_id);
    result.best_value = best_value;
    result.best_criteria = best.criteria;
    result.best_budget = best.budget_value;
    result.best_hops = best.hops;
    return result;
  }

  const Graph& graph_;
  VertexId s_;
  VertexId t_;
  int gamma_;
  const Objective& objective_;
  double epsilon_;
  SolveOptions options_;
  std::optional<double> budget_;

  LatticeSpec spec_;
  std::uint64_t lattice_cells_ = 0;
  RecordStore store_;
  std::vector<std::unordered_map<std::uint64_t, std::int64_t>> table_;
  std::uint64_t held_ = 0;
  std::vector<OccupancyEvent> history_;
};

}  // namespace

SolveResult solve_hop_constrained(const Graph& graph, VertexId s, VertexId t,
                                  int gamma, const Objective& objective,
                                  double epsilon,
                                  const SolveOptions& options) {
  TableEngine engine(graph, s, t, gamma, objective, epsilon, options,
                     std::nullopt);
  return engine.run();
}

SolveResult solve_budget_constrained(const Graph& graph, VertexId s,
                                     VertexId t, double budget,
                                     const Objective& objective,
                                     double epsilon,
                                     const SolveOptions& options) {
  if (!graph.has_budget_weight()) {
    throw Error("budget solve: the graph has no budget weight column");
  }
  const int gamma = hop_bound_for_budget(graph, s, t, budget);
  TableEngine engine(graph, s, t, gamma, objective, epsilon, options, budget);
  return engine.run();
}

int hop_bound_for_budget(const Graph& graph, VertexId s, VertexId t,
                         double budget) {
  if (!graph.has_budget_weight()) {
    throw Error("hop bound: the graph has no budget weight column");
  }
  const ShortestPathResult cheapest =
      shortest_path_single_criterion(graph, s, t, graph.criteria_count());
  if (cheapest.value > budget) {
    throw NoFeasiblePath("cheapest path needs budget " +
                         std::to_string(cheapest.value) + " > " +
                         std::to_string(budget));
  }
  const int hops_min = min_hop(graph, s, t);
  const double min_budget_weight =
      min_max_edge_weights(graph)
          .min[static_cast<std::size_t>(graph.criteria_count())];
  double bound =
      std::ceil((budget - cheapest.value) / min_budget_weight + hops_min);
  if (bound < hops_min) {
    bound = hops_min;
  }
  if (bound > 1e9) {
    throw Error("budget hop bound " + std::to_string(bound) +
                " is impractically large; tighten the budget");
  }
  return std::max(1, static_cast<int>(bound));
}

}  // namespace latroute
