#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latroute/generators.hpp"
#include "latroute/graph.hpp"
#include "latroute/solver.hpp"

namespace latroute {

/// One benchmark batch: an instance source, an objective, one constraint,
/// one accuracy knob, and a seed range. Grid sources are regenerated per
/// seed; TNTP sources redraw variances per seed; native instance files are
/// fixed. Exactly one of hops/budget and at most one of epsilon/delta must
/// be set.
struct BenchmarkConfig {
  std::optional<GridSpec> grid;
  std::optional<std::string> instance_path;
  bool tntp = false;

  std::string objective = "ratio";
  std::optional<int> hops;
  std::optional<double> budget;
  std::optional<double> epsilon;
  std::optional<double> delta;  // converted per run via epsilon_for_target

  std::uint64_t seed_base = 1;
  int runs = 1;

  // Route endpoints; default is corner-to-corner on grids and a seeded draw
  // otherwise (the drawn pair is recorded in the network column).
  std::optional<VertexId> source;
  std::optional<VertexId> dest;

  std::uint64_t memory_cap = 20'000'000;

  // false fixes the runtime column to 0.000 so repeated invocations produce
  // byte-identical reports.
  bool with_timing = true;

  // Attempt the exhaustive oracle when the instance is small enough
  // (hop bound <= 12 and n <= 100); an oracle blowup just leaves the column
  // empty.
  bool allow_oracle = true;
};

struct BenchmarkRow {
  std::string network;
  int hops = 0;
  std::optional<double> alpha;  // worst-case factor when the objective has one
  std::uint64_t stored_paths = 0;
  double runtime_s = 0;
  std::optional<double> value;
  std::optional<double> oracle_value;
  std::optional<double> accuracy;  // in (0, 1], direction per objective sense
  std::string error;               // per-row failure note, not part of the CSV
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;      // one per seed, in seed order
  std::optional<BenchmarkRow> summary; // seed-averaged, network "<name>:mean"

  // Fixed column order:
  // network,hops,alpha,stored_paths,runtime_s,value,oracle_value,accuracy
  std::string to_csv() const;

  // Per-iteration trace of the first run: iter,new_records,cumulative_records
  std::string trace_csv() const;

  std::vector<std::uint64_t> first_run_cumulative;
};

/// Runs the batch, one row per seed, never aborting the batch on a per-run
/// error. Deterministic: identical config produces an identical report
/// (byte-identical CSV when with_timing is false).
BenchmarkReport run_benchmark(const BenchmarkConfig& config);

}  // namespace latroute
