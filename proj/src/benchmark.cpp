#include "latroute/benchmark.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include "latroute/baselines.hpp"
#include "latroute/errors.hpp"
#include "latroute/instance_io.hpp"
#include "latroute/lattice.hpp"
#include "latroute/objectives.hpp"
#include "latroute/oracle.hpp"

namespace latroute {

namespace {

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string name =
      slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) {
    name = name.substr(0, dot);
  }
  return name;
}

std::string fixed3(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

void append_cell(std::ostringstream& out, const std::optional<double>& value) {
  out << ',';
  if (value) {
    out << format_double(*value);
  }
}

// Oracle attempts stay automatic: small instances only, and an enumeration
// blowup just leaves the column empty.
bool oracle_worthwhile(const Graph& graph, int gamma) {
  return gamma <= 12 && graph.vertex_count() <= 100;
}

}  // namespace

std::string BenchmarkReport::to_csv() const {
  std::ostringstream out;
  out << "network,hops,alpha,stored_paths,runtime_s,value,oracle_value,"
         "accuracy\n";
  auto emit = [&out](const BenchmarkRow& row) {
    out << row.network << ',';
    if (row.error.empty()) {
      out << row.hops;
      append_cell(out, row.alpha);
      out << ',' << row.stored_paths << ',' << fixed3(row.runtime_s);
      append_cell(out, row.value);
      append_cell(out, row.oracle_value);
      append_cell(out, row.accuracy);
    } else {
      out << ",,,,,,";
    }
    out << '\n';
  };
  for (const BenchmarkRow& row : rows) {
    emit(row);
  }
  if (summary) {
    emit(*summary);
  }
  return out.str();
}

std::string BenchmarkReport::trace_csv() const {
  std::ostringstream out;
  out << "iter,new_records,cumulative_records\n";
  std::uint64_t previous = 0;
  for (std::size_t i = 0; i < first_run_cumulative.size(); ++i) {
    const std::uint64_t cumulative = first_run_cumulative[i];
    out << (i + 1) << ',' << (cumulative - previous) << ',' << cumulative
        << '\n';
    previous = cumulative;
  }
  return out.str();
}

BenchmarkReport run_benchmark(const BenchmarkConfig& config) {
  if (config.grid.has_value() == config.instance_path.has_value()) {
    throw Error("bench: configure exactly one of grid or instance file");
  }
  if (config.hops.has_value() == config.budget.has_value()) {
    throw Error("bench: configure exactly one of hops or budget");
  }
  if (config.epsilon.has_value() == config.delta.has_value()) {
    throw Error("bench: configure exactly one of epsilon or delta");
  }
  if (config.runs < 1) {
    throw Error("bench: runs must be positive");
  }

  const ObjectiveSpec objective_spec = parse_objective_spec(config.objective);
  BenchmarkReport report;

  for (int run = 0; run < config.runs; ++run) {
    const std::uint64_t seed = config.seed_base + static_cast<std::uint64_t>(run);
    BenchmarkRow row;
    try {
      Graph graph = [&]() {
        if (config.grid) {
          GridSpec grid = *config.grid;
          grid.seed = seed;
          row.network = "grid" + std::to_string(grid.rows) + "x" +
                        std::to_string(grid.cols);
          return generate_grid(grid);
        }
        row.network = file_stem(*config.instance_path);
        return config.tntp ? parse_tntp_file(*config.instance_path, seed)
                           : read_instance_file(*config.instance_path);
      }();

      const ValidationReport validation = validate(graph);
      if (!validation.ok()) {
        throw Error("invalid instance: " + validation.issues[0].message);
      }

      VertexId s = 0;
      VertexId t = graph.vertex_count() - 1;
      if (config.source && config.dest) {
        s = *config.source;
        t = *config.dest;
      } else if (!config.grid) {
        // Seeded route draw, independent of the variance stream.
        std::mt19937_64 route_rng(seed ^ 0x517cc1b727220a95ULL);
        s = static_cast<VertexId>(route_rng() %
                                  static_cast<std::uint64_t>(
                                      graph.vertex_count()));
        do {
          t = static_cast<VertexId>(route_rng() %
                                    static_cast<std::uint64_t>(
                                        graph.vertex_count()));
        } while (t == s);
      }
      row.network += ":s" + std::to_string(s) + "-t" + std::to_string(t);

      const NamedObjective named =
          instantiate_objective(objective_spec, graph, s, t);

      const int gamma = config.hops
                            ? *config.hops
                            : hop_bound_for_budget(graph, s, t, *config.budget);
      row.hops = gamma;

      double epsilon = 0;
      if (config.epsilon) {
        epsilon = *config.epsilon;
      } else {
        if (!named.objective.lipschitz_beta) {
          throw Error("delta targeting needs an objective with a Lipschitz "
                      "constant; pass epsilon instead");
        }
        epsilon = epsilon_for_target(*config.delta,
                                     *named.objective.lipschitz_beta,
                                     graph.criteria_count(), gamma);
      }

      SolveOptions options;
      options.memory_cap = config.memory_cap;
      const SolveResult solved =
          config.hops
              ? solve_hop_constrained(graph, s, t, gamma, named.objective,
                                      epsilon, options)
              : solve_budget_constrained(graph, s, t, *config.budget,
                                         named.objective, epsilon, options);

      row.value = solved.best_value;
      row.stored_paths = solved.stats.stored_records_per_iteration.back();
      row.runtime_s = config.with_timing ? solved.stats.wall_time_s : 0.0;

      if (named.deadline) {
        if (named.deadline->all_late) {
          row.alpha = deadline_guarantee(epsilon, gamma, named.deadline->spec,
                                         solved.best_value);
        }
        // otherwise: monotone regime, no worst-case factor to report
      } else {
        row.alpha = solved.guarantee_factor;
      }

      if (config.allow_oracle && oracle_worthwhile(graph, gamma)) {
        try {
          EnumerationConfig enum_config;
          enum_config.max_hops = gamma;
          enum_config.budget = config.budget;
          const OracleOptimum exact =
              exact_optimum(graph, s, t, enum_config, named.objective);
          row.oracle_value = exact.value;
          row.accuracy = named.objective.sense == Sense::maximize
                             ? solved.best_value / exact.value
                             : exact.value / solved.best_value;
        } catch (const EnumerationTooLarge&) {
          // leave the oracle columns empty
        }
      }

      if (run == 0) {
        report.first_run_cumulative =
            solved.stats.stored_records_per_iteration;
      }
    } catch (const Error& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }

  // Seed-averaged summary over clean rows.
  int clean = 0;
  BenchmarkRow mean;
  double hops_sum = 0, stored_sum = 0, runtime_sum = 0;
  double alpha_sum = 0, value_sum = 0, oracle_sum = 0, accuracy_sum = 0;
  int alpha_count = 0, value_count = 0, oracle_count = 0, accuracy_count = 0;
  for (const BenchmarkRow& row : report.rows) {
    if (!row.error.empty()) {
      continue;
    }
    ++clean;
    hops_sum += row.hops;
    stored_sum += static_cast<double>(row.stored_paths);
    runtime_sum += row.runtime_s;
    if (row.alpha) {
      alpha_sum += *row.alpha;
      ++alpha_count;
    }
    if (row.value) {
      value_sum += *row.value;
      ++value_count;
    }
    if (row.oracle_value) {
      oracle_sum += *row.oracle_value;
      ++oracle_count;
    }
    if (row.accuracy) {
      accuracy_sum += *row.accuracy;
      ++accuracy_count;
    }
  }
  if (clean > 0) {
    const std::string base = config.grid
                                 ? "grid" + std::to_string(config.grid->rows) +
                                       "x" + std::to_string(config.grid->cols)
                                 : file_stem(*config.instance_path);
    mean.network = base + ":mean";
    mean.hops = static_cast<int>(std::llround(hops_sum / clean));
    mean.stored_paths =
        static_cast<std::uint64_t>(std::llround(stored_sum / clean));
    mean.runtime_s = runtime_sum / clean;
    if (alpha_count > 0) {
      mean.alpha = alpha_sum / alpha_count;
    }
    if (value_count > 0) {
      mean.value = value_sum / value_count;
    }
    if (oracle_count > 0) {
      mean.oracle_value = oracle_sum / oracle_count;
    }
    if (accuracy_count > 0) {
      mean.accuracy = accuracy_sum / accuracy_count;
    }
    report.summary = std::move(mean);
  }
  return report;
}

}  // namespace latroute
