// Command-line front end: instance generation, solving, exhaustive
// verification, and benchmark batches over the library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "latroute/baselines.hpp"
#include "latroute/benchmark.hpp"
#include "latroute/errors.hpp"
#include "latroute/generators.hpp"
#include "latroute/graph.hpp"
#include "latroute/instance_io.hpp"
#include "latroute/lattice.hpp"
#include "latroute/objectives.hpp"
#include "latroute/oracle.hpp"
#include "latroute/solver.hpp"

namespace {

using namespace latroute;

struct InstanceArgs {
  std::string path;
  bool tntp = false;
  std::uint64_t seed = 1;  // TNTP variance seed
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--instance", args.path, "instance file")->required();
  cmd->add_flag("--tntp", args.tntp, "parse the file as a TNTP network");
  cmd->add_option("--seed", args.seed,
                  "seed for the TNTP variance draw (default 1)");
}

Graph load_instance(const InstanceArgs& args) {
  Graph graph = args.tntp ? parse_tntp_file(args.path, args.seed)
                          : read_instance_file(args.path);
  const ValidationReport report = validate(graph);
  if (!report.ok()) {
    throw Error("instance failed validation:\n" + report.to_string());
  }
  return graph;
}

void write_trace(const std::string& path, const SolveStats& stats) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open trace file '" + path + "'");
  }
  out << "iter,new_records,cumulative_records\n";
  std::uint64_t previous = 0;
  for (std::size_t i = 0; i < stats.stored_records_per_iteration.size(); ++i) {
    const std::uint64_t cumulative = stats.stored_records_per_iteration[i];
    out << (i + 1) << ',' << (cumulative - previous) << ',' << cumulative
        << '\n';
    previous = cumulative;
  }
}

void print_walk(const Walk& walk) {
  std::cout << "walk";
  for (const EdgeId e : walk) {
    std::cout << ' ' << e;
  }
  std::cout << '\n';
}

void print_criteria(const CriteriaVector& criteria) {
  std::cout << "criteria";
  for (const double c : criteria) {
    std::cout << ' ' << format_double(c);
  }
  std::cout << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"route planning with nonlinear objectives"};
  app.require_subcommand(1);

  // ---- generate ----------------------------------------------------------
  auto* generate = app.add_subcommand("generate", "write instance files");
  generate->require_subcommand(1);

  GridSpec grid_spec;
  bool unidirectional = false;
  std::string out_path;
  auto* grid_cmd = generate->add_subcommand("grid", "random grid instance");
  grid_cmd->add_option("--rows", grid_spec.rows)->required();
  grid_cmd->add_option("--cols", grid_spec.cols)->required();
  grid_cmd->add_option("--low", grid_spec.weight_low, "weight range low");
  grid_cmd->add_option("--high", grid_spec.weight_high, "weight range high");
  grid_cmd->add_option("--criteria", grid_spec.criteria_count);
  grid_cmd->add_option("--seed", grid_spec.seed);
  grid_cmd->add_flag("--unidirectional", unidirectional,
                     "one arc per adjacency instead of two");
  grid_cmd->add_option("--out", out_path, "output file")->required();

  InstanceArgs gadget_base;
  VertexId gadget_source = 0;
  double gadget_lambda = 1.0;
  auto* gadget_cmd = generate->add_subcommand(
      "gadget", "ratio-objective hard instance over a base topology");
  gadget_cmd->add_option("--instance", gadget_base.path, "base instance file")
      ->required();
  gadget_cmd->add_option("--source", gadget_source)->required();
  gadget_cmd->add_option("--lambda", gadget_lambda);
  gadget_cmd->add_option("--out", out_path, "output file")->required();

  // ---- solve / oracle ----------------------------------------------------
  InstanceArgs solve_instance;
  std::string objective_name = "ratio";
  VertexId source = 0;
  VertexId dest = 0;
  std::optional<int> hops;
  std::optional<double> budget;
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::string trace_path;
  std::uint64_t memory_cap = 20'000'000;

  auto* solve_cmd = app.add_subcommand("solve", "approximate solve");
  add_instance_options(solve_cmd, solve_instance);
  solve_cmd->add_option("--objective", objective_name,
                        "ratio | deadline:D=..[,regime=2|3] | "
                        "deadline:dfrac=.. | linear:k=..");
  solve_cmd->add_option("--source", source)->required();
  solve_cmd->add_option("--dest", dest)->required();
  auto* solve_hops = solve_cmd->add_option("--hops", hops, "hop bound");
  auto* solve_budget =
      solve_cmd->add_option("--budget", budget, "budget bound");
  solve_hops->excludes(solve_budget);
  auto* solve_eps = solve_cmd->add_option("--epsilon", epsilon);
  auto* solve_delta = solve_cmd->add_option(
      "--delta", delta, "target factor 1+delta (needs a Lipschitz objective)");
  solve_eps->excludes(solve_delta);
  solve_cmd->add_option("--trace", trace_path, "per-iteration trace CSV");
  solve_cmd->add_option("--memory-cap", memory_cap);

  InstanceArgs oracle_instance;
  std::uint64_t max_walks = 50'000'000;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exact optimum by exhaustive enumeration");
  add_instance_options(oracle_cmd, oracle_instance);
  oracle_cmd->add_option("--objective", objective_name);
  oracle_cmd->add_option("--source", source)->required();
  oracle_cmd->add_option("--dest", dest)->required();
  auto* oracle_hops = oracle_cmd->add_option("--hops", hops);
  auto* oracle_budget = oracle_cmd->add_option("--budget", budget);
  oracle_hops->excludes(oracle_budget);
  oracle_cmd->add_option("--max-walks", max_walks, "enumeration cap");

  // ---- bench -------------------------------------------------------------
  BenchmarkConfig bench;
  std::string bench_grid;
  std::string bench_instance;
  GridSpec bench_grid_spec;
  std::string bench_out;
  bool no_timing = false;
  bool no_oracle = false;
  std::optional<VertexId> bench_source, bench_dest;

  auto* bench_cmd = app.add_subcommand("bench", "seeded benchmark batch");
  bench_cmd->add_option("--grid", bench_grid, "RxC, regenerated per seed");
  bench_cmd->add_option("--instance", bench_instance, "instance file");
  bench_cmd->add_flag("--tntp", bench.tntp);
  bench_cmd->add_option("--low", bench_grid_spec.weight_low);
  bench_cmd->add_option("--high", bench_grid_spec.weight_high);
  bench_cmd->add_option("--criteria", bench_grid_spec.criteria_count);
  bench_cmd->add_option("--objective", bench.objective);
  auto* bench_hops = bench_cmd->add_option("--hops", bench.hops);
  auto* bench_budget = bench_cmd->add_option("--budget", bench.budget);
  bench_hops->excludes(bench_budget);
  auto* bench_eps = bench_cmd->add_option("--epsilon", bench.epsilon);
  auto* bench_delta = bench_cmd->add_option("--delta", bench.delta);
  bench_eps->excludes(bench_delta);
  bench_cmd->add_option("--seed", bench.seed_base, "base seed");
  bench_cmd->add_option("--runs", bench.runs, "seeds seed..seed+runs-1");
  bench_cmd->add_option("--source", bench_source);
  bench_cmd->add_option("--dest", bench_dest);
  bench_cmd->add_option("--out", bench_out, "CSV output file (default stdout)");
  bench_cmd->add_option("--trace", trace_path, "first-run trace CSV");
  bench_cmd->add_option("--memory-cap", bench.memory_cap);
  bench_cmd->add_flag("--no-timing", no_timing,
                      "zero the runtime column for reproducible output");
  bench_cmd->add_flag("--no-oracle", no_oracle,
                      "skip the exhaustive comparison");

  CLI11_PARSE(app, argc, argv);

  if (grid_cmd->parsed()) {
    grid_spec.bidirectional = !unidirectional;
    write_instance_file(out_path, generate_grid(grid_spec));
    std::cout << "wrote " << out_path << '\n';
    return 0;
  }

  if (gadget_cmd->parsed()) {
    const Graph base = read_instance_file(gadget_base.path);
    write_instance_file(out_path,
                        generate_ratio_gadget(base, gadget_source,
                                              gadget_lambda));
    std::cout << "wrote " << out_path << '\n';
    return 0;
  }

  if (solve_cmd->parsed()) {
    if (hops.has_value() == budget.has_value()) {
      throw Error("pass exactly one of --hops or --budget");
    }
    const Graph graph = load_instance(solve_instance);
    const NamedObjective named = instantiate_objective(
        parse_objective_spec(objective_name), graph, source, dest);

    const int gamma =
        hops ? *hops : hop_bound_for_budget(graph, source, dest, *budget);
    double eps = 0;
    if (epsilon) {
      eps = *epsilon;
    } else if (delta) {
      if (!named.objective.lipschitz_beta) {
        throw Error("--delta needs an objective with a Lipschitz constant");
      }
      eps = epsilon_for_target(*delta, *named.objective.lipschitz_beta,
                               graph.criteria_count(), gamma);
    } else {
      throw Error("pass one of --epsilon or --delta");
    }

    SolveOptions options;
    options.memory_cap = memory_cap;
    const SolveResult result =
        hops ? solve_hop_constrained(graph, source, dest, gamma,
                                     named.objective, eps, options)
             : solve_budget_constrained(graph, source, dest, *budget,
                                        named.objective, eps, options);

    std::cout << "objective " << named.objective.name << '\n'
              << "epsilon " << format_double(eps) << '\n'
              << "hop_bound " << gamma << '\n'
              << "value " << format_double(result.best_value) << '\n';
    print_criteria(result.best_criteria);
    if (budget) {
      std::cout << "budget_used " << format_double(result.best_budget) << '\n';
    }
    std::cout << "hops " << result.best_hops << '\n';
    print_walk(result.best_walk);
    std::cout << "stored_records "
              << result.stats.stored_records_per_iteration.back() << '\n'
              << "extensions " << result.stats.extensions_attempted << '\n'
              << "lattice_cells " << result.stats.lattice_cells << '\n'
              << "time_s " << result.stats.wall_time_s << '\n';
    if (result.guarantee_factor) {
      std::cout << "guarantee_factor " << format_double(*result.guarantee_factor)
                << '\n';
    }
    if (named.deadline) {
      std::cout << "regime "
                << (named.deadline->all_late ? "all-late" : "monotone")
                << '\n';
      if (named.deadline->all_late) {
        const auto alpha = deadline_guarantee(eps, gamma, named.deadline->spec,
                                              result.best_value);
        std::cout << "deadline_alpha "
                  << (alpha ? format_double(*alpha) : std::string("n/a"))
                  << '\n';
      }
    }
    if (!trace_path.empty()) {
      write_trace(trace_path, result.stats);
    }
    return 0;
  }

  if (oracle_cmd->parsed()) {
    if (hops.has_value() == budget.has_value()) {
      throw Error("pass exactly one of --hops or --budget");
    }
    const Graph graph = load_instance(oracle_instance);
    const NamedObjective named = instantiate_objective(
        parse_objective_spec(objective_name), graph, source, dest);
    EnumerationConfig config;
    config.max_hops =
        hops ? *hops : hop_bound_for_budget(graph, source, dest, *budget);
    config.budget = budget;
    config.max_walks = max_walks;
    const OracleOptimum best =
        exact_optimum(graph, source, dest, config, named.objective);
    std::cout << "objective " << named.objective.name << '\n'
              << "hop_bound " << config.max_hops << '\n'
              << "value " << format_double(best.value) << '\n';
    print_criteria(best.criteria);
    std::cout << "hops " << best.walk.size() << '\n';
    print_walk(best.walk);
    std::cout << "walks_enumerated " << best.stats.yielded << '\n'
              << "subwalks_explored " << best.stats.expansions << '\n';
    return 0;
  }

  if (bench_cmd->parsed()) {
    if (!bench_grid.empty()) {
      const auto x = bench_grid.find('x');
      if (x == std::string::npos) {
        throw Error("--grid expects RxC, e.g. 5x5");
      }
      bench_grid_spec.rows = std::stoi(bench_grid.substr(0, x));
      bench_grid_spec.cols = std::stoi(bench_grid.substr(x + 1));
      bench.grid = bench_grid_spec;
    }
    if (!bench_instance.empty()) {
      bench.instance_path = bench_instance;
    }
    bench.source = bench_source;
    bench.dest = bench_dest;
    bench.with_timing = !no_timing;
    bench.allow_oracle = !no_oracle;

    const BenchmarkReport report = run_benchmark(bench);
    for (const BenchmarkRow& row : report.rows) {
      if (!row.error.empty()) {
        std::cerr << row.network << ": " << row.error << '\n';
      }
    }
    if (bench_out.empty()) {
      std::cout << report.to_csv();
    } else {
      std::ofstream out(bench_out);
      if (!out) {
        throw Error("cannot open '" + bench_out + "' for writing");
      }
      out << report.to_csv();
    }
    if (!trace_path.empty()) {
      std::ofstream out(trace_path);
      if (!out) {
        throw Error("cannot open trace file '" + trace_path + "'");
      }
      out << report.trace_csv();
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const latroute::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
