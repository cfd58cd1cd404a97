// Command-line front end: generate instances, select leaders, run sweeps.
//
//   leadersel gen    --topology path|ring --n INT --metric coherence|convergence
//                    --policy uniform|skewed [--seed INT] [--out FILE]
//   leadersel select --graph FILE --k INT --method optimal|greedy|brute [--csv]
//   leadersel sweep  --topology ... --n INT --metric ... --policy ...
//                    --k-min INT --k-max INT --seeds INT[,INT...] --methods LIST [--out FILE]
//
// Exit status: 0 on success, 2 on malformed input or usage, 3 when brute force
// exceeds its guard.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "leadersel/leadersel.hpp"

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitTooLarge = 3;

struct GenArgs {
  std::string topology;
  std::size_t n = 0;
  std::string metric;
  std::string policy;
  std::uint64_t seed = 1;
  std::string out;
};

struct SelectArgs {
  std::string graph;
  std::size_t k = 0;
  std::string method;
  bool csv = false;
};

struct SweepArgs {
  std::string topology;
  std::size_t n = 0;
  std::string metric;
  std::string policy;
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> methods;
  std::string out;
};

leadersel::GraphSkeleton skeleton_from(const std::string& topology, std::size_t n, const std::string& metric) {
  leadersel::GraphSkeleton skeleton{leadersel::parse_topology(topology), n, leadersel::parse_metric(metric)};
  leadersel::validate(skeleton);
  return skeleton;
}

// Writes to the named file, or stdout when the name is empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw leadersel::MalformedInput("cannot open '" + path + "' for writing");
  write(file);
}

int run_gen(const GenArgs& args) {
  const auto spec = leadersel::generate(skeleton_from(args.topology, args.n, args.metric),
                                        leadersel::parse_policy(args.policy), args.seed);
  with_output(args.out, [&](std::ostream& os) { os << leadersel::format_graph(spec); });
  return 0;
}

int run_select(const SelectArgs& args) {
  std::ifstream file(args.graph);
  if (!file) throw leadersel::MalformedInput("cannot read '" + args.graph + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const auto spec = leadersel::parse_graph(buffer.str());
  if (args.k == 0) throw leadersel::MalformedInput("--k must be at least 1");

  const auto method = leadersel::parse_method(args.method);
  const leadersel::SelectionResult result = [&] {
    switch (method) {
      case leadersel::Method::Greedy:
        return leadersel::greedy(spec, args.k);
      case leadersel::Method::BruteForce:
        return leadersel::brute_force(spec, args.k);
      case leadersel::Method::OptimalDP:
        break;
    }
    return leadersel::optimal(spec, args.k);
  }();

  if (args.csv) std::cout << leadersel::csv_header() << '\n';
  std::cout << leadersel::format_csv_row(leadersel::make_row(spec, "file", args.k, std::nullopt, result)) << '\n';
  return 0;
}

int run_sweep(const SweepArgs& args) {
  leadersel::SweepConfig config;
  config.skeleton = skeleton_from(args.topology, args.n, args.metric);
  config.policy = leadersel::parse_policy(args.policy);
  if (args.k_min == 0 || args.k_min > args.k_max) throw leadersel::MalformedInput("need 1 <= --k-min <= --k-max");
  config.k_values.resize(args.k_max - args.k_min + 1);
  std::iota(config.k_values.begin(), config.k_values.end(), args.k_min);
  config.seeds = args.seeds;
  for (const auto& m : args.methods) config.methods.push_back(leadersel::parse_method(m));
  leadersel::validate(config);
  with_output(args.out, [&](std::ostream& os) { leadersel::run_sweep(config, os); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal leader selection in weighted path and ring consensus networks"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a generated instance in the graph file format");
  gen->add_option("--topology", gen_args.topology, "path or ring")->required();
  gen->add_option("--n", gen_args.n, "Number of nodes")->required();
  gen->add_option("--metric", gen_args.metric, "coherence or convergence")->required();
  gen->add_option("--policy", gen_args.policy, "uniform or skewed")->required();
  gen->add_option("--seed", gen_args.seed, "Seed for the uniform policy");
  gen->add_option("--out", gen_args.out, "Output file (default: stdout)");

  SelectArgs select_args;
  auto* select = app.add_subcommand("select", "Select leaders for an instance file");
  select->add_option("--graph", select_args.graph, "Graph file")->required();
  select->add_option("--k", select_args.k, "Maximum number of leaders")->required();
  select->add_option("--method", select_args.method, "optimal, greedy or brute")->required();
  select->add_flag("--csv", select_args.csv, "Print the CSV header before the record");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Compare methods over a range of k and seeds");
  sweep->add_option("--topology", sweep_args.topology, "path or ring")->required();
  sweep->add_option("--n", sweep_args.n, "Number of nodes")->required();
  sweep->add_option("--metric", sweep_args.metric, "coherence or convergence")->required();
  sweep->add_option("--policy", sweep_args.policy, "uniform or skewed")->required();
  sweep->add_option("--k-min", sweep_args.k_min, "Smallest k")->required();
  sweep->add_option("--k-max", sweep_args.k_max, "Largest k")->required();
  sweep->add_option("--seeds", sweep_args.seeds, "Comma-separated seeds")->required()->delimiter(',');
  sweep->add_option("--methods", sweep_args.methods, "Comma-separated subset of optimal,greedy,brute")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", sweep_args.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*gen) return run_gen(gen_args);
    if (*select) return run_select(select_args);
    return run_sweep(sweep_args);
  } catch (const leadersel::TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const leadersel::MalformedInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
}
