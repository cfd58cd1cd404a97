#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "leadersel/graph_model.hpp"
#include "leadersel/selectors.hpp"

namespace leadersel {

enum class Policy { Uniform, Skewed };

std::string_view to_string(Policy policy);
Policy parse_policy(std::string_view text);

/// Builds an instance from a weight policy; the seed is ignored by Skewed.
GraphSpec generate(const GraphSkeleton& skeleton, Policy policy, std::uint64_t seed);

/// Parameters of a greedy-versus-optimal sweep.
struct SweepConfig {
  GraphSkeleton skeleton;
  Policy policy = Policy::Uniform;
  std::vector<std::size_t> k_values;
  std::vector<std::uint64_t> seeds;
  std::vector<Method> methods;
};

/// Throws MalformedInput on an invalid skeleton, empty or non-increasing
/// k_values, k = 0, no seeds or no methods, and TooLarge when brute force is
/// requested beyond kBruteForceLimit.
void validate(const SweepConfig& config);

/// One line of the results CSV.
struct CsvRow {
  Topology topology = Topology::Path;
  Metric metric = Metric::Coherence;
  std::string policy;  // "uniform", "skewed", or "file" for instances read from disk
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::uint64_t> seed;
  Method method = Method::OptimalDP;
  std::vector<NodeId> leaders;
  double objective = 0.0;
  std::optional<double> ratio;
  double elapsed_s = 0.0;
};

/// "topology,metric,policy,n,k,seed,method,leaders,objective,ratio,elapsed_s"
std::string_view csv_header();

/// Leaders joined by ';', objective with 12 significant digits, empty seed and
/// ratio when absent. No trailing newline.
std::string format_csv_row(const CsvRow& row);

/// "%.12g" rendering, with "inf" for +infinity.
std::string format_objective(double value);

/// Greedy-versus-optimal ratio oriented so that values >= 1 mean the optimum is
/// at least as good: R_greedy / R_opt for coherence, C_opt / C_greedy for
/// convergence. Equal values (including 0/0 and inf/inf) give 1.
double greedy_ratio(Metric metric, double greedy_value, double optimal_value);

CsvRow make_row(const GraphSpec& spec, std::string policy, std::size_t k, std::optional<std::uint64_t> seed,
                const SelectionResult& result);

/// Runs every (k, seed, method) cell and writes the header plus one row per
/// cell to `out`, ordered by k, then seed, then method (optimal, greedy,
/// brute). Optimal and greedy results for all k of a seed come from one batched
/// computation, so their elapsed_s is the wall time of that batch.
void run_sweep(const SweepConfig& config, std::ostream& out);

}  // namespace leadersel
