#include "leadersel/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <tuple>

#include "leadersel/errors.hpp"

namespace leadersel {

std::string_view to_string(Policy policy) {
  return policy == Policy::Uniform ? "uniform" : "skewed";
}

Policy parse_policy(std::string_view text) {
  if (text == "uniform") return Policy::Uniform;
  if (text == "skewed") return Policy::Skewed;
  throw MalformedInput("unknown policy '" + std::string(text) + "'");
}

GraphSpec generate(const GraphSkeleton& skeleton, Policy policy, std::uint64_t seed) {
  return policy == Policy::Uniform ? uniform_policy(skeleton, seed) : skewed_policy(skeleton);
}

void validate(const SweepConfig& config) {
  validate(config.skeleton);
  if (config.k_values.empty()) throw MalformedInput("no k values");
  if (config.k_values.front() == 0) throw MalformedInput("k must be at least 1");
  if (std::adjacent_find(config.k_values.begin(), config.k_values.end(), std::greater_equal<>()) !=
      config.k_values.end()) {
    throw MalformedInput("k values must be strictly increasing");
  }
  if (config.seeds.empty()) throw MalformedInput("no seeds");
  if (config.methods.empty()) throw MalformedInput("no methods");
  const bool brute = std::find(config.methods.begin(), config.methods.end(), Method::BruteForce) != config.methods.end();
  if (brute) {
    const auto candidates = brute_force_candidates(config.skeleton.n, config.k_values.back());
    if (candidates > kBruteForceLimit) {
      throw TooLarge("brute force over " + std::to_string(candidates) + " leader sets exceeds the limit");
    }
  }
}

std::string_view csv_header() {
  return "topology,metric,policy,n,k,seed,method,leaders,objective,ratio,elapsed_s";
}

std::string format_objective(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_csv_row(const CsvRow& row) {
  std::string out;
  out += to_string(row.topology);
  out += ',';
  out += to_string(row.metric);
  out += ',' + row.policy + ',' + std::to_string(row.n) + ',' + std::to_string(row.k) + ',';
  if (row.seed) out += std::to_string(*row.seed);
  out += ',';
  out += to_string(row.method);
  out += ',';
  for (std::size_t i = 0; i < row.leaders.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(row.leaders[i]);
  }
  out += ',' + format_objective(row.objective) + ',';
  if (row.ratio) out += format_objective(*row.ratio);
  char buf[40];
  std::snprintf(buf, sizeof buf, ",%.6g", row.elapsed_s);
  out += buf;
  return out;
}

double greedy_ratio(Metric metric, double greedy_value, double optimal_value) {
  if (greedy_value == optimal_value) return 1.0;
  return metric == Metric::Coherence ? greedy_value / optimal_value : optimal_value / greedy_value;
}

CsvRow make_row(const GraphSpec& spec, std::string policy, std::size_t k, std::optional<std::uint64_t> seed,
                const SelectionResult& result) {
  CsvRow row;
  row.topology = spec.topology();
  row.metric = spec.metric();
  row.policy = std::move(policy);
  row.n = spec.n();
  row.k = k;
  row.seed = seed;
  row.method = result.method;
  row.leaders.assign(result.leaders.members().begin(), result.leaders.members().end());
  row.objective = result.objective.value;
  row.elapsed_s = result.elapsed_s;
  return row;
}

void run_sweep(const SweepConfig& config, std::ostream& out) {
  validate(config);
  const auto wants = [&](Method m) {
    return std::find(config.methods.begin(), config.methods.end(), m) != config.methods.end();
  };
  const std::size_t k_max = config.k_values.back();
  const std::string policy(to_string(config.policy));

  // Rows keyed by (k, seed position, method) so the output order is fixed.
  std::map<std::tuple<std::size_t, std::size_t, int>, CsvRow> rows;
  for (std::size_t s = 0; s < config.seeds.size(); ++s) {
    const std::uint64_t seed = config.seeds[s];
    const GraphSpec spec = generate(config.skeleton, config.policy, seed);
    std::vector<SelectionResult> optimal_results;
    std::vector<SelectionResult> greedy_results;
    if (wants(Method::OptimalDP)) optimal_results = optimal_up_to(spec, k_max);
    if (wants(Method::Greedy)) greedy_results = greedy_up_to(spec, k_max);

    for (std::size_t k : config.k_values) {
      std::optional<double> ratio;
      if (!optimal_results.empty() && !greedy_results.empty()) {
        ratio = greedy_ratio(spec.metric(), greedy_results[k - 1].objective.value,
                             optimal_results[k - 1].objective.value);
      }
      const auto add = [&](const SelectionResult& result) {
        CsvRow row = make_row(spec, policy, k, seed, result);
        row.ratio = ratio;
        rows.emplace(std::tuple{k, s, static_cast<int>(result.method)}, std::move(row));
      };
      if (!optimal_results.empty()) add(optimal_results[k - 1]);
      if (!greedy_results.empty()) add(greedy_results[k - 1]);
      if (wants(Method::BruteForce)) add(brute_force(spec, k));
    }
  }

  out << csv_header() << '\n';
  for (const auto& [key, row] : rows) out << format_csv_row(row) << '\n';
}

}  // namespace leadersel
