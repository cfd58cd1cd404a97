#include "leadersel/selectors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "leadersel/errors.hpp"

namespace leadersel {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Relative tolerance under which two objective values count as tied.
double tie_tolerance(double value) {
  return std::isfinite(value) ? 1e-12 * std::max(1.0, std::abs(value)) : 0.0;
}

bool strictly_better(Metric metric, double candidate, double incumbent) {
  return improves(metric, candidate, incumbent, tie_tolerance(incumbent));
}

bool tied(Metric metric, double a, double b) {
  return !strictly_better(metric, a, b) && !strictly_better(metric, b, a);
}

PathObjective path_objective(Metric metric) {
  return metric == Metric::Coherence ? PathObjective::MinWeight : PathObjective::Widest;
}

// Leader ids are the interior vertices of a source..target walk.
std::vector<NodeId> interior_vertices(const HopPathResult& path) {
  return {path.nodes.begin() + 1, path.nodes.end() - 1};
}

std::vector<SelectionResult> optimal_path_batch(const GraphSpec& spec, std::size_t k_max) {
  const auto start = Clock::now();
  const std::size_t k_top = std::min(k_max, spec.n());
  const HopTable table(path_selection_digraph(spec), k_top + 1, path_objective(spec.metric()));

  std::vector<SelectionResult> results;
  results.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const HopPathResult path = table.best_path(std::min(k, k_top) + 1);
    results.push_back({LeaderSet(interior_vertices(path)), {spec.metric(), path.weight}, Method::OptimalDP, 0.0});
  }
  const double elapsed = seconds_since(start);
  for (auto& r : results) r.elapsed_s = elapsed;
  return results;
}

std::vector<SelectionResult> optimal_ring_batch(const GraphSpec& spec, std::size_t k_max) {
  const auto start = Clock::now();
  const std::size_t n = spec.n();
  const std::size_t k_top = std::min(k_max, n);
  const RingGapTable gaps(spec);

  // best[k-1] holds the best walk found so far for budget k and its candidate.
  std::vector<std::optional<HopPathResult>> best(k_top);
  std::vector<NodeId> best_candidate(k_top, 0);
  for (NodeId i = 1; i <= n; ++i) {
    const HopTable table(ring_selection_digraph(gaps, i), k_top, path_objective(spec.metric()));
    for (std::size_t k = 1; k <= k_top; ++k) {
      HopPathResult path = table.best_path(k);
      if (!best[k - 1] || strictly_better(spec.metric(), path.weight, best[k - 1]->weight)) {
        best[k - 1] = std::move(path);
        best_candidate[k - 1] = i;
      }
    }
  }

  std::vector<SelectionResult> results;
  results.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t slot = std::min(k, k_top) - 1;
    std::vector<NodeId> leaders = interior_vertices(*best[slot]);
    leaders.push_back(best_candidate[slot]);
    results.push_back({LeaderSet(std::move(leaders)), {spec.metric(), best[slot]->weight}, Method::OptimalDP, 0.0});
  }
  const double elapsed = seconds_since(start);
  for (auto& r : results) r.elapsed_s = elapsed;
  return results;
}

void require_k(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::OptimalDP:
      return "optimal";
    case Method::Greedy:
      return "greedy";
    case Method::BruteForce:
      return "brute";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "optimal") return Method::OptimalDP;
  if (text == "greedy") return Method::Greedy;
  if (text == "brute") return Method::BruteForce;
  throw MalformedInput("unknown method '" + std::string(text) + "'");
}

std::uint64_t brute_force_candidates(std::size_t n, std::size_t k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, i), built incrementally
  for (std::size_t i = 1; i <= std::min(k, n); ++i) {
    // C(n, i) = C(n, i-1) * (n - i + 1) / i; the product is divisible by i.
    const std::uint64_t factor = n - i + 1;
    if (binom > kMax / factor) return kMax;
    binom = binom * factor / i;
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

SelectionDigraph path_selection_digraph(const GraphSpec& spec) {
  if (spec.topology() != Topology::Path) throw std::invalid_argument("path digraph needs a path instance");
  const std::size_t n = spec.n();
  const std::size_t target = n + 1;
  std::vector<Arc> arcs;
  arcs.reserve(n * (n + 3) / 2);
  for (NodeId v = 1; v <= n; ++v) {
    arcs.push_back({0, v, block_value(spec, segment_between(spec, std::nullopt, v))});
    for (NodeId u = 1; u < v; ++u) arcs.push_back({u, v, block_value(spec, segment_between(spec, u, v))});
  }
  for (NodeId v = 1; v <= n; ++v) {
    arcs.push_back({v, target, block_value(spec, segment_between(spec, v, std::nullopt))});
  }
  return SelectionDigraph(n + 2, 0, target, std::move(arcs));
}

RingGapTable::RingGapTable(const GraphSpec& spec) : n_(spec.n()), values_(spec.n() * spec.n()) {
  if (spec.topology() != Topology::Ring) throw std::invalid_argument("gap table needs a ring instance");
  for (NodeId u = 1; u <= n_; ++u) {
    for (NodeId v = 1; v <= n_; ++v) values_[(u - 1) * n_ + (v - 1)] = block_value(spec, segment_between(spec, u, v));
  }
}

SelectionDigraph ring_selection_digraph(const RingGapTable& gaps, NodeId candidate) {
  const std::size_t n = gaps.n();
  const std::size_t target = n + 1;
  const auto position = [&](NodeId x) { return (x + n - candidate) % n; };

  std::vector<Arc> arcs;
  arcs.reserve(n * (n + 3) / 2);
  for (NodeId v = 1; v <= n; ++v) {
    if (v == candidate) continue;
    arcs.push_back({0, v, gaps(candidate, v)});
    for (NodeId u = 1; u <= n; ++u) {
      if (u != candidate && position(u) < position(v)) arcs.push_back({u, v, gaps(u, v)});
    }
  }
  arcs.push_back({0, target, gaps(candidate, candidate)});
  for (NodeId v = 1; v <= n; ++v) {
    if (v != candidate) arcs.push_back({v, target, gaps(v, candidate)});
  }
  return SelectionDigraph(n + 2, 0, target, std::move(arcs));
}

SelectionResult optimal_path(const GraphSpec& spec, std::size_t k) {
  require_k(k);
  if (spec.topology() != Topology::Path) throw std::invalid_argument("optimal_path needs a path instance");
  return optimal_path_batch(spec, k).back();
}

SelectionResult optimal_ring(const GraphSpec& spec, std::size_t k) {
  require_k(k);
  if (spec.topology() != Topology::Ring) throw std::invalid_argument("optimal_ring needs a ring instance");
  return optimal_ring_batch(spec, k).back();
}

SelectionResult optimal(const GraphSpec& spec, std::size_t k) {
  return spec.topology() == Topology::Path ? optimal_path(spec, k) : optimal_ring(spec, k);
}

std::vector<SelectionResult> optimal_up_to(const GraphSpec& spec, std::size_t k_max) {
  require_k(k_max);
  return spec.topology() == Topology::Path ? optimal_path_batch(spec, k_max) : optimal_ring_batch(spec, k_max);
}

std::vector<SelectionResult> greedy_up_to(const GraphSpec& spec, std::size_t k_max) {
  require_k(k_max);
  const auto start = Clock::now();
  const Metric metric = spec.metric();
  // No leaders: the grounded Laplacian is the singular full Laplacian.
  double current = metric == Metric::Coherence ? std::numeric_limits<double>::infinity() : 0.0;
  std::vector<NodeId> chosen;
  std::vector<SelectionResult> results;
  results.reserve(k_max);

  for (std::size_t step = 0; step < k_max; ++step) {
    std::optional<NodeId> pick;
    double pick_value = 0.0;
    for (NodeId v = 1; v <= spec.n(); ++v) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      std::vector<NodeId> trial = chosen;
      trial.push_back(v);
      const double value = evaluate(spec, LeaderSet(std::move(trial))).value;
      if (!pick || strictly_better(metric, value, pick_value)) {
        pick = v;
        pick_value = value;
      }
    }
    if (pick && strictly_better(metric, pick_value, current)) {
      chosen.push_back(*pick);
      current = pick_value;
    } else if (!results.empty()) {
      // No improvement: the set stays as is for every larger k.
      while (results.size() < k_max) results.push_back(results.back());
      break;
    }
    results.push_back({LeaderSet(chosen), {metric, current}, Method::Greedy, 0.0});
  }
  const double elapsed = seconds_since(start);
  for (auto& r : results) r.elapsed_s = elapsed;
  return results;
}

SelectionResult greedy(const GraphSpec& spec, std::size_t k) {
  return greedy_up_to(spec, k).back();
}

SelectionResult brute_force(const GraphSpec& spec, std::size_t k) {
  require_k(k);
  const auto start = Clock::now();
  const std::size_t n = spec.n();
  const std::size_t k_top = std::min(k, n);
  const std::uint64_t candidates = brute_force_candidates(n, k_top);
  if (candidates > kBruteForceLimit) {
    throw TooLarge("brute force over " + std::to_string(candidates) + " leader sets exceeds the limit of " +
                   std::to_string(kBruteForceLimit));
  }

  const Metric metric = spec.metric();
  std::optional<LeaderSet> best_set;
  double best_value = 0.0;
  for (std::size_t size = 1; size <= k_top; ++size) {
    std::vector<NodeId> combo(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i + 1;
    while (true) {
      LeaderSet set(combo);
      const double value = evaluate(spec, set).value;
      if (!best_set || strictly_better(metric, value, best_value) ||
          (tied(metric, value, best_value) && set < *best_set)) {
        best_set = std::move(set);
        best_value = value;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == n - size + i) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return {*best_set, {metric, best_value}, Method::BruteForce, seconds_since(start)};
}

double max_single_leader_coherence(const GraphSpec& spec) {
  double worst = 0.0;
  for (NodeId v = 1; v <= spec.n(); ++v) worst = std::max(worst, coherence(spec, LeaderSet({v})).value);
  return worst;
}

bool greedy_bound_check(const GraphSpec& spec, std::size_t k, double greedy_value, double optimal_value) {
  require_k(k);
  if (spec.metric() != Metric::Coherence) throw std::invalid_argument("the greedy bound applies to coherence");
  const double kd = static_cast<double>(k);
  const double factor = 1.0 - std::pow((kd - 1.0) / kd, kd);
  const double bound = factor * optimal_value + max_single_leader_coherence(spec) / std::numbers::e;
  return greedy_value <= bound + tie_tolerance(bound);
}

}  // namespace leadersel
