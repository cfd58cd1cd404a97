#include "leadersel/hop_paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "leadersel/errors.hpp"

namespace leadersel {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr std::size_t kNoPred = std::numeric_limits<std::size_t>::max();

bool better(PathObjective objective, double candidate, double incumbent) {
  if (objective == PathObjective::MinWeight) return candidate < incumbent - kTieTolerance;
  return candidate > incumbent + kTieTolerance;
}

double extend(PathObjective objective, double walk, double arc) {
  return objective == PathObjective::MinWeight ? walk + arc : std::min(walk, arc);
}

}  // namespace

SelectionDigraph::SelectionDigraph(std::size_t node_count, std::size_t source, std::size_t target,
                                   std::vector<Arc> arcs)
    : node_count_(node_count), source_(source), target_(target), arcs_(std::move(arcs)) {
  if (source >= node_count || target >= node_count) throw std::invalid_argument("source/target out of range");
  const auto by_head = [](const Arc& a, const Arc& b) { return a.to != b.to ? a.to < b.to : a.from < b.from; };
  if (!std::is_sorted(arcs_.begin(), arcs_.end(), by_head)) std::sort(arcs_.begin(), arcs_.end(), by_head);

  offsets_.assign(node_count + 1, 0);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.from >= node_count || a.to >= node_count) throw std::invalid_argument("arc endpoint out of range");
    if (a.from == a.to) throw std::invalid_argument("self-loop at " + std::to_string(a.from));
    if (std::isnan(a.weight)) throw std::invalid_argument("NaN arc weight");
    if (i > 0 && arcs_[i - 1].from == a.from && arcs_[i - 1].to == a.to) {
      throw std::invalid_argument("repeated arc " + std::to_string(a.from) + "->" + std::to_string(a.to));
    }
    ++offsets_[a.to + 1];
  }
  for (std::size_t v = 0; v < node_count; ++v) offsets_[v + 1] += offsets_[v];
}

std::optional<double> SelectionDigraph::weight(std::size_t from, std::size_t to) const {
  if (to >= node_count_) return std::nullopt;
  const auto in = incoming(to);
  const auto it = std::lower_bound(in.begin(), in.end(), from, [](const Arc& a, std::size_t f) { return a.from < f; });
  if (it == in.end() || it->from != from) return std::nullopt;
  return it->weight;
}

HopTable::HopTable(const SelectionDigraph& graph, std::size_t max_hops, PathObjective objective)
    : node_count_(graph.node_count()),
      source_(graph.source()),
      target_(graph.target()),
      max_hops_(max_hops),
      objective_(objective) {
  if (max_hops == 0) throw std::invalid_argument("hop budget must be at least 1");
  for (const Arc& a : graph.arcs()) {
    const bool ok = objective == PathObjective::MinWeight ? a.weight >= 0.0 : a.weight > 0.0;
    if (!ok) throw std::invalid_argument("arc weight outside the domain of the path objective");
  }

  const std::size_t cells = (max_hops + 1) * node_count_;
  const double unset = objective == PathObjective::MinWeight ? std::numeric_limits<double>::infinity()
                                                             : -std::numeric_limits<double>::infinity();
  best_.assign(cells, unset);
  pred_.assign(cells, kNoPred);
  reached_.assign(cells, 0);

  best_[index(0, source_)] = objective == PathObjective::MinWeight ? 0.0 : std::numeric_limits<double>::infinity();
  reached_[index(0, source_)] = 1;

  for (std::size_t m = 1; m <= max_hops; ++m) {
    for (std::size_t v = 0; v < node_count_; ++v) {
      const std::size_t cell = index(m, v);
      for (const Arc& a : graph.incoming(v)) {
        const std::size_t prev = index(m - 1, a.from);
        if (!reached_[prev]) continue;
        const double candidate = extend(objective, best_[prev], a.weight);
        if (!reached_[cell] || better(objective, candidate, best_[cell])) {
          best_[cell] = candidate;
          pred_[cell] = a.from;
          reached_[cell] = 1;
        }
      }
    }
  }
}

std::optional<double> HopTable::exact(std::size_t m, std::size_t v) const {
  if (m > max_hops_ || v >= node_count_ || !reached_[index(m, v)]) return std::nullopt;
  return best_[index(m, v)];
}

HopPathResult HopTable::best_path(std::size_t hops) const {
  if (hops == 0 || hops > max_hops_) throw std::invalid_argument("hop budget outside the table");
  std::size_t best_m = 0;
  for (std::size_t m = 1; m <= hops; ++m) {
    const std::size_t cell = index(m, target_);
    if (!reached_[cell]) continue;
    if (best_m == 0 || better(objective_, best_[cell], best_[index(best_m, target_)])) best_m = m;
  }
  if (best_m == 0) {
    throw Unreachable("target not reachable from source within " + std::to_string(hops) + " hops");
  }

  HopPathResult result;
  result.hop_count = best_m;
  result.weight = best_[index(best_m, target_)];
  result.nodes.resize(best_m + 1);
  std::size_t v = target_;
  for (std::size_t m = best_m; m > 0; --m) {
    result.nodes[m] = v;
    v = pred_[index(m, v)];
  }
  result.nodes[0] = v;
  return result;
}

HopPathResult min_weight_path(const SelectionDigraph& graph, std::size_t max_hops) {
  return HopTable(graph, max_hops, PathObjective::MinWeight).best_path(max_hops);
}

HopPathResult widest_path(const SelectionDigraph& graph, std::size_t max_hops) {
  return HopTable(graph, max_hops, PathObjective::Widest).best_path(max_hops);
}

std::optional<double> walk_weight(const SelectionDigraph& graph, std::span<const std::size_t> nodes,
                                  PathObjective objective) {
  if (nodes.size() < 2) return std::nullopt;
  double total = objective == PathObjective::MinWeight ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto w = graph.weight(nodes[i], nodes[i + 1]);
    if (!w) return std::nullopt;
    total = extend(objective, total, *w);
  }
  return total;
}

}  // namespace leadersel
