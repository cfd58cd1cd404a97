#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace leadersel {

/// A weighted arc of a SelectionDigraph. Weights may be +infinity.
struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 0.0;
};

/// Digraph with a distinguished source and target; vertices are 0..node_count-1.
///
/// Arcs are stored grouped by head and ordered by tail id, so each vertex's
/// in-arcs are scanned in increasing predecessor order.
class SelectionDigraph {
 public:
  /// Throws std::invalid_argument on an out-of-range endpoint, a self-loop, a
  /// NaN weight or a repeated ordered pair.
  SelectionDigraph(std::size_t node_count, std::size_t source, std::size_t target, std::vector<Arc> arcs);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const Arc> incoming(std::size_t v) const noexcept {
    return std::span<const Arc>(arcs_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }
  std::optional<double> weight(std::size_t from, std::size_t to) const;

 private:
  std::size_t node_count_;
  std::size_t source_;
  std::size_t target_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_;
};

enum class PathObjective {
  MinWeight,  // minimize the sum of arc weights
  Widest,     // maximize the smallest arc weight
};

struct HopPathResult {
  std::vector<std::size_t> nodes;  // source first, target last
  double weight = 0.0;             // sum, or bottleneck for widest paths
  std::size_t hop_count = 0;
};

/// Hop-indexed Bellman-Ford tables.
///
/// Row m holds, for every vertex, the best weight over walks from the source
/// with exactly m arcs and the predecessor that achieves it. Rows 0..max_hops
/// are filled on construction in O(max_hops * |E|). Ties within 1e-12 keep the
/// smaller predecessor id.
class HopTable {
 public:
  HopTable(const SelectionDigraph& graph, std::size_t max_hops, PathObjective objective);

  std::size_t max_hops() const noexcept { return max_hops_; }

  /// Best source-to-target walk with at most `hops` arcs (1 <= hops <=
  /// max_hops), taking the best over exact hop counts 1..hops and preferring
  /// fewer hops on ties. Throws Unreachable when no such walk exists.
  HopPathResult best_path(std::size_t hops) const;

  /// Best weight over walks with exactly m arcs ending at v, if any.
  std::optional<double> exact(std::size_t m, std::size_t v) const;

 private:
  std::size_t index(std::size_t m, std::size_t v) const noexcept { return m * node_count_ + v; }

  std::size_t node_count_;
  std::size_t source_;
  std::size_t target_;
  std::size_t max_hops_;
  PathObjective objective_;
  std::vector<double> best_;
  std::vector<std::size_t> pred_;
  std::vector<char> reached_;
};

/// Minimum-weight path from source to target with at most max_hops arcs.
HopPathResult min_weight_path(const SelectionDigraph& graph, std::size_t max_hops);

/// Path with at most max_hops arcs that maximizes its smallest arc weight.
HopPathResult widest_path(const SelectionDigraph& graph, std::size_t max_hops);

/// Recomputes the weight of a node sequence; std::nullopt if a consecutive pair
/// is not an arc or the sequence has fewer than two nodes.
std::optional<double> walk_weight(const SelectionDigraph& graph, std::span<const std::size_t> nodes,
                                  PathObjective objective);

}  // namespace leadersel
