#pragma once

// Independent reference computations used only by tests: dense Laplacians in
// long double, dense inverses and eigensolvers, and exhaustive walk
// enumeration. None of this goes through the library's numerics.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "leadersel/graph_model.hpp"
#include "leadersel/hop_paths.hpp"
#include "leadersel/tridiag.hpp"

namespace oracle {

using Dense = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

/// Full weighted Laplacian (1/nu couplings for coherence, W for convergence),
/// nodes 1..n at rows 0..n-1.
inline Dense laplacian(const leadersel::GraphSpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.n());
  Dense lap = Dense::Zero(n, n);
  const auto weights = spec.edge_weights();
  for (std::size_t e = 0; e < weights.size(); ++e) {
    const long double c = spec.metric() == leadersel::Metric::Coherence ? 1.0L / static_cast<long double>(weights[e])
                                                                        : static_cast<long double>(weights[e]);
    const auto a = static_cast<Eigen::Index>(e);
    const auto b = static_cast<Eigen::Index>((e + 1) % spec.n());
    lap(a, a) += c;
    lap(b, b) += c;
    lap(a, b) -= c;
    lap(b, a) -= c;
  }
  return lap;
}

/// Laplacian with the rows and columns of the leaders deleted.
inline Dense grounded(const leadersel::GraphSpec& spec, const std::vector<std::size_t>& leaders) {
  const Dense lap = laplacian(spec);
  std::vector<Eigen::Index> keep;
  for (std::size_t v = 1; v <= spec.n(); ++v) {
    if (std::find(leaders.begin(), leaders.end(), v) == leaders.end()) keep.push_back(static_cast<Eigen::Index>(v - 1));
  }
  const auto m = static_cast<Eigen::Index>(keep.size());
  Dense out(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) out(i, j) = lap(keep[i], keep[j]);
  }
  return out;
}

inline Dense to_dense(const leadersel::SegmentMatrix& m) {
  const auto size = static_cast<Eigen::Index>(m.size());
  Dense out = Dense::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    out(i, i) = m.diag[i];
    if (i + 1 < size) {
      out(i, i + 1) = m.offdiag[i];
      out(i + 1, i) = m.offdiag[i];
    }
  }
  return out;
}

inline long double trace_inverse(const Dense& m) {
  if (m.rows() == 0) return 0.0L;
  return m.inverse().trace();
}

inline long double min_eigenvalue(const Dense& m) {
  if (m.rows() == 0) return std::numeric_limits<long double>::infinity();
  Eigen::SelfAdjointEigenSolver<Dense> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// Best walk value from source to target over every walk (simple or not) with
/// 1..max_hops arcs, by depth-first enumeration. Sums accumulate from the
/// source, matching the order a forward dynamic program uses.
inline std::optional<double> best_walk(const leadersel::SelectionDigraph& g, std::size_t max_hops,
                                       leadersel::PathObjective objective) {
  const bool widest = objective == leadersel::PathObjective::Widest;
  std::optional<double> best;
  std::vector<std::vector<leadersel::Arc>> out(g.node_count());
  for (const auto& a : g.arcs()) out[a.from].push_back(a);
  std::function<void(std::size_t, double, std::size_t)> dfs = [&](std::size_t v, double value, std::size_t hops) {
    if (hops > 0 && v == g.target()) {
      if (!best || (widest ? value > *best : value < *best)) best = value;
    }
    if (hops == max_hops) return;
    for (const auto& a : out[v]) dfs(a.to, widest ? std::min(value, a.weight) : value + a.weight, hops + 1);
  };
  dfs(g.source(), widest ? std::numeric_limits<double>::infinity() : 0.0, 0);
  return best;
}

/// Random SegmentMatrix that is the grounded block of a random weighted path
/// or ring with at least one leader boundary.
inline leadersel::SegmentMatrix random_block(std::mt19937_64& rng, std::size_t m, leadersel::Metric metric) {
  std::uniform_real_distribution<double> coh(0.01, 1.0);
  std::uniform_real_distribution<double> conv(0.001, 100.0);
  const std::size_t n = m + 2;
  std::vector<double> weights(n - 1);
  for (auto& w : weights) w = metric == leadersel::Metric::Coherence ? coh(rng) : conv(rng);
  const leadersel::GraphSpec spec(leadersel::Topology::Path, n, metric, weights);
  // Interior nodes 2..m+1; drop one boundary at random to cover prefix/suffix blocks.
  std::uniform_int_distribution<int> shape(0, 2);
  const int s = shape(rng);
  std::optional<std::size_t> left = s == 1 ? std::nullopt : std::optional<std::size_t>(1);
  std::optional<std::size_t> right = s == 2 ? std::nullopt : std::optional<std::size_t>(n);
  if (!left) right = m + 1;   // prefix: interior 1..m
  if (!right) left = 2;       // suffix: interior 3..n
  return leadersel::segment_matrix(spec, leadersel::segment_between(spec, left, right));
}

}  // namespace oracle
