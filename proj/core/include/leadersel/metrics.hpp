#pragma once

#include <vector>

#include "leadersel/graph_model.hpp"

namespace leadersel {

/// Value of one of the two objectives. Coherence R(S) >= 0 (smaller is
/// better); convergence rate C(S) > 0 or +infinity (larger is better).
struct Objective {
  Metric metric = Metric::Coherence;
  double value = 0.0;
};

/// Contribution of one follower block: half the trace of its inverse for
/// coherence, its smallest eigenvalue for convergence.
double block_value(const GraphSpec& spec, const Segment& seg);

/// Half the trace of the inverse grounded Laplacian, summed block by block.
Objective coherence(const GraphSpec& spec, const LeaderSet& leaders);

/// Smallest eigenvalue of the grounded Laplacian, as the minimum over blocks;
/// +infinity when every block is empty.
Objective convergence_rate(const GraphSpec& spec, const LeaderSet& leaders);

/// Dispatches on spec.metric().
Objective evaluate(const GraphSpec& spec, const LeaderSet& leaders);

/// Per-follower steady-state variance, indexed by node id (leaders are 0).
/// Coherence only.
std::vector<double> follower_variances(const GraphSpec& spec, const LeaderSet& leaders);

/// True when `candidate` beats `incumbent` by more than `tolerance` under the
/// metric's sense (smaller coherence, larger convergence rate). Infinite values
/// compare as ordinary extended reals.
bool improves(Metric metric, double candidate, double incumbent, double tolerance);

}  // namespace leadersel
