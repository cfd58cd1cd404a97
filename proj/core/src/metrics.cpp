#include "leadersel/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "leadersel/tridiag.hpp"

namespace leadersel {

double block_value(const GraphSpec& spec, const Segment& seg) {
  const SegmentMatrix m = segment_matrix(spec, seg);
  return spec.metric() == Metric::Coherence ? 0.5 * trace_inverse(m) : min_eigenvalue(m);
}

Objective coherence(const GraphSpec& spec, const LeaderSet& leaders) {
  if (spec.metric() != Metric::Coherence) throw std::invalid_argument("coherence needs a coherence instance");
  double total = 0.0;
  for (const Segment& seg : follower_segments(spec, leaders)) total += block_value(spec, seg);
  return {Metric::Coherence, total};
}

Objective convergence_rate(const GraphSpec& spec, const LeaderSet& leaders) {
  if (spec.metric() != Metric::Convergence) {
    throw std::invalid_argument("convergence_rate needs a convergence instance");
  }
  double rate = std::numeric_limits<double>::infinity();
  for (const Segment& seg : follower_segments(spec, leaders)) rate = std::min(rate, block_value(spec, seg));
  return {Metric::Convergence, rate};
}

Objective evaluate(const GraphSpec& spec, const LeaderSet& leaders) {
  return spec.metric() == Metric::Coherence ? coherence(spec, leaders) : convergence_rate(spec, leaders);
}

std::vector<double> follower_variances(const GraphSpec& spec, const LeaderSet& leaders) {
  if (spec.metric() != Metric::Coherence) throw std::invalid_argument("variances need a coherence instance");
  std::vector<double> variances(spec.n() + 1, 0.0);
  for (const Segment& seg : follower_segments(spec, leaders)) {
    const auto diag = inverse_diagonal(segment_matrix(spec, seg));
    for (std::size_t i = 0; i < seg.length; ++i) variances[seg.node(i)] = 0.5 * diag[i];
  }
  return variances;
}

bool improves(Metric metric, double candidate, double incumbent, double tolerance) {
  if (metric == Metric::Coherence) return candidate < incumbent - tolerance;
  return candidate > incumbent + tolerance;
}

}  // namespace leadersel
