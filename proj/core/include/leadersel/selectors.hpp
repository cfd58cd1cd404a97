#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "leadersel/graph_model.hpp"
#include "leadersel/hop_paths.hpp"
#include "leadersel/metrics.hpp"

namespace leadersel {

enum class Method { OptimalDP, Greedy, BruteForce };

/// "optimal", "greedy" or "brute".
std::string_view to_string(Method method);
Method parse_method(std::string_view text);

struct SelectionResult {
  LeaderSet leaders;
  Objective objective;
  Method method = Method::OptimalDP;
  double elapsed_s = 0.0;  // wall clock
};

/// Upper bound on the candidate sets brute_force may enumerate.
inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

/// Sum of C(n, i) for i = 1..min(k, n), saturating at UINT64_MAX.
std::uint64_t brute_force_candidates(std::size_t n, std::size_t k);

// Digraph constructions. Vertex 0 is the source, n+1 the target, and vertex v
// in 1..n stands for node v.

/// Arcs s->v (prefix block before v), u->v for u < v (gap between u and v) and
/// v->t (suffix block after v), each weighted by the block value of the metric.
SelectionDigraph path_selection_digraph(const GraphSpec& spec);

/// Block values of every clockwise ring gap, looked up in O(1).
class RingGapTable {
 public:
  explicit RingGapTable(const GraphSpec& spec);

  /// Value of the followers strictly between u and v going clockwise;
  /// u == v is the whole ring except u.
  double operator()(NodeId u, NodeId v) const noexcept { return values_[(u - 1) * n_ + (v - 1)]; }
  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// Digraph for rings whose leader set contains `candidate`.
///
/// Arcs s->v, u->v and v->t carry the gaps (candidate->v), (u->v) and
/// (v->candidate); u->v exists only when v comes after u on the clockwise walk
/// starting at the candidate. The direct arc s->t carries the whole ring minus
/// the candidate, so a single leader is representable. The candidate vertex is
/// isolated.
SelectionDigraph ring_selection_digraph(const RingGapTable& gaps, NodeId candidate);

/// Optimal leader set of size at most k on a path (k > n is treated as n).
SelectionResult optimal_path(const GraphSpec& spec, std::size_t k);

/// Optimal leader set of size at most k on a ring (k > n is treated as n).
SelectionResult optimal_ring(const GraphSpec& spec, std::size_t k);

/// Dispatches on topology.
SelectionResult optimal(const GraphSpec& spec, std::size_t k);

/// Optimal results for every k = 1..k_max from one set of hop tables.
/// Entry k-1 is identical to optimal(spec, k) apart from elapsed_s, which is
/// the wall time of the whole batch.
std::vector<SelectionResult> optimal_up_to(const GraphSpec& spec, std::size_t k_max);

/// Adds, k times, the node that best improves the objective; ties go to the
/// smaller id. Stops early once no node gives a strict improvement.
SelectionResult greedy(const GraphSpec& spec, std::size_t k);

/// Greedy results for k = 1..k_max from a single trajectory.
std::vector<SelectionResult> greedy_up_to(const GraphSpec& spec, std::size_t k_max);

/// Exact optimum over every leader set of size 1..k, ties to the
/// lexicographically smallest set. Throws TooLarge beyond kBruteForceLimit.
SelectionResult brute_force(const GraphSpec& spec, std::size_t k);

/// max over single nodes i of R({i}).
double max_single_leader_coherence(const GraphSpec& spec);

/// Checks R_greedy <= (1 - ((k-1)/k)^k) * R_opt + R_max / e.
bool greedy_bound_check(const GraphSpec& spec, std::size_t k, double greedy_value, double optimal_value);

}  // namespace leadersel
