#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leadersel {

enum class Topology { Path, Ring };
enum class Metric { Coherence, Convergence };

/// Node ids are 1-based: nodes are 1..n.
using NodeId = std::size_t;

std::string_view to_string(Topology topology);
std::string_view to_string(Metric metric);
Topology parse_topology(std::string_view text);
Metric parse_metric(std::string_view text);

/// Topology, size and metric of an instance, without edge weights.
struct GraphSkeleton {
  Topology topology = Topology::Path;
  std::size_t n = 0;
  Metric metric = Metric::Coherence;
};

/// Throws MalformedInput when n is below the minimum for the topology
/// (2 for a path, 3 for a ring).
void validate(const GraphSkeleton& skeleton);

/// Number of edges: n-1 for a path, n for a ring.
std::size_t edge_count(Topology topology, std::size_t n);

/// A weighted path or ring.
///
/// Edge i (1-based) joins nodes i and i+1; on a ring, edge n joins n and 1.
/// For the coherence metric the stored weight is the noise variance nu of the
/// link and the Laplacian coupling is 1/nu. For the convergence metric the
/// stored weight is the link weight W and the coupling is W itself.
class GraphSpec {
 public:
  /// Throws MalformedInput on a bad node count, a weight count that does not
  /// match the topology, or a weight that is not strictly positive and finite.
  GraphSpec(Topology topology, std::size_t n, Metric metric, std::vector<double> edge_weights);

  Topology topology() const noexcept { return topology_; }
  std::size_t n() const noexcept { return n_; }
  Metric metric() const noexcept { return metric_; }
  GraphSkeleton skeleton() const noexcept { return {topology_, n_, metric_}; }
  std::span<const double> edge_weights() const noexcept { return weights_; }
  std::size_t edge_count() const noexcept { return weights_.size(); }

  double weight(std::size_t edge) const { return weights_.at(edge - 1); }
  double coupling(std::size_t edge) const { return couplings_[edge - 1]; }

  /// Edge joining v to its predecessor (v-1, or n for node 1 on a ring).
  std::optional<std::size_t> edge_before(NodeId v) const noexcept;
  /// Edge joining v to its successor (v+1, or 1 for node n on a ring).
  std::optional<std::size_t> edge_after(NodeId v) const noexcept;

  /// Sum of the couplings of all edges incident to v (the Laplacian diagonal).
  double degree(NodeId v) const noexcept;

  friend bool operator==(const GraphSpec& a, const GraphSpec& b) {
    return a.topology_ == b.topology_ && a.n_ == b.n_ && a.metric_ == b.metric_ &&
           a.weights_ == b.weights_;
  }

 private:
  Topology topology_;
  std::size_t n_;
  Metric metric_;
  std::vector<double> weights_;
  std::vector<double> couplings_;
};

/// A nonempty set of leader ids kept in strictly increasing order.
class LeaderSet {
 public:
  /// Sorts the ids. Throws std::invalid_argument on an empty set, a zero id or
  /// a duplicate.
  explicit LeaderSet(std::vector<NodeId> members);

  std::span<const NodeId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(NodeId v) const noexcept;
  /// Throws std::invalid_argument when an id exceeds spec.n().
  void check_against(const GraphSpec& spec) const;

  friend bool operator==(const LeaderSet&, const LeaderSet&) = default;
  friend auto operator<=>(const LeaderSet& a, const LeaderSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<NodeId> members_;
};

/// A maximal run of followers between leaders (or a path end).
///
/// Interior nodes are consecutive along the path, or clockwise along the ring
/// with wrap-around. A path prefix has no left boundary and a path suffix has
/// no right boundary; ring segments always have both.
struct Segment {
  NodeId first = 1;
  std::size_t length = 0;
  std::size_t n = 0;
  std::optional<NodeId> left_boundary;
  std::optional<NodeId> right_boundary;

  bool empty() const noexcept { return length == 0; }
  /// The i-th interior node, 0 <= i < length.
  NodeId node(std::size_t i) const noexcept { return (first - 1 + i) % n + 1; }
  std::vector<NodeId> interior() const;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Followers strictly between the given boundaries.
///
/// Path: either boundary may be absent (prefix or suffix), and when both are
/// present left < right. Ring: both must be present; left == right denotes the
/// whole ring except that node.
Segment segment_between(const GraphSpec& spec, std::optional<NodeId> left, std::optional<NodeId> right);

/// Path: k+1 segments (prefix, k-1 gaps, suffix), empty ones included.
/// Ring: k clockwise gaps starting from the smallest leader.
std::vector<Segment> follower_segments(const GraphSpec& spec, const LeaderSet& leaders);

/// Weights drawn uniformly from the open interval of the metric: (0.01, 1) for
/// coherence and (0, 1) for convergence.
///
/// Uses std::mt19937_64 seeded with `seed`; each weight takes the top 53 bits
/// of one draw as u in [0, 1), maps it to lo + (hi - lo) * u, and redraws when
/// the result is not strictly inside the interval.
GraphSpec uniform_policy(const GraphSkeleton& skeleton, std::uint64_t seed);

/// Edge i gets the first-half value when i <= floor(n/2), else the second-half
/// value; the ring edge (n, 1) is always second-half. Coherence uses 1 and 0.01,
/// convergence uses 1 and 100.
GraphSpec skewed_policy(const GraphSkeleton& skeleton);

/// Parses the four-line graph format:
///
///     topology: path|ring
///     n: <integer>
///     metric: coherence|convergence
///     weights: <w_1> ... <w_m>
///
/// Throws MalformedInput on any deviation.
GraphSpec parse_graph(std::string_view text);

/// Writes the graph format with 17 significant digits per weight, so that
/// parse_graph(format_graph(g)) == g.
std::string format_graph(const GraphSpec& spec);

}  // namespace leadersel
