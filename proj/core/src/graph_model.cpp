#include "leadersel/graph_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "leadersel/errors.hpp"

namespace leadersel {

std::string_view to_string(Topology topology) {
  return topology == Topology::Path ? "path" : "ring";
}

std::string_view to_string(Metric metric) {
  return metric == Metric::Coherence ? "coherence" : "convergence";
}

Topology parse_topology(std::string_view text) {
  if (text == "path") return Topology::Path;
  if (text == "ring") return Topology::Ring;
  throw MalformedInput("unknown topology '" + std::string(text) + "'");
}

Metric parse_metric(std::string_view text) {
  if (text == "coherence") return Metric::Coherence;
  if (text == "convergence") return Metric::Convergence;
  throw MalformedInput("unknown metric '" + std::string(text) + "'");
}

void validate(const GraphSkeleton& skeleton) {
  const std::size_t min_n = skeleton.topology == Topology::Path ? 2 : 3;
  if (skeleton.n < min_n) {
    throw MalformedInput("n = " + std::to_string(skeleton.n) + " is below the minimum of " +
                         std::to_string(min_n) + " for a " +
                         std::string(to_string(skeleton.topology)));
  }
}

std::size_t edge_count(Topology topology, std::size_t n) {
  return topology == Topology::Path ? n - 1 : n;
}

GraphSpec::GraphSpec(Topology topology, std::size_t n, Metric metric, std::vector<double> edge_weights)
    : topology_(topology), n_(n), metric_(metric), weights_(std::move(edge_weights)) {
  validate(GraphSkeleton{topology, n, metric});
  const std::size_t expected = leadersel::edge_count(topology, n);
  if (weights_.size() != expected) {
    throw MalformedInput("expected " + std::to_string(expected) + " edge weights, got " +
                         std::to_string(weights_.size()));
  }
  couplings_.reserve(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!std::isfinite(w) || !(w > 0.0)) {
      throw MalformedInput("edge weight " + std::to_string(i + 1) + " is not strictly positive and finite");
    }
    couplings_.push_back(metric == Metric::Coherence ? 1.0 / w : w);
  }
}

std::optional<std::size_t> GraphSpec::edge_before(NodeId v) const noexcept {
  if (v > 1) return v - 1;
  if (topology_ == Topology::Ring) return n_;
  return std::nullopt;
}

std::optional<std::size_t> GraphSpec::edge_after(NodeId v) const noexcept {
  if (v < n_ || topology_ == Topology::Ring) return v;
  return std::nullopt;
}

double GraphSpec::degree(NodeId v) const noexcept {
  double d = 0.0;
  if (auto e = edge_before(v)) d += coupling(*e);
  if (auto e = edge_after(v)) d += coupling(*e);
  return d;
}

LeaderSet::LeaderSet(std::vector<NodeId> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("leader set must be nonempty");
  std::sort(members_.begin(), members_.end());
  if (members_.front() == 0) throw std::invalid_argument("node ids are 1-based");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("duplicate leader id");
  }
}

bool LeaderSet::contains(NodeId v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void LeaderSet::check_against(const GraphSpec& spec) const {
  if (members_.back() > spec.n()) {
    throw std::invalid_argument("leader id " + std::to_string(members_.back()) + " exceeds n = " +
                                std::to_string(spec.n()));
  }
}

std::vector<NodeId> Segment::interior() const {
  std::vector<NodeId> nodes(length);
  for (std::size_t i = 0; i < length; ++i) nodes[i] = node(i);
  return nodes;
}

Segment segment_between(const GraphSpec& spec, std::optional<NodeId> left, std::optional<NodeId> right) {
  const std::size_t n = spec.n();
  Segment seg;
  seg.n = n;
  seg.left_boundary = left;
  seg.right_boundary = right;
  if (spec.topology() == Topology::Ring) {
    if (!left || !right) throw std::invalid_argument("ring segments need both boundaries");
    seg.first = *left % n + 1;
    seg.length = (*right + n - *left - 1) % n;
    if (*left == *right) seg.length = n - 1;
    return seg;
  }
  if (left && right && *left >= *right) throw std::invalid_argument("path boundaries out of order");
  const NodeId lo = left ? *left + 1 : 1;
  const NodeId hi = right ? *right : n + 1;  // one past the last interior node
  seg.first = lo;
  seg.length = hi - lo;
  return seg;
}

std::vector<Segment> follower_segments(const GraphSpec& spec, const LeaderSet& leaders) {
  leaders.check_against(spec);
  const auto ids = leaders.members();
  std::vector<Segment> segments;
  if (spec.topology() == Topology::Path) {
    segments.reserve(ids.size() + 1);
    segments.push_back(segment_between(spec, std::nullopt, ids.front()));
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      segments.push_back(segment_between(spec, ids[i], ids[i + 1]));
    }
    segments.push_back(segment_between(spec, ids.back(), std::nullopt));
    return segments;
  }
  segments.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    segments.push_back(segment_between(spec, ids[i], ids[(i + 1) % ids.size()]));
  }
  return segments;
}

GraphSpec uniform_policy(const GraphSkeleton& skeleton, std::uint64_t seed) {
  validate(skeleton);
  const double lo = skeleton.metric == Metric::Coherence ? 0.01 : 0.0;
  const double hi = 1.0;
  std::mt19937_64 rng(seed);
  std::vector<double> weights(edge_count(skeleton.topology, skeleton.n));
  for (double& w : weights) {
    do {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      w = lo + (hi - lo) * u;
    } while (!(w > lo && w < hi));
  }
  return GraphSpec(skeleton.topology, skeleton.n, skeleton.metric, std::move(weights));
}

GraphSpec skewed_policy(const GraphSkeleton& skeleton) {
  validate(skeleton);
  const double first = 1.0;
  const double second = skeleton.metric == Metric::Coherence ? 0.01 : 100.0;
  const std::size_t half = skeleton.n / 2;
  std::vector<double> weights(edge_count(skeleton.topology, skeleton.n));
  for (std::size_t i = 1; i <= weights.size(); ++i) {
    const bool ring_closing_edge = skeleton.topology == Topology::Ring && i == skeleton.n;
    weights[i - 1] = (i <= half && !ring_closing_edge) ? first : second;
  }
  return GraphSpec(skeleton.topology, skeleton.n, skeleton.metric, std::move(weights));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(trim(text.substr(0, nl)));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string_view expect_key(std::string_view line, std::string_view key) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos || trim(line.substr(0, colon)) != key) {
    throw MalformedInput("expected key '" + std::string(key) + "', got '" + std::string(line) + "'");
  }
  return trim(line.substr(colon + 1));
}

std::size_t parse_size(std::string_view s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw MalformedInput("invalid integer '" + std::string(s) + "'");
  }
  return value;
}

double parse_double(std::string_view s) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw MalformedInput("invalid weight '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

GraphSpec parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() != 4) {
    throw MalformedInput("expected 4 lines (topology, n, metric, weights), got " + std::to_string(lines.size()));
  }
  const Topology topology = parse_topology(expect_key(lines[0], "topology"));
  const std::size_t n = parse_size(expect_key(lines[1], "n"));
  const Metric metric = parse_metric(expect_key(lines[2], "metric"));
  std::string_view rest = expect_key(lines[3], "weights");
  std::vector<double> weights;
  while (!rest.empty()) {
    const auto sep = rest.find_first_of(" \t");
    weights.push_back(parse_double(rest.substr(0, sep)));
    if (sep == std::string_view::npos) break;
    rest = trim(rest.substr(sep));
  }
  return GraphSpec(topology, n, metric, std::move(weights));
}

std::string format_graph(const GraphSpec& spec) {
  std::string out;
  out += "topology: ";
  out += to_string(spec.topology());
  out += "\nn: " + std::to_string(spec.n());
  out += "\nmetric: ";
  out += to_string(spec.metric());
  out += "\nweights:";
  char buf[32];
  for (double w : spec.edge_weights()) {
    std::snprintf(buf, sizeof buf, " %.17g", w);
    out += buf;
  }
  out += '\n';
  return out;
}

}  // namespace leadersel
