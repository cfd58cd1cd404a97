#include "leadersel/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "leadersel/errors.hpp"

namespace leadersel {

namespace {

constexpr double kPivotThreshold = 1e-14;
constexpr double kEigenTolerance = 1e-10;
constexpr int kMaxBisections = 200;

}  // namespace

SegmentMatrix segment_matrix(const GraphSpec& spec, const Segment& seg) {
  SegmentMatrix m;
  if (seg.empty()) return m;
  m.diag.resize(seg.length);
  m.offdiag.resize(seg.length - 1);
  for (std::size_t i = 0; i < seg.length; ++i) {
    const NodeId v = seg.node(i);
    m.diag[i] = spec.degree(v);
    if (i + 1 < seg.length) m.offdiag[i] = -spec.coupling(*spec.edge_after(v));
  }
  return m;
}

std::vector<double> inverse_diagonal(const SegmentMatrix& m) {
  const std::size_t size = m.size();
  std::vector<double> result(size);
  if (size == 0) return result;

  double scale = 0.0;
  for (double d : m.diag) scale = std::max(scale, std::abs(d));
  const double threshold = kPivotThreshold * scale;

  // forward[i]: pivot of the leading (i+1)x(i+1) block; backward[i]: pivot of
  // the trailing block starting at i.
  std::vector<double> forward(size);
  std::vector<double> backward(size);
  forward[0] = m.diag[0];
  for (std::size_t i = 1; i < size; ++i) {
    const double e = m.offdiag[i - 1];
    forward[i] = m.diag[i] - e * e / forward[i - 1];
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (!(forward[i] > threshold)) {
      throw NotPositiveDefinite("pivot " + std::to_string(i) + " of a " + std::to_string(size) +
                                "x" + std::to_string(size) + " block is not positive");
    }
  }
  backward[size - 1] = m.diag[size - 1];
  for (std::size_t i = size - 1; i-- > 0;) {
    const double e = m.offdiag[i];
    backward[i] = m.diag[i] - e * e / backward[i + 1];
  }

  for (std::size_t i = 0; i < size; ++i) {
    double schur = forward[i];
    if (i + 1 < size) schur -= m.offdiag[i] * m.offdiag[i] / backward[i + 1];
    if (!(schur > 0.0)) throw NotPositiveDefinite("non-positive Schur complement at " + std::to_string(i));
    result[i] = 1.0 / schur;
  }
  return result;
}

double trace_inverse(const SegmentMatrix& m) {
  double sum = 0.0;
  for (double x : inverse_diagonal(m)) sum += x;
  return sum;
}

std::size_t count_eigenvalues_below(const SegmentMatrix& m, double x) {
  const std::size_t size = m.size();
  double max_e2 = 1.0;
  for (double e : m.offdiag) max_e2 = std::max(max_e2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * max_e2;

  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < size; ++i) {
    q = m.diag[i] - x - (i > 0 ? m.offdiag[i - 1] * m.offdiag[i - 1] / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

double min_eigenvalue(const SegmentMatrix& m) {
  const std::size_t size = m.size();
  if (size == 0) return std::numeric_limits<double>::infinity();

  double lo = std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  double magnitude = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double radius = (i > 0 ? std::abs(m.offdiag[i - 1]) : 0.0) + (i + 1 < size ? std::abs(m.offdiag[i]) : 0.0);
    lo = std::min(lo, m.diag[i] - radius);
    hi = std::min(hi, m.diag[i]);  // lambda_min <= every diagonal entry
    magnitude = std::max(magnitude, std::abs(m.diag[i]) + radius);
  }
  const double margin = 4.0 * std::numeric_limits<double>::epsilon() * std::max(magnitude, 1.0);
  lo -= margin;
  hi += margin;
  while (count_eigenvalues_below(m, hi) == 0) hi += 2.0 * margin;

  for (int iter = 0; iter < kMaxBisections; ++iter) {
    if (hi - lo <= 0.2 * kEigenTolerance) return lo + 0.5 * (hi - lo);
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) return mid;
    if (count_eigenvalues_below(m, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw NoConvergence("eigenvalue bisection did not converge for a block of size " + std::to_string(size));
}

}  // namespace leadersel
