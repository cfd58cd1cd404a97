#pragma once

#include <cstddef>
#include <vector>

#include "leadersel/graph_model.hpp"

namespace leadersel {

/// Symmetric tridiagonal matrix stored as its diagonal and off-diagonal.
/// size() == 0 is the empty block.
struct SegmentMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;  // size() - 1 entries, or none when empty

  std::size_t size() const noexcept { return diag.size(); }
};

/// Principal submatrix of the metric's Laplacian indexed by the segment's
/// interior nodes, in order. Diagonal entries include the coupling to boundary
/// leaders.
SegmentMatrix segment_matrix(const GraphSpec& spec, const Segment& seg);

/// Diagonal of M^{-1} in O(m).
///
/// Combines the forward and backward LDL^T pivots (ratios of consecutive
/// leading and trailing principal minors):
///   (M^{-1})_ii = 1 / (fwd_i + bwd_i - d_i).
/// Throws NotPositiveDefinite when a pivot falls below 1e-14 times the largest
/// diagonal magnitude.
std::vector<double> inverse_diagonal(const SegmentMatrix& m);

/// tr(M^{-1}); 0 for the empty block.
double trace_inverse(const SegmentMatrix& m);

/// Number of eigenvalues strictly below x, from the Sturm sequence sign count.
std::size_t count_eigenvalues_below(const SegmentMatrix& m, double x);

/// Smallest eigenvalue by Sturm-count bisection on a Gershgorin bracket,
/// to absolute tolerance 1e-10. +infinity for the empty block.
/// Throws NoConvergence if the bracket does not close within 200 halvings.
double min_eigenvalue(const SegmentMatrix& m);

}  // namespace leadersel
