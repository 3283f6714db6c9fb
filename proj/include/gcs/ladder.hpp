#pragma once

// The eigenvalue ladder on g*: trailing-corner projections, the ladder map,
// analytic gradients, strong-regularity classification and Jacobian rank
// analysis. For u(n) the ladder row j lists the descending eigenvalues of
// the trailing (n-j) x (n-j) corner of a Hermitian matrix; so(3) uses the
// pair (|xi|, xi_3).

#include <string>
#include <vector>

#include "gcs/algebra.hpp"

namespace gcs {

struct LadderIndex {
  int j = 0;  // corner depth, 0 <= j <= n-1
  int k = 1;  // 1-based position within the row, 1 <= k <= n-j

  bool operator==(const LadderIndex&) const = default;
};

// Flat enumeration order: (j=0, k=1..n), (j=1, k=1..n-1), ..., (j=n-1, k=1).
// The first ell entries form the small block, the remaining u the int block.
std::vector<LadderIndex> ladder_indices(AlgebraKind kind);
int ladder_flat(AlgebraKind kind, LadderIndex idx);

struct GCPattern {
  AlgebraKind kind;
  std::vector<std::vector<double>> rows;  // row j has length n - j

  double at(LadderIndex idx) const { return rows.at(idx.j).at(idx.k - 1); }
  std::vector<double> flat() const;
};

struct StrongRegularityReport {
  bool is_strongly_regular = false;
  double min_row_gap = 0.0;
  double min_column_gap = 0.0;
  int jacobian_rank = 0;
  std::vector<std::string> failed_constraints;
};

// Trailing (n-j) x (n-j) Hermitian corner of xi, as a dual element of
// unitary(n-j). j = 0 returns xi itself.
DualElement corner_project(const DualElement& xi, int j);

GCPattern gc_pattern(const DualElement& xi);

// The algebra element representing the differential of the ladder component
// at xi under the pairing: i (0_j + v v*) with v the unit eigenvector of the
// corner block for its k-th descending eigenvalue, padded to n x n.
// so3: grad of |xi| is xi/|xi|, grad of xi_3 is e3.
// Throws DegenerateEigenvalue when the eigenvalue gap is below tolerance.
AlgebraElement grad_lambda(const DualElement& xi, LadderIndex idx,
                           double gap_tol = kDefaultGapTol);

// Jacobian of the ladder map: b x dim(g) real matrix, row a = coordinates of
// grad_lambda(xi, idx_a) in the fixed orthonormal real basis of g.
Eigen::MatrixXd jacobian(const DualElement& xi, double gap_tol = kDefaultGapTol);

StrongRegularityReport is_strongly_regular(const DualElement& xi,
                                           double gap_tol = kDefaultGapTol);

// Rank of the int block of the Jacobian restricted to the coadjoint-orbit
// tangent space {[eta, xi]}; equals u at strongly regular points.
int orbit_integrability_rank(const DualElement& xi, double gap_tol = kDefaultGapTol);

// Fixed orthonormal real basis of g (real inner product Re tr(a b*); the
// standard basis for so3).
const std::vector<AlgebraElement>& algebra_basis(AlgebraKind kind);

// Real coordinates in the fixed orthonormal bases of g and g*.
Eigen::VectorXd algebra_coords(const AlgebraElement& eta);
Eigen::VectorXd dual_coords(const DualElement& xi);
DualElement dual_from_coords(AlgebraKind kind, const Eigen::VectorXd& c);

// Numeric rank: singular values below rel_tol * sigma_max count as zero.
int numeric_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8);

}  // namespace gcs
