#pragma once

// Numerics for the compact Lie algebras u(n) and so(3), their duals, the
// invariant pairing, adjoint/coadjoint actions and the Lie-Poisson bracket.
//
// Conventions (unitary backend):
//   - u(n) is realized as skew-Hermitian n x n matrices, its dual as the
//     Hermitian matrices H(n), paired by <eta, xi> = -i tr(eta xi).
//   - The coadjoint action on H(n) is conjugation, xi -> g xi g^{-1}.
//   - Eigenvalues are always ordered descending; ties make a point
//     non-regular rather than being broken arbitrarily.
// so(3) uses the vector picture: pairing = dot product, bracket = cross
// product, coadjoint action = rotation.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gcs/errors.hpp"

namespace gcs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector3 = Eigen::Vector3d;

constexpr double kDefaultGapTol = 1e-8;

struct AlgebraKind {
  enum class Tag { unitary, so3 };

  Tag tag = Tag::unitary;
  int n = 1;  // matrix size; fixed at 3 for so3

  static AlgebraKind unitary(int n);
  static AlgebraKind so3();

  int rank() const;        // ell
  int dim() const;         // dim g
  int torus_int() const;   // u = (dim - ell) / 2
  int torus_big() const;   // b = (dim + ell) / 2

  bool operator==(const AlgebraKind&) const = default;
};

// Element of g. Unitary: skew-Hermitian n x n matrix. so3: stored as a
// 3 x 1 real vector (in the complex matrix member, imaginary part zero).
struct AlgebraElement {
  AlgebraKind kind;
  Matrix m;

  Vector3 vec3() const { return m.real().col(0).head<3>(); }
};

// Element of g*. Unitary: Hermitian n x n matrix. so3: 3 x 1 vector.
struct DualElement {
  AlgebraKind kind;
  Matrix m;

  Vector3 vec3() const { return m.real().col(0).head<3>(); }
};

// Group element. Unitary: n x n unitary matrix. so3: 3 x 3 rotation.
struct GroupElement {
  AlgebraKind kind;
  Matrix m;

  Eigen::Matrix3d rot3() const { return m.real().topLeftCorner<3, 3>(); }
};

struct RegularityReport {
  bool is_regular = false;
  double min_eigen_gap = 0.0;
  int centralizer_dim = 0;
};

// Construction; inputs are validated against the defining invariant
// (skew-Hermitian / Hermitian / unitary within tolerance) and then
// projected exactly onto it.
AlgebraElement make_algebra(AlgebraKind kind, const Matrix& m);
AlgebraElement make_algebra_so3(const Vector3& v);
DualElement make_dual(AlgebraKind kind, const Matrix& m);
DualElement make_dual_so3(const Vector3& v);
GroupElement make_group(AlgebraKind kind, const Matrix& m);

AlgebraElement zero_algebra(AlgebraKind kind);
GroupElement identity_group(AlgebraKind kind);

// Invariant pairing <eta, xi>; -i tr(eta xi) for unitary, dot product for so3.
double pair_value(const AlgebraElement& eta, const DualElement& xi);

// Lie-Poisson bracket of two functions with constant differentials df, dg
// evaluated at xi: {f, g}(xi) = <[df, dg], xi>.
double lie_poisson_bracket(const AlgebraElement& df, const AlgebraElement& dg,
                           const DualElement& xi);

// Lie bracket on g (matrix commutator / cross product).
AlgebraElement lie_bracket(const AlgebraElement& a, const AlgebraElement& b);

// Infinitesimal coadjoint action ad*_eta(xi); realized as the commutator
// [eta, xi] (Hermitian for unitary, eta x xi for so3). This is also the
// Hamiltonian vector field at xi of the linear function <eta, .>.
DualElement coadjoint_inf(const AlgebraElement& eta, const DualElement& xi);

DualElement coadjoint_act(const GroupElement& g, const DualElement& xi);
AlgebraElement adjoint_act(const GroupElement& g, const AlgebraElement& eta);

GroupElement exp_algebra(const AlgebraElement& eta);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);

RegularityReport regularity(const DualElement& xi, double gap_tol = kDefaultGapTol);

// Basis of the centralizer g_xi for regular xi. Unitary backend returns
// {i v_k v_k*} over unit eigenvectors of xi in descending eigenvalue order;
// so3 returns {xi / |xi|}. Throws NotRegular below the gap tolerance.
std::vector<AlgebraElement> centralizer_basis(const DualElement& xi,
                                              double gap_tol = kDefaultGapTol);

// Sweeping map: the representative of the coadjoint orbit of xi in the
// closed fundamental chamber (descending diagonal spectrum; |xi| e3 for so3).
DualElement sweeping(const DualElement& xi);

struct Ensemble {
  enum class Kind { gaussian, spectrum_fixed };
  Kind kind = Kind::gaussian;
  std::vector<double> spectrum;

  static Ensemble gaussian() { return {}; }
  static Ensemble spectrum_fixed(std::vector<double> s) {
    return {Kind::spectrum_fixed, std::move(s)};
  }
};

// Deterministic in the seed. Gaussian draws a GUE-like Hermitian matrix
// (so3: standard normal 3-vector); spectrum_fixed conjugates the given
// descending spectrum by a seeded Haar-approximate unitary (so3: a random
// direction scaled to spectrum[0]).
DualElement sample_dual(AlgebraKind kind, std::uint64_t seed,
                        const Ensemble& ensemble = Ensemble::gaussian());

// Seeded Haar-approximate group element (QR of a Gaussian matrix with the
// usual phase correction; so3: quaternion-free random rotation).
GroupElement sample_group(AlgebraKind kind, std::uint64_t seed);

// Eigendecomposition of a Hermitian matrix with descending eigenvalues and
// a deterministic eigenvector phase (largest-magnitude entry real positive).
void hermitian_eigs_desc(const Matrix& h, Eigen::VectorXd& values, Matrix& vectors);

double frobenius(const Matrix& m);

// Absolute tolerance, made relative to `scale` once it exceeds 1.
inline double scaled_tol(double tol, double scale) {
  return scale > 1.0 ? tol * scale : tol;
}

void require_same_kind(const AlgebraKind& a, const AlgebraKind& b, const char* where);

}  // namespace gcs
