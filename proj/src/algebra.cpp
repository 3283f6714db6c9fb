#include "gcs/algebra.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace gcs {

namespace {

constexpr double kShapeTol = 1e-9;

Eigen::Matrix3d rodrigues(const Vector3& w) {
  const double theta = w.norm();
  if (theta < 1e-300) return Eigen::Matrix3d::Identity();
  const Vector3 a = w / theta;
  Eigen::Matrix3d k;
  k << 0, -a.z(), a.y(), a.z(), 0, -a.x(), -a.y(), a.x(), 0;
  return Eigen::Matrix3d::Identity() + std::sin(theta) * k +
         (1.0 - std::cos(theta)) * (k * k);
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace

AlgebraKind AlgebraKind::unitary(int n) {
  if (n < 1) throw std::invalid_argument("unitary kind needs n >= 1");
  return {Tag::unitary, n};
}

AlgebraKind AlgebraKind::so3() { return {Tag::so3, 3}; }

int AlgebraKind::rank() const { return tag == Tag::unitary ? n : 1; }
int AlgebraKind::dim() const { return tag == Tag::unitary ? n * n : 3; }
int AlgebraKind::torus_int() const { return (dim() - rank()) / 2; }
int AlgebraKind::torus_big() const { return (dim() + rank()) / 2; }

void require_same_kind(const AlgebraKind& a, const AlgebraKind& b, const char* where) {
  if (!(a == b)) {
    std::ostringstream os;
    os << where << ": mismatched algebra kinds";
    throw KindMismatch(os.str());
  }
}

AlgebraElement make_algebra(AlgebraKind kind, const Matrix& m) {
  if (kind.tag == AlgebraKind::Tag::so3) {
    if (m.rows() != 3 || m.cols() != 1)
      throw std::invalid_argument("so3 algebra element must be a 3-vector");
    return {kind, m.real().cast<Complex>()};
  }
  if (m.rows() != kind.n || m.cols() != kind.n)
    throw std::invalid_argument("algebra element has wrong size");
  const double defect = frobenius(m + m.adjoint());
  if (defect > scaled_tol(kShapeTol, frobenius(m)))
    throw KindMismatch("algebra element is not skew-Hermitian");
  return {kind, 0.5 * (m - m.adjoint().eval())};
}

AlgebraElement make_algebra_so3(const Vector3& v) {
  Matrix m(3, 1);
  m.col(0) = v.cast<Complex>();
  return {AlgebraKind::so3(), m};
}

DualElement make_dual(AlgebraKind kind, const Matrix& m) {
  if (kind.tag == AlgebraKind::Tag::so3) {
    if (m.rows() != 3 || m.cols() != 1)
      throw std::invalid_argument("so3 dual element must be a 3-vector");
    return {kind, m.real().cast<Complex>()};
  }
  if (m.rows() != kind.n || m.cols() != kind.n)
    throw std::invalid_argument("dual element has wrong size");
  const double defect = frobenius(m - m.adjoint());
  if (defect > scaled_tol(kShapeTol, frobenius(m)))
    throw KindMismatch("dual element is not Hermitian");
  return {kind, 0.5 * (m + m.adjoint().eval())};
}

DualElement make_dual_so3(const Vector3& v) {
  Matrix m(3, 1);
  m.col(0) = v.cast<Complex>();
  return {AlgebraKind::so3(), m};
}

GroupElement make_group(AlgebraKind kind, const Matrix& m) {
  const int n = kind.tag == AlgebraKind::Tag::unitary ? kind.n : 3;
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("group element has wrong size");
  const Matrix defect = m * m.adjoint() - Matrix::Identity(n, n);
  if (frobenius(defect) > 1e-8)
    throw KindMismatch("group element is not unitary/orthogonal");
  if (kind.tag == AlgebraKind::Tag::so3) {
    if (frobenius(m.imag().cast<Complex>()) > kShapeTol ||
        std::abs(m.real().determinant() - 1.0) > 1e-8)
      throw std::invalid_argument("so3 group element must be a rotation");
  }
  return {kind, m};
}

AlgebraElement zero_algebra(AlgebraKind kind) {
  if (kind.tag == AlgebraKind::Tag::so3) return make_algebra_so3(Vector3::Zero());
  return {kind, Matrix::Zero(kind.n, kind.n)};
}

GroupElement identity_group(AlgebraKind kind) {
  const int n = kind.tag == AlgebraKind::Tag::unitary ? kind.n : 3;
  return {kind, Matrix::Identity(n, n)};
}

double frobenius(const Matrix& m) { return m.norm(); }

double pair_value(const AlgebraElement& eta, const DualElement& xi) {
  require_same_kind(eta.kind, xi.kind, "pair_value");
  if (eta.kind.tag == AlgebraKind::Tag::so3) return eta.vec3().dot(xi.vec3());
  const Complex t = (eta.m * xi.m).trace();
  return (Complex(0, -1) * t).real();
}

AlgebraElement lie_bracket(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_kind(a.kind, b.kind, "lie_bracket");
  if (a.kind.tag == AlgebraKind::Tag::so3)
    return make_algebra_so3(a.vec3().cross(b.vec3()));
  return {a.kind, a.m * b.m - b.m * a.m};
}

double lie_poisson_bracket(const AlgebraElement& df, const AlgebraElement& dg,
                           const DualElement& xi) {
  require_same_kind(df.kind, dg.kind, "lie_poisson_bracket");
  return pair_value(lie_bracket(df, dg), xi);
}

DualElement coadjoint_inf(const AlgebraElement& eta, const DualElement& xi) {
  require_same_kind(eta.kind, xi.kind, "coadjoint_inf");
  if (eta.kind.tag == AlgebraKind::Tag::so3)
    return make_dual_so3(eta.vec3().cross(xi.vec3()));
  return {xi.kind, eta.m * xi.m - xi.m * eta.m};
}

DualElement coadjoint_act(const GroupElement& g, const DualElement& xi) {
  require_same_kind(g.kind, xi.kind, "coadjoint_act");
  if (g.kind.tag == AlgebraKind::Tag::so3)
    return make_dual_so3(g.rot3() * xi.vec3());
  const Matrix defect = g.m * g.m.adjoint() - Matrix::Identity(g.kind.n, g.kind.n);
  if (frobenius(defect) > 1e-8)
    throw std::invalid_argument("coadjoint_act: group element fails unitarity");
  Matrix out = g.m * xi.m * g.m.adjoint();
  return {xi.kind, 0.5 * (out + out.adjoint().eval())};
}

AlgebraElement adjoint_act(const GroupElement& g, const AlgebraElement& eta) {
  require_same_kind(g.kind, eta.kind, "adjoint_act");
  if (g.kind.tag == AlgebraKind::Tag::so3)
    return make_algebra_so3(g.rot3() * eta.vec3());
  Matrix out = g.m * eta.m * g.m.adjoint();
  return {eta.kind, 0.5 * (out - out.adjoint().eval())};
}

GroupElement exp_algebra(const AlgebraElement& eta) {
  if (eta.kind.tag == AlgebraKind::Tag::so3)
    return {eta.kind, rodrigues(eta.vec3()).cast<Complex>()};
  // eta = iH with H Hermitian; exponentiate through the eigenbasis of H so
  // the result is unitary to machine precision.
  const Matrix h = Complex(0, -1) * eta.m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint().eval()));
  const Eigen::VectorXd w = es.eigenvalues();
  Matrix phases = Matrix::Zero(w.size(), w.size());
  for (int k = 0; k < w.size(); ++k)
    phases(k, k) = std::polar(1.0, w(k));
  return {eta.kind, es.eigenvectors() * phases * es.eigenvectors().adjoint()};
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  require_same_kind(a.kind, b.kind, "group_mul");
  return {a.kind, a.m * b.m};
}

void hermitian_eigs_desc(const Matrix& h, Eigen::VectorXd& values, Matrix& vectors) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const int n = static_cast<int>(h.rows());
  values.resize(n);
  vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    values(k) = es.eigenvalues()(n - 1 - k);
    Eigen::VectorXcd v = es.eigenvectors().col(n - 1 - k);
    // Phase fix: largest-magnitude entry real positive.
    int imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const Complex z = v(imax);
    if (std::abs(z) > 0) v *= std::conj(z) / std::abs(z);
    vectors.col(k) = v;
  }
}

RegularityReport regularity(const DualElement& xi, double gap_tol) {
  RegularityReport rep;
  if (xi.kind.tag == AlgebraKind::Tag::so3) {
    rep.min_eigen_gap = xi.vec3().norm();
    rep.is_regular = rep.min_eigen_gap > gap_tol;
    rep.centralizer_dim = rep.is_regular ? 1 : 3;
    return rep;
  }
  Eigen::VectorXd w;
  Matrix v;
  hermitian_eigs_desc(xi.m, w, v);
  const int n = xi.kind.n;
  double min_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k + 1 < n; ++k) min_gap = std::min(min_gap, w(k) - w(k + 1));
  if (n == 1) min_gap = std::numeric_limits<double>::infinity();
  rep.min_eigen_gap = min_gap;
  rep.is_regular = min_gap > gap_tol;
  if (rep.is_regular) {
    rep.centralizer_dim = n;
  } else {
    // Centralizer dimension = sum of squared eigenvalue multiplicities.
    int dim = 0;
    int run = 1;
    for (int k = 1; k <= n; ++k) {
      if (k < n && w(k - 1) - w(k) <= gap_tol) {
        ++run;
      } else {
        dim += run * run;
        run = 1;
      }
    }
    rep.centralizer_dim = dim;
  }
  return rep;
}

std::vector<AlgebraElement> centralizer_basis(const DualElement& xi, double gap_tol) {
  if (xi.kind.tag == AlgebraKind::Tag::so3) {
    const Vector3 v = xi.vec3();
    if (v.norm() <= gap_tol) throw NotRegular("centralizer_basis: so3 point too close to zero");
    return {make_algebra_so3(v.normalized())};
  }
  const RegularityReport rep = regularity(xi, gap_tol);
  if (!rep.is_regular)
    throw NotRegular("centralizer_basis: eigenvalue gap below tolerance");
  Eigen::VectorXd w;
  Matrix v;
  hermitian_eigs_desc(xi.m, w, v);
  std::vector<AlgebraElement> basis;
  basis.reserve(xi.kind.n);
  for (int k = 0; k < xi.kind.n; ++k) {
    const Matrix proj = v.col(k) * v.col(k).adjoint();
    basis.push_back({xi.kind, Complex(0, 1) * proj});
  }
  return basis;
}

DualElement sweeping(const DualElement& xi) {
  if (xi.kind.tag == AlgebraKind::Tag::so3)
    return make_dual_so3(Vector3(0, 0, xi.vec3().norm()));
  Eigen::VectorXd w;
  Matrix v;
  hermitian_eigs_desc(xi.m, w, v);
  return {xi.kind, w.cast<Complex>().asDiagonal().toDenseMatrix()};
}

GroupElement sample_group(AlgebraKind kind, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  if (kind.tag == AlgebraKind::Tag::so3) {
    Vector3 w(gauss(rng), gauss(rng), gauss(rng));
    return {kind, rodrigues(w).cast<Complex>()};
  }
  const int n = kind.n;
  Matrix z(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) z(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c) {
    const Complex d = r(c, c);
    if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
  }
  return {kind, q};
}

DualElement sample_dual(AlgebraKind kind, std::uint64_t seed, const Ensemble& ensemble) {
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  if (kind.tag == AlgebraKind::Tag::so3) {
    Vector3 v(gauss(rng), gauss(rng), gauss(rng));
    if (ensemble.kind == Ensemble::Kind::spectrum_fixed) {
      if (ensemble.spectrum.empty())
        throw std::invalid_argument("sample_dual: so3 spectrum needs one entry (radius)");
      if (v.norm() < 1e-12) v = Vector3(0, 0, 1);
      v = ensemble.spectrum.front() * v.normalized();
    }
    return make_dual_so3(v);
  }
  const int n = kind.n;
  if (ensemble.kind == Ensemble::Kind::spectrum_fixed) {
    if (static_cast<int>(ensemble.spectrum.size()) != n)
      throw std::invalid_argument("sample_dual: spectrum length must equal n");
    Eigen::VectorXd d(n);
    for (int k = 0; k < n; ++k) d(k) = ensemble.spectrum[k];
    const GroupElement u = sample_group(kind, seed ^ 0x9e3779b97f4a7c15ull);
    Matrix out = u.m * d.cast<Complex>().asDiagonal() * u.m.adjoint();
    return {kind, 0.5 * (out + out.adjoint().eval())};
  }
  Matrix h(n, n);
  for (int r = 0; r < n; ++r) {
    h(r, r) = gauss(rng);
    for (int c = r + 1; c < n; ++c) {
      const Complex z(gauss(rng), gauss(rng));
      h(r, c) = z / std::sqrt(2.0);
      h(c, r) = std::conj(h(r, c));
    }
  }
  return {kind, h};
}

}  // namespace gcs
