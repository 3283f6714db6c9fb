#include "gcs/ladder.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace gcs {

std::vector<LadderIndex> ladder_indices(AlgebraKind kind) {
  std::vector<LadderIndex> out;
  if (kind.tag == AlgebraKind::Tag::so3) {
    out.push_back({0, 1});
    out.push_back({1, 1});
    return out;
  }
  for (int j = 0; j < kind.n; ++j)
    for (int k = 1; k <= kind.n - j; ++k) out.push_back({j, k});
  return out;
}

int ladder_flat(AlgebraKind kind, LadderIndex idx) {
  if (kind.tag == AlgebraKind::Tag::so3) return idx.j;
  const int n = kind.n;
  if (idx.j < 0 || idx.j >= n || idx.k < 1 || idx.k > n - idx.j)
    throw std::invalid_argument("ladder_flat: index out of range");
  int base = 0;
  for (int j = 0; j < idx.j; ++j) base += n - j;
  return base + idx.k - 1;
}

std::vector<double> GCPattern::flat() const {
  std::vector<double> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

DualElement corner_project(const DualElement& xi, int j) {
  if (xi.kind.tag != AlgebraKind::Tag::unitary)
    throw KindMismatch("corner_project: unitary backend only");
  const int n = xi.kind.n;
  if (j < 0 || j > n - 1) throw std::invalid_argument("corner_project: j out of range");
  const int m = n - j;
  return {AlgebraKind::unitary(m), xi.m.bottomRightCorner(m, m)};
}

GCPattern gc_pattern(const DualElement& xi) {
  GCPattern pat{xi.kind, {}};
  if (xi.kind.tag == AlgebraKind::Tag::so3) {
    const Vector3 v = xi.vec3();
    pat.rows = {{v.norm()}, {v.z()}};
    return pat;
  }
  const int n = xi.kind.n;
  pat.rows.resize(n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd w;
    Matrix vecs;
    hermitian_eigs_desc(corner_project(xi, j).m, w, vecs);
    pat.rows[j].assign(w.data(), w.data() + w.size());
  }
  return pat;
}

AlgebraElement grad_lambda(const DualElement& xi, LadderIndex idx, double gap_tol) {
  if (xi.kind.tag == AlgebraKind::Tag::so3) {
    const Vector3 v = xi.vec3();
    if (idx.j == 0 && idx.k == 1) {
      if (v.norm() <= gap_tol)
        throw DegenerateEigenvalue("grad_lambda: so3 point too close to zero");
      return make_algebra_so3(v.normalized());
    }
    if (idx.j == 1 && idx.k == 1) return make_algebra_so3(Vector3(0, 0, 1));
    throw std::invalid_argument("grad_lambda: so3 ladder index out of range");
  }
  const int n = xi.kind.n;
  if (idx.j < 0 || idx.j >= n || idx.k < 1 || idx.k > n - idx.j)
    throw std::invalid_argument("grad_lambda: index out of range");
  const int m = n - idx.j;
  Eigen::VectorXd w;
  Matrix vecs;
  hermitian_eigs_desc(corner_project(xi, idx.j).m, w, vecs);
  const int k = idx.k - 1;
  double gap = std::numeric_limits<double>::infinity();
  if (k > 0) gap = std::min(gap, w(k - 1) - w(k));
  if (k + 1 < m) gap = std::min(gap, w(k) - w(k + 1));
  if (gap <= gap_tol) {
    std::ostringstream os;
    os << "grad_lambda: eigenvalue gap " << gap << " below tolerance at (j=" << idx.j
       << ", k=" << idx.k << ")";
    throw DegenerateEigenvalue(os.str());
  }
  Matrix grad = Matrix::Zero(n, n);
  grad.bottomRightCorner(m, m) =
      Complex(0, 1) * (vecs.col(k) * vecs.col(k).adjoint());
  return {xi.kind, grad};
}

Eigen::MatrixXd jacobian(const DualElement& xi, double gap_tol) {
  const auto indices = ladder_indices(xi.kind);
  Eigen::MatrixXd jac(static_cast<int>(indices.size()), xi.kind.dim());
  for (int a = 0; a < static_cast<int>(indices.size()); ++a)
    jac.row(a) = algebra_coords(grad_lambda(xi, indices[a], gap_tol)).transpose();
  return jac;
}

int numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0) return 0;
  int rank = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s(k) > rel_tol * s(0)) ++rank;
  return rank;
}

StrongRegularityReport is_strongly_regular(const DualElement& xi, double gap_tol) {
  StrongRegularityReport rep;
  const int b = xi.kind.torus_big();
  if (xi.kind.tag == AlgebraKind::Tag::so3) {
    const Vector3 v = xi.vec3();
    rep.min_row_gap = v.norm();
    rep.min_column_gap = v.norm() - std::abs(v.z());
    if (rep.min_row_gap <= gap_tol) rep.failed_constraints.push_back("norm near zero");
    if (rep.min_column_gap <= gap_tol)
      rep.failed_constraints.push_back("gradients of |xi| and xi_3 parallel");
    if (rep.failed_constraints.empty()) {
      Eigen::MatrixXd jac(2, 3);
      jac.row(0) = v.normalized().transpose();
      jac.row(1) = Vector3(0, 0, 1).transpose();
      rep.jacobian_rank = numeric_rank(jac);
      if (rep.jacobian_rank < b) rep.failed_constraints.push_back("jacobian rank deficient");
    }
    rep.is_strongly_regular = rep.failed_constraints.empty();
    return rep;
  }

  const GCPattern pat = gc_pattern(xi);
  const int n = xi.kind.n;
  rep.min_row_gap = std::numeric_limits<double>::infinity();
  rep.min_column_gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    double row_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k + 1 < n - j; ++k)
      row_gap = std::min(row_gap, pat.rows[j][k] - pat.rows[j][k + 1]);
    if (row_gap <= gap_tol) {
      std::ostringstream os;
      os << "row chain j=" << j;
      rep.failed_constraints.push_back(os.str());
    }
    rep.min_row_gap = std::min(rep.min_row_gap, row_gap);
  }
  for (int k = 1; k <= n; ++k) {
    double col_gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j + 1 <= n - k; ++j)
      col_gap = std::min(col_gap, pat.rows[j][k - 1] - pat.rows[j + 1][k - 1]);
    if (col_gap <= gap_tol) {
      std::ostringstream os;
      os << "column chain k=" << k;
      rep.failed_constraints.push_back(os.str());
    }
    rep.min_column_gap = std::min(rep.min_column_gap, col_gap);
  }
  if (n == 1) {
    rep.min_row_gap = std::numeric_limits<double>::infinity();
    rep.min_column_gap = std::numeric_limits<double>::infinity();
  }
  if (rep.failed_constraints.empty()) {
    rep.jacobian_rank = numeric_rank(jacobian(xi, gap_tol));
    if (rep.jacobian_rank < b) {
      std::ostringstream os;
      os << "jacobian rank " << rep.jacobian_rank << " < " << b;
      rep.failed_constraints.push_back(os.str());
    }
  }
  rep.is_strongly_regular = rep.failed_constraints.empty();
  return rep;
}

int orbit_integrability_rank(const DualElement& xi, double gap_tol) {
  const auto indices = ladder_indices(xi.kind);
  const int ell = xi.kind.rank();
  const int u = xi.kind.torus_int();
  const auto& basis = algebra_basis(xi.kind);
  // Int-block differentials evaluated on the orbit tangent directions
  // [B_s, xi]; the parametrization by the algebra basis surjects onto the
  // tangent space, so ranks agree.
  Eigen::MatrixXd r(u, xi.kind.dim());
  for (int a = 0; a < u; ++a) {
    const AlgebraElement grad = grad_lambda(xi, indices[ell + a], gap_tol);
    for (int s = 0; s < xi.kind.dim(); ++s)
      r(a, s) = pair_value(grad, coadjoint_inf(basis[s], xi));
  }
  return numeric_rank(r);
}

const std::vector<AlgebraElement>& algebra_basis(AlgebraKind kind) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<AlgebraElement>> cache;
  const std::pair<int, int> key{static_cast<int>(kind.tag), kind.n};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<AlgebraElement> basis;
  if (kind.tag == AlgebraKind::Tag::so3) {
    basis.push_back(make_algebra_so3(Vector3::UnitX()));
    basis.push_back(make_algebra_so3(Vector3::UnitY()));
    basis.push_back(make_algebra_so3(Vector3::UnitZ()));
  } else {
    const int n = kind.n;
    const double s = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < n; ++k) {
      Matrix b = Matrix::Zero(n, n);
      b(k, k) = Complex(0, 1);
      basis.push_back({kind, b});
    }
    for (int k = 0; k < n; ++k) {
      for (int l = k + 1; l < n; ++l) {
        Matrix b = Matrix::Zero(n, n);
        b(k, l) = s;
        b(l, k) = -s;
        basis.push_back({kind, b});
        Matrix c = Matrix::Zero(n, n);
        c(k, l) = Complex(0, s);
        c(l, k) = Complex(0, s);
        basis.push_back({kind, c});
      }
    }
  }
  return cache.emplace(key, std::move(basis)).first->second;
}

Eigen::VectorXd algebra_coords(const AlgebraElement& eta) {
  if (eta.kind.tag == AlgebraKind::Tag::so3) return eta.vec3();
  const int n = eta.kind.n;
  Eigen::VectorXd c(n * n);
  int pos = 0;
  for (int k = 0; k < n; ++k) c(pos++) = eta.m(k, k).imag();
  const double s = std::sqrt(2.0);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      c(pos++) = s * eta.m(k, l).real();
      c(pos++) = s * eta.m(k, l).imag();
    }
  return c;
}

Eigen::VectorXd dual_coords(const DualElement& xi) {
  if (xi.kind.tag == AlgebraKind::Tag::so3) return xi.vec3();
  const int n = xi.kind.n;
  Eigen::VectorXd c(n * n);
  int pos = 0;
  for (int k = 0; k < n; ++k) c(pos++) = xi.m(k, k).real();
  const double s = std::sqrt(2.0);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      c(pos++) = s * xi.m(k, l).real();
      c(pos++) = s * xi.m(k, l).imag();
    }
  return c;
}

DualElement dual_from_coords(AlgebraKind kind, const Eigen::VectorXd& c) {
  if (kind.tag == AlgebraKind::Tag::so3) {
    if (c.size() != 3) throw std::invalid_argument("dual_from_coords: need 3 coords");
    return make_dual_so3(c.head<3>());
  }
  const int n = kind.n;
  if (c.size() != n * n) throw std::invalid_argument("dual_from_coords: wrong size");
  Matrix m = Matrix::Zero(n, n);
  int pos = 0;
  for (int k = 0; k < n; ++k) m(k, k) = c(pos++);
  const double s = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      const double re = c(pos++);
      const double im = c(pos++);
      m(k, l) = s * Complex(re, im);
      m(l, k) = std::conj(m(k, l));
    }
  return {kind, m};
}

}  // namespace gcs
