#include "gcs/torus.hpp"

#include <cmath>
#include <numbers>

namespace gcs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_sreg(const DualElement& xi, double gap_tol, const char* where) {
  if (!is_strongly_regular(xi, gap_tol).is_strongly_regular) {
    throw LeftStrongRegularLocus(std::string(where) +
                                 ": point is not strongly regular");
  }
}

// Exact flow: the gradient is constant along its own flow, so one
// conjugation suffices.
DualElement flow_closed(const DualElement& xi, LadderIndex idx, double t,
                        double gap_tol) {
  const AlgebraElement grad = grad_lambda(xi, idx, gap_tol);
  AlgebraElement scaled{grad.kind, t * grad.m};
  if (grad.kind.tag == AlgebraKind::Tag::so3)
    scaled = make_algebra_so3(t * grad.vec3());
  return coadjoint_act(exp_algebra(scaled), xi);
}

DualElement flow_rk4(const DualElement& xi, LadderIndex idx, double t,
                     double step, double gap_tol) {
  if (step <= 0) throw std::invalid_argument("flow_dual: rk4 step must be positive");
  const auto field = [&](const DualElement& p) {
    return coadjoint_inf(grad_lambda(p, idx, gap_tol), p);
  };
  const double dir = t >= 0 ? 1.0 : -1.0;
  double remaining = std::abs(t);
  DualElement p = xi;
  while (remaining > 0) {
    const double h = dir * std::min(step, remaining);
    const DualElement k1 = field(p);
    const DualElement k2 = field({p.kind, p.m + 0.5 * h * k1.m});
    const DualElement k3 = field({p.kind, p.m + 0.5 * h * k2.m});
    const DualElement k4 = field({p.kind, p.m + h * k3.m});
    p = {p.kind, p.m + (h / 6.0) * (k1.m + 2.0 * k2.m + 2.0 * k3.m + k4.m)};
    require_sreg(p, gap_tol, "flow_dual(rk4)");
    remaining -= std::abs(h);
  }
  return p;
}

}  // namespace

TorusElement TorusElement::identity(AlgebraKind kind) {
  return {kind, Eigen::VectorXd::Zero(kind.torus_big())};
}

double reduce_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

DualElement flow_dual(const DualElement& xi, LadderIndex idx, double t,
                      const FlowConfig& cfg, double gap_tol) {
  require_sreg(xi, gap_tol, "flow_dual");
  if (cfg.method == FlowConfig::Method::rk4)
    return flow_rk4(xi, idx, t, cfg.step, gap_tol);
  return flow_closed(xi, idx, t, gap_tol);
}

DualElement act_torus_dual(const DualElement& xi, const TorusElement& theta,
                           double gap_tol) {
  require_same_kind(xi.kind, theta.kind, "act_torus_dual");
  if (theta.angles.size() != xi.kind.torus_big())
    throw std::invalid_argument("act_torus_dual: wrong number of angles");
  require_sreg(xi, gap_tol, "act_torus_dual");
  const auto indices = ladder_indices(xi.kind);
  DualElement p = xi;
  for (int a = 0; a < theta.angles.size(); ++a) {
    if (theta.angles(a) == 0.0) continue;
    // The flows preserve the whole ladder, so strong regularity persists;
    // no per-step recheck needed on the closed-form path.
    p = flow_closed(p, indices[a], theta.angles(a), gap_tol);
  }
  return p;
}

Eigen::VectorXd kappa(const DualElement& xi, const AlgebraElement& eta,
                      double gap_tol) {
  require_same_kind(xi.kind, eta.kind, "kappa");
  const double scale =
      std::max(1.0, frobenius(eta.m) * std::max(1.0, frobenius(xi.m)));
  const DualElement comm = coadjoint_inf(eta, xi);
  if (frobenius(comm.m) > 1e-8 * scale)
    throw NotInCentralizer("kappa: [eta, xi] is not negligible");

  const int ell = xi.kind.rank();
  const int dim = xi.kind.dim();
  Eigen::MatrixXd a(dim, ell);
  for (int k = 0; k < ell; ++k)
    a.col(k) = algebra_coords(grad_lambda(xi, {0, k + 1}, gap_tol));
  const Eigen::VectorXd rhs = algebra_coords(eta);
  const Eigen::VectorXd x = a.colPivHouseholderQr().solve(rhs);
  if ((a * x - rhs).norm() > 1e-9 * std::max(1.0, rhs.norm()))
    throw NotInCentralizer("kappa: eta is outside the span of the small gradients");
  return x;
}

TorusElement tau(const DualElement& xi, const GroupElement& g, double gap_tol) {
  require_same_kind(xi.kind, g.kind, "tau");
  TorusElement out = TorusElement::identity(xi.kind);

  if (xi.kind.tag == AlgebraKind::Tag::so3) {
    const Vector3 v = xi.vec3();
    if (v.norm() <= gap_tol) throw NotRegular("tau: so3 point too close to zero");
    const Eigen::Matrix3d r = g.rot3();
    if ((r * v - v).norm() > 1e-8 * std::max(1.0, v.norm()))
      throw NotInStabilizer("tau: rotation does not fix xi");
    const Vector3 axis = v.normalized();
    // Any unit vector orthogonal to the axis.
    Vector3 w = axis.cross(std::abs(axis.x()) < 0.9 ? Vector3::UnitX()
                                                    : Vector3::UnitY());
    w.normalize();
    const Vector3 rw = r * w;
    out.angles(0) = reduce_angle(std::atan2(axis.dot(w.cross(rw)), w.dot(rw)));
    return out;
  }

  const int n = xi.kind.n;
  if (!regularity(xi, gap_tol).is_regular)
    throw NotRegular("tau: xi is not regular");
  const double scale = std::max(1.0, frobenius(xi.m));
  if (frobenius(g.m * xi.m - xi.m * g.m) > 1e-8 * scale)
    throw NotInStabilizer("tau: g does not commute with xi");
  Eigen::VectorXd w;
  Matrix vecs;
  hermitian_eigs_desc(xi.m, w, vecs);
  Matrix recon = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const Complex phase = vecs.col(k).adjoint() * g.m * vecs.col(k);
    out.angles(k) = reduce_angle(std::atan2(phase.imag(), phase.real()));
    recon += std::polar(1.0, out.angles(k)) * (vecs.col(k) * vecs.col(k).adjoint());
  }
  if (frobenius(recon - g.m) > 1e-9 * std::max(1.0, frobenius(g.m)))
    throw NotInStabilizer("tau: g is not diagonal in the eigenbasis of xi");
  return out;
}

TorusElement pad_small(AlgebraKind kind, const Eigen::VectorXd& small) {
  if (small.size() != kind.rank())
    throw std::invalid_argument("pad_small: expected rank-many coordinates");
  TorusElement out = TorusElement::identity(kind);
  for (int k = 0; k < small.size(); ++k) out.angles(k) = reduce_angle(small(k));
  return out;
}

int torus_stabilizer_dim_dual(const DualElement& xi, double gap_tol) {
  require_sreg(xi, gap_tol, "torus_stabilizer_dim_dual");
  const auto indices = ladder_indices(xi.kind);
  const int b = xi.kind.torus_big();
  Eigen::MatrixXd dirs(xi.kind.dim(), b);
  for (int a = 0; a < b; ++a)
    dirs.col(a) = dual_coords(coadjoint_inf(grad_lambda(xi, indices[a], gap_tol), xi));
  return b - numeric_rank(dirs);
}

}  // namespace gcs
