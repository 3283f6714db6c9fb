#pragma once

// The densely defined Hamiltonian big-torus action on the strongly regular
// locus of g*: single-component flows, the composed torus action, the
// centralizer coordinate map kappa and the stabilizer isomorphism tau, and
// torus-stabilizer analysis.
//
// Sign convention: the time-t flow of the ladder component at idx is the
// conjugation xi -> exp(+t grad) xi exp(-t grad). The sign is pinned by the
// compatibility identity between the group action and the torus action on
// moment fibers (see the tests); do not flip it in isolation.

#include "gcs/algebra.hpp"
#include "gcs/ladder.hpp"

namespace gcs {

struct TorusElement {
  AlgebraKind kind;
  Eigen::VectorXd angles;  // length b, each reduced to [0, 2pi)

  static TorusElement identity(AlgebraKind kind);
};

double reduce_angle(double a);  // into [0, 2pi)

struct FlowConfig {
  enum class Method { closed_form, rk4 };
  Method method = Method::closed_form;
  double step = 0.01;  // rk4 only; keep <= 0.1
};

// Hamiltonian flow of the ladder component at idx for time t. The gradient
// is constant along its own flow, so the closed form is the exact flow; rk4
// integrates xi' = [grad(xi), xi] as an independent cross-check and verifies
// strong regularity at every step.
DualElement flow_dual(const DualElement& xi, LadderIndex idx, double t,
                      const FlowConfig& cfg = {}, double gap_tol = kDefaultGapTol);

// Composes flow_dual over all ladder indices in flat enumeration order; the
// flows Poisson-commute, so the order is immaterial up to roundoff.
DualElement act_torus_dual(const DualElement& xi, const TorusElement& theta,
                           double gap_tol = kDefaultGapTol);

// Coordinates of eta in the small-block gradient basis of g_xi:
// eta = sum_a x_a grad_lambda(xi, (0, a)). Throws NotInCentralizer when
// [eta, xi] is not negligible.
Eigen::VectorXd kappa(const DualElement& xi, const AlgebraElement& eta,
                      double gap_tol = kDefaultGapTol);

// The stabilizer isomorphism G_xi -> T_small: writes g = exp(eta) with eta
// in g_xi via the principal logarithm on each eigenline of xi and returns
// kappa(xi, eta) mod 2pi in the small block, zero in the int block.
TorusElement tau(const DualElement& xi, const GroupElement& g,
                 double gap_tol = kDefaultGapTol);

// Places small-block coordinates into a big-torus element with zero int block.
TorusElement pad_small(AlgebraKind kind, const Eigen::VectorXd& small);

// b minus the rank of the span of the Hamiltonian directions of the ladder
// components at xi (continuous part of the big-torus stabilizer).
int torus_stabilizer_dim_dual(const DualElement& xi, double gap_tol = kDefaultGapTol);

}  // namespace gcs
