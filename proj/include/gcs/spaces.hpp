#pragma once

// Hamiltonian G-spaces built as products of regular coadjoint orbits: the
// diagonal action, the summed moment map, the orbitwise symplectic form,
// the lifted big-torus action, moment level-set solving by Riemannian
// descent over conjugations, and per-point reduction reports.

#include <cstdint>
#include <numbers>
#include <vector>

#include "gcs/algebra.hpp"
#include "gcs/ladder.hpp"
#include "gcs/torus.hpp"

namespace gcs {

struct OrbitSpec {
  AlgebraKind kind;
  std::vector<double> spectrum;  // strictly descending; so3: {radius}

  // Dimension of the (regular) orbit: n^2 - n for unitary, 2 for so3.
  int dim() const;
  DualElement chamber_point() const;  // diag(spectrum) / radius * e3
};

OrbitSpec make_orbit(AlgebraKind kind, std::vector<double> spectrum,
                     double gap_tol = kDefaultGapTol);

struct ProductSpace {
  std::vector<OrbitSpec> factors;  // nonempty, all of the same kind

  AlgebraKind kind() const { return factors.at(0).kind; }
  int dim() const;
};

ProductSpace make_product(std::vector<OrbitSpec> factors);

struct ProductPoint {
  ProductSpace space;
  std::vector<DualElement> components;  // component i lies on orbit i
};

ProductPoint make_point(ProductSpace space, std::vector<DualElement> components,
                        double spectrum_tol = 1e-8);
ProductPoint sample_point(const ProductSpace& space, std::uint64_t seed);
double distance(const ProductPoint& a, const ProductPoint& b);

// Orbit-tangent vector at a product point; each component is [eta_i, m_i]
// and the generating witnesses eta_i are kept alongside.
struct TangentVector {
  ProductPoint at;
  std::vector<AlgebraElement> witnesses;
  std::vector<DualElement> components;
};

TangentVector make_tangent(const ProductPoint& at,
                           std::vector<AlgebraElement> witnesses);

// Moment map of the diagonal action: the sum of the components.
DualElement moment(const ProductPoint& m);

// Symplectic pairing of two orbit-tangent vectors at the same point:
// sum_i <[eta_i, zeta_i], m_i>. Independent of the witness choice.
double kks_form(const TangentVector& u, const TangentVector& v);

ProductPoint act_group(const ProductPoint& m, const GroupElement& g);

// Collective flow of one ladder component on M for time t; the closed form
// conjugates every component by exp(t grad(mu(m))). rk4 integrates the
// collective field on M as a cross-check.
ProductPoint flow_space(const ProductPoint& m, LadderIndex idx, double t,
                        const FlowConfig& cfg = {}, double gap_tol = kDefaultGapTol);

// Lifted big-torus action: collective flows composed in flat enumeration
// order. Intertwines moment with act_torus_dual.
ProductPoint act_torus_space(const ProductPoint& m, const TorusElement& theta,
                             double gap_tol = kDefaultGapTol);

struct SolveOptions {
  double residual_tol = 1e-8;  // on |moment(m) - target|
  int restarts = 20;
  int max_iters = 4000;
};

// Finds m with moment(m) close to target by Riemannian gradient descent
// over componentwise conjugations, with backtracking line search and seeded
// restarts. Throws NoConvergence when the restart budget is exhausted
// (empty level set and optimizer failure are not distinguished).
ProductPoint solve_level(const ProductSpace& space, const DualElement& target,
                         std::uint64_t seed, const SolveOptions& opts = {});

enum class LevelKind { group_level, torus_level };

// Orthonormal basis of ker(d moment) at m (group level) or of the kernel of
// the differential of the ladder-composed moment (torus level).
std::vector<TangentVector> level_tangent_basis(const ProductPoint& m, LevelKind which,
                                               double gap_tol = kDefaultGapTol);

// Defect of the identity g.m = tau(g).m for g = exp(eta), eta in the
// centralizer of moment(m): distance between the group-acted point and the
// small-torus-acted point.
double verify_collective_identity(const ProductPoint& m, const AlgebraElement& eta,
                                  double gap_tol = kDefaultGapTol);

struct SaturateOptions {
  double residual_tol = 1e-6;
  double pattern_tol = 1e-6;
  double grid_step = std::numbers::pi / 8.0;
  double identify_tol = 1e-3;  // solutions closer than this are the same
  int max_refine = 64;         // refinement starts taken from the grid scan
};

// Finds the int-torus element carrying m into the moment fiber of target,
// assuming m and target share the same ladder value. A grid scan plus local
// refinement checks uniqueness; a distinct second solution raises
// AmbiguousSaturation.
TorusElement saturate(const ProductPoint& m, const DualElement& target,
                      const SaturateOptions& opts = {},
                      double gap_tol = kDefaultGapTol);

struct ReductionReport {
  int dim_ker_dmu = 0;
  int dim_ker_dlambdaM = 0;
  int group_stabilizer_dim = 0;
  int torus_stabilizer_dim = 0;
  double collective_defect = 0.0;
  double saturation_residual = 0.0;
  double form_welldef_defect = 0.0;
};

// Solves a level point and certifies the reduction bookkeeping at it:
// kernel dimensions of both moment differentials, stabilizer dimensions on
// the group and torus sides, the collective-identity defect, the saturation
// residual for a perturbed fiber partner, and the pairing of group-level
// kernel vectors against all torus-generating directions.
ReductionReport reduction_report(const ProductSpace& space, const DualElement& target,
                                 std::uint64_t seed, const SolveOptions& opts = {},
                                 double gap_tol = kDefaultGapTol);

// Generating tangent of the collective flow of ladder component idx at m.
TangentVector hamiltonian_tangent(const ProductPoint& m, LadderIndex idx,
                                  double gap_tol = kDefaultGapTol);

}  // namespace gcs
