#include "gcs/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gcs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Coordinates r such that <eta, xi> = r . dual_coords(xi). For the unitary
// backend this is the Hermitian representative -i eta in dual coordinates.
Eigen::VectorXd pairing_coords(const AlgebraElement& eta) {
  if (eta.kind.tag == AlgebraKind::Tag::so3) return eta.vec3();
  Matrix h = Complex(0, -1) * eta.m;
  h = 0.5 * (h + h.adjoint().eval());
  return dual_coords(DualElement{eta.kind, h});
}

AlgebraElement scale_algebra(const AlgebraElement& eta, double s) {
  if (eta.kind.tag == AlgebraKind::Tag::so3)
    return make_algebra_so3(s * eta.vec3());
  return {eta.kind, s * eta.m};
}

// Descent generator for |moment - target|^2 in factor i: the conjugation
// direction along which the residual decreases steepest.
AlgebraElement descent_generator(const DualElement& xi_i, const DualElement& residual) {
  if (xi_i.kind.tag == AlgebraKind::Tag::so3)
    return make_algebra_so3(residual.vec3().cross(xi_i.vec3()));
  return {xi_i.kind, xi_i.m * residual.m - residual.m * xi_i.m};
}

double sq_residual(const std::vector<DualElement>& comps, const DualElement& target) {
  Matrix r = -target.m;
  for (const auto& c : comps) r += c.m;
  return r.squaredNorm();
}

std::vector<double> component_spectrum(const DualElement& xi) {
  if (xi.kind.tag == AlgebraKind::Tag::so3) return {xi.vec3().norm()};
  Eigen::VectorXd w;
  Matrix v;
  hermitian_eigs_desc(xi.m, w, v);
  return std::vector<double>(w.data(), w.data() + w.size());
}

// Torus distance between int-angle vectors, coordinatewise mod 2pi.
double angle_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  double d2 = 0;
  for (int k = 0; k < a.size(); ++k) {
    double d = std::abs(reduce_angle(a(k) - b(k)));
    d = std::min(d, kTwoPi - d);
    d2 += d * d;
  }
  return std::sqrt(d2);
}

}  // namespace

int OrbitSpec::dim() const {
  return kind.tag == AlgebraKind::Tag::so3 ? 2 : kind.n * kind.n - kind.n;
}

DualElement OrbitSpec::chamber_point() const {
  if (kind.tag == AlgebraKind::Tag::so3)
    return make_dual_so3(Vector3(0, 0, spectrum.at(0)));
  Matrix m = Matrix::Zero(kind.n, kind.n);
  for (int k = 0; k < kind.n; ++k) m(k, k) = spectrum[k];
  return {kind, m};
}

OrbitSpec make_orbit(AlgebraKind kind, std::vector<double> spectrum, double gap_tol) {
  if (kind.tag == AlgebraKind::Tag::so3) {
    if (spectrum.size() != 1 || spectrum[0] <= gap_tol)
      throw std::invalid_argument("make_orbit: so3 orbit needs a positive radius");
    return {kind, std::move(spectrum)};
  }
  if (static_cast<int>(spectrum.size()) != kind.n)
    throw std::invalid_argument("make_orbit: spectrum length must equal n");
  for (size_t k = 0; k + 1 < spectrum.size(); ++k)
    if (spectrum[k] - spectrum[k + 1] <= gap_tol)
      throw std::invalid_argument("make_orbit: spectrum must be strictly descending");
  return {kind, std::move(spectrum)};
}

int ProductSpace::dim() const {
  int d = 0;
  for (const auto& f : factors) d += f.dim();
  return d;
}

ProductSpace make_product(std::vector<OrbitSpec> factors) {
  if (factors.empty()) throw std::invalid_argument("make_product: no factors");
  for (const auto& f : factors)
    require_same_kind(f.kind, factors.front().kind, "make_product");
  return {std::move(factors)};
}

ProductPoint make_point(ProductSpace space, std::vector<DualElement> components,
                        double spectrum_tol) {
  if (components.size() != space.factors.size())
    throw std::invalid_argument("make_point: component count mismatch");
  for (size_t i = 0; i < components.size(); ++i) {
    require_same_kind(components[i].kind, space.kind(), "make_point");
    const auto spec = component_spectrum(components[i]);
    for (size_t k = 0; k < spec.size(); ++k)
      if (std::abs(spec[k] - space.factors[i].spectrum[k]) >
          scaled_tol(spectrum_tol, std::abs(space.factors[i].spectrum[k])))
        throw std::invalid_argument("make_point: component spectrum off its orbit");
  }
  return {std::move(space), std::move(components)};
}

ProductPoint sample_point(const ProductSpace& space, std::uint64_t seed) {
  std::vector<DualElement> comps;
  comps.reserve(space.factors.size());
  for (size_t i = 0; i < space.factors.size(); ++i) {
    const GroupElement g = sample_group(space.kind(), seed + 0x1000 * (i + 1));
    comps.push_back(coadjoint_act(g, space.factors[i].chamber_point()));
  }
  return {space, std::move(comps)};
}

double distance(const ProductPoint& a, const ProductPoint& b) {
  if (a.components.size() != b.components.size())
    throw std::invalid_argument("distance: component count mismatch");
  double d2 = 0;
  for (size_t i = 0; i < a.components.size(); ++i)
    d2 += (a.components[i].m - b.components[i].m).squaredNorm();
  return std::sqrt(d2);
}

TangentVector make_tangent(const ProductPoint& at,
                           std::vector<AlgebraElement> witnesses) {
  if (witnesses.size() != at.components.size())
    throw std::invalid_argument("make_tangent: witness count mismatch");
  TangentVector t{at, std::move(witnesses), {}};
  t.components.reserve(at.components.size());
  for (size_t i = 0; i < at.components.size(); ++i)
    t.components.push_back(coadjoint_inf(t.witnesses[i], at.components[i]));
  return t;
}

DualElement moment(const ProductPoint& m) {
  Matrix sum = m.components.at(0).m;
  for (size_t i = 1; i < m.components.size(); ++i) sum += m.components[i].m;
  return {m.space.kind(), sum};
}

double kks_form(const TangentVector& u, const TangentVector& v) {
  if (distance(u.at, v.at) > 1e-9 * std::max(1.0, frobenius(moment(u.at).m)))
    throw std::invalid_argument("kks_form: tangent vectors at different points");
  double val = 0;
  for (size_t i = 0; i < u.witnesses.size(); ++i)
    val += pair_value(lie_bracket(u.witnesses[i], v.witnesses[i]), u.at.components[i]);
  return val;
}

ProductPoint act_group(const ProductPoint& m, const GroupElement& g) {
  ProductPoint out = m;
  for (auto& c : out.components) c = coadjoint_act(g, c);
  return out;
}

ProductPoint flow_space(const ProductPoint& m, LadderIndex idx, double t,
                        const FlowConfig& cfg, double gap_tol) {
  if (cfg.method == FlowConfig::Method::closed_form) {
    const AlgebraElement grad = grad_lambda(moment(m), idx, gap_tol);
    return act_group(m, exp_algebra(scale_algebra(grad, t)));
  }
  if (cfg.step <= 0) throw std::invalid_argument("flow_space: rk4 step must be positive");
  const double dir = t >= 0 ? 1.0 : -1.0;
  double remaining = std::abs(t);
  ProductPoint p = m;
  const auto field = [&](const std::vector<DualElement>& comps) {
    Matrix sum = comps.at(0).m;
    for (size_t i = 1; i < comps.size(); ++i) sum += comps[i].m;
    const AlgebraElement grad = grad_lambda({p.space.kind(), sum}, idx, gap_tol);
    std::vector<DualElement> out;
    out.reserve(comps.size());
    for (const auto& c : comps) out.push_back(coadjoint_inf(grad, c));
    return out;
  };
  while (remaining > 0) {
    const double h = dir * std::min(cfg.step, remaining);
    const auto& c0 = p.components;
    const auto k1 = field(c0);
    auto shift = [&](double f, const std::vector<DualElement>& k) {
      std::vector<DualElement> s = c0;
      for (size_t i = 0; i < s.size(); ++i) s[i].m += f * k[i].m;
      return s;
    };
    const auto k2 = field(shift(0.5 * h, k1));
    const auto k3 = field(shift(0.5 * h, k2));
    const auto k4 = field(shift(h, k3));
    for (size_t i = 0; i < p.components.size(); ++i)
      p.components[i].m +=
          (h / 6.0) * (k1[i].m + 2.0 * k2[i].m + 2.0 * k3[i].m + k4[i].m);
    remaining -= std::abs(h);
  }
  return p;
}

ProductPoint act_torus_space(const ProductPoint& m, const TorusElement& theta,
                             double gap_tol) {
  require_same_kind(m.space.kind(), theta.kind, "act_torus_space");
  if (!is_strongly_regular(moment(m), gap_tol).is_strongly_regular)
    throw LeftStrongRegularLocus("act_torus_space: moment value not strongly regular");
  const auto indices = ladder_indices(m.space.kind());
  ProductPoint p = m;
  for (int a = 0; a < theta.angles.size(); ++a) {
    if (theta.angles(a) == 0.0) continue;
    p = flow_space(p, indices[a], theta.angles(a), FlowConfig{}, gap_tol);
  }
  return p;
}

ProductPoint solve_level(const ProductSpace& space, const DualElement& target,
                         std::uint64_t seed, const SolveOptions& opts) {
  require_same_kind(space.kind(), target.kind, "solve_level");
  const size_t nf = space.factors.size();
  const double tol2 = opts.residual_tol * opts.residual_tol;

  for (int restart = 0; restart <= opts.restarts; ++restart) {
    std::vector<DualElement> comps;
    if (restart == 0) {
      // Aligned start: co-diagonalize every factor with the target.
      if (space.kind().tag == AlgebraKind::Tag::so3) {
        Vector3 axis = target.vec3();
        axis = axis.norm() > 1e-12 ? Vector3(axis.normalized()) : Vector3(0, 0, 1);
        for (const auto& f : space.factors)
          comps.push_back(make_dual_so3(f.spectrum[0] * axis));
      } else {
        Eigen::VectorXd w;
        Matrix v;
        hermitian_eigs_desc(target.m, w, v);
        for (const auto& f : space.factors) {
          Eigen::VectorXd d(space.kind().n);
          for (int k = 0; k < space.kind().n; ++k) d(k) = f.spectrum[k];
          Matrix c = v * d.cast<Complex>().asDiagonal() * v.adjoint();
          comps.push_back({space.kind(), 0.5 * (c + c.adjoint().eval())});
        }
      }
    } else {
      comps = sample_point(space, seed + 7919 * restart).components;
    }

    double f = sq_residual(comps, target);
    double step = 0.25;
    for (int iter = 0; iter < opts.max_iters; ++iter) {
      if (f <= tol2) return make_point(space, comps);
      Matrix rm = -target.m;
      for (const auto& c : comps) rm += c.m;
      const DualElement residual{target.kind, rm};
      std::vector<AlgebraElement> gen;
      gen.reserve(nf);
      double g2 = 0;
      for (const auto& c : comps) {
        gen.push_back(descent_generator(c, residual));
        g2 += gen.back().m.squaredNorm();
      }
      if (g2 < 1e-28) break;  // stationary but not converged: restart

      bool accepted = false;
      while (step > 1e-16) {
        std::vector<DualElement> trial = comps;
        for (size_t i = 0; i < nf; ++i)
          trial[i] = coadjoint_act(exp_algebra(scale_algebra(gen[i], step)), trial[i]);
        const double ft = sq_residual(trial, target);
        if (ft <= f - 0.5 * step * g2) {
          comps = std::move(trial);
          f = ft;
          step = std::min(step * 2.0, 1e3);
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
    }
    if (f <= tol2) return make_point(space, comps);
  }
  throw NoConvergence("solve_level: restart budget exhausted (empty level set or optimizer failure)");
}

std::vector<TangentVector> level_tangent_basis(const ProductPoint& m, LevelKind which,
                                               double gap_tol) {
  const AlgebraKind kind = m.space.kind();
  const int dim_g = kind.dim();
  const int d_dual = dim_g;
  const size_t nf = m.components.size();
  const auto& basis = algebra_basis(kind);

  // Per-factor orthonormal tangent bases with witness pullbacks.
  struct FactorBasis {
    Eigen::MatrixXd dirs;              // d_dual x r_i, orthonormal columns
    std::vector<AlgebraElement> wits;  // one witness per column
  };
  std::vector<FactorBasis> fb(nf);
  std::vector<int> offsets(nf + 1, 0);
  for (size_t i = 0; i < nf; ++i) {
    Eigen::MatrixXd t(d_dual, dim_g);
    for (int s = 0; s < dim_g; ++s)
      t.col(s) = dual_coords(coadjoint_inf(basis[s], m.components[i]));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    int r = 0;
    for (int k = 0; k < sv.size(); ++k)
      if (sv(k) > 1e-10 * sv(0)) ++r;
    fb[i].dirs = svd.matrixU().leftCols(r);
    for (int c = 0; c < r; ++c) {
      Matrix wm;
      Vector3 wv = Vector3::Zero();
      if (kind.tag == AlgebraKind::Tag::so3) {
        for (int s = 0; s < dim_g; ++s)
          wv += (svd.matrixV()(s, c) / sv(c)) * basis[s].vec3();
        fb[i].wits.push_back(make_algebra_so3(wv));
      } else {
        wm = Matrix::Zero(kind.n, kind.n);
        for (int s = 0; s < dim_g; ++s)
          wm += (svd.matrixV()(s, c) / sv(c)) * basis[s].m;
        fb[i].wits.push_back({kind, wm});
      }
    }
    offsets[i + 1] = offsets[i] + r;
  }
  const int dim_m = offsets[nf];

  // d moment in the per-factor tangent coordinates.
  Eigen::MatrixXd dmu(d_dual, dim_m);
  for (size_t i = 0; i < nf; ++i)
    dmu.middleCols(offsets[i], offsets[i + 1] - offsets[i]) = fb[i].dirs;

  Eigen::MatrixXd map;
  if (which == LevelKind::group_level) {
    map = dmu;
  } else {
    const DualElement mu = moment(m);
    const auto indices = ladder_indices(kind);
    Eigen::MatrixXd p(kind.torus_big(), d_dual);
    for (int a = 0; a < kind.torus_big(); ++a)
      p.row(a) = pairing_coords(grad_lambda(mu, indices[a], gap_tol)).transpose();
    map = p * dmu;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(map, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > 1e-8 * sv(0)) ++rank;

  std::vector<TangentVector> out;
  for (int c = rank; c < dim_m; ++c) {
    const Eigen::VectorXd coef = svd.matrixV().col(c);
    std::vector<AlgebraElement> wits;
    wits.reserve(nf);
    for (size_t i = 0; i < nf; ++i) {
      AlgebraElement w = zero_algebra(kind);
      for (int col = offsets[i]; col < offsets[i + 1]; ++col) {
        const auto& piece = fb[i].wits[col - offsets[i]];
        if (kind.tag == AlgebraKind::Tag::so3)
          w = make_algebra_so3(w.vec3() + coef(col) * piece.vec3());
        else
          w.m += coef(col) * piece.m;
      }
      wits.push_back(std::move(w));
    }
    out.push_back(make_tangent(m, std::move(wits)));
  }
  return out;
}

double verify_collective_identity(const ProductPoint& m, const AlgebraElement& eta,
                                  double gap_tol) {
  const DualElement xi = moment(m);
  if (!is_strongly_regular(xi, gap_tol).is_strongly_regular)
    throw LeftStrongRegularLocus("verify_collective_identity: moment value not s-reg");
  const Eigen::VectorXd x = kappa(xi, eta, gap_tol);  // throws NotInCentralizer
  const ProductPoint lhs = act_group(m, exp_algebra(eta));
  const ProductPoint rhs = act_torus_space(m, pad_small(m.space.kind(), x), gap_tol);
  return distance(lhs, rhs);
}

TangentVector hamiltonian_tangent(const ProductPoint& m, LadderIndex idx,
                                  double gap_tol) {
  const AlgebraElement grad = grad_lambda(moment(m), idx, gap_tol);
  std::vector<AlgebraElement> wits(m.components.size(), grad);
  return make_tangent(m, std::move(wits));
}

TorusElement saturate(const ProductPoint& m, const DualElement& target,
                      const SaturateOptions& opts, double gap_tol) {
  const AlgebraKind kind = m.space.kind();
  require_same_kind(kind, target.kind, "saturate");
  const DualElement xi0 = moment(m);
  const auto pat_m = gc_pattern(xi0).flat();
  const auto pat_t = gc_pattern(target).flat();
  for (size_t a = 0; a < pat_m.size(); ++a)
    if (std::abs(pat_m[a] - pat_t[a]) > scaled_tol(opts.pattern_tol, std::abs(pat_t[a])))
      throw std::invalid_argument("saturate: ladder values of m and target differ");
  if (!is_strongly_regular(xi0, gap_tol).is_strongly_regular ||
      !is_strongly_regular(target, gap_tol).is_strongly_regular)
    throw LeftStrongRegularLocus("saturate: both points must be strongly regular");

  const int ell = kind.rank();
  const int u = kind.torus_int();
  const auto to_torus = [&](const Eigen::VectorXd& phi) {
    TorusElement t = TorusElement::identity(kind);
    for (int k = 0; k < u; ++k) t.angles(ell + k) = reduce_angle(phi(k));
    return t;
  };
  // Equivariance lets the search run on g* instead of M.
  const auto residual_vec = [&](const Eigen::VectorXd& phi) {
    const DualElement moved = act_torus_dual(xi0, to_torus(phi), gap_tol);
    return Eigen::VectorXd(dual_coords(moved) - dual_coords(target));
  };
  const auto objective = [&](const Eigen::VectorXd& phi) {
    return residual_vec(phi).norm();
  };

  // Candidate starts: full angle grid when affordable, seeded random
  // otherwise.
  std::vector<Eigen::VectorXd> starts;
  const int per_dim = std::max(2, static_cast<int>(std::lround(kTwoPi / opts.grid_step)));
  double total = std::pow(static_cast<double>(per_dim), u);
  if (total <= 65536.0) {
    Eigen::VectorXi counter = Eigen::VectorXi::Zero(u);
    const int npts = static_cast<int>(total);
    for (int p = 0; p < npts; ++p) {
      Eigen::VectorXd phi(u);
      for (int k = 0; k < u; ++k) phi(k) = counter(k) * (kTwoPi / per_dim);
      starts.push_back(phi);
      for (int k = 0; k < u; ++k) {
        if (++counter(k) < per_dim) break;
        counter(k) = 0;
      }
    }
  } else {
    std::mt19937_64 rng(0x5a7a11ull);
    std::uniform_real_distribution<double> unif(0.0, kTwoPi);
    for (int p = 0; p < 4 * opts.max_refine; ++p) {
      Eigen::VectorXd phi(u);
      for (int k = 0; k < u; ++k) phi(k) = unif(rng);
      starts.push_back(phi);
    }
  }
  std::vector<std::pair<double, int>> ranked;
  ranked.reserve(starts.size());
  for (size_t p = 0; p < starts.size(); ++p)
    ranked.emplace_back(objective(starts[p]), static_cast<int>(p));
  std::sort(ranked.begin(), ranked.end());

  // Gauss-Newton refinement with a finite-difference Jacobian.
  const auto refine = [&](Eigen::VectorXd phi) {
    const double h = 1e-6;
    for (int iter = 0; iter < 80; ++iter) {
      const Eigen::VectorXd r = residual_vec(phi);
      if (r.norm() <= 0.1 * opts.residual_tol) break;
      Eigen::MatrixXd jac(r.size(), u);
      for (int k = 0; k < u; ++k) {
        Eigen::VectorXd pp = phi, pm = phi;
        pp(k) += h;
        pm(k) -= h;
        jac.col(k) = (residual_vec(pp) - residual_vec(pm)) / (2 * h);
      }
      Eigen::VectorXd dphi =
          jac.colPivHouseholderQr().solve(-r);
      double s = 1.0;
      const double f0 = r.norm();
      bool ok = false;
      while (s > 1e-12) {
        if (objective(phi + s * dphi) < f0) {
          phi += s * dphi;
          ok = true;
          break;
        }
        s *= 0.5;
      }
      if (!ok) break;
    }
    return phi;
  };

  const int nrefine = std::min<int>(opts.max_refine, static_cast<int>(ranked.size()));
  std::vector<Eigen::VectorXd> solutions;
  for (int p = 0; p < nrefine; ++p) {
    Eigen::VectorXd phi = refine(starts[ranked[p].second]);
    if (objective(phi) > opts.residual_tol) continue;
    Eigen::VectorXd wrapped(u);
    for (int k = 0; k < u; ++k) wrapped(k) = reduce_angle(phi(k));
    bool fresh = true;
    for (const auto& s : solutions)
      if (angle_distance(s, wrapped) <= opts.identify_tol) fresh = false;
    if (fresh) solutions.push_back(wrapped);
  }
  if (solutions.empty())
    throw NoConvergence("saturate: no int-torus element reaches the target fiber");
  if (solutions.size() > 1)
    throw AmbiguousSaturation("saturate: distinct int-torus solutions found");
  return to_torus(solutions.front());
}

ReductionReport reduction_report(const ProductSpace& space, const DualElement& target,
                                 std::uint64_t seed, const SolveOptions& opts,
                                 double gap_tol) {
  ReductionReport rep;
  const ProductPoint m = solve_level(space, target, seed, opts);
  const DualElement xi = moment(m);
  const AlgebraKind kind = space.kind();
  const int ell = kind.rank();
  const int b = kind.torus_big();
  const size_t nf = m.components.size();

  const auto group_basis = level_tangent_basis(m, LevelKind::group_level, gap_tol);
  const auto torus_basis = level_tangent_basis(m, LevelKind::torus_level, gap_tol);
  rep.dim_ker_dmu = static_cast<int>(group_basis.size());
  rep.dim_ker_dlambdaM = static_cast<int>(torus_basis.size());

  // Stabilizer dimensions: kernels of eta -> generating tangent at m. The
  // rank threshold must be absolute in the point's scale: a direction whose
  // generating tangent is at solver-residual level acts trivially, even when
  // every column of the matrix is that small.
  const double tangent_scale = std::max(1.0, frobenius(xi.m));
  const auto stationary_rank = [&](const Eigen::MatrixXd& g) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(g);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k)
      if (svd.singularValues()(k) > 1e-6 * tangent_scale) ++rank;
    return rank;
  };

  const auto cent = centralizer_basis(xi, gap_tol);
  const int d_dual = kind.dim();
  Eigen::MatrixXd sg(static_cast<int>(nf) * d_dual, ell);
  for (int a = 0; a < ell; ++a)
    for (size_t i = 0; i < nf; ++i)
      sg.block(static_cast<int>(i) * d_dual, a, d_dual, 1) =
          dual_coords(coadjoint_inf(cent[a], m.components[i]));
  rep.group_stabilizer_dim = ell - stationary_rank(sg);

  const auto indices = ladder_indices(kind);
  Eigen::MatrixXd st(static_cast<int>(nf) * d_dual, b);
  for (int a = 0; a < b; ++a) {
    const AlgebraElement grad = grad_lambda(xi, indices[a], gap_tol);
    for (size_t i = 0; i < nf; ++i)
      st.block(static_cast<int>(i) * d_dual, a, d_dual, 1) =
          dual_coords(coadjoint_inf(grad, m.components[i]));
  }
  rep.torus_stabilizer_dim = b - stationary_rank(st);

  // Collective identity defect over a random centralizer sample.
  std::mt19937_64 rng(seed ^ 0xc0111ec7ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    AlgebraElement eta = zero_algebra(kind);
    for (const auto& c : cent) {
      const double w = gauss(rng);
      if (kind.tag == AlgebraKind::Tag::so3)
        eta = make_algebra_so3(eta.vec3() + w * c.vec3());
      else
        eta.m += w * c.m;
    }
    rep.collective_defect =
        std::max(rep.collective_defect, verify_collective_identity(m, eta, gap_tol));
  }

  // Saturation round trip from a perturbed fiber partner.
  {
    std::uniform_real_distribution<double> unif(0.2, 1.2);
    TorusElement theta0 = TorusElement::identity(kind);
    for (int k = ell; k < b; ++k) theta0.angles(k) = unif(rng);
    const ProductPoint moved = act_torus_space(m, theta0, gap_tol);
    const TorusElement back = saturate(moved, xi, SaturateOptions{}, gap_tol);
    rep.saturation_residual =
        frobenius(moment(act_torus_space(moved, back, gap_tol)).m - xi.m);
  }

  // omega pairs group-level kernel vectors against every torus-generating
  // direction to zero; this is what makes the reduced forms agree.
  for (const auto& v : group_basis)
    for (int a = 0; a < b; ++a)
      rep.form_welldef_defect = std::max(
          rep.form_welldef_defect,
          std::abs(kks_form(v, hamiltonian_tangent(m, indices[a], gap_tol))));
  return rep;
}

}  // namespace gcs
