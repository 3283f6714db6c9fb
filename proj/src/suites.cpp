#include "gcs/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace gcs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double opnorm(const DualElement& xi) {
  if (xi.kind.tag == AlgebraKind::Tag::so3) return xi.vec3().norm();
  Eigen::VectorXd w;
  Matrix v;
  hermitian_eigs_desc(xi.m, w, v);
  return std::max(std::abs(w(0)), std::abs(w(w.size() - 1)));
}

DualElement sample_sreg(AlgebraKind kind, std::uint64_t seed) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    DualElement xi = sample_dual(kind, seed + 7771 * attempt);
    if (is_strongly_regular(xi).is_strongly_regular) return xi;
  }
  throw NoConvergence("sample_sreg: could not draw a strongly regular point");
}

AlgebraElement sample_algebra(AlgebraKind kind, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  if (kind.tag == AlgebraKind::Tag::so3)
    return make_algebra_so3(Vector3(gauss(rng), gauss(rng), gauss(rng)));
  Matrix z(kind.n, kind.n);
  for (int r = 0; r < kind.n; ++r)
    for (int c = 0; c < kind.n; ++c) z(r, c) = Complex(gauss(rng), gauss(rng));
  return {kind, 0.5 * (z - z.adjoint().eval())};
}

AlgebraElement centralizer_sample(const DualElement& xi, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto cent = centralizer_basis(xi);
  AlgebraElement eta = zero_algebra(xi.kind);
  for (const auto& c : cent) {
    const double w = gauss(rng);
    if (xi.kind.tag == AlgebraKind::Tag::so3)
      eta = make_algebra_so3(eta.vec3() + w * c.vec3());
    else
      eta.m += w * c.m;
  }
  return eta;
}

struct SuiteDef {
  std::string name;
  std::vector<std::pair<std::string, double>> invariants;  // name, default tol
  std::function<std::vector<double>(const SuiteConfig&, std::uint64_t, int)> eval;
};

// ---------------------------------------------------------------------------
// gc-check: the ladder map itself.

SuiteDef gc_check_def() {
  SuiteDef def;
  def.name = "gc-check";
  def.invariants = {{"interlacing", 1e-10},
                    {"ladder-cardinality", 0.5},
                    {"top-row-invariance", 1e-9},
                    {"eigenvalue-lipschitz", 1e-9}};
  def.eval = [](const SuiteConfig& cfg, std::uint64_t tseed, int) {
    const AlgebraKind kind = cfg.kind;
    const DualElement xi = sample_dual(kind, tseed);
    const GCPattern pat = gc_pattern(xi);

    double interlace = 0;
    if (kind.tag == AlgebraKind::Tag::so3) {
      interlace = std::max(0.0, std::abs(pat.rows[1][0]) - pat.rows[0][0]);
    } else {
      for (size_t j = 0; j + 1 < pat.rows.size(); ++j)
        for (size_t k = 0; k < pat.rows[j + 1].size(); ++k) {
          interlace = std::max(interlace, pat.rows[j + 1][k] - pat.rows[j][k]);
          interlace = std::max(interlace, pat.rows[j][k + 1] - pat.rows[j + 1][k]);
        }
    }

    const double cardinality =
        std::abs(static_cast<double>(pat.flat().size()) - kind.torus_big());

    const GroupElement g = sample_group(kind, tseed ^ 0x9111ull);
    const GCPattern conj = gc_pattern(coadjoint_act(g, xi));
    double invariance = 0;
    for (size_t k = 0; k < pat.rows[0].size(); ++k)
      invariance = std::max(invariance, std::abs(pat.rows[0][k] - conj.rows[0][k]));

    DualElement delta = sample_dual(kind, tseed ^ 0xde17a0ull);
    delta.m *= 0.1;
    const DualElement shifted{kind, xi.m + delta.m};
    const GCPattern pat2 = gc_pattern(shifted);
    const double bound = opnorm(delta);
    double lipschitz = 0;
    const auto f1 = pat.flat(), f2 = pat2.flat();
    for (size_t a = 0; a < f1.size(); ++a)
      lipschitz = std::max(lipschitz, std::abs(f1[a] - f2[a]) - bound);

    return std::vector<double>{interlace, cardinality, invariance, lipschitz};
  };
  return def;
}

// ---------------------------------------------------------------------------
// brackets: Lie-Poisson structure and pairing invariance.

SuiteDef brackets_def() {
  SuiteDef def;
  def.name = "brackets";
  def.invariants = {{"poisson-commutativity", 1e-8},
                    {"antisymmetry-jacobi", 1e-10},
                    {"pairing-invariance", 1e-10}};
  def.eval = [](const SuiteConfig& cfg, std::uint64_t tseed, int) {
    const AlgebraKind kind = cfg.kind;
    std::mt19937_64 rng(tseed ^ 0xb4acce7ull);
    const DualElement xi = sample_sreg(kind, tseed);
    const auto indices = ladder_indices(kind);

    double commut = 0;
    std::vector<AlgebraElement> grads;
    for (const auto& idx : indices) grads.push_back(grad_lambda(xi, idx));
    for (size_t a = 0; a < grads.size(); ++a)
      for (size_t b = a + 1; b < grads.size(); ++b)
        commut = std::max(commut,
                          std::abs(lie_poisson_bracket(grads[a], grads[b], xi)));

    const AlgebraElement da = sample_algebra(kind, rng);
    const AlgebraElement db = sample_algebra(kind, rng);
    const AlgebraElement dc = sample_algebra(kind, rng);
    const double anti = std::abs(lie_poisson_bracket(da, db, xi) +
                                 lie_poisson_bracket(db, da, xi));
    const double jacobi =
        std::abs(pair_value(lie_bracket(lie_bracket(da, db), dc), xi) +
                 pair_value(lie_bracket(lie_bracket(db, dc), da), xi) +
                 pair_value(lie_bracket(lie_bracket(dc, da), db), xi));

    const GroupElement g = sample_group(kind, tseed ^ 0x517eull);
    const double inv = std::abs(pair_value(adjoint_act(g, da), coadjoint_act(g, xi)) -
                                pair_value(da, xi));
    return std::vector<double>{commut, std::max(anti, jacobi), inv};
  };
  return def;
}

// ---------------------------------------------------------------------------
// flows: single-component Hamiltonian flows.

SuiteDef flows_def() {
  SuiteDef def;
  def.name = "flows";
  def.invariants = {{"closed-form-period", 1e-9},
                    {"rk4-agreement", 1e-5},
                    {"ladder-conservation", 1e-8},
                    {"lattice-exponential", 1e-9}};
  def.eval = [](const SuiteConfig& cfg, std::uint64_t tseed, int trial) {
    const AlgebraKind kind = cfg.kind;
    const DualElement xi = sample_sreg(kind, tseed);
    const auto indices = ladder_indices(kind);
    const LadderIndex idx = indices[trial % indices.size()];

    const double period =
        frobenius(flow_dual(xi, idx, kTwoPi).m - xi.m);

    FlowConfig rk4{FlowConfig::Method::rk4, 0.01};
    const double rk4_gap = frobenius(flow_dual(xi, idx, 0.5, rk4).m -
                                     flow_dual(xi, idx, 0.5).m);

    double conserve = 0;
    const auto base = gc_pattern(xi).flat();
    for (double t : {0.3, 1.1}) {
      const auto moved = gc_pattern(flow_dual(xi, idx, t)).flat();
      for (size_t a = 0; a < base.size(); ++a)
        conserve = std::max(conserve, std::abs(base[a] - moved[a]));
    }

    double lattice = 0;
    const int n_id = kind.tag == AlgebraKind::Tag::so3 ? 3 : kind.n;
    const Matrix id = Matrix::Identity(n_id, n_id);
    for (const auto& i2 : indices) {
      const AlgebraElement grad = grad_lambda(xi, i2);
      AlgebraElement scaled = grad;
      if (kind.tag == AlgebraKind::Tag::so3)
        scaled = make_algebra_so3(kTwoPi * grad.vec3());
      else
        scaled.m *= kTwoPi;
      lattice = std::max(lattice, frobenius(exp_algebra(scaled).m - id));
    }
    return std::vector<double>{period, rk4_gap, conserve, lattice};
  };
  return def;
}

// ---------------------------------------------------------------------------
// torus: the composed action, kappa and tau.

SuiteDef torus_def() {
  SuiteDef def;
  def.name = "torus";
  def.invariants = {{"periodicity", 1e-8},
                    {"commutativity", 1e-7},
                    {"order-independence", 1e-8},
                    {"kappa-roundtrip", 1e-10},
                    {"tau-homomorphism", 1e-8},
                    {"stabilizer-compatibility", 1e-9}};
  def.eval = [](const SuiteConfig& cfg, std::uint64_t tseed, int trial) {
    const AlgebraKind kind = cfg.kind;
    std::mt19937_64 rng(tseed ^ 0x7042e5ull);
    std::uniform_real_distribution<double> unif(0.05, 0.4);
    const DualElement xi = sample_sreg(kind, tseed);
    const int b = kind.torus_big();
    const int ell = kind.rank();
    const auto indices = ladder_indices(kind);

    TorusElement full = TorusElement::identity(kind);
    full.angles(trial % b) = kTwoPi;
    const double periodic = frobenius(act_torus_dual(xi, full).m - xi.m);

    TorusElement t1 = TorusElement::identity(kind), t2 = TorusElement::identity(kind);
    for (int a = 0; a < b; ++a) {
      t1.angles(a) = unif(rng);
      t2.angles(a) = unif(rng);
    }
    TorusElement sum{kind, t1.angles + t2.angles};
    const double commut =
        frobenius(act_torus_dual(act_torus_dual(xi, t1), t2).m -
                  act_torus_dual(xi, sum).m);

    std::vector<int> order(b);
    for (int a = 0; a < b; ++a) order[a] = a;
    std::shuffle(order.begin(), order.end(), rng);
    DualElement shuffled = xi;
    for (int a : order) shuffled = flow_dual(shuffled, indices[a], t1.angles(a));
    const double order_gap = frobenius(shuffled.m - act_torus_dual(xi, t1).m);

    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd coeff(ell);
    for (int a = 0; a < ell; ++a) coeff(a) = gauss(rng);
    AlgebraElement eta = zero_algebra(kind);
    for (int a = 0; a < ell; ++a) {
      const AlgebraElement grad = grad_lambda(xi, {0, a + 1});
      if (kind.tag == AlgebraKind::Tag::so3)
        eta = make_algebra_so3(eta.vec3() + coeff(a) * grad.vec3());
      else
        eta.m += coeff(a) * grad.m;
    }
    const double kappa_gap = (kappa(xi, eta) - coeff).cwiseAbs().maxCoeff();

    const AlgebraElement eta2 = centralizer_sample(xi, rng);
    const GroupElement g1 = exp_algebra(eta);
    const GroupElement g2 = exp_algebra(eta2);
    const TorusElement ta = tau(xi, g1), tb = tau(xi, g2);
    const TorusElement tc = tau(xi, group_mul(g1, g2));
    double hom = 0;
    for (int a = 0; a < b; ++a) {
      double d = std::abs(reduce_angle(ta.angles(a) + tb.angles(a) - tc.angles(a)));
      hom = std::max(hom, std::min(d, kTwoPi - d));
    }

    const double compat =
        frobenius(act_torus_dual(xi, pad_small(kind, kappa(xi, eta2))).m -
                  coadjoint_act(exp_algebra(eta2), xi).m);

    return std::vector<double>{periodic, commut, order_gap, kappa_gap, hom, compat};
  };
  return def;
}

// ---------------------------------------------------------------------------
// reduce: product spaces, level sets, reduction bookkeeping.

std::vector<ProductSpace> default_spaces(AlgebraKind kind) {
  if (kind.tag == AlgebraKind::Tag::so3) {
    const AlgebraKind so3 = AlgebraKind::so3();
    return {make_product({make_orbit(so3, {1.0}), make_orbit(so3, {2.0})})};
  }
  const AlgebraKind u2 = AlgebraKind::unitary(2);
  return {make_product({make_orbit(u2, {3.0, 1.0}), make_orbit(u2, {1.5, -0.5})})};
}

SuiteDef reduce_def() {
  SuiteDef def;
  def.name = "reduce";
  def.invariants = {{"moment-equivariance-group", 1e-10},
                    {"moment-equivariance-torus", 1e-7},
                    {"collective-identity", 1e-6},
                    {"saturation-roundtrip", 1e-6},
                    {"kernel-codimension", 0.5},
                    {"dimension-bookkeeping", 0.5},
                    {"freeness-agreement", 0.5},
                    {"form-welldefinedness", 1e-7}};
  def.eval = [](const SuiteConfig& cfg, std::uint64_t tseed, int trial) {
    const auto spaces = cfg.spaces.empty() ? default_spaces(cfg.kind) : cfg.spaces;
    const ProductSpace& space = spaces[trial % spaces.size()];
    const AlgebraKind kind = space.kind();
    std::mt19937_64 rng(tseed ^ 0x2ed6ceull);
    std::uniform_real_distribution<double> unif(0.05, 0.3);

    ProductPoint m0 = sample_point(space, tseed);
    for (int attempt = 1; attempt < 64; ++attempt) {
      if (is_strongly_regular(moment(m0)).is_strongly_regular) break;
      m0 = sample_point(space, tseed + 131 * attempt);
    }
    const DualElement target = moment(m0);

    const GroupElement g = sample_group(kind, tseed ^ 0xac7ull);
    const double eq_group = frobenius(moment(act_group(m0, g)).m -
                                      coadjoint_act(g, target).m);

    TorusElement theta = TorusElement::identity(kind);
    for (int a = 0; a < kind.torus_big(); ++a) theta.angles(a) = unif(rng);
    const double eq_torus = frobenius(moment(act_torus_space(m0, theta)).m -
                                      act_torus_dual(target, theta).m);

    const ReductionReport rep = reduction_report(space, target, tseed ^ 0x50feull);
    const double codim =
        std::abs(static_cast<double>(rep.dim_ker_dlambdaM - rep.dim_ker_dmu) -
                 kind.torus_int());
    const double bookkeeping =
        std::abs(static_cast<double>(rep.dim_ker_dmu - kind.rank()) -
                 static_cast<double>(rep.dim_ker_dlambdaM - kind.torus_big()));
    const double freeness =
        std::abs(static_cast<double>(rep.group_stabilizer_dim -
                                     rep.torus_stabilizer_dim));

    return std::vector<double>{eq_group,
                               eq_torus,
                               rep.collective_defect,
                               rep.saturation_residual,
                               codim,
                               bookkeeping,
                               freeness,
                               rep.form_welldef_defect};
  };
  return def;
}

// ---------------------------------------------------------------------------
// so3-demo: the angular-momentum pair.

SuiteDef so3_demo_def() {
  SuiteDef def;
  def.name = "so3-demo";
  def.invariants = {{"classification", 0.5},
                    {"rotation-flow", 1e-9},
                    {"axis-flow-fixes-point", 1e-9}};
  def.eval = [](const SuiteConfig&, std::uint64_t tseed, int) {
    const AlgebraKind so3 = AlgebraKind::so3();
    std::mt19937_64 rng(tseed ^ 0xdeca7ull);
    std::uniform_real_distribution<double> unif(0.1, 6.0);

    double classify = 0;
    if (is_strongly_regular(make_dual_so3(Vector3(0, 0, 1))).is_strongly_regular)
      classify = 1;  // the z-axis has parallel gradients, must be rejected
    if (!is_strongly_regular(make_dual_so3(Vector3(1, 0, 1))).is_strongly_regular)
      classify = 1;

    const DualElement xi = sample_sreg(so3, tseed);
    const double t = unif(rng);
    Eigen::Matrix3d rz;
    rz << std::cos(t), -std::sin(t), 0, std::sin(t), std::cos(t), 0, 0, 0, 1;
    const double rot_gap =
        (flow_dual(xi, {1, 1}, t).vec3() - rz * xi.vec3()).norm();

    const double axis_gap = (flow_dual(xi, {0, 1}, t).vec3() - xi.vec3()).norm();
    return std::vector<double>{classify, rot_gap, axis_gap};
  };
  return def;
}

std::vector<SuiteDef> all_defs() {
  return {gc_check_def(), brackets_def(), flows_def(), torus_def(), reduce_def(),
          so3_demo_def()};
}

void run_def(const SuiteConfig& cfg, const SuiteDef& def, SuiteReport& rep) {
  const int ninv = static_cast<int>(def.invariants.size());
  std::vector<std::vector<double>> per_trial(cfg.trials);
  std::vector<std::string> errors(cfg.trials);

#ifdef GCS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
#endif
  for (int t = 0; t < cfg.trials; ++t) {
    try {
      per_trial[t] = def.eval(cfg, cfg.seed + static_cast<std::uint64_t>(t), t);
    } catch (const std::exception& e) {
      per_trial[t].assign(ninv, std::numeric_limits<double>::infinity());
      errors[t] = e.what();
    }
  }

  for (int i = 0; i < ninv; ++i) {
    InvariantResult res;
    res.name = def.name + "/" + def.invariants[i].first;
    res.tolerance = def.invariants[i].second;
    const auto it = cfg.tolerances.find(def.invariants[i].first);
    if (it != cfg.tolerances.end()) res.tolerance = it->second;
    res.worst = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      res.trial_defects.push_back(per_trial[t][i]);
      res.worst = std::max(res.worst, per_trial[t][i]);
      if (res.error.empty() && !errors[t].empty()) res.error = errors[t];
    }
    res.pass = res.worst <= res.tolerance;
    rep.invariants.push_back(std::move(res));
  }
}

}  // namespace

std::vector<std::string> known_suites() {
  return {"gc-check", "brackets", "flows", "torus", "reduce", "so3-demo", "all"};
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("run_suite: trials must be >= 1");
  const auto names = known_suites();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw ConfigError("run_suite: unknown suite '" + cfg.suite + "'");

  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = cfg.suite;
  rep.config_echo = to_json(cfg);
  for (const auto& def : all_defs()) {
    if (cfg.suite != "all" && cfg.suite != def.name) continue;
    run_def(cfg, def, rep);
  }
  rep.passed = std::all_of(rep.invariants.begin(), rep.invariants.end(),
                           [](const InvariantResult& r) { return r.pass; });
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SuiteConfig config_from_json(const Json& j) {
  SuiteConfig cfg;
  if (j.contains("suite")) cfg.suite = j.at("suite").get<std::string>();
  if (j.contains("kind")) cfg.kind = kind_from_json(j.at("kind"));
  if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("parallel")) cfg.parallel = j.at("parallel").get<bool>();
  if (j.contains("tolerances"))
    for (const auto& [key, val] : j.at("tolerances").items())
      cfg.tolerances[key] = val.get<double>();
  if (j.contains("spaces"))
    for (const auto& s : j.at("spaces")) cfg.spaces.push_back(product_from_json(s));
  if (cfg.trials < 1) throw ConfigError("config field 'trials' must be >= 1");
  const auto names = known_suites();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw ConfigError("config field 'suite': unknown suite '" + cfg.suite + "'");
  return cfg;
}

Json to_json(const SuiteConfig& cfg) {
  Json j;
  j["suite"] = cfg.suite;
  j["kind"] = kind_to_json(cfg.kind);
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["parallel"] = cfg.parallel;
  j["tolerances"] = cfg.tolerances;
  Json spaces = Json::array();
  for (const auto& s : cfg.spaces) spaces.push_back(to_json(s));
  j["spaces"] = spaces;
  return j;
}

Json to_json(const SuiteReport& rep) {
  Json j;
  j["schema_version"] = rep.schema_version;
  j["suite"] = rep.suite;
  j["passed"] = rep.passed;
  j["wall_time_s"] = rep.wall_time_s;
  j["config"] = rep.config_echo;
  Json inv = Json::array();
  for (const auto& r : rep.invariants) {
    Json e;
    e["name"] = r.name;
    e["tolerance"] = r.tolerance;
    e["worst"] = r.worst;
    e["pass"] = r.pass;
    e["trial_defects"] = r.trial_defects;
    if (!r.error.empty()) e["error"] = r.error;
    inv.push_back(e);
  }
  j["invariants"] = inv;
  return j;
}

std::string to_csv(const SuiteReport& rep) {
  std::ostringstream os;
  os << "suite,invariant,worst,tolerance,pass\n";
  for (const auto& r : rep.invariants) {
    const auto slash = r.name.find('/');
    os << r.name.substr(0, slash) << "," << r.name.substr(slash + 1) << ","
       << r.worst << "," << r.tolerance << "," << (r.pass ? "true" : "false")
       << "\n";
  }
  return os.str();
}

std::string explain(const SuiteReport& rep) {
  static const std::map<std::string, std::string> statements = {
      {"interlacing",
       "eigenvalues of nested trailing corners interlace (Cauchy interlacing)"},
      {"ladder-cardinality", "the ladder has n(n+1)/2 components"},
      {"top-row-invariance",
       "the full-matrix spectrum is invariant under the coadjoint action"},
      {"eigenvalue-lipschitz",
       "ladder components are 1-Lipschitz in the operator norm (Weyl bound)"},
      {"poisson-commutativity",
       "the ladder components Poisson-commute pairwise (abelian moment map)"},
      {"antisymmetry-jacobi",
       "the Lie-Poisson bracket is antisymmetric and satisfies Jacobi"},
      {"pairing-invariance",
       "the pairing is invariant under simultaneous adjoint/coadjoint action"},
      {"closed-form-period", "every component flow is 2*pi-periodic"},
      {"rk4-agreement", "the closed-form flow matches direct rk4 integration"},
      {"ladder-conservation", "every flow preserves all ladder components"},
      {"lattice-exponential",
       "the component gradients exponentiate to the identity at 2*pi "
       "(they form a basis of the period lattice)"},
      {"periodicity", "a 2*pi turn of any torus coordinate acts trivially"},
      {"commutativity", "the torus action composes additively in the angles"},
      {"order-independence",
       "composing the component flows in any order gives the same action"},
      {"kappa-roundtrip",
       "the small-gradient basis coordinates on the centralizer invert exactly"},
      {"tau-homomorphism",
       "the stabilizer-to-small-torus map is a group homomorphism"},
      {"stabilizer-compatibility",
       "acting by a stabilizer element equals acting by its small-torus image"},
      {"moment-equivariance-group",
       "the moment map intertwines the group action with the coadjoint action"},
      {"moment-equivariance-torus",
       "the moment map intertwines the lifted torus action with the dual one"},
      {"collective-identity",
       "on a moment fiber, g.m = tau(g).m for stabilizer elements g"},
      {"saturation-roundtrip",
       "int-torus transport between fiber partners exists and is unique"},
      {"kernel-codimension",
       "the ladder-level kernel exceeds the moment-level kernel by exactly the "
       "int-torus rank"},
      {"dimension-bookkeeping",
       "dim ker(d mu) - ell equals dim ker(d lambda_M) - b at level points"},
      {"freeness-agreement",
       "group-side and torus-side stabilizer dimensions coincide, so one "
       "action is (locally) free exactly when the other is"},
      {"form-welldefinedness",
       "the symplectic form pairs moment-level kernel vectors with every "
       "torus generator to zero, so both reduced forms agree"},
      {"classification",
       "the z-axis point has parallel gradients (not strongly regular) while "
       "a tilted point is strongly regular"},
      {"rotation-flow",
       "the flow of the third angular-momentum component is rotation about e3"},
      {"axis-flow-fixes-point",
       "the flow of the total angular momentum fixes the point itself"},
  };

  std::ostringstream os;
  os << "suite '" << rep.suite << "': " << (rep.passed ? "PASS" : "FAIL") << "\n";
  int failures = 0;
  for (const auto& r : rep.invariants) {
    if (r.pass) continue;
    ++failures;
    const auto slash = r.name.find('/');
    const std::string key = r.name.substr(slash + 1);
    os << "  FAIL " << r.name << " (worst " << r.worst << " > tol " << r.tolerance
       << ")";
    const auto it = statements.find(key);
    if (it != statements.end()) os << "\n       violates: " << it->second;
    if (!r.error.empty()) os << "\n       first error: " << r.error;
    os << "\n";
  }
  if (failures == 0) os << "  all " << rep.invariants.size() << " invariants hold\n";
  return os.str();
}

}  // namespace gcs
