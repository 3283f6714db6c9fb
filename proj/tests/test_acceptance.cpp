// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here and are not configurable.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcs/serialization.hpp"
#include "gcs/spaces.hpp"
#include "gcs/suites.hpp"

using namespace gcs;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::printf("%s criterion %02d %s%s%s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

DualElement sreg_sample(AlgebraKind kind, std::uint64_t seed) {
  for (int k = 0; k < 64; ++k) {
    const DualElement xi = sample_dual(kind, seed + 31 * k);
    if (is_strongly_regular(xi).is_strongly_regular) return xi;
  }
  throw NoConvergence("acceptance: no strongly regular sample");
}

ProductPoint sreg_point(const ProductSpace& space, std::uint64_t seed) {
  for (int k = 0; k < 64; ++k) {
    ProductPoint m = sample_point(space, seed + 131 * k);
    if (is_strongly_regular(moment(m)).is_strongly_regular) return m;
  }
  throw NoConvergence("acceptance: no strongly regular product point");
}

ProductSpace double_orbit(int n, std::uint64_t seed) {
  const AlgebraKind kind = AlgebraKind::unitary(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.4, 1.2);
  auto spectrum = [&] {
    std::vector<double> s(n);
    double v = 2.0;
    for (int k = 0; k < n; ++k) {
      s[k] = v;
      v -= unif(rng);
    }
    return s;
  };
  return make_product({make_orbit(kind, spectrum()), make_orbit(kind, spectrum())});
}

// 1. n(n+1)/2 ladder components for n = 2..5.
void criterion_01() {
  bool pass = true;
  for (int n = 2; n <= 5; ++n) {
    const AlgebraKind kind = AlgebraKind::unitary(n);
    const GCPattern pat = gc_pattern(sample_dual(kind, 10 + n));
    if (static_cast<int>(pat.flat().size()) != n * (n + 1) / 2) pass = false;
    if (static_cast<int>(ladder_indices(kind).size()) != n * (n + 1) / 2) pass = false;
  }
  report(1, "ladder cardinality n(n+1)/2 for n=2..5", pass);
}

// 2. 1000 random Hermitian matrices per n in {2..6}: no interlacing
//    violation beyond 1e-10.
void criterion_02() {
  int violations = 0;
  for (int n = 2; n <= 6; ++n) {
    const AlgebraKind kind = AlgebraKind::unitary(n);
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const GCPattern pat = gc_pattern(sample_dual(kind, 100000 + 10000 * n + s));
      for (size_t j = 0; j + 1 < pat.rows.size(); ++j)
        for (size_t k = 0; k < pat.rows[j + 1].size(); ++k) {
          if (pat.rows[j + 1][k] - pat.rows[j][k] > 1e-10) ++violations;
          if (pat.rows[j][k + 1] - pat.rows[j + 1][k] > 1e-10) ++violations;
        }
    }
  }
  std::ostringstream d;
  d << violations << " violations in 5000 samples";
  report(2, "interlacing at 1e-10, 1000 samples per n=2..6", violations == 0, d.str());
}

// 3. Lattice: exp(2*pi*grad) = I at 100 s-reg points (1e-9); closed-form
//    flow period defect <= 1e-9; rk4 period defect <= 1e-5 at step 0.01.
void criterion_03() {
  const AlgebraKind kind = AlgebraKind::unitary(3);
  double lattice = 0, closed = 0, rk4_defect = 0;
  const Matrix id = Matrix::Identity(3, 3);
  const FlowConfig rk4{FlowConfig::Method::rk4, 0.01};
  for (std::uint64_t s = 0; s < 100; ++s) {
    const DualElement xi = sreg_sample(kind, 200000 + 97 * s);
    for (const auto& idx : ladder_indices(kind)) {
      AlgebraElement grad = grad_lambda(xi, idx);
      grad.m *= kTwoPi;
      lattice = std::max(lattice, frobenius(exp_algebra(grad).m - id));
      closed = std::max(closed, frobenius(flow_dual(xi, idx, kTwoPi).m - xi.m));
      if (s < 2)
        rk4_defect = std::max(
            rk4_defect, frobenius(flow_dual(xi, idx, kTwoPi, rk4).m - xi.m));
    }
  }
  std::ostringstream d;
  d << "lattice " << lattice << ", closed " << closed << ", rk4 " << rk4_defect;
  report(3, "lattice/periodicity (1e-9 closed, 1e-5 rk4)",
         lattice <= 1e-9 && closed <= 1e-9 && rk4_defect <= 1e-5, d.str());
}

// 4. Pairwise Poisson brackets of ladder components vanish: analytically to
//    1e-8 and against a finite-difference oracle to 1e-6; 100 s-reg points
//    each for n = 3, 4.
void criterion_04() {
  double analytic = 0, fd_worst = 0;
  const double h = 1e-5;
  for (int n : {3, 4}) {
    const AlgebraKind kind = AlgebraKind::unitary(n);
    const int dim = kind.dim();
    const auto indices = ladder_indices(kind);
    for (std::uint64_t s = 0; s < 100; ++s) {
      const DualElement xi = sreg_sample(kind, 300000 + 1000 * n + 7 * s);

      std::vector<AlgebraElement> grads;
      for (const auto& idx : indices) grads.push_back(grad_lambda(xi, idx));
      for (size_t a = 0; a < grads.size(); ++a)
        for (size_t b = a + 1; b < grads.size(); ++b)
          analytic = std::max(
              analytic, std::abs(lie_poisson_bracket(grads[a], grads[b], xi)));

      // Finite-difference oracle, fully independent of grad_lambda: the
      // coordinate gradient of each component is measured by central
      // differences and converted to an algebra element via the pairing.
      if (s >= 10) continue;  // oracle at 10 points per n keeps runtime sane
      Eigen::MatrixXd coord_grad(static_cast<int>(indices.size()), dim);
      for (int t = 0; t < dim; ++t) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
        e(t) = 1.0;
        const DualElement dir = dual_from_coords(kind, e);
        const DualElement plus{kind, xi.m + h * dir.m};
        const DualElement minus{kind, xi.m - h * dir.m};
        const auto fp = gc_pattern(plus).flat();
        const auto fm = gc_pattern(minus).flat();
        for (size_t a = 0; a < indices.size(); ++a)
          coord_grad(static_cast<int>(a), t) = (fp[a] - fm[a]) / (2 * h);
      }
      std::vector<AlgebraElement> fd_grads;
      for (size_t a = 0; a < indices.size(); ++a) {
        const DualElement as_dual =
            dual_from_coords(kind, coord_grad.row(static_cast<int>(a)).transpose());
        fd_grads.push_back(make_algebra(kind, Complex(0, 1) * as_dual.m));
      }
      for (size_t a = 0; a < fd_grads.size(); ++a)
        for (size_t b = a + 1; b < fd_grads.size(); ++b)
          fd_worst = std::max(
              fd_worst, std::abs(lie_poisson_bracket(fd_grads[a], fd_grads[b], xi)));
    }
  }
  std::ostringstream d;
  d << "analytic " << analytic << ", finite-difference " << fd_worst;
  report(4, "Poisson commutativity (1e-8 analytic, 1e-6 FD)",
         analytic <= 1e-8 && fd_worst <= 1e-6, d.str());
}

// 5. Gradient correctness by central differences: 20 points x all indices x
//    20 directions, n = 3, h = 1e-5, agreement to 1e-6.
void criterion_05() {
  const AlgebraKind kind = AlgebraKind::unitary(3);
  const double h = 1e-5;
  double worst = 0;
  std::mt19937_64 rng(4242);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DualElement xi = sreg_sample(kind, 400000 + 11 * s);
    for (const auto& idx : ladder_indices(kind)) {
      const AlgebraElement grad = grad_lambda(xi, idx);
      for (int dir = 0; dir < 20; ++dir) {
        Eigen::VectorXd e(kind.dim());
        for (int t = 0; t < e.size(); ++t) e(t) = g(rng);
        e.normalize();
        const DualElement delta = dual_from_coords(kind, e);
        const DualElement plus{kind, xi.m + h * delta.m};
        const DualElement minus{kind, xi.m - h * delta.m};
        const double fd =
            (gc_pattern(plus).at(idx) - gc_pattern(minus).at(idx)) / (2 * h);
        worst = std::max(worst, std::abs(fd - pair_value(grad, delta)));
      }
    }
  }
  std::ostringstream d;
  d << "worst deviation " << worst;
  report(5, "gradient vs central differences (1e-6)", worst <= 1e-6, d.str());
}

// 6. Collective identity g.m = tau(g).m on moment fibers: 50 trials over
//    U(2) and U(3) double-orbit spaces, defect <= 1e-6.
void criterion_06() {
  double worst = 0;
  std::mt19937_64 rng(515151);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = (trial % 2 == 0) ? 2 : 3;
    const ProductSpace space = double_orbit(n, 500 + trial);
    const ProductPoint m = sreg_point(space, 500000 + 13 * trial);
    const auto cent = centralizer_basis(moment(m));
    AlgebraElement eta = zero_algebra(space.kind());
    for (const auto& c : cent) eta.m += g(rng) * c.m;
    worst = std::max(worst, verify_collective_identity(m, eta));
  }
  std::ostringstream d;
  d << "worst defect " << worst;
  report(6, "collective identity over 50 double-orbit trials (1e-6)",
         worst <= 1e-6, d.str());
}

// 7. Saturation: int-torus round trip to 1e-6 with zero ambiguity events,
//    50 trials.
void criterion_07() {
  double worst_residual = 0, worst_angle = 0;
  int ambiguous = 0, failures = 0;
  std::mt19937_64 rng(626262);
  std::uniform_real_distribution<double> unif(0.3, 1.4);
  for (int trial = 0; trial < 50; ++trial) {
    ProductSpace space = [&] {
      if (trial % 3 == 2) {
        const AlgebraKind so3 = AlgebraKind::so3();
        return make_product({make_orbit(so3, {1.0}), make_orbit(so3, {2.0})});
      }
      return double_orbit(2, 600 + trial);
    }();
    const AlgebraKind kind = space.kind();
    const int ell = kind.rank();
    const int b = kind.torus_big();
    try {
      const ProductPoint m = sreg_point(space, 600000 + 17 * trial);
      const DualElement target = moment(m);
      TorusElement theta = TorusElement::identity(kind);
      for (int a = ell; a < b; ++a) theta.angles(a) = unif(rng);
      const ProductPoint moved = act_torus_space(m, theta);
      const TorusElement back = saturate(moved, target);
      worst_residual = std::max(
          worst_residual,
          frobenius(moment(act_torus_space(moved, back)).m - target.m));
      for (int a = ell; a < b; ++a) {
        const double wrap = reduce_angle(theta.angles(a) + back.angles(a));
        worst_angle = std::max(worst_angle, std::min(wrap, kTwoPi - wrap));
      }
    } catch (const AmbiguousSaturation&) {
      ++ambiguous;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  std::ostringstream d;
  d << "residual " << worst_residual << ", angle gap " << worst_angle << ", "
    << ambiguous << " ambiguous, " << failures << " errors";
  report(7, "saturation round trip over 50 trials (1e-6, zero ambiguity)",
         worst_residual <= 1e-6 && worst_angle <= 1e-5 && ambiguous == 0 &&
             failures == 0,
         d.str());
}

// Shared reduction reports for criteria 8-10.
struct NamedReport {
  std::string name;
  AlgebraKind kind;
  ReductionReport rep;
};

std::vector<NamedReport> reduction_fixture() {
  std::vector<NamedReport> out;
  auto add = [&](const std::string& name, const ProductSpace& space,
                 std::uint64_t seed) {
    const DualElement target = moment(sreg_point(space, seed));
    out.push_back({name, space.kind(), reduction_report(space, target, seed ^ 0xfeull)});
  };
  add("u2-double-a", double_orbit(2, 700), 700000);
  add("u2-double-b", double_orbit(2, 701), 710000);
  add("u3-double", double_orbit(3, 702), 720000);
  const AlgebraKind so3 = AlgebraKind::so3();
  add("so3-double",
      make_product({make_orbit(so3, {1.0}), make_orbit(so3, {2.5})}), 730000);
  return out;
}

// 8. dim ker d(mu) - ell == dim ker d(lambda_M) - b at every solved level
//    point; orbit_integrability_rank == u at s-reg samples.
void criterion_08(const std::vector<NamedReport>& reports) {
  bool pass = true;
  std::ostringstream d;
  for (const auto& r : reports) {
    const int lhs = r.rep.dim_ker_dmu - r.kind.rank();
    const int rhs = r.rep.dim_ker_dlambdaM - r.kind.torus_big();
    if (lhs != rhs) {
      pass = false;
      d << r.name << ": " << lhs << " != " << rhs << "; ";
    }
  }
  for (int n : {2, 3, 4}) {
    const AlgebraKind kind = AlgebraKind::unitary(n);
    for (std::uint64_t s = 0; s < 20; ++s)
      if (orbit_integrability_rank(sreg_sample(kind, 800000 + 100 * n + s)) !=
          kind.torus_int())
        pass = false;
  }
  for (std::uint64_t s = 0; s < 20; ++s)
    if (orbit_integrability_rank(sreg_sample(AlgebraKind::so3(), 850000 + s)) != 1)
      pass = false;
  report(8, "dimension bookkeeping and orbit integrability rank", pass, d.str());
}

// 9. Freeness equivalence: the two stabilizer dimensions agree on every
//    report and vanish together; on the single-orbit degenerate example both
//    equal the rank.
void criterion_09(const std::vector<NamedReport>& reports) {
  bool pass = true;
  std::ostringstream d;
  for (const auto& r : reports) {
    if (r.rep.group_stabilizer_dim != r.rep.torus_stabilizer_dim) pass = false;
    if ((r.rep.group_stabilizer_dim == 0) != (r.rep.torus_stabilizer_dim == 0))
      pass = false;
    d << r.name << " " << r.rep.group_stabilizer_dim << "/"
      << r.rep.torus_stabilizer_dim << "; ";
  }
  // Genuinely free case: SO(3) has trivial center.
  const bool saw_free = std::any_of(
      reports.begin(), reports.end(), [](const NamedReport& r) {
        return r.rep.group_stabilizer_dim == 0 && r.rep.torus_stabilizer_dim == 0;
      });
  if (!saw_free) pass = false;

  const AlgebraKind u2 = AlgebraKind::unitary(2);
  const ProductSpace single = make_product({make_orbit(u2, {2.0, 0.0})});
  const DualElement target = moment(sreg_point(single, 900000));
  const ReductionReport rep = reduction_report(single, target, 900001);
  if (rep.group_stabilizer_dim != u2.rank() ||
      rep.torus_stabilizer_dim != u2.rank())
    pass = false;
  d << "single-orbit " << rep.group_stabilizer_dim << "/" << rep.torus_stabilizer_dim;
  report(9, "freeness equivalence of the two stabilizers", pass, d.str());
}

// 10. form_welldef_defect <= 1e-7 on all reduction reports.
void criterion_10(const std::vector<NamedReport>& reports) {
  double worst = 0;
  for (const auto& r : reports) worst = std::max(worst, r.rep.form_welldef_defect);
  std::ostringstream d;
  d << "worst defect " << worst;
  report(10, "form well-definedness on reduction reports (1e-7)", worst <= 1e-7,
         d.str());
}

// 11. so3 example: (0,0,1) not strongly regular, (1,0,1) strongly regular;
//     the flow of the third component is rotation about e3 to 1e-9.
void criterion_11() {
  bool pass = true;
  if (is_strongly_regular(make_dual_so3(Vector3(0, 0, 1))).is_strongly_regular)
    pass = false;
  if (!is_strongly_regular(make_dual_so3(Vector3(1, 0, 1))).is_strongly_regular)
    pass = false;

  double worst = 0;
  std::mt19937_64 rng(111111);
  std::uniform_real_distribution<double> unif(0.1, 6.0);
  for (int trial = 0; trial < 25; ++trial) {
    const DualElement xi = sreg_sample(AlgebraKind::so3(), 950000 + trial);
    const double t = unif(rng);
    Eigen::Matrix3d rz;
    rz << std::cos(t), -std::sin(t), 0, std::sin(t), std::cos(t), 0, 0, 0, 1;
    worst = std::max(
        worst, (flow_dual(xi, {1, 1}, t).vec3() - rz * xi.vec3()).norm());
  }
  std::ostringstream d;
  d << "rotation defect " << worst;
  report(11, "so3 example: classification and rotation flow (1e-9)",
         pass && worst <= 1e-9, d.str());
}

// 12. Determinism: two runs of `verify run --suite all` with the same seed
//     produce identical reports modulo timing.
void criterion_12() {
#ifndef VERIFY_BIN
  report(12, "determinism of verify run --suite all", false, "VERIFY_BIN not set");
#else
  const std::string out1 = "acceptance_run1.json";
  const std::string out2 = "acceptance_run2.json";
  const std::string base = std::string("\"") + VERIFY_BIN +
                           "\" run --suite all --trials 3 --seed 11 --out ";
  const int rc1 = std::system((base + out1 + " > /dev/null 2>&1").c_str());
  const int rc2 = std::system((base + out2 + " > /dev/null 2>&1").c_str());

  bool pass = rc1 == 0 && rc2 == 0;
  std::string detail;
  if (pass) {
    std::ifstream f1(out1), f2(out2);
    Json j1 = Json::parse(f1), j2 = Json::parse(f2);
    j1.erase("wall_time_s");
    j2.erase("wall_time_s");
    pass = (j1 == j2);
    detail = pass ? "reports identical" : "reports differ";
  } else {
    detail = "verify exited nonzero";
  }
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  std::remove("acceptance_run1.csv");
  std::remove("acceptance_run2.csv");
  report(12, "determinism of verify run --suite all", pass, detail);
#endif
}

}  // namespace

int main() {
  try {
    criterion_01();
    criterion_02();
    criterion_03();
    criterion_04();
    criterion_05();
    criterion_06();
    criterion_07();
    const auto reports = reduction_fixture();
    criterion_08(reports);
    criterion_09(reports);
    criterion_10(reports);
    criterion_11();
    criterion_12();
  } catch (const std::exception& e) {
    std::cerr << "acceptance aborted: " << e.what() << "\n";
    return 99;
  }
  if (g_failures == 0)
    std::printf("all 12 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
