#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "gcs/algebra.hpp"

using namespace gcs;

namespace {

AlgebraElement random_algebra(AlgebraKind kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  if (kind.tag == AlgebraKind::Tag::so3)
    return make_algebra_so3(Vector3(g(rng), g(rng), g(rng)));
  Matrix z(kind.n, kind.n);
  for (int r = 0; r < kind.n; ++r)
    for (int c = 0; c < kind.n; ++c) z(r, c) = Complex(g(rng), g(rng));
  return make_algebra(kind, 0.5 * (z - z.adjoint().eval()));
}

// Independent pairing oracle: -i tr(eta xi) by explicit summation.
double pairing_oracle(const AlgebraElement& eta, const DualElement& xi) {
  if (eta.kind.tag == AlgebraKind::Tag::so3) return eta.vec3().dot(xi.vec3());
  Complex tr = 0;
  for (int r = 0; r < eta.kind.n; ++r)
    for (int c = 0; c < eta.kind.n; ++c) tr += eta.m(r, c) * xi.m(c, r);
  return (Complex(0, -1) * tr).real();
}

}  // namespace

TEST_CASE("pairing matches the trace oracle") {
  for (int n : {2, 3, 4}) {
    const AlgebraKind kind = AlgebraKind::unitary(n);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const AlgebraElement eta = random_algebra(kind, 100 + s);
      const DualElement xi = sample_dual(kind, 200 + s);
      const double p = pair_value(eta, xi);
      CHECK(p == doctest::Approx(pairing_oracle(eta, xi)).epsilon(1e-12));
      CHECK(std::abs(p) < 1e3);  // real, finite
    }
  }
  const DualElement xi = make_dual_so3(Vector3(0.3, -1.1, 2.0));
  const AlgebraElement eta = make_algebra_so3(Vector3(1.0, 0.5, -0.25));
  CHECK(pair_value(eta, xi) == doctest::Approx(0.3 - 0.55 - 0.5).epsilon(1e-14));
}

TEST_CASE("lie bracket: antisymmetry, Jacobi, cross product backend") {
  for (auto kind : {AlgebraKind::unitary(3), AlgebraKind::so3()}) {
    const AlgebraElement a = random_algebra(kind, 1);
    const AlgebraElement b = random_algebra(kind, 2);
    const AlgebraElement c = random_algebra(kind, 3);
    CHECK(frobenius(lie_bracket(a, b).m + lie_bracket(b, a).m) < 1e-13);
    const Matrix jac = lie_bracket(lie_bracket(a, b), c).m +
                       lie_bracket(lie_bracket(b, c), a).m +
                       lie_bracket(lie_bracket(c, a), b).m;
    CHECK(frobenius(jac) < 1e-12);
  }
  const AlgebraElement x = make_algebra_so3(Vector3(1, 0, 0));
  const AlgebraElement y = make_algebra_so3(Vector3(0, 1, 0));
  CHECK((lie_bracket(x, y).vec3() - Vector3(0, 0, 1)).norm() < 1e-15);
}

TEST_CASE("lie-Poisson bracket against the direct formula") {
  const AlgebraKind kind = AlgebraKind::unitary(3);
  const AlgebraElement a = random_algebra(kind, 11);
  const AlgebraElement b = random_algebra(kind, 12);
  const DualElement xi = sample_dual(kind, 13);
  CHECK(lie_poisson_bracket(a, b, xi) ==
        doctest::Approx(pairing_oracle(lie_bracket(a, b), xi)).epsilon(1e-12));
  CHECK(lie_poisson_bracket(a, b, xi) ==
        doctest::Approx(-lie_poisson_bracket(b, a, xi)).epsilon(1e-12));
}

TEST_CASE("coadjoint action: conjugation, spectrum and pairing preserved") {
  const AlgebraKind kind = AlgebraKind::unitary(4);
  const DualElement xi = sample_dual(kind, 21);
  const GroupElement g = sample_group(kind, 22);
  const DualElement moved = coadjoint_act(g, xi);

  Eigen::VectorXd w0, w1;
  Matrix v;
  hermitian_eigs_desc(xi.m, w0, v);
  hermitian_eigs_desc(moved.m, w1, v);
  CHECK((w0 - w1).cwiseAbs().maxCoeff() < 1e-11);

  const AlgebraElement eta = random_algebra(kind, 23);
  CHECK(pair_value(adjoint_act(g, eta), moved) ==
        doctest::Approx(pair_value(eta, xi)).epsilon(1e-11));

  // so3: coadjoint action is rotation, preserves the norm.
  const DualElement v3 = make_dual_so3(Vector3(1, 2, 3));
  const GroupElement r = sample_group(AlgebraKind::so3(), 24);
  CHECK(coadjoint_act(r, v3).vec3().norm() == doctest::Approx(v3.vec3().norm()));
}

TEST_CASE("exp matches the series oracle and lands in the group") {
  const AlgebraKind kind = AlgebraKind::unitary(3);
  const AlgebraElement eta = random_algebra(kind, 31);
  const GroupElement g = exp_algebra(eta);
  const Matrix oracle = eta.m.exp();  // scaling-and-squaring, independent path
  CHECK(frobenius(g.m - oracle) < 1e-11);
  CHECK(frobenius(g.m * g.m.adjoint() - Matrix::Identity(3, 3)) < 1e-12);

  // so3: Rodrigues against the rotation oracle.
  const AlgebraElement w = make_algebra_so3(Vector3(0, 0, std::numbers::pi / 2));
  const Eigen::Matrix3d rz = exp_algebra(w).rot3();
  CHECK((rz * Vector3(1, 0, 0) - Vector3(0, 1, 0)).norm() < 1e-13);
}

TEST_CASE("infinitesimal coadjoint action is the derivative of the finite one") {
  const AlgebraKind kind = AlgebraKind::unitary(3);
  const AlgebraElement eta = random_algebra(kind, 41);
  const DualElement xi = sample_dual(kind, 42);
  const double h = 1e-6;
  AlgebraElement scaled = eta;
  scaled.m *= h;
  const Matrix fd = (coadjoint_act(exp_algebra(scaled), xi).m - xi.m) / h;
  CHECK(frobenius(fd - coadjoint_inf(eta, xi).m) < 1e-5);
}

TEST_CASE("regularity and centralizer") {
  const AlgebraKind kind = AlgebraKind::unitary(3);
  const DualElement degenerate = make_dual(kind, [] {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = 1;
    m(1, 1) = 1;
    return m;
  }());
  const RegularityReport rep = regularity(degenerate);
  CHECK_FALSE(rep.is_regular);
  CHECK(rep.centralizer_dim == 5);  // 2^2 + 1^2
  CHECK_THROWS_AS((void)centralizer_basis(degenerate), NotRegular);

  const DualElement xi = sample_dual(kind, 51);
  CHECK(regularity(xi).is_regular);
  const auto cent = centralizer_basis(xi);
  REQUIRE(cent.size() == 3);
  for (const auto& c : cent) {
    CHECK(frobenius(c.m * xi.m - xi.m * c.m) < 1e-12);
    CHECK(frobenius(c.m + c.m.adjoint().eval()) < 1e-12);  // skew-Hermitian
  }
  // Orthonormal in Re tr(a b*).
  for (size_t i = 0; i < cent.size(); ++i)
    for (size_t j = 0; j < cent.size(); ++j) {
      const double ip = (cent[i].m * cent[j].m.adjoint()).trace().real();
      CHECK(ip == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
    }
}

TEST_CASE("sweeping returns the chamber representative of the orbit") {
  const AlgebraKind kind = AlgebraKind::unitary(3);
  const DualElement xi = sample_dual(kind, 61);
  const DualElement swept = sweeping(xi);
  Eigen::VectorXd w;
  Matrix v;
  hermitian_eigs_desc(xi.m, w, v);
  for (int k = 0; k < 3; ++k)
    CHECK(swept.m(k, k).real() == doctest::Approx(w(k)).epsilon(1e-12));
  // Conjugation-invariant.
  const GroupElement g = sample_group(kind, 62);
  CHECK(frobenius(sweeping(coadjoint_act(g, xi)).m - swept.m) < 1e-10);

  CHECK((sweeping(make_dual_so3(Vector3(3, 0, 4))).vec3() - Vector3(0, 0, 5)).norm() <
        1e-13);
}

TEST_CASE("sampling: determinism and fixed spectra") {
  const AlgebraKind kind = AlgebraKind::unitary(3);
  CHECK(frobenius(sample_dual(kind, 7).m - sample_dual(kind, 7).m) == 0.0);
  CHECK(frobenius(sample_dual(kind, 7).m - sample_dual(kind, 8).m) > 1e-3);

  const std::vector<double> spec = {2.5, 0.5, -1.0};
  const DualElement xi = sample_dual(kind, 9, Ensemble::spectrum_fixed(spec));
  Eigen::VectorXd w;
  Matrix v;
  hermitian_eigs_desc(xi.m, w, v);
  for (int k = 0; k < 3; ++k) CHECK(w(k) == doctest::Approx(spec[k]).epsilon(1e-11));

  const GroupElement g = sample_group(kind, 10);
  CHECK(frobenius(g.m * g.m.adjoint() - Matrix::Identity(3, 3)) < 1e-12);
}

TEST_CASE("validation and kind mismatches") {
  const AlgebraKind kind = AlgebraKind::unitary(2);
  Matrix not_skew = Matrix::Identity(2, 2);
  CHECK_THROWS_AS((void)make_algebra(kind, not_skew), KindMismatch);
  Matrix not_herm = Matrix::Zero(2, 2);
  not_herm(0, 1) = Complex(1, 0);
  CHECK_THROWS_AS((void)make_dual(kind, not_herm), KindMismatch);
  CHECK_THROWS_AS((void)make_group(kind, 2.0 * Matrix::Identity(2, 2)), KindMismatch);

  const AlgebraElement a = random_algebra(AlgebraKind::unitary(2), 1);
  const DualElement xi = sample_dual(AlgebraKind::unitary(3), 2);
  CHECK_THROWS_AS((void)pair_value(a, xi), KindMismatch);
}

TEST_CASE("kind bookkeeping: rank, dim, torus sizes") {
  const AlgebraKind u3 = AlgebraKind::unitary(3);
  CHECK(u3.rank() == 3);
  CHECK(u3.dim() == 9);
  CHECK(u3.torus_int() == 3);
  CHECK(u3.torus_big() == 6);
  const AlgebraKind so3 = AlgebraKind::so3();
  CHECK(so3.rank() == 1);
  CHECK(so3.dim() == 3);
  CHECK(so3.torus_int() == 1);
  CHECK(so3.torus_big() == 2);
}
