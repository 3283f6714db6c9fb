#include "gcs/serialization.hpp"

namespace gcs {

namespace {

Json matrix_json(AlgebraKind kind, const Matrix& m) {
  Json j;
  j["kind"] = "unitary";
  j["n"] = kind.n;
  std::vector<double> re, im;
  re.reserve(m.size());
  im.reserve(m.size());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  j["re"] = re;
  j["im"] = im;
  return j;
}

Json vec_json(const Vector3& v) {
  return Json{{"kind", "so3"}, {"vec", {v.x(), v.y(), v.z()}}};
}

Matrix matrix_from_json(const Json& j, int n) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != n * n || static_cast<int>(im.size()) != n * n)
    throw ConfigError("element: re/im must have n*n entries");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = Complex(re.at(r * n + c).get<double>(), im.at(r * n + c).get<double>());
  return m;
}

Vector3 vec_from_json(const Json& j) {
  const auto& v = j.at("vec");
  if (v.size() != 3) throw ConfigError("so3 element: vec must have 3 entries");
  return Vector3(v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>());
}

}  // namespace

Json kind_to_json(AlgebraKind kind) {
  if (kind.tag == AlgebraKind::Tag::so3) return Json{{"kind", "so3"}};
  return Json{{"kind", "unitary"}, {"n", kind.n}};
}

AlgebraKind kind_from_json(const Json& j) {
  const std::string k = j.at("kind").get<std::string>();
  if (k == "so3") return AlgebraKind::so3();
  if (k == "unitary") return AlgebraKind::unitary(j.at("n").get<int>());
  throw ConfigError("unknown algebra kind '" + k + "'");
}

Json to_json(const AlgebraElement& eta) {
  if (eta.kind.tag == AlgebraKind::Tag::so3) return vec_json(eta.vec3());
  return matrix_json(eta.kind, eta.m);
}

Json to_json(const DualElement& xi) {
  if (xi.kind.tag == AlgebraKind::Tag::so3) return vec_json(xi.vec3());
  return matrix_json(xi.kind, xi.m);
}

AlgebraElement algebra_from_json(const Json& j) {
  const AlgebraKind kind = kind_from_json(j);
  if (kind.tag == AlgebraKind::Tag::so3) return make_algebra_so3(vec_from_json(j));
  return make_algebra(kind, matrix_from_json(j, kind.n));
}

DualElement dual_from_json(const Json& j) {
  const AlgebraKind kind = kind_from_json(j);
  if (kind.tag == AlgebraKind::Tag::so3) return make_dual_so3(vec_from_json(j));
  return make_dual(kind, matrix_from_json(j, kind.n));
}

Json to_json(const GCPattern& pat) {
  Json j = kind_to_json(pat.kind);
  j["rows"] = pat.rows;
  return j;
}

Json to_json(const StrongRegularityReport& rep) {
  return Json{{"is_strongly_regular", rep.is_strongly_regular},
              {"min_row_gap", rep.min_row_gap},
              {"min_column_gap", rep.min_column_gap},
              {"jacobian_rank", rep.jacobian_rank},
              {"failed_constraints", rep.failed_constraints}};
}

Json to_json(const RegularityReport& rep) {
  return Json{{"is_regular", rep.is_regular},
              {"min_eigen_gap", rep.min_eigen_gap},
              {"centralizer_dim", rep.centralizer_dim}};
}

Json to_json(const TorusElement& theta) {
  Json j = kind_to_json(theta.kind);
  j["angles"] = std::vector<double>(theta.angles.data(),
                                    theta.angles.data() + theta.angles.size());
  return j;
}

Json to_json(const ReductionReport& rep) {
  return Json{{"dim_ker_dmu", rep.dim_ker_dmu},
              {"dim_ker_dlambdaM", rep.dim_ker_dlambdaM},
              {"group_stabilizer_dim", rep.group_stabilizer_dim},
              {"torus_stabilizer_dim", rep.torus_stabilizer_dim},
              {"collective_defect", rep.collective_defect},
              {"saturation_residual", rep.saturation_residual},
              {"form_welldef_defect", rep.form_welldef_defect}};
}

ProductSpace product_from_json(const Json& j) {
  const AlgebraKind kind = kind_from_json(j);
  std::vector<OrbitSpec> factors;
  for (const auto& f : j.at("factors"))
    factors.push_back(make_orbit(kind, f.get<std::vector<double>>()));
  return make_product(std::move(factors));
}

Json to_json(const ProductSpace& space) {
  Json j = kind_to_json(space.kind());
  Json factors = Json::array();
  for (const auto& f : space.factors) factors.push_back(f.spectrum);
  j["factors"] = factors;
  return j;
}

}  // namespace gcs
