#pragma once

// JSON wire formats. Matrix-backed elements serialize as
//   {"kind": "unitary", "n": 3, "re": [...], "im": [...]}   (row-major)
// and so3-backed ones as {"kind": "so3", "vec": [x, y, z]}.

#include <json.hpp>

#include "gcs/algebra.hpp"
#include "gcs/ladder.hpp"
#include "gcs/spaces.hpp"
#include "gcs/torus.hpp"

namespace gcs {

using Json = nlohmann::json;

Json to_json(const AlgebraElement& eta);
Json to_json(const DualElement& xi);
Json to_json(const GCPattern& pat);
Json to_json(const StrongRegularityReport& rep);
Json to_json(const RegularityReport& rep);
Json to_json(const TorusElement& theta);
Json to_json(const ReductionReport& rep);

AlgebraElement algebra_from_json(const Json& j);
DualElement dual_from_json(const Json& j);
AlgebraKind kind_from_json(const Json& j);
Json kind_to_json(AlgebraKind kind);

// Product space declaration: {"kind": ..., "factors": [[spectrum], ...]}.
ProductSpace product_from_json(const Json& j);
Json to_json(const ProductSpace& space);

}  // namespace gcs
