#pragma once

#include <nlohmann/json.hpp>

#include "nodalvf/bubble.hpp"
#include "nodalvf/curve.hpp"
#include "nodalvf/diagnostics.hpp"
#include "nodalvf/limits.hpp"
#include "nodalvf/scale_path.hpp"

// JSON formats. Rationals are strings "p/q" (integers also accepted on input),
// chart points are rationals or "inf". Malformed input raises ParseError.
namespace nvf::json {

using nlohmann::json;

json to_json(const Rational& q);
Rational rational_from(const json& j);

json to_json(const ChartPoint& p);
ChartPoint point_from(const json& j);

json to_json(const Place& p);
Place place_from(const json& j);
// "comp:at", e.g. "0:inf" or "2:1/3".
Place place_from_string(const std::string& s);

json to_json(const FieldTriple& f);
FieldTriple field_from(const json& j);

json to_json(const MarkedCurve& c);
MarkedCurve curve_from(const json& j);

// {"params": [...], "terms": [{"exp": [...], "coeff": "p/q"}]}
json to_json(const ScalePath& p);
ScalePath path_from(const json& j);

// {"mode": "affine"|"degeneration", "params": [...], "paths": [{"terms": [...]}, ...]}.
// Paths may also carry their own "params". The mode key is optional when a
// mode is supplied by the caller.
PathFamily family_from(const json& j, std::optional<LimitMode> mode = std::nullopt);

json to_json(const Diagnostics& d);
json to_json(const Isomorphism& iso);
json to_json(const ContractionMap& m);
json to_json(const BubbleResult& r);
json to_json(const SpecializationReport& r);

}  // namespace nvf::json
