#pragma once

#include <json.hpp>

#include "kd/curve.hpp"
#include "kd/isogeny.hpp"
#include "kd/mw.hpp"
#include "kd/poly.hpp"

namespace kd {

using Json = nlohmann::json;

// Rationals travel as strings "p/q" (or "p"); parsers also accept plain JSON
// integers for convenience.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Coefficient arrays, constant term first; integer entries are emitted as
// numbers when they fit in int64, as strings otherwise.
Json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const Json& j);

Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

Json point_to_json(const PointQ& P); // {"x": .., "y": ..} or "inf"
PointQ point_from_json(const Json& j);

Json curve_to_json(const CurveQ& C);
CurveQ curve_from_json(const Json& j);

Json isogeny_to_json(const IsogenyMap& iso);
IsogenyMap isogeny_from_json(const Json& j);

Json mw_basis_to_json(const MWBasis& basis);
MWBasis mw_basis_from_json(const Json& j);

Json classification_to_json(const Classification& cls);

} // namespace kd
