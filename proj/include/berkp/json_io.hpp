#pragma once

#include "berkp/dynamics.hpp"

#include <json.hpp>

#include <vector>

namespace berkp {

using Json = nlohmann::json;

// Parsers throw Error(ParseError) on malformed documents.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"exp": "a/b"}, with "-inf" for zero and "+inf" for the pole value.
Json to_json(const LogMag& m);
LogMag logmag_from_json(const Json& j);

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j, const PadicConfig& cfg);

Json to_json(const BerkPoint& s);
/// chart "inf" reads the center and radius in the coordinate 1/z.
BerkPoint point_from_json(const Json& j, const PadicConfig& cfg);
Json to_json(const std::vector<BerkPoint>& pts);
std::vector<BerkPoint> points_from_json(const Json& j, const PadicConfig& cfg);

Json to_json(const WeightedMeasure& mu);
WeightedMeasure measure_from_json(const Json& j, const PadicConfig& cfg);

Json to_json(const HullTree& t);

Json to_json(const RationalMap& f);
RationalMap map_from_json(const Json& j, const PadicConfig& cfg);

/// j[key], or ParseError naming the key.
const Json& require(const Json& j, const char* key);

}  // namespace berkp
