#include "berkp/json_io.hpp"

namespace berkp {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

}  // namespace

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("expected a rational string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json to_json(const LogMag& m) {
  if (m.is_bottom()) return Json{{"exp", "-inf"}};
  if (m.is_top()) return Json{{"exp", "+inf"}};
  return Json{{"exp", to_string(m.exponent())}};
}

LogMag logmag_from_json(const Json& j) {
  const Json& e = require(j, "exp");
  if (e.is_string()) {
    const auto& s = e.get_ref<const std::string&>();
    if (s == "-inf") return LogMag::bottom();
    if (s == "+inf" || s == "inf") return LogMag::top();
  }
  return LogMag(rational_from_json(e));
}

Json to_json(const Scalar& x) {
  if (x.is_rational()) return to_string(x.rational());
  const Expansion& e = x.expansion_rep();
  return Json{{"val", e.valuation}, {"digits", x.digits(e.precision)}, {"prec", e.precision}};
}

Scalar scalar_from_json(const Json& j, const PadicConfig& cfg) {
  if (!j.is_object()) return Scalar(cfg.p, rational_from_json(j));
  try {
    return Scalar::expansion(cfg.p, require(j, "val").get<std::int64_t>(),
                             require(j, "digits").get<std::vector<int>>(), require(j, "prec").get<int>());
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json to_json(const BerkPoint& s) {
  if (s.is_infinity()) return Json{{"chart", "inf"}, {"center", "0"}, {"logr", "-inf"}};
  return Json{{"chart", "z"}, {"center", to_json(s.center())},
              {"logr", s.is_disk() ? to_json(s.logr()) : Json("-inf")}};
}

BerkPoint point_from_json(const Json& j, const PadicConfig& cfg) {
  std::string chart = j.is_object() && j.contains("chart") ? j.at("chart").get<std::string>() : "z";
  if (chart != "z" && chart != "inf") bad("unknown chart " + chart);
  Scalar c = scalar_from_json(require(j, "center"), cfg);
  const Json& l = require(j, "logr");
  BerkPoint s = l.is_string() && l.get<std::string>() == "-inf" ? BerkPoint::classical(c)
                                                                  : BerkPoint::disk(c, rational_from_json(l));
  if (chart == "z") return s;
  if (s.is_classical() && c.is_exact_zero()) return BerkPoint::infinity(cfg.p);
  return invert_point(s);
}

Json to_json(const std::vector<BerkPoint>& pts) {
  Json a = Json::array();
  for (const auto& s : pts) a.push_back(to_json(s));
  return a;
}

std::vector<BerkPoint> points_from_json(const Json& j, const PadicConfig& cfg) {
  if (!j.is_array()) bad("expected a point list");
  std::vector<BerkPoint> out;
  for (const auto& x : j) out.push_back(point_from_json(x, cfg));
  return out;
}

Json to_json(const WeightedMeasure& mu) {
  Json w = Json::array();
  for (const auto& q : mu.weights) w.push_back(to_json(q));
  return Json{{"support", to_json(mu.support)}, {"weights", w}};
}

WeightedMeasure measure_from_json(const Json& j, const PadicConfig& cfg) {
  WeightedMeasure mu;
  mu.support = points_from_json(require(j, "support"), cfg);
  const Json& w = require(j, "weights");
  if (!w.is_array()) bad("weights must be a list");
  for (const auto& q : w) mu.weights.push_back(rational_from_json(q));
  return mu;
}

Json to_json(const HullTree& t) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& n : t.nodes) nodes.push_back(Json{{"point", to_json(n.point)}, {"input", n.input}});
  for (const auto& e : t.edges())
    edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"length", e.length ? to_json(*e.length) : Json("inf")}});
  return Json{{"nodes", nodes}, {"edges", edges}, {"root", t.root}, {"input_index", t.input_index}};
}

Json to_json(const RationalMap& f) {
  Json n = Json::array(), d = Json::array();
  for (const auto& q : f.num()) n.push_back(to_json(q));
  for (const auto& q : f.den()) d.push_back(to_json(q));
  return Json{{"num", n}, {"den", d}};
}

RationalMap map_from_json(const Json& j, const PadicConfig& cfg) {
  auto read = [](const Json& a) {
    if (!a.is_array()) bad("map coefficients must be a list");
    Poly f;
    for (const auto& q : a) f.push_back(rational_from_json(q));
    return f;
  };
  return RationalMap(cfg.p, read(require(j, "num")), read(require(j, "den")));
}

}  // namespace berkp
