#include "berkp/cli.hpp"

#include "berkp/annulus.hpp"
#include "berkp/selftest.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace berkp {

namespace {

struct Context {
  const Invocation& inv;
  PadicConfig cfg;
};

using Handler = std::function<Json(const Context&)>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<BerkPoint> point_set(const Json& in, const char* key, const PadicConfig& cfg) {
  if (in.is_array()) return points_from_json(in, cfg);
  return points_from_json(require(in, key), cfg);
}

BerkPoint pole(const Json& in, const PadicConfig& cfg) {
  if (in.is_object() && in.contains("S0")) return point_from_json(in.at("S0"), cfg);
  return BerkPoint::infinity(cfg.p);
}

Json opt_rational(const std::optional<Rational>& q) { return q ? to_json(*q) : Json("inf"); }

Json kernel_cmd(const Context& cx) {
  const Json& in = cx.inv.input;
  BerkPoint s = point_from_json(require(in, "S"), cx.cfg);
  BerkPoint t = point_from_json(require(in, "S'"), cx.cfg);
  std::string kind = in.contains("kind") ? in.at("kind").get<std::string>() : (in.contains("S0") ? "rel" : "inf");
  if (kind == "inf") return to_json(hsia_inf(s, t));
  if (kind == "gauss") return to_json(hsia_gauss(s, t));
  if (kind == "chordal") return to_json(chordal(s, t));
  if (kind == "rel") return to_json(hsia_rel(s, t, pole(in, cx.cfg)));
  if (kind == "gromov") return Json{{"gromov", to_json(gromov_product(s, t, point_from_json(require(in, "S0"), cx.cfg)))}};
  throw Error(ErrorCode::ParseError, "unknown kernel kind " + kind);
}

Json rho_cmd(const Context& cx) {
  const Json& in = cx.inv.input;
  return Json{{"rho", to_json(rho(point_from_json(require(in, "S"), cx.cfg), point_from_json(require(in, "S'"), cx.cfg)))}};
}

Json hull_cmd(const Context& cx) { return to_json(hull_tree(point_set(cx.inv.input, "points", cx.cfg))); }

Json ce_cmd(const Context& cx) {
  return Json{{"c_E", opt_rational(bounded_moduli_constant(point_set(cx.inv.input, "E", cx.cfg)))}};
}

EquilibriumResult solve_equilibrium(const Context& cx) {
  const Json& in = cx.inv.input;
  std::vector<BerkPoint> e = point_set(in, "E", cx.cfg);
  BerkPoint base = pole(in, cx.cfg);
  if (in.is_object() && in.contains("method") && in.at("method") == "active-set") return equilibrium_active_set(e, base);
  return equilibrium(e, base);
}

Json capacity_cmd(const Context& cx) { return Json{{"log_cap", to_json(solve_equilibrium(cx).log_capacity)}}; }

Json equilibrium_cmd(const Context& cx) {
  EquilibriumResult eq = solve_equilibrium(cx);
  return Json{{"measure", to_json(eq.measure)}, {"log_cap", to_json(eq.log_capacity)},
              {"energy", to_json(eq.energy)}, {"S0", to_json(eq.base)}};
}

Json green_cmd(const Context& cx) {
  EquilibriumResult eq = solve_equilibrium(cx);
  const Json& s = require(cx.inv.input, "S");
  if (!s.is_array()) return Json{{"green", to_json(green(eq, point_from_json(s, cx.cfg)))}};
  Json out = Json::array();
  for (const auto& x : points_from_json(s, cx.cfg)) out.push_back(to_json(green(eq, x)));
  return Json{{"green", out}};
}

Json transdiam_cmd(const Context& cx) {
  const Json& in = cx.inv.input;
  std::vector<BerkPoint> e = point_set(in, "E", cx.cfg);
  int n = require(in, "n").get<int>();
  std::uint64_t budget = in.contains("budget") ? in.at("budget").get<std::uint64_t>() : 2000000;
  return Json{{"n", n}, {"log_d", to_json(transfinite_diameter(e, n, budget))}};
}

Json lcd_cmd(const Context& cx) {
  DensityReport rep = lcd_constant(point_set(cx.inv.input, "E", cx.cfg));
  Json w = Json::array();
  for (const auto& x : rep.witnesses)
    w.push_back(Json{{"S", to_json(x.s)}, {"r_log", to_json(x.r_log)}, {"cap_log", to_json(x.cap_log)}});
  return Json{{"best_c_log", to_json(rep.best_c_log)},
              {"witnesses", w},
              {"c_E", opt_rational(rep.c_e_log)},
              {"margin", rep.margin ? to_json(*rep.margin) : Json(nullptr)}};
}

Json pommerenke_cmd(const Context& cx) {
  const Json& in = cx.inv.input;
  PommerenkeNet net = pommerenke_net(point_set(in, "E", cx.cfg), point_from_json(require(in, "S0"), cx.cfg),
                                     rational_from_json(require(in, "r_log")),
                                     rational_from_json(require(in, "s_log")), require(in, "depth").get<int>());
  Json pts = Json::object();
  for (const auto& [key, pt] : net.points) pts[key] = to_json(pt);
  Json levels = Json::array();
  for (int j = 1; j <= net.depth; ++j) {
    NetCapacityCheck chk = net_capacity(net, j);
    levels.push_back(Json{{"j", j},
                          {"separated", net_separated(net, j)},
                          {"log_cap", to_json(chk.log_capacity)},
                          {"bound", to_json(chk.bound)},
                          {"corrected_bound", to_json(chk.corrected_bound)}});
  }
  return Json{{"c_E", to_json(net.c_e_log)}, {"points", pts}, {"levels", levels}};
}

// E and boundary samples from the cylinders of z^2 + c when "c" is given.
void holder_inputs(const Context& cx, std::vector<BerkPoint>& e, std::vector<BerkPoint>& boundary) {
  const Json& in = cx.inv.input;
  if (in.contains("c")) {
    int depth = require(in, "depth").get<int>();
    CylinderTree tree = quad_backward_cylinders(rational_from_json(in.at("c")), depth, cx.cfg);
    for (const auto& cyl : tree.level(depth)) {
      e.push_back(cyl.top);
      boundary.push_back(BerkPoint::classical(cyl.center));
    }
    e = subsample(e);
    boundary = subsample(boundary);
  } else {
    e = point_set(in, "E", cx.cfg);
  }
  if (in.contains("boundary")) boundary = points_from_json(in.at("boundary"), cx.cfg);
}

Json holder_cmd(const Context& cx) {
  const Json& in = cx.inv.input;
  std::vector<BerkPoint> e, boundary;
  holder_inputs(cx, e, boundary);
  BerkPoint base = pole(in, cx.cfg);
  HolderExponent hx = holder_exponent(e, base, rational_from_json(require(in, "R_log")),
                                      rational_from_json(require(in, "r_log")));
  Json out{{"ell", to_json(hx.ell)},
           {"c0_log", to_json(hx.c0_log)},
           {"choquet_lower", to_json(hx.choquet_lower)},
           {"lifted_pole", hx.lifted_pole}};
  if (boundary.empty()) return out;
  std::vector<LogMag> grid = default_delta_grid(cx.cfg.p);
  if (in.contains("deltas")) {
    grid.clear();
    for (const auto& d : in.at("deltas")) grid.push_back(logmag_from_json(d));
  }
  Rational alpha = in.contains("alpha") ? rational_from_json(in.at("alpha")) : hx.ell;
  HolderCertificate cert = holder_certify(e, base, alpha, boundary, grid);
  std::ostringstream constant;
  constant.precision(17);
  constant << cert.constant;
  out["certificate"] = Json{{"alpha", to_json(cert.alpha)},
                            {"delta0", cert.delta0 ? to_json(*cert.delta0) : Json(nullptr)},
                            {"constant", constant.str()},
                            {"samples", cert.samples.size()},
                            {"excluded", cert.excluded}};
  return out;
}

Json map_image_cmd(const Context& cx) {
  const Json& in = cx.inv.input;
  RationalMap f = map_from_json(require(in, "map"), cx.cfg);
  const Json& s = require(in, "S");
  if (!s.is_array()) return Json{{"image", to_json(image_point(f, point_from_json(s, cx.cfg)))}};
  Json out = Json::array();
  for (const auto& x : points_from_json(s, cx.cfg)) out.push_back(to_json(image_point(f, x)));
  return Json{{"image", out}};
}

Json map_reduce_cmd(const Context& cx) {
  const Json& in = cx.inv.input;
  std::optional<CylinderTree> tree;
  if (in.contains("c")) tree = quad_backward_cylinders(rational_from_json(in.at("c")), 2, cx.cfg);
  RationalMap f = tree ? tree->map : map_from_json(require(in, "map"), cx.cfg);
  Json out{{"res_log", to_json(f.res_log())}, {"degree", f.degree()}};
  if (in.contains("S")) {
    BerkPoint s = point_from_json(in.at("S"), cx.cfg);
    BerkPoint img = image_point(f, s);
    out["S"] = to_json(s);
    out["image"] = to_json(img);
    out["fixed"] = img == s;
    if (img == s) {
      ReducedMap r = reduction_at(f, s);
      out["reduction_degree"] = r.degree;
      out["good"] = r.degree == f.degree();
    } else {
      out["good"] = false;
    }
    return out;
  }
  std::vector<BerkPoint> cands;
  if (in.contains("candidates")) {
    cands = points_from_json(in.at("candidates"), cx.cfg);
  } else {
    std::vector<Scalar> centers;
    if (tree) {
      for (const auto& [code, cyl] : tree->cylinders) centers.push_back(cyl.center);
    } else if (in.contains("centers")) {
      for (const auto& c : in.at("centers")) centers.push_back(scalar_from_json(c, cx.cfg));
    } else {
      centers.emplace_back(cx.cfg.p, 0L);
    }
    cands = default_candidates(centers);
  }
  GoodReductionSweep sw = good_reduction_sweep(f, cands);
  out["result"] = sw.found ? "FOUND" : "NO_CANDIDATE_FOUND";
  out["point"] = sw.found ? to_json(*sw.found) : Json(nullptr);
  out["checked"] = sw.checked;
  out["skipped_non_integral"] = sw.skipped_non_integral;
  return out;
}

CylinderTree cylinders_from(const Context& cx, const char* depth_key) {
  const Json& in = cx.inv.input;
  return quad_backward_cylinders(rational_from_json(require(in, "c")), require(in, depth_key).get<int>(), cx.cfg);
}

Json julia_cmd(const Context& cx) {
  CylinderTree tree = cylinders_from(cx, "depth");
  Json cyl = Json::array();
  for (const auto& [code, c] : tree.cylinders)
    cyl.push_back(Json{{"code", code}, {"center", to_json(c.center)}, {"top", to_json(c.top)}});
  return Json{{"m", tree.m}, {"w0", to_json(tree.w0)}, {"map", to_json(tree.map)}, {"cylinders", cyl}};
}

Json up_cmd(const Context& cx) {
  const Json& in = cx.inv.input;
  auto rows = uniform_perfectness_experiment(rational_from_json(require(in, "c")), require(in, "n_max").get<int>(),
                                             cx.cfg);
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"n", r.n},
                       {"points", r.points},
                       {"c_E", opt_rational(r.c_e_log)},
                       {"best_c_log", r.best_c_log ? to_json(*r.best_c_log) : Json(nullptr)}});
  return Json{{"rows", out}};
}

Json selftest_cmd(const Context& cx) {
  Json rows = Json::array();
  bool all = true;
  for (const auto& c : run_acceptance(cx.inv.seed)) {
    rows.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
  return Json{{"seed", cx.inv.seed}, {"criteria", rows}, {"all_pass", all}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"kernel", kernel_cmd},       {"rho", rho_cmd},
      {"hull", hull_cmd},           {"cE", ce_cmd},
      {"capacity", capacity_cmd},   {"equilibrium", equilibrium_cmd},
      {"green", green_cmd},         {"transdiam", transdiam_cmd},
      {"lcd", lcd_cmd},             {"pommerenke", pommerenke_cmd},
      {"holder", holder_cmd},       {"map-image", map_image_cmd},
      {"map-reduce-check", map_reduce_cmd}, {"julia-cylinders", julia_cmd},
      {"up-experiment", up_cmd},    {"selftest", selftest_cmd},
  };
  return table;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_object() && v.contains("exp")) return cell(v.at("exp"));
  return v.dump();
}

// Rows of a table-shaped document; ParseError when the subcommand has no table form.
CsvTable as_table(const std::string& sub, const Json& doc) {
  CsvTable t;
  const Json* rows = nullptr;
  if (sub == "up-experiment") {
    t.header = {"n", "points", "c_E", "best_c_log"};
    rows = &doc.at("rows");
  } else if (sub == "selftest") {
    t.header = {"id", "name", "pass", "detail"};
    rows = &doc.at("criteria");
  } else if (sub == "julia-cylinders") {
    t.header = {"code", "center", "top"};
    rows = &doc.at("cylinders");
  } else {
    throw Error(ErrorCode::ParseError, "no csv form for " + sub);
  }
  for (const auto& r : *rows) {
    std::vector<std::string> line;
    for (const auto& h : t.header) {
      const Json& v = r.at(h);
      if (h == "top") line.push_back(cell(v.at("center")) + "@" + cell(v.at("logr")));
      else line.push_back(cell(v));
    }
    t.rows.push_back(line);
  }
  return t;
}

std::string render_csv(const CsvTable& t) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream os;
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << quote(r[i]);
    os << "\n";
  }
  return os.str();
}

const std::set<std::string>& log_keys() {
  static const std::set<std::string> keys{
      "exp",   "rho",    "log_cap",   "energy",       "c_E",     "best_c_log",     "margin", "r_log",
      "cap_log", "bound", "corrected_bound", "c0_log", "choquet_lower", "length", "log_d", "res_log", "gromov"};
  return keys;
}

Json to_natural(const Json& v, double lnp, bool log_unit) {
  if (v.is_object()) {
    Json out = Json::object();
    for (auto it = v.begin(); it != v.end(); ++it) out[it.key()] = to_natural(it.value(), lnp, log_keys().count(it.key()) > 0);
    return out;
  }
  if (v.is_array()) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_natural(x, lnp, log_unit));
    return out;
  }
  if (!log_unit || !v.is_string()) return v;
  const auto& s = v.get_ref<const std::string&>();
  if (s == "-inf" || s == "+inf" || s == "inf") return v;
  return parse_rational(s).get_d() * lnp;
}

Json error_doc(const Error& e) { return Json{{"error", std::string(e.name())}, {"context", e.context()}}; }

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

Outcome run(const Invocation& inv) {
  auto it = handlers().find(inv.subcommand);
  if (it == handlers().end())
    return {1, error_doc(Error(ErrorCode::UnknownSubcommand, inv.subcommand)).dump() + "\n"};
  try {
    if (inv.format != "json" && inv.format != "csv") throw Error(ErrorCode::ParseError, "unknown format " + inv.format);
    Context cx{inv, PadicConfig(inv.p, inv.precision)};
    Json doc = it->second(cx);
    if (inv.natural) doc = to_natural(doc, std::log(static_cast<double>(inv.p)), false);
    int status = inv.subcommand == "selftest" && !doc.at("all_pass").get<bool>() ? 2 : 0;
    if (inv.format == "csv") return {status, render_csv(as_table(inv.subcommand, doc))};
    return {status, doc.dump(2) + "\n"};
  } catch (const Error& e) {
    return {e.code() == ErrorCode::ParseError ? 1 : 2, error_doc(e).dump() + "\n"};
  } catch (const Json::exception& e) {
    return {1, error_doc(Error(ErrorCode::ParseError, e.what())).dump() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {1, error_doc(Error(ErrorCode::ParseError, e.what())).dump() + "\n"};
  }
}

}  // namespace berkp
