#include "berkp/density.hpp"

#include "berkp/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace berkp {

namespace {

std::vector<BerkPoint> distinct_disks(const std::vector<BerkPoint>& pts) {
  std::vector<BerkPoint> out;
  for (const auto& x : pts) {
    if (!x.is_disk()) throw Error(ErrorCode::TypeIPresent, "expected type II points, got " + x.debug_string());
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

Rational log_hsia(const BerkPoint& a, const BerkPoint& b) { return hsia_inf(a, b).exponent(); }

}  // namespace

DensityReport lcd_constant(const std::vector<BerkPoint>& e_in) {
  std::vector<BerkPoint> e = distinct_disks(e_in);
  if (e.size() < 2) throw Error(ErrorCode::TooFew, "lower capacity density needs two distinct points");
  EquilibriumTree t = equilibrium_tree(e, BerkPoint::infinity(e.front().prime()));
  DensityReport rep;
  bool have = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    int anc = t.hull.input_index[i];
    std::optional<LcdWitness> worst;
    while (t.parent[anc] != t.root) {
      int next = t.parent[anc];
      const Rational& r_log = t.hull.nodes[next].point.logr();
      Rational cand = t.cap[anc] - r_log;
      if (!worst || cand < worst->cap_log - worst->r_log) worst = LcdWitness{e[i], r_log, t.cap[anc]};
      anc = next;
    }
    if (!worst) continue;
    Rational c = worst->cap_log - worst->r_log;
    if (!have || c < rep.best_c_log) rep.best_c_log = c;
    have = true;
    rep.witnesses.push_back(*worst);
  }
  rep.c_e_log = bounded_moduli_constant(e);
  if (rep.c_e_log) rep.margin = rep.best_c_log + 2 * *rep.c_e_log;
  return rep;
}

std::vector<BerkPoint> PommerenkeNet::level(int j) const {
  std::vector<BerkPoint> out;
  for (const auto& [key, pt] : points) {
    if (static_cast<int>(key.size()) != j) continue;
    if (std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(pt);
  }
  return out;
}

BerkPoint net_selection(const std::vector<BerkPoint>& e, const Rational& c_e_log, const BerkPoint& s, int j,
                        const Rational& r_log, const Rational& s_log) {
  Rational hi = j * s_log + r_log;
  Rational lo = hi - c_e_log;
  if (s.logr() >= lo) return s;
  const BerkPoint* best = nullptr;
  Rational best_d;
  for (const auto& x : e) {
    Rational d = log_hsia(x, s);
    if (d < lo || d > hi) continue;
    bool better = !best || x.logr() > best->logr() ||
                  (x.logr() == best->logr() &&
                   (d < best_d || (d == best_d && x.center().rational() < best->center().rational())));
    if (better) {
      best = &x;
      best_d = d;
    }
  }
  if (!best) throw Error(ErrorCode::ShellEmpty, "no point of E in the shell around " + s.debug_string());
  return *best;
}

PommerenkeNet pommerenke_net(const std::vector<BerkPoint>& e_in, const BerkPoint& base, const Rational& r_log,
                             const Rational& s_log, int depth) {
  std::vector<BerkPoint> e = distinct_disks(e_in);
  if (std::find(e.begin(), e.end(), base) == e.end()) throw Error(ErrorCode::InvalidArgument, "S0 must lie in E");
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be positive");
  Rational c_e = *bounded_moduli_constant(e);
  if (s_log >= -c_e) throw Error(ErrorCode::BadScale, "need s_log < -c_E = " + to_string(Rational(-c_e)));
  if (r_log <= base.logr() || r_log >= wedge_all(e).logr())
    throw Error(ErrorCode::BadScale, "r must lie strictly between diam S0 and diam_inf E");
  PommerenkeNet net{base, r_log, s_log, c_e, depth, {}};
  net.points.emplace("0", base);
  net.points.emplace("1", net_selection(e, c_e, base, 0, r_log, s_log));
  std::vector<std::string> frontier{"0", "1"};
  for (int len = 1; len < depth; ++len) {
    std::vector<std::string> next;
    for (const auto& key : frontier) {
      const BerkPoint& a = net.points.at(key);
      net.points.emplace(key + "0", a);
      net.points.emplace(key + "1", net_selection(e, c_e, a, len, r_log, s_log));
      next.push_back(key + "0");
      next.push_back(key + "1");
    }
    frontier = std::move(next);
  }
  return net;
}

int common_prefix(const std::string& a, const std::string& b) {
  int m = 0;
  while (m < static_cast<int>(std::min(a.size(), b.size())) && a[m] == b[m]) ++m;
  return m;
}

bool net_separated(const PommerenkeNet& net, int j) {
  std::vector<std::pair<std::string, BerkPoint>> lvl;
  for (const auto& [key, pt] : net.points)
    if (static_cast<int>(key.size()) == j) lvl.emplace_back(key, pt);
  for (std::size_t a = 0; a < lvl.size(); ++a) {
    for (std::size_t b = a + 1; b < lvl.size(); ++b) {
      int m = common_prefix(lvl[a].first, lvl[b].first);
      if (!(log_hsia(lvl[a].second, lvl[b].second) > (m + 1) * net.s_log + net.r_log)) return false;
    }
  }
  return true;
}

Rational net_exponent_sum(int j) {
  Rational total = 0;
  for (int m = 0; m < j; ++m) total += Rational(m + 1) * rpow(2, -(m + 1));
  return total;
}

NetCapacityCheck net_capacity(const PommerenkeNet& net, int j) {
  std::vector<BerkPoint> pts = net.level(j);
  EquilibriumResult eq = equilibrium(pts, BerkPoint::infinity(net.base.prime()));
  Rational bound = net.s_log * net_exponent_sum(j) + net.r_log;
  Rational mean = 0;
  long count = 0;
  for (const auto& [key, pt] : net.points) {
    if (static_cast<int>(key.size()) != j) continue;
    mean += pt.logr();
    ++count;
  }
  mean /= count;
  Rational corrected = bound - (net.r_log - mean) / count;
  return NetCapacityCheck{eq.log_capacity, bound, corrected};
}

HolderExponent holder_exponent(const std::vector<BerkPoint>& e, const BerkPoint& base, const Rational& big_r_log,
                               const Rational& small_r_log) {
  if (!(big_r_log > small_r_log && small_r_log > 0))
    throw Error(ErrorCode::InvalidArgument, "need R_log > r_log > 0");
  DensityReport rep;
  try {
    rep = lcd_constant(e);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::TooFew || err.code() == ErrorCode::TypeIPresent)
      throw Error(ErrorCode::NoDensity, std::string("no density report: ") + err.what());
    throw;
  }
  std::int64_t p = e.front().prime();
  BerkPoint inf = BerkPoint::infinity(p);
  std::optional<Rational> min_chordal;
  for (const auto& x : e) {
    Rational v = hsia_gauss(x, inf).exponent();
    if (!min_chordal || v < *min_chordal) min_chordal = v;
  }
  HolderExponent out;
  out.c0_log = rep.best_c_log + 2 * *min_chordal;
  Rational term = 0;
  if (base.is_infinity()) {
    out.lifted_pole = true;
  } else if (base.is_disk()) {
    term = 2 * (wedge(BerkPoint::gauss(p), base).logr() - base.logr());
  } else {
    throw Error(ErrorCode::ClassicalPoint, "the pole must lie in H^1 or be infinity");
  }
  Rational den = term + big_r_log - out.c0_log;
  if (den <= 0) throw Error(ErrorCode::NoDensity, "nonpositive exponent denominator");
  out.ell = 1 / den;
  out.choquet_lower = out.ell * (big_r_log - small_r_log);
  return out;
}

std::vector<LogMag> default_delta_grid(std::int64_t /*p*/) {
  std::vector<LogMag> grid;
  for (long k = 1; k <= 8; ++k) grid.emplace_back(-k);
  return grid;
}

HolderCertificate holder_certify(const std::vector<BerkPoint>& e, const BerkPoint& base, const Rational& alpha,
                                 const std::vector<BerkPoint>& boundary, const std::vector<LogMag>& delta_grid) {
  EquilibriumTree t = equilibrium_tree(e, base);
  const Rational& v = t.cap[t.root];
  WeightedMeasure nu;
  for (std::size_t i = 0; i < t.hull.nodes.size(); ++i) {
    if (t.in_e[i] && t.mass[i] > 0) {
      nu.support.push_back(t.hull.nodes[i].point);
      nu.weights.push_back(t.mass[i]);
    }
  }
  HolderCertificate cert;
  cert.alpha = alpha;
  std::map<Rational, double> worst_by_delta;
  for (const auto& a : boundary) {
    if (a.is_disk()) throw Error(ErrorCode::InvalidArgument, "boundary samples must be type I");
    for (const auto& delta : delta_grid) {
      BerkBall ball = chordal_ball(a, delta);
      if (ball.contains(base)) {
        ++cert.excluded;
        continue;
      }
      LogValue top = potential_value(nu, base, chordal_ball_boundary(a, delta));
      Rational g = top.exponent() - v;
      for (std::size_t i = 0; i < t.hull.nodes.size(); ++i) {
        if (static_cast<int>(i) == t.root && !t.h[i].is_finite()) continue;
        if (t.pot[i] - v > g && ball.contains(t.hull.nodes[i].point)) g = t.pot[i] - v;
      }
      double ratio = g.get_d() * std::exp(-alpha.get_d() * delta.exponent().get_d());
      cert.constant = std::max(cert.constant, ratio);
      auto [it, fresh] = worst_by_delta.emplace(delta.exponent(), ratio);
      if (!fresh) it->second = std::max(it->second, ratio);
      cert.samples.push_back(HolderSample{a, delta, g});
    }
  }
  if (!worst_by_delta.empty()) {
    // Walk down from the largest delta; delta0 starts the monotone tail toward 0.
    std::vector<std::pair<Rational, double>> seq(worst_by_delta.rbegin(), worst_by_delta.rend());
    std::size_t start = seq.size() - 1;
    auto monotone_from = [&](std::size_t k) {
      bool up = true, down = true;
      for (std::size_t i = k; i + 1 < seq.size(); ++i) {
        if (seq[i + 1].second > seq[i].second) down = false;
        if (seq[i + 1].second < seq[i].second) up = false;
      }
      return up || down;
    };
    while (start > 0 && monotone_from(start - 1)) --start;
    cert.delta0 = LogMag(seq[start].first);
  }
  return cert;
}

}  // namespace berkp
