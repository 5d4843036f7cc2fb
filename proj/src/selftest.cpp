#include "berkp/selftest.hpp"

#include "berkp/annulus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

namespace berkp {

namespace gen {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational rational(Rng& rng, std::int64_t p, long num_max, int max_den_power) {
  return Rational(uniform(rng, -num_max, num_max)) / rpow(p, uniform(rng, 0, max_den_power));
}

BerkPoint disk(Rng& rng, std::int64_t p, int den) {
  Rational a = rational(rng, p, static_cast<long>(p * p), 2);
  Rational q = frac(uniform(rng, -4L * den, 3L * den), den);
  return BerkPoint::disk(Scalar(p, a), q);
}

std::vector<BerkPoint> disk_set(Rng& rng, std::int64_t p, std::size_t n, int den) {
  std::vector<BerkPoint> out;
  while (out.size() < n) {
    BerkPoint s = disk(rng, p, den);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

BerkPoint classical(Rng& rng, std::int64_t p) {
  return BerkPoint::classical(Scalar(p, rational(rng, p, static_cast<long>(p * p * p), 2)));
}

RationalMap integral_mobius(Rng& rng, std::int64_t p) {
  for (;;) {
    long a = uniform(rng, -p, p), b = uniform(rng, -p, p), c = uniform(rng, -p, p), d = uniform(rng, -p, p);
    long det = a * d - b * c;
    if (det % p == 0) continue;
    return RationalMap(p, Poly{Rational(b), Rational(a)}, Poly{Rational(d), Rational(c)});
  }
}

}  // namespace gen

namespace {

using gen::Rng;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "FAILED " << what;
    }
  }
};

std::int64_t pick_prime(Rng& rng) {
  static const std::int64_t primes[] = {3, 5, 7};
  return primes[gen::uniform(rng, 0, 2)];
}

// A pole in H^1 not below or equal to any point of E, or infinity.
BerkPoint random_pole(Rng& rng, std::int64_t p, const std::vector<BerkPoint>& e) {
  if (gen::uniform(rng, 0, 2) == 0) return BerkPoint::infinity(p);
  for (int tries = 0; tries < 64; ++tries) {
    BerkPoint s = gen::disk(rng, p);
    if (std::none_of(e.begin(), e.end(), [&](const BerkPoint& x) { return precedes(s, x); })) return s;
  }
  BerkPoint top = wedge_all(e);
  return raise_to(top, top.logr() + 1);
}

void capacity_of_balls(Check& c) {
  int count = 0;
  for (std::int64_t p : {3, 5, 7}) {
    for (int k = -6; k <= 6; ++k) {
      Rational r = frac(k, 2);
      EquilibriumResult eq = equilibrium({BerkPoint::disk(Scalar(p, 0L), r)}, BerkPoint::infinity(p));
      c.require(eq.log_capacity == r, "log Cap of zeta(0, p^" + to_string(r) + ")");
      ++count;
    }
  }
  c.detail << count << " balls, log Cap = log r exactly";
}

void transfinite_convergence(Check& c) {
  std::int64_t p = 5;
  std::vector<BerkPoint> e{BerkPoint::disk(Scalar(p, 0L), Rational(-1)),
                           BerkPoint::disk(Scalar(p, 1L), Rational(-1))};
  Rational v = equilibrium(e, BerkPoint::infinity(p)).log_capacity;
  c.require(v == frac(-1, 2), "equilibrium value -1/2");
  std::optional<LogMag> prev;
  for (int n = 2; n <= 12; n += 2) {
    LogMag d = transfinite_diameter(e, n);
    Rational want = -frac(n / 2 - 1, n - 1);
    c.require(d == LogMag(want), "d_" + std::to_string(n) + " = " + to_string(want));
    if (prev) c.require(d <= *prev, "monotone at n = " + std::to_string(n));
    // d_n - V = 1 / (2 (n - 1)) tends to 0, so V is the infimum.
    c.require(d.is_finite() && d.exponent() - v == frac(1, 2 * (n - 1)), "gap at n = " + std::to_string(n));
    prev = d;
  }
  c.detail << "d_2..d_12 = -(n/2-1)/(n-1), decreasing to -1/2";
}

void frostman_suite(Check& c, Rng& rng) {
  int positive = 0;
  for (int inst = 0; inst < 100 && c.ok; ++inst) {
    std::int64_t p = pick_prime(rng);
    std::vector<BerkPoint> e = gen::disk_set(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 6)));
    BerkPoint base = random_pole(rng, p, e);
    EquilibriumResult eq = equilibrium(e, base);
    EquilibriumResult alt = equilibrium_active_set(e, base);
    c.require(alt.log_capacity == eq.log_capacity, "tree and active-set capacities agree");
    LogMag v(eq.log_capacity);
    for (std::size_t i = 0; i < eq.measure.support.size(); ++i) {
      LogMag pot = potential_value(eq.measure, base, eq.measure.support[i]);
      if (eq.measure.weights[i] > 0) {
        c.require(pot == v, "equal potential on the support");
        ++positive;
      } else {
        c.require(pot >= v, "Frostman inequality on E");
      }
    }
    std::vector<BerkPoint> samples;
    for (const auto& n : equilibrium_tree(e, base).hull.nodes) samples.push_back(n.point);
    for (int k = 0; k < 8; ++k) samples.push_back(gen::disk(rng, p));
    for (int k = 0; k < 4; ++k) samples.push_back(gen::classical(rng, p));
    if (base.is_disk()) {
      LogMag top = LogMag(-hsia_gauss(base, base).exponent());
      c.require(potential_value(eq.measure, base, base) == top, "maximum attained at the pole");
      for (const auto& s : samples) c.require(potential_value(eq.measure, base, s) <= top, "domination");
    } else {
      for (const auto& s : samples)
        if (!(s == base)) c.require(potential_value(eq.measure, base, s).is_finite(), "finite potential");
    }
  }
  c.detail << "100 supports, " << positive << " positive-weight points at potential V";
}

void lcd_theorem(Check& c, Rng& rng) {
  Rational worst_margin;
  bool first = true;
  for (int inst = 0; inst < 50 && c.ok; ++inst) {
    std::int64_t p = pick_prime(rng);
    std::vector<BerkPoint> e = gen::disk_set(rng, p, static_cast<std::size_t>(gen::uniform(rng, 2, 8)));
    DensityReport rep = lcd_constant(e);
    Rational ce = *rep.c_e_log;
    c.require(rep.best_c_log >= -2 * ce, "forward direction best_c >= -2 c_E");
    c.require(ce <= -rep.best_c_log, "backward direction c_E <= -best_c");
    if (first || *rep.margin < worst_margin) worst_margin = *rep.margin;
    first = false;
  }
  c.detail << "50 sets, smallest margin " << to_string(worst_margin);
}

void pommerenke(Check& c, Rng& rng) {
  int configs = 0, pairs = 0, levels = 0, misses = 0, corrected_misses = 0;
  while (configs < 20) {
    std::int64_t p = pick_prime(rng);
    std::vector<BerkPoint> e = gen::disk_set(rng, p, static_cast<std::size_t>(gen::uniform(rng, 3, 8)));
    BerkPoint base = e[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(e.size()) - 1))];
    Rational top = wedge_all(e).logr();
    if (!(base.logr() < top)) continue;
    Rational r_log = base.logr() + (top - base.logr()) * frac(gen::uniform(rng, 1, 3), 4);
    Rational c_e = *bounded_moduli_constant(e);
    Rational s_log = -c_e - frac(gen::uniform(rng, 1, 4), 2);
    PommerenkeNet net = pommerenke_net(e, base, r_log, s_log, 6);
    for (int j = 1; j <= 6; ++j) {
      c.require(net_separated(net, j), "separation at depth " + std::to_string(j));
      pairs += (1 << j) * ((1 << j) - 1) / 2;
      NetCapacityCheck chk = net_capacity(net, j);
      ++levels;
      if (chk.log_capacity < chk.bound) ++misses;
      if (chk.log_capacity < chk.corrected_bound) ++corrected_misses;
    }
    ++configs;
  }
  c.require(misses == 0, "capacity bound s_log*sum + r_log");
  std::string head = c.ok ? "" : c.detail.str() + "; ";
  c.detail.str("");
  c.detail << head << "20 nets, " << pairs << " separated pairs; bound s_log*sum+r_log missed at " << misses << "/"
           << levels << " depths; with the diagonal energy term missed at " << corrected_misses << "/" << levels;
}

// log[S,S']_{S0} compared under the integral Moebius map m.
bool invariant_under(const RationalMap& m, const BerkPoint& s, const BerkPoint& t, const BerkPoint& base) {
  return hsia_rel(image_point(m, s), image_point(m, t), image_point(m, base)) == hsia_rel(s, t, base);
}

BerkPoint any_point(Rng& rng, std::int64_t p) {
  long k = gen::uniform(rng, 0, 5);
  if (k == 0) return gen::classical(rng, p);
  if (k == 1) return BerkPoint::infinity(p);
  return gen::disk(rng, p);
}

void kernel_identities(Check& c, Rng& rng) {
  for (int i = 0; i < 200 && c.ok; ++i) {
    std::int64_t p = pick_prime(rng);
    BerkPoint s = gen::disk(rng, p), t = gen::disk(rng, p), base = gen::disk(rng, p);
    LogMag k = hsia_rel(s, t, base);
    c.require(k.is_finite() && gromov_product(s, t, base) == -k.exponent() + rho(BerkPoint::gauss(p), base),
              "Gromov identity");
  }
  int triples = 0;
  for (int i = 0; i < 20 && c.ok; ++i) {
    std::int64_t p = pick_prime(rng);
    RationalMap m = gen::integral_mobius(rng, p);
    for (int k = 0; k < 10; ++k) {
      BerkPoint s = any_point(rng, p), t = any_point(rng, p), base = gen::disk(rng, p);
      c.require(invariant_under(m, s, t, base), "Moebius invariance");
      ++triples;
    }
  }
  for (int i = 0; i < 500 && c.ok; ++i) {
    std::int64_t p = pick_prime(rng);
    BerkPoint a = gen::disk(rng, p), b = gen::disk(rng, p), x = gen::disk(rng, p), base = gen::disk(rng, p);
    c.require(hsia_inf(a, b) <= max(hsia_inf(a, x), hsia_inf(x, b)), "strong triangle for |.-.|_inf");
    c.require(hsia_gauss(a, b) <= max(hsia_gauss(a, x), hsia_gauss(x, b)), "strong triangle for [.,.]_g");
    c.require(hsia_rel(a, b, base) <= max(hsia_rel(a, x, base), hsia_rel(x, b, base)), "strong triangle for [.,.]_S0");
  }
  if (c.ok) c.detail << "200 Gromov triples, " << triples << " Moebius triples, 500 ultrametric triples";
}

// Node set of the hull by brute force: inputs and all pairwise wedges.
std::vector<BerkPoint> brute_hull_nodes(const std::vector<BerkPoint>& pts) {
  std::vector<BerkPoint> out;
  auto add = [&](const BerkPoint& x) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    add(pts[i]);
    for (std::size_t j = i + 1; j < pts.size(); ++j) add(wedge(pts[i], pts[j]));
  }
  return out;
}

// Largest rho between a node and the next node above it.
Rational brute_c_e(const std::vector<BerkPoint>& nodes) {
  Rational best = 0;
  for (const auto& a : nodes) {
    std::optional<Rational> up;
    for (const auto& b : nodes)
      if (!(a == b) && precedes(a, b) && (!up || b.logr() < *up)) up = b.logr();
    if (up && *up - a.logr() > best) best = *up - a.logr();
  }
  return best;
}

void dynamics_dichotomy(Check& c) {
  std::int64_t p = 5;
  PadicConfig cfg(p, 64);
  RationalMap sq(p, Poly{0, 0, 1}, Poly{1});
  BerkPoint g = BerkPoint::gauss(p);
  c.require(good_reduction_at(sq, g) && reduction_at(sq, g).degree == 2, "z^2 has good reduction at S_g");
  Rational cc = frac(-1, 25);
  CylinderTree tree = quad_backward_cylinders(cc, 10, cfg);
  std::vector<Scalar> centers;
  for (const auto& [code, cyl] : tree.cylinders)
    if (code.size() <= 2) centers.push_back(cyl.center);
  GoodReductionSweep sw = good_reduction_sweep(tree.map, default_candidates(centers));
  c.require(!sw.found, "no good reduction candidate for z^2 - 1/25");
  for (const auto& row : uniform_perfectness_experiment(cc, 10, cfg))
    c.require(row.c_e_log && *row.c_e_log == 1, "c_E = 1 at n = " + std::to_string(row.n));
  for (int n = 1; n <= 4; ++n) {
    std::vector<BerkPoint> tops;
    for (const auto& cyl : tree.level(n)) tops.push_back(cyl.top);
    std::vector<BerkPoint> brute = brute_hull_nodes(tops);
    HullTree h = hull_tree(tops);
    bool same = brute.size() == h.nodes.size();
    for (const auto& node : h.nodes) same = same && std::find(brute.begin(), brute.end(), node.point) != brute.end();
    c.require(same, "hull nodes match brute force at n = " + std::to_string(n));
    c.require(brute_c_e(brute) == 1, "brute-force c_E = 1 at n = " + std::to_string(n));
  }
  if (c.ok)
    c.detail << "z^2 good at S_g (degree 2); z^2-1/25: NO_CANDIDATE_FOUND over " << sw.checked
             << " candidates, c_E = 1 for n <= 10";
}

void lipschitz(Check& c, Rng& rng) {
  std::int64_t p = 5;
  std::vector<RationalMap> maps{
      RationalMap(p, Poly{0, 0, 1}, Poly{1}),
      RationalMap(p, Poly{frac(-1, 25), 0, 1}, Poly{1}),
      RationalMap(p, Poly{0, 0, 5}, Poly{1}),
      RationalMap(p, Poly{1, 1}, Poly{-1, 1}),
      RationalMap(p, Poly{5, 0, 1}, Poly{1, 5}),
      RationalMap(p, Poly{0, 1, 0, 2}, Poly{1, 0, frac(1, 5)}),
  };
  int pairs = 0;
  for (const auto& f : maps) {
    for (int i = 0; i < 500 && c.ok; ++i) {
      BerkPoint z = gen::classical(rng, p), w = gen::classical(rng, p);
      if (z == w) continue;
      LogMag lhs = chordal(image_point(f, z), image_point(f, w));
      c.require(lhs <= chordal(z, w) * LogMag(Rational(-f.res_log())), "Lipschitz bound");
      ++pairs;
    }
  }
  if (c.ok) c.detail << maps.size() << " maps, " << pairs << " pairs";
}

void holder(Check& c, Rng& rng) {
  std::int64_t p = 5;
  PadicConfig cfg(p, 64);
  CylinderTree tree = quad_backward_cylinders(frac(-1, 25), 10, cfg);
  std::vector<double> constants;
  for (int n : {6, 8, 10}) {
    std::vector<BerkPoint> e, centers;
    for (const auto& cyl : tree.level(n)) {
      e.push_back(cyl.top);
      centers.push_back(BerkPoint::classical(cyl.center));
    }
    std::shuffle(centers.begin(), centers.end(), rng);
    if (centers.size() > 32) centers.erase(centers.begin() + 32, centers.end());
    BerkPoint inf = BerkPoint::infinity(p);
    HolderExponent hx = holder_exponent(e, inf, Rational(2), Rational(1));
    HolderCertificate cert = holder_certify(e, inf, hx.ell, centers, default_delta_grid(p));
    c.require(std::isfinite(cert.constant), "finite constant at n = " + std::to_string(n));
    constants.push_back(cert.constant);
    c.detail << (n == 6 ? "" : ", ") << "n=" << n << " ell=" << to_string(hx.ell) << " C=" << cert.constant;
  }
  for (std::size_t i = 0; i + 1 < constants.size(); ++i)
    c.require(constants[i + 1] <= 1.05 * constants[i], "constant nonincreasing within 5%");
}

void cylinder_invariance(Check& c) {
  std::int64_t p = 5;
  CylinderTree tree = quad_backward_cylinders(frac(-1, 25), 8, PadicConfig(p, 64));
  int checked = 0;
  for (const auto& [code, cyl] : tree.cylinders) {
    if (code.empty()) continue;
    c.require(image_point(tree.map, cyl.top) == tree.cylinders.at(code.substr(1)).top, "f(cylinder " + code + ")");
    ++checked;
  }
  if (c.ok) c.detail << checked << " cylinder tops map onto their parents";
}

struct Entry {
  int id;
  const char* name;
  double limit;
};

const Entry kCriteria[] = {
    {1, "capacity of balls", 1},           {2, "transfinite diameter convergence", 5},
    {3, "Frostman suite", 30},             {4, "lower capacity density theorem", 60},
    {5, "Pommerenke net", 60},             {6, "kernel identities", 10},
    {7, "dynamics dichotomy", 120},        {8, "Lipschitz bound", 10},
    {9, "Holder certificate", 180},        {10, "cylinder invariance", 30},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const Entry& entry = kCriteria[id - 1];
  Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: capacity_of_balls(c); break;
      case 2: transfinite_convergence(c); break;
      case 3: frostman_suite(c, rng); break;
      case 4: lcd_theorem(c, rng); break;
      case 5: pommerenke(c, rng); break;
      case 6: kernel_identities(c, rng); break;
      case 7: dynamics_dichotomy(c); break;
      case 8: lipschitz(c, rng); break;
      case 9: holder(c, rng); break;
      case 10: cylinder_invariance(c); break;
      default: throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
    }
  } catch (const Error& e) {
    c.ok = false;
    c.detail.str("");
    c.detail << "error " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CriterionResult r{id, entry.name, c.ok, c.detail.str(), secs};
  if (secs > entry.limit) {
    r.pass = false;
    r.detail += "; over the time limit";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace berkp
