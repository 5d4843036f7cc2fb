#include "berkp/dynamics.hpp"

#include "berkp/annulus.hpp"

#include <algorithm>

namespace berkp {

namespace {

Rational min_valuation(const std::vector<const Poly*>& polys, std::int64_t p) {
  std::optional<std::int64_t> best;
  for (const Poly* f : polys)
    for (const auto& c : *f)
      if (c != 0) {
        std::int64_t v = valuation(c, p);
        if (!best || v < *best) best = v;
      }
  if (!best) throw Error(ErrorCode::DegenerateMap, "all coefficients vanish");
  return Rational(*best);
}

Poly padded(const Poly& f, int d) {
  Poly h = f;
  h.resize(static_cast<std::size_t>(d + 1), Rational(0));
  return h;
}

std::vector<Scalar> as_scalars(const Poly& f, std::int64_t p) {
  std::vector<Scalar> out;
  for (const auto& c : f) out.emplace_back(p, c);
  return out;
}

// Image of zeta(a, p^q) under N/D when no pole of N/D lies in the closed disk.
std::optional<BerkPoint> image_pole_free(const Poly& num, const Poly& den, const BerkPoint& s) {
  std::int64_t p = s.prime();
  const Rational& a = s.center().rational();
  Poly na = substitute_affine(num, a, Rational(1));
  Poly da = substitute_affine(den, a, Rational(1));
  if (degree(da) < 0) return std::nullopt;
  if (degree(da) > 0) {
    for (const auto& root : newton_polygon_root_logmags(as_scalars(da, p)))
      if (root.magnitude <= s.diam()) return std::nullopt;
  }
  Rational fa = (na.empty() ? Rational(0) : na[0]) / da[0];
  Poly g = na - scale(da, fa);
  LogMag sup = LogMag::bottom();
  for (int i = 1; i <= degree(g); ++i) {
    if (g[i] == 0) continue;
    sup = max(sup, logmag(Scalar(p, g[i])) * s.diam().pow(Rational(i)));
  }
  if (sup.is_bottom()) return BerkPoint::classical(Scalar(p, fa));
  return BerkPoint::disk(Scalar(p, fa), (sup / logmag(Scalar(p, da[0]))).exponent());
}

// The point at rho-distance t from `from` on the path toward the type I point `to`.
BerkPoint walk(const BerkPoint& from, const BerkPoint& to, const Rational& t) {
  if (to.is_infinity()) return raise_to(from, Rational(from.logr() + t));
  if (precedes(to, from)) return BerkPoint::disk(to.center(), Rational(from.logr() - t));
  BerkPoint w = wedge(from, to);
  Rational up = w.logr() - from.logr();
  if (t <= up) return raise_to(from, Rational(from.logr() + t));
  return BerkPoint::disk(to.center(), Rational(w.logr() - (t - up)));
}

BerkPoint mobius_image(const RationalMap& f, const BerkPoint& s) {
  std::int64_t p = s.prime();
  Integer q0 = berkp::ceil(s.logr());
  std::int64_t k = to_int64(q0);
  BerkPoint s1 = BerkPoint::disk(s.center(), Rational(q0));
  BerkPoint x = BerkPoint::classical(s.center());
  BerkPoint y = BerkPoint::classical(Scalar(p, Rational(s.center().rational() + rpow(p, -k))));
  BerkPoint m1 = median(image_point(f, x), image_point(f, y), image_point(f, BerkPoint::infinity(p)));
  return walk(m1, image_point(f, x), Rational(Rational(q0) - s.logr()));
}

Rational integral_logr(const BerkPoint& s) {
  if (!s.is_disk()) throw Error(ErrorCode::NotClassicalOrTypeII, "expected a type II point");
  if (s.logr().get_den() != 1)
    throw Error(ErrorCode::NonIntegralRadius, "log-radius " + to_string(s.logr()) + " is not an integer");
  return s.logr();
}

}  // namespace

Rational homogeneous_resultant(const Poly& f, const Poly& g, int d) {
  std::size_t n = static_cast<std::size_t>(2 * d);
  Poly fp = padded(f, d), gp = padded(g, d);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int r = 0; r < d; ++r)
    for (int i = 0; i <= d; ++i) {
      m[r][r + i] = fp[d - i];
      m[d + r][r + i] = gp[d - i];
    }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational fct = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= fct * m[col][c];
    }
  }
  return det;
}

RationalMap::RationalMap(std::int64_t p, Poly num, Poly den) : p_(p), num_(std::move(num)), den_(std::move(den)) {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw Error(ErrorCode::DegenerateMap, "zero denominator");
  d_ = std::max(berkp::degree(num_), berkp::degree(den_));
  if (d_ < 1) throw Error(ErrorCode::DegenerateMap, "constant map");
  Rational v = min_valuation({&num_, &den_}, p_);
  Rational s = rpow(p_, -to_int64(v.get_num()));
  lift_num_ = padded(scale(num_, s), d_);
  lift_den_ = padded(scale(den_, s), d_);
  Rational res = homogeneous_resultant(lift_num_, lift_den_, d_);
  if (res == 0) throw Error(ErrorCode::DegenerateMap, "numerator and denominator share a root");
  res_log_ = Rational(-valuation(res, p_));
}

Rational resultant_logmag(const RationalMap& f) { return f.res_log(); }

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  int df = f.degree();
  Poly fn = padded(f.num(), df), fd = padded(f.den(), df);
  Poly n, d;
  for (int i = 0; i <= df; ++i) {
    Poly term = power(g.num(), i) * power(g.den(), df - i);
    n = n + scale(term, fn[i]);
    d = d + scale(term, fd[i]);
  }
  return RationalMap(f.prime(), n, d);
}

BerkPoint image_point(const RationalMap& f, const BerkPoint& s) {
  std::int64_t p = f.prime();
  if (s.prime() != p) throw Error(ErrorCode::PrimeMismatch, "map and point over different primes");
  if (s.is_infinity()) {
    int dn = degree(f.num()), dd = degree(f.den());
    if (dn > dd) return s;
    if (dn < dd) return BerkPoint::classical(Scalar(p, 0L));
    return BerkPoint::classical(Scalar(p, Rational(f.num()[dn] / f.den()[dd])));
  }
  if (s.is_classical()) {
    Scalar den = eval(f.den(), s.center());
    if (den.is_exact_zero()) return BerkPoint::infinity(p);
    if (den.is_indeterminate_zero()) throw Error(ErrorCode::PrecisionLoss, "denominator vanishes to working precision");
    return BerkPoint::classical(eval(f.num(), s.center()) / den);
  }
  int d = f.degree();
  if (auto r = image_pole_free(f.num(), f.den(), s)) return *r;
  if (auto r = image_pole_free(f.den(), f.num(), s)) return invert_point(*r);
  BerkPoint si = invert_point(s);
  Poly rn = reverse(f.num(), d), rd = reverse(f.den(), d);
  if (auto r = image_pole_free(rn, rd, si)) return *r;
  if (auto r = image_pole_free(rd, rn, si)) return invert_point(*r);
  if (d == 1) return mobius_image(f, s);
  throw Error(ErrorCode::PoleInDiskAllCharts, "every chart has a pole in " + s.debug_string());
}

ReducedMap reduce_conjugate(const RationalMap& f, const BerkPoint& source, const BerkPoint& target) {
  std::int64_t p = f.prime();
  Rational k = integral_logr(source);
  Rational l = integral_logr(target);
  const Rational& a = source.center().rational();
  const Rational& b = target.center().rational();
  Poly n1 = substitute_affine(f.num(), a, rpow(p, -to_int64(k.get_num())));
  Poly d1 = substitute_affine(f.den(), a, rpow(p, -to_int64(k.get_num())));
  Poly num = scale(n1 - scale(d1, b), rpow(p, to_int64(l.get_num())));
  Poly den = d1;
  Rational v = min_valuation({&num, &den}, p);
  Rational s = rpow(p, -to_int64(v.get_num()));
  FpPoly rn = fp_reduce(scale(num, s), p);
  FpPoly rd = fp_reduce(scale(den, s), p);
  int d = f.degree();
  ReducedMap out{p, rn, rd, 0};
  if (fp_degree(rn) < 0 || fp_degree(rd) < 0) return out;
  FpPoly g = fp_gcd(rn, rd, p);
  int y = std::min(d - fp_degree(rn), d - fp_degree(rd));
  FpPoly rem;
  fp_divmod(rn, g, p, out.num, rem);
  fp_divmod(rd, g, p, out.den, rem);
  out.degree = d - fp_degree(g) - y;
  return out;
}

ReducedMap reduction_at(const RationalMap& f, const BerkPoint& s) {
  integral_logr(s);
  BerkPoint img = image_point(f, s);
  if (!(img == s)) throw Error(ErrorCode::NotFixed, "f(S) = " + img.debug_string() + " differs from S");
  return reduce_conjugate(f, s, s);
}

bool good_reduction_at(const RationalMap& f, const BerkPoint& s) {
  try {
    return reduction_at(f, s).degree == f.degree();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotFixed) return false;
    throw;
  }
}

GoodReductionSweep good_reduction_sweep(const RationalMap& f, const std::vector<BerkPoint>& candidates) {
  GoodReductionSweep out;
  for (const auto& s : candidates) {
    if (!s.is_disk() || s.logr().get_den() != 1) {
      ++out.skipped_non_integral;
      continue;
    }
    ++out.checked;
    bool good = false;
    try {
      good = good_reduction_at(f, s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleInDiskAllCharts) throw;
    }
    if (good) {
      out.found = s;
      return out;
    }
  }
  return out;
}

std::vector<BerkPoint> default_candidates(const std::vector<Scalar>& centers, int k_lo, int k_hi) {
  std::vector<BerkPoint> out;
  for (const auto& a : centers)
    for (int k = k_lo; k <= k_hi; ++k) {
      BerkPoint s = BerkPoint::disk(a, Rational(k));
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  return out;
}

int directional_degree(const RationalMap& f, const BerkPoint& s, const BerkPoint& toward) {
  std::int64_t p = f.prime();
  if (toward == s) throw Error(ErrorCode::InvalidArgument, "a direction needs a point other than S");
  Rational k = integral_logr(s);
  BerkPoint t = image_point(f, s);
  ReducedMap r = reduce_conjugate(f, s, t);
  if (r.degree < 1) throw Error(ErrorCode::DegenerateMap, "constant reduction");
  Direction dir = direction(s, toward);
  bool at_inf = dir.up;
  std::int64_t x = 0;
  if (!at_inf)
    x = reduce_mod_m(Scalar(p, Rational((dir.residue - s.center().rational()) * rpow(p, to_int64(k.get_num())))));
  auto coef = [](const FpPoly& g, int i) { return i < static_cast<int>(g.size()) ? g[i] : 0; };
  std::int64_t b0 = at_inf ? coef(r.num, r.degree) : fp_eval(r.num, x, p);
  std::int64_t b1 = at_inf ? coef(r.den, r.degree) : fp_eval(r.den, x, p);
  FpPoly h = fp_sub(fp_scale(r.num, b1, p), fp_scale(r.den, b0, p), p);
  if (at_inf) return r.degree - fp_degree(h);
  return fp_root_multiplicity(h, x, p);
}

std::vector<Cylinder> CylinderTree::level(int k) const {
  std::vector<Cylinder> out;
  for (const auto& [code, cyl] : cylinders)
    if (static_cast<int>(code.size()) == k) out.push_back(cyl);
  return out;
}

CylinderTree quad_backward_cylinders(const Rational& c, int depth, const PadicConfig& cfg) {
  std::int64_t p = cfg.p;
  if (p == 2) throw Error(ErrorCode::EvenPrime, "the quadratic family needs an odd prime");
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "c must be nonzero");
  std::int64_t v = valuation(c, p);
  if (v % 2 != 0) throw Error(ErrorCode::OddValuation, "v(c) = " + std::to_string(v) + " is odd");
  if (v >= 0) throw Error(ErrorCode::InvalidArgument, "c must have negative valuation");
  int m = static_cast<int>(-v / 2);
  Scalar u(p, Rational(-c * rpow(p, 2 * m)));
  if (legendre(Integer(reduce_mod_m(u)), p) != 1)
    throw Error(ErrorCode::NonResidueBranch, "-c p^2m is not a square mod p");

  Scalar cs(p, c);
  Scalar w0 = (Scalar(p, 1L) + hensel_sqrt(Scalar(p, Rational(1 - 4 * c)), cfg)) / Scalar(p, 2L);
  CylinderTree tree{RationalMap(p, Poly{c, Rational(0), Rational(1)}, Poly{Rational(1)}), m, depth, w0, {}};
  tree.cylinders.emplace("", Cylinder{"", w0, BerkPoint::disk(w0, Rational(m))});
  std::vector<std::string> prev{""};
  for (int k = 1; k <= depth; ++k) {
    std::vector<std::string> next;
    for (const auto& code : prev) {
      Scalar root = hensel_sqrt(tree.cylinders.at(code).center - cs, cfg);
      for (int b = 0; b < 2; ++b) {
        Scalar center = b == 0 ? root : -root;
        std::string key = std::string(1, static_cast<char>('0' + b)) + code;
        tree.cylinders.emplace(key, Cylinder{key, center, BerkPoint::disk(center, Rational(m * (1 - k)))});
        next.push_back(key);
      }
    }
    prev = std::move(next);
  }
  return tree;
}

std::vector<BerkPoint> subsample(const std::vector<BerkPoint>& pts, std::size_t cap) {
  if (pts.size() <= cap) return pts;
  std::size_t step = (pts.size() + cap - 1) / cap;
  std::vector<BerkPoint> out;
  for (std::size_t i = 0; i < pts.size(); i += step) out.push_back(pts[i]);
  return out;
}

std::vector<ExperimentRow> uniform_perfectness_experiment(const Rational& c, int n_max, const PadicConfig& cfg) {
  CylinderTree tree = quad_backward_cylinders(c, n_max, cfg);
  std::vector<ExperimentRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<BerkPoint> tops;
    for (const auto& cyl : tree.level(n)) tops.push_back(cyl.top);
    tops = subsample(tops);
    ExperimentRow row;
    row.n = n;
    row.points = tops.size();
    row.c_e_log = bounded_moduli_constant(tops);
    row.best_c_log = lcd_constant(tops).best_c_log;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace berkp
