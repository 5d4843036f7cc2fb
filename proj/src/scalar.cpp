#include "berkp/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace berkp {

namespace {

Integer pk(std::int64_t p, std::int64_t k) {
  if (k <= 0) return Integer(1);
  return ipow(p, static_cast<std::uint64_t>(k));
}

// Unit part n/d of q = p^v n/d reduced modulo p^k.
Integer rational_unit_mod(const Rational& q, std::int64_t p, std::int64_t v, std::int64_t k) {
  Integer m = pk(p, k);
  Integer num = q.get_num();
  Integer den = q.get_den();
  Integer prime(static_cast<long>(p));
  if (v > 0) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pk(p, v).get_mpz_t());
  if (v < 0) mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pk(p, -v).get_mpz_t());
  return mod(num * inverse_mod(mod(den, m), m), m);
}

Expansion indeterminate(std::int64_t abs_precision) { return Expansion{abs_precision, Integer(0), 0}; }

bool is_indet(const Expansion& e) { return e.precision == 0; }

std::int64_t abs_prec(const Expansion& e) { return e.valuation + e.precision; }

// Expansion of p^v * s known modulo p^A with v the first position considered.
Expansion normalize(std::int64_t p, std::int64_t v, Integer s, std::int64_t A) {
  if (A <= v) return indeterminate(A);
  s = mod(s, pk(p, A - v));
  if (s == 0) return indeterminate(A);
  Integer rest;
  Integer prime(static_cast<long>(p));
  auto k = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), s.get_mpz_t(), prime.get_mpz_t()));
  return Expansion{v + k, rest, static_cast<int>(A - v - k)};
}

// Rational q expanded to absolute precision A.
Expansion coerce_abs(const Rational& q, std::int64_t p, std::int64_t A) {
  if (q == 0) return indeterminate(A);
  std::int64_t v = valuation(q, p);
  if (A <= v) return indeterminate(A);
  return Expansion{v, rational_unit_mod(q, p, v, A - v), static_cast<int>(A - v)};
}

// Rational q expanded to the given number of significant digits.
Expansion coerce_rel(const Rational& q, std::int64_t p, int precision) {
  std::int64_t v = valuation(q, p);
  return Expansion{v, rational_unit_mod(q, p, v, precision), precision};
}

void check_prime(std::int64_t a, std::int64_t b) {
  if (a != b) throw Error(ErrorCode::PrimeMismatch, "scalars over different primes");
}

}  // namespace

const Rational& LogMag::exponent() const {
  if (kind_ != Kind::Finite) throw Error(ErrorCode::InvalidArgument, "exponent of non-finite LogMag");
  return exp_;
}

LogMag operator*(const LogMag& a, const LogMag& b) {
  if ((a.is_bottom() && b.is_top()) || (a.is_top() && b.is_bottom()))
    throw Error(ErrorCode::InvalidArgument, "0 * inf");
  if (a.is_bottom() || b.is_bottom()) return LogMag::bottom();
  if (a.is_top() || b.is_top()) return LogMag::top();
  return LogMag(Rational(a.exp_ + b.exp_));
}

LogMag operator/(const LogMag& a, const LogMag& b) {
  if (b.is_bottom()) return LogMag::top();
  if (b.is_top()) {
    if (a.is_top()) throw Error(ErrorCode::InvalidArgument, "inf / inf");
    return LogMag::bottom();
  }
  if (a.is_finite()) return LogMag(Rational(a.exp_ - b.exp_));
  return a;
}

LogMag LogMag::pow(const Rational& k) const {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative power of LogMag");
  if (k == 0) return one();
  if (!is_finite()) return *this;
  return LogMag(Rational(exp_ * k));
}

bool operator==(const LogMag& a, const LogMag& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.exp_ == b.exp_;
}

std::strong_ordering operator<=>(const LogMag& a, const LogMag& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = cmp(a.exp_, b.exp_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double LogMag::to_double(std::int64_t p) const {
  if (is_bottom()) return 0.0;
  if (is_top()) return std::numeric_limits<double>::infinity();
  return std::pow(static_cast<double>(p), exp_.get_d());
}

LogMag max(const LogMag& a, const LogMag& b) { return a < b ? b : a; }
LogMag min(const LogMag& a, const LogMag& b) { return b < a ? b : a; }

std::string to_string(const LogMag& m) {
  if (m.is_bottom()) return "-inf";
  if (m.is_top()) return "+inf";
  return to_string(m.exponent());
}

PadicConfig::PadicConfig(std::int64_t prime, int precision) : p(prime), working_precision(precision) {
  if (!is_prime(prime)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  if (precision < 1) throw Error(ErrorCode::InvalidArgument, "working_precision must be positive");
}

Scalar::Scalar(std::int64_t p, Rational value) : p_(p), rep_(std::move(value)) {
  std::get<Rational>(rep_).canonicalize();
}

Scalar Scalar::expansion(std::int64_t p, std::int64_t valuation, const std::vector<int>& digits,
                         int precision) {
  if (precision < 1) throw Error(ErrorCode::InvalidArgument, "expansion precision must be positive");
  Integer s = 0;
  for (int i = std::min<int>(precision, static_cast<int>(digits.size())) - 1; i >= 0; --i) {
    if (digits[i] < 0 || digits[i] >= p) throw Error(ErrorCode::InvalidArgument, "digit out of range");
    s = s * static_cast<long>(p) + digits[i];
  }
  return Scalar(p, normalize(p, valuation, s, valuation + precision));
}

Scalar Scalar::from_unit(std::int64_t p, std::int64_t valuation, Integer unit, int precision) {
  return Scalar(p, normalize(p, valuation, std::move(unit), valuation + precision));
}

bool Scalar::is_exact_zero() const { return is_rational() && std::get<Rational>(rep_) == 0; }

bool Scalar::is_indeterminate_zero() const { return !is_rational() && is_indet(std::get<Expansion>(rep_)); }

const Rational& Scalar::rational() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "scalar is not an exact rational");
  return std::get<Rational>(rep_);
}

const Expansion& Scalar::expansion_rep() const {
  if (is_rational()) throw Error(ErrorCode::InvalidArgument, "scalar is not an expansion");
  return std::get<Expansion>(rep_);
}

std::int64_t Scalar::valuation() const {
  if (is_rational()) {
    const auto& q = std::get<Rational>(rep_);
    if (q == 0) throw Error(ErrorCode::InvalidArgument, "valuation of exact zero");
    return berkp::valuation(q, p_);
  }
  const auto& e = std::get<Expansion>(rep_);
  if (is_indet(e)) throw Error(ErrorCode::IndeterminateZero, "all known digits are zero");
  return e.valuation;
}

std::optional<std::int64_t> Scalar::absolute_precision() const {
  if (is_rational()) return std::nullopt;
  return abs_prec(std::get<Expansion>(rep_));
}

std::vector<int> Scalar::digits(int n) const {
  std::vector<int> out;
  Integer u;
  int count = n;
  if (is_rational()) {
    const auto& q = std::get<Rational>(rep_);
    if (q == 0) return out;
    u = rational_unit_mod(q, p_, berkp::valuation(q, p_), n);
  } else {
    const auto& e = std::get<Expansion>(rep_);
    u = e.unit;
    count = std::min(n, e.precision);
  }
  Integer prime(static_cast<long>(p_));
  for (int i = 0; i < count; ++i) {
    Integer d = mod(u, prime);
    out.push_back(static_cast<int>(d.get_si()));
    u = (u - d) / prime;
  }
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_prime(a.p_, b.p_);
  std::int64_t p = a.p_;
  if (a.is_rational() && b.is_rational()) return Scalar(p, Rational(a.rational() + b.rational()));
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  Expansion x, y;
  if (a.is_rational()) {
    y = b.expansion_rep();
    x = coerce_abs(a.rational(), p, abs_prec(y));
  } else if (b.is_rational()) {
    x = a.expansion_rep();
    y = coerce_abs(b.rational(), p, abs_prec(x));
  } else {
    x = a.expansion_rep();
    y = b.expansion_rep();
  }
  std::int64_t A = std::min(abs_prec(x), abs_prec(y));
  std::int64_t m = std::min(x.valuation, y.valuation);
  Integer s = x.unit * pk(p, x.valuation - m) + y.unit * pk(p, y.valuation - m);
  return Scalar(p, normalize(p, m, s, A));
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(p_, Rational(-std::get<Rational>(rep_)));
  Expansion e = std::get<Expansion>(rep_);
  if (!is_indet(e)) e.unit = mod(-e.unit, pk(p_, e.precision));
  return Scalar(p_, e);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_prime(a.p_, b.p_);
  std::int64_t p = a.p_;
  if (a.is_rational() && b.is_rational()) return Scalar(p, Rational(a.rational() * b.rational()));
  if (a.is_exact_zero() || b.is_exact_zero()) return Scalar(p, Rational(0));
  Expansion x, y;
  if (a.is_rational()) {
    y = b.expansion_rep();
    x = coerce_rel(a.rational(), p, std::max(y.precision, 1));
  } else if (b.is_rational()) {
    x = a.expansion_rep();
    y = coerce_rel(b.rational(), p, std::max(x.precision, 1));
  } else {
    x = a.expansion_rep();
    y = b.expansion_rep();
  }
  if (is_indet(x) || is_indet(y)) return Scalar(p, indeterminate(x.valuation + y.valuation));
  int prec = std::min(x.precision, y.precision);
  return Scalar(p, Expansion{x.valuation + y.valuation, mod(x.unit * y.unit, pk(p, prec)), prec});
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check_prime(a.p_, b.p_);
  std::int64_t p = a.p_;
  if (b.is_exact_zero()) throw Error(ErrorCode::DivisionByZero, "division by exact zero");
  if (b.is_indeterminate_zero()) throw Error(ErrorCode::IndeterminateZero, "division by indeterminate zero");
  if (a.is_rational() && b.is_rational()) return Scalar(p, Rational(a.rational() / b.rational()));
  if (a.is_exact_zero()) return a;
  Expansion x, y;
  if (a.is_rational()) {
    y = b.expansion_rep();
    x = coerce_rel(a.rational(), p, y.precision);
  } else if (b.is_rational()) {
    x = a.expansion_rep();
    y = coerce_rel(b.rational(), p, std::max(x.precision, 1));
  } else {
    x = a.expansion_rep();
    y = b.expansion_rep();
  }
  if (is_indet(x)) return Scalar(p, indeterminate(x.valuation - y.valuation));
  int prec = std::min(x.precision, y.precision);
  Integer m = pk(p, prec);
  return Scalar(p, Expansion{x.valuation - y.valuation, mod(x.unit * inverse_mod(y.unit, m), m), prec});
}

std::string Scalar::debug_string() const {
  if (is_rational()) return to_string(std::get<Rational>(rep_));
  const auto& e = std::get<Expansion>(rep_);
  std::ostringstream os;
  os << "p^" << e.valuation << "*" << e.unit.get_str() << " + O(p^" << abs_prec(e) << ")";
  return os.str();
}

LogMag logmag(const Scalar& x) {
  if (x.is_exact_zero()) return LogMag::bottom();
  return LogMag(Rational(-x.valuation()));
}

Rational truncate(const Scalar& x, std::int64_t n) {
  std::int64_t p = x.prime();
  if (x.is_exact_zero()) return Rational(0);
  if (x.is_rational()) {
    std::int64_t v = x.valuation();
    if (n <= v) return Rational(0);
    return Rational(rational_unit_mod(x.rational(), p, v, n - v)) * rpow(p, v);
  }
  const auto& e = x.expansion_rep();
  if (n > abs_prec(e)) throw Error(ErrorCode::PrecisionLoss, "truncation beyond known digits");
  if (is_indet(e) || n <= e.valuation) return Rational(0);
  return Rational(mod(e.unit, pk(p, n - e.valuation))) * rpow(p, e.valuation);
}

int legendre(const Integer& a, std::int64_t p) {
  Integer prime(static_cast<long>(p));
  return mpz_legendre(a.get_mpz_t(), prime.get_mpz_t());
}

namespace {

// Some r with r^2 = a mod p, a a nonzero quadratic residue, p odd.
Integer sqrt_mod_p(const Integer& a, std::int64_t p) {
  Integer P(static_cast<long>(p));
  Integer n = mod(a, P);
  auto powm = [&](const Integer& b, const Integer& e) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
    return r;
  };
  // Tonelli-Shanks.
  Integer q = P - 1;
  long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (legendre(z, p) != -1) z += 1;
  Integer c = powm(z, q);
  Integer r = powm(n, Integer((q + 1) / 2));
  Integer t = powm(n, q);
  long m = s;
  while (t != 1) {
    long i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = mod(t2 * t2, P);
      ++i;
    }
    Integer b = powm(c, Integer(ipow(2, static_cast<std::uint64_t>(m - i - 1))));
    r = mod(r * b, P);
    c = mod(b * b, P);
    t = mod(t * c, P);
    m = i;
  }
  return r;
}

bool rational_square_root(const Rational& q, Rational& out) {
  if (q < 0) return false;
  Integer num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  out = Rational(a, b);
  out.canonicalize();
  return true;
}

}  // namespace

Scalar hensel_sqrt(const Scalar& u, const PadicConfig& cfg) {
  std::int64_t p = cfg.p;
  check_prime(p, u.prime());
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "square roots for p = 2 are unsupported");
  if (u.is_exact_zero()) return u;
  std::int64_t v = u.valuation();
  if (v % 2 != 0) throw Error(ErrorCode::OddValuation, "valuation " + std::to_string(v) + " is odd");
  Integer P(static_cast<long>(p));
  Integer first = u.is_rational() ? rational_unit_mod(u.rational(), p, v, 1) : mod(u.expansion_rep().unit, P);
  if (legendre(first, p) != 1) throw Error(ErrorCode::NonResidue, "unit part is not a square mod p");

  if (u.is_rational()) {
    Rational r;
    if (rational_square_root(u.rational(), r)) {
      Integer d = rational_unit_mod(r, p, v / 2, 1);
      if (2 * d > P) r = -r;
      return Scalar(p, r);
    }
  }
  int prec = u.is_rational() ? cfg.working_precision : u.expansion_rep().precision;
  Integer target = u.is_rational() ? rational_unit_mod(u.rational(), p, v, prec) : u.expansion_rep().unit;
  Integer r = sqrt_mod_p(first, p);
  if (2 * r > P) r = P - r;
  Integer m = pk(p, prec);
  // Newton lifting doubles the number of correct digits each step.
  for (int known = 1; known < prec; known *= 2) {
    r = mod(r - (r * r - target) * inverse_mod(mod(2 * r, m), m), m);
  }
  r = mod(r - (r * r - target) * inverse_mod(mod(2 * r, m), m), m);
  return Scalar::from_unit(p, v / 2, r, prec);
}

std::vector<RootMagnitude> newton_polygon_root_logmags(const std::vector<Scalar>& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg >= 0 && coeffs[deg].is_exact_zero()) --deg;
  if (deg < 0) throw Error(ErrorCode::ZeroPolynomial, "all coefficients vanish");
  if (coeffs[deg].is_indeterminate_zero())
    throw Error(ErrorCode::PrecisionLoss, "leading coefficient is indeterminate");
  std::vector<RootMagnitude> out;
  int lo = 0;
  while (coeffs[lo].is_exact_zero()) ++lo;
  if (lo > 0) out.push_back({LogMag::bottom(), lo});
  if (coeffs[lo].is_indeterminate_zero())
    throw Error(ErrorCode::PrecisionLoss, "constant term is indeterminate");

  struct Pt {
    int i;
    Rational v;
  };
  std::vector<Pt> pts;
  std::vector<Pt> bounds;
  for (int i = lo; i <= deg; ++i) {
    const Scalar& c = coeffs[i];
    if (c.is_exact_zero()) continue;
    if (c.is_indeterminate_zero()) {
      bounds.push_back({i, Rational(*c.absolute_precision())});
      continue;
    }
    pts.push_back({i, Rational(c.valuation())});
  }
  std::vector<Pt> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b when it lies on or above the segment a-q.
      Rational lhs = (b.v - a.v) * (q.i - a.i);
      Rational rhs = (q.v - a.v) * (b.i - a.i);
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(q);
  }
  for (const auto& b : bounds) {
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
      if (hull[k].i < b.i && b.i < hull[k + 1].i) {
        Rational line = hull[k].v + (hull[k + 1].v - hull[k].v) * (b.i - hull[k].i) / (hull[k + 1].i - hull[k].i);
        if (b.v <= line) throw Error(ErrorCode::PrecisionLoss, "indeterminate coefficient may touch the Newton polygon");
      }
    }
  }
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const auto& a = hull[k - 1];
    const auto& b = hull[k];
    out.push_back({LogMag(Rational((b.v - a.v) / Rational(b.i - a.i))), b.i - a.i});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RootMagnitude& x, const RootMagnitude& y) { return x.magnitude > y.magnitude; });
  return out;
}

std::int64_t reduce_mod_m(const Scalar& x) {
  std::int64_t p = x.prime();
  if (x.is_exact_zero()) return 0;
  if (x.is_indeterminate_zero()) {
    if (*x.absolute_precision() >= 1) return 0;
    throw Error(ErrorCode::PrecisionLoss, "residue is not determined");
  }
  std::int64_t v = x.valuation();
  if (v < 0) throw Error(ErrorCode::NotIntegral, "|x| > 1");
  if (v > 0) return 0;
  Integer P(static_cast<long>(p));
  if (x.is_rational()) return rational_unit_mod(x.rational(), p, 0, 1).get_si();
  return mod(x.expansion_rep().unit, P).get_si();
}

}  // namespace berkp
