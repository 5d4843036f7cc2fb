#include "berkp/poly.hpp"

#include <algorithm>

namespace berkp {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  return inverse_mod(Integer(static_cast<long>(a)), Integer(static_cast<long>(p))).get_si();
}

}  // namespace

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly operator+(const Poly& f, const Poly& g) {
  Poly h(std::max(f.size(), g.size()), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) h[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) h[i] += g[i];
  trim(h);
  return h;
}

Poly operator-(const Poly& f, const Poly& g) { return f + scale(g, Rational(-1)); }

Poly operator*(const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
  }
  trim(h);
  return h;
}

Poly scale(const Poly& f, const Rational& c) {
  Poly h = f;
  for (auto& x : h) x *= c;
  trim(h);
  return h;
}

Poly power(const Poly& f, int k) {
  Poly r{Rational(1)};
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

Poly substitute_affine(const Poly& f, const Rational& a, const Rational& c) {
  Poly lin{a, c};
  trim(lin);
  Poly r;
  for (int i = degree(f); i >= 0; --i) r = r * lin + Poly{f[i]};
  trim(r);
  return r;
}

Poly reverse(const Poly& f, int n) {
  Poly h(static_cast<std::size_t>(n + 1), Rational(0));
  for (int i = 0; i <= degree(f); ++i) h[n - i] = f[i];
  trim(h);
  return h;
}

Rational eval(const Poly& f, const Rational& x) {
  Rational r = 0;
  for (int i = degree(f); i >= 0; --i) r = r * x + f[i];
  return r;
}

Scalar eval(const Poly& f, const Scalar& x) {
  std::int64_t p = x.prime();
  Scalar r(p, 0L);
  for (int i = degree(f); i >= 0; --i) r = r * x + Scalar(p, f[i]);
  return r;
}

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_degree(const FpPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

FpPoly fp_reduce(const Poly& f, std::int64_t p) {
  FpPoly h;
  for (const auto& c : f) h.push_back(c == 0 ? 0 : reduce_mod_m(Scalar(p, c)));
  fp_trim(h);
  return h;
}

FpPoly fp_sub(const FpPoly& f, const FpPoly& g, std::int64_t p) {
  FpPoly h(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = ((h[i] - g[i]) % p + p) % p;
  fp_trim(h);
  return h;
}

FpPoly fp_scale(const FpPoly& f, std::int64_t c, std::int64_t p) {
  FpPoly h = f;
  for (auto& x : h) x = mulmod(x, ((c % p) + p) % p, p);
  fp_trim(h);
  return h;
}

void fp_divmod(const FpPoly& f, const FpPoly& g, std::int64_t p, FpPoly& q, FpPoly& r) {
  int dg = fp_degree(g);
  if (dg < 0) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  r = f;
  fp_trim(r);
  int df = fp_degree(r);
  q.assign(df >= dg ? static_cast<std::size_t>(df - dg + 1) : 0, 0);
  std::int64_t lead_inv = invmod(g[dg], p);
  for (int i = df; i >= dg; --i) {
    if (r[i] == 0) continue;
    std::int64_t c = mulmod(r[i], lead_inv, p);
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] = ((r[i - dg + j] - mulmod(c, g[j], p)) % p + p) % p;
  }
  fp_trim(q);
  fp_trim(r);
}

FpPoly fp_gcd(FpPoly f, FpPoly g, std::int64_t p) {
  fp_trim(f);
  fp_trim(g);
  while (fp_degree(g) >= 0) {
    FpPoly q, r;
    fp_divmod(f, g, p, q, r);
    f = std::move(g);
    g = std::move(r);
  }
  if (fp_degree(f) >= 0) f = fp_scale(f, invmod(f[fp_degree(f)], p), p);
  return f;
}

std::int64_t fp_eval(const FpPoly& f, std::int64_t x, std::int64_t p) {
  std::int64_t r = 0;
  for (int i = fp_degree(f); i >= 0; --i) r = (mulmod(r, x, p) + f[i]) % p;
  return r;
}

int fp_root_multiplicity(const FpPoly& f, std::int64_t x, std::int64_t p) {
  if (fp_degree(f) < 0) throw Error(ErrorCode::ZeroPolynomial, "multiplicity in the zero polynomial");
  FpPoly lin{((-x) % p + p) % p, 1};
  FpPoly cur = f;
  int m = 0;
  while (true) {
    FpPoly q, r;
    fp_divmod(cur, lin, p, q, r);
    if (fp_degree(r) >= 0) return m;
    cur = std::move(q);
    ++m;
  }
}

}  // namespace berkp
