#pragma once

#include "berkp/scalar.hpp"

#include <cstdint>
#include <vector>

namespace berkp {

/// Polynomial with rational coefficients, lowest degree first.
using Poly = std::vector<Rational>;

void trim(Poly& f);
/// Degree, or -1 for the zero polynomial.
int degree(const Poly& f);
Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);
Poly scale(const Poly& f, const Rational& c);
Poly power(const Poly& f, int k);
/// t -> f(a + c t).
Poly substitute_affine(const Poly& f, const Rational& a, const Rational& c);
/// w^n f(1/w) for n >= deg f.
Poly reverse(const Poly& f, int n);
Rational eval(const Poly& f, const Rational& x);
Scalar eval(const Poly& f, const Scalar& x);

/// Polynomial over F_p, lowest degree first, coefficients in [0, p).
using FpPoly = std::vector<std::int64_t>;

void fp_trim(FpPoly& f);
int fp_degree(const FpPoly& f);
FpPoly fp_reduce(const Poly& f, std::int64_t p);
FpPoly fp_sub(const FpPoly& f, const FpPoly& g, std::int64_t p);
FpPoly fp_scale(const FpPoly& f, std::int64_t c, std::int64_t p);
/// Quotient and remainder; g nonzero.
void fp_divmod(const FpPoly& f, const FpPoly& g, std::int64_t p, FpPoly& q, FpPoly& r);
FpPoly fp_gcd(FpPoly f, FpPoly g, std::int64_t p);
std::int64_t fp_eval(const FpPoly& f, std::int64_t x, std::int64_t p);
/// Order of vanishing of f at x; f nonzero.
int fp_root_multiplicity(const FpPoly& f, std::int64_t x, std::int64_t p);

}  // namespace berkp
