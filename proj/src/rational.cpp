#include "berkp/rational.hpp"

#include "berkp/error.hpp"

#include <string>

namespace berkp {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndeterminateZero: return "IndeterminateZero";
    case ErrorCode::NonResidue: return "NonResidue";
    case ErrorCode::OddValuation: return "OddValuation";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::InfinityOperand: return "InfinityOperand";
    case ErrorCode::ClassicalPoint: return "ClassicalPoint";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DegenerateAnnulus: return "DegenerateAnnulus";
    case ErrorCode::BasePointInSupport: return "BasePointInSupport";
    case ErrorCode::MixedTypes: return "MixedTypes";
    case ErrorCode::BaseInE: return "BaseInE";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::TypeIPresent: return "TypeIPresent";
    case ErrorCode::TooFew: return "TooFew";
    case ErrorCode::BadScale: return "BadScale";
    case ErrorCode::ShellEmpty: return "ShellEmpty";
    case ErrorCode::NoDensity: return "NoDensity";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::PoleInDiskAllCharts: return "PoleInDiskAllCharts";
    case ErrorCode::NotClassicalOrTypeII: return "NotClassicalOrTypeII";
    case ErrorCode::NonIntegralRadius: return "NonIntegralRadius";
    case ErrorCode::NotFixed: return "NotFixed";
    case ErrorCode::IrrationalDirection: return "IrrationalDirection";
    case ErrorCode::NonResidueBranch: return "NonResidueBranch";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSubcommand: return "UnknownSubcommand";
  }
  return "Unknown";
}

Rational frac(long a, long b) {
  if (b == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& n) { return n.get_str(10); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t to_int64(const Integer& n) {
  if (!n.fits_slong_p()) throw Error(ErrorCode::TooLarge, "integer exceeds 64 bits");
  return n.get_si();
}

std::int64_t valuation(const Integer& n, std::int64_t p) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  Integer rest;
  Integer prime(static_cast<long>(p));
  return static_cast<std::int64_t>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

std::int64_t valuation(const Rational& q, std::int64_t p) {
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

Integer ipow(std::int64_t base, std::uint64_t exponent) {
  Integer r;
  Integer b(static_cast<long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

Rational rpow(std::int64_t p, std::int64_t exponent) {
  if (exponent >= 0) return Rational(ipow(p, static_cast<std::uint64_t>(exponent)));
  return Rational(Integer(1), ipow(p, static_cast<std::uint64_t>(-exponent)));
}

Integer mod(const Integer& n, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::DivisionByZero, "no inverse modulo " + m.get_str());
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  Integer z(static_cast<long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

}  // namespace berkp
