#pragma once

#include "berkp/error.hpp"
#include "berkp/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace berkp {

/**
 * Exact base-p logarithmic magnitude.
 *
 * A finite value with exponent e stands for p^e. Bottom is magnitude zero,
 * Top is +infinity (only produced by kernels under the 1/0 convention).
 * The order is total: Bottom < every finite value < Top.
 */
class LogMag {
 public:
  enum class Kind { Bottom, Finite, Top };

  LogMag() : kind_(Kind::Bottom) {}
  explicit LogMag(Rational exponent) : kind_(Kind::Finite), exp_(std::move(exponent)) {}
  explicit LogMag(long exponent) : kind_(Kind::Finite), exp_(exponent) {}

  static LogMag bottom() { return LogMag(); }
  static LogMag top() {
    LogMag m;
    m.kind_ = Kind::Top;
    return m;
  }
  static LogMag one() { return LogMag(0L); }

  Kind kind() const noexcept { return kind_; }
  bool is_bottom() const noexcept { return kind_ == Kind::Bottom; }
  bool is_top() const noexcept { return kind_ == Kind::Top; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }

  /// Throws InvalidArgument unless finite.
  const Rational& exponent() const;

  /// Magnitude product: exponents add, Bottom absorbs. Bottom * Top is rejected.
  friend LogMag operator*(const LogMag& a, const LogMag& b);
  /// Quotient with the 1/0 = 0/0 = +inf convention.
  friend LogMag operator/(const LogMag& a, const LogMag& b);
  /// Raises to a nonnegative rational power.
  LogMag pow(const Rational& k) const;

  friend bool operator==(const LogMag& a, const LogMag& b);
  friend std::strong_ordering operator<=>(const LogMag& a, const LogMag& b);

  /// p^e as a double; 0 for Bottom, +inf for Top.
  double to_double(std::int64_t p) const;

 private:
  Kind kind_;
  Rational exp_;
};

LogMag max(const LogMag& a, const LogMag& b);
LogMag min(const LogMag& a, const LogMag& b);
std::string to_string(const LogMag& m);

/// Prime and number of p-adic digits carried by inexact computations.
struct PadicConfig {
  std::int64_t p = 5;
  int working_precision = 64;

  PadicConfig() = default;
  PadicConfig(std::int64_t prime, int precision = 64);
};

/// A truncated p-adic expansion p^valuation * unit, known modulo p^(valuation + precision).
/// unit == 0 (with precision 0) encodes a value known only to be divisible by p^valuation.
struct Expansion {
  std::int64_t valuation = 0;
  Integer unit;
  int precision = 0;
};

/**
 * An element of Q_p: an exact rational or a truncated expansion.
 *
 * Exact rational zero is the only true zero. Arithmetic between expansions
 * tracks absolute precision pessimistically; a rational meeting an expansion
 * is expanded to as many digits as the expansion can use.
 */
class Scalar {
 public:
  Scalar(std::int64_t p, Rational value);
  Scalar(std::int64_t p, long value) : Scalar(p, Rational(value)) {}
  /// digits are least significant first, each in [0, p).
  static Scalar expansion(std::int64_t p, std::int64_t valuation, const std::vector<int>& digits,
                          int precision);
  static Scalar from_unit(std::int64_t p, std::int64_t valuation, Integer unit, int precision);

  std::int64_t prime() const noexcept { return p_; }
  bool is_rational() const noexcept { return std::holds_alternative<Rational>(rep_); }
  bool is_exact_zero() const;
  /// Expansion whose known digits are all zero.
  bool is_indeterminate_zero() const;
  const Rational& rational() const;
  const Expansion& expansion_rep() const;

  /// Valuation; throws IndeterminateZero or, for exact zero, InvalidArgument.
  std::int64_t valuation() const;
  /// Absolute precision: digits known below p^abs_precision. Exact rationals report nullopt.
  std::optional<std::int64_t> absolute_precision() const;
  /// Known unit digits (least significant first); rationals are expanded to n digits.
  std::vector<int> digits(int n) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  std::string debug_string() const;

 private:
  Scalar(std::int64_t p, Expansion e) : p_(p), rep_(std::move(e)) {}

  std::int64_t p_;
  std::variant<Rational, Expansion> rep_;
};

/// |x| as a LogMag: Bottom iff x is exact zero.
LogMag logmag(const Scalar& x);

/// Sum of the digits of x below position n, as an exact rational with p-power denominator.
/// Two scalars agree modulo p^n iff their truncations at n coincide.
Rational truncate(const Scalar& x, std::int64_t n);

/// Square root with first unit digit in [1, p/2); exact when u is a rational square.
Scalar hensel_sqrt(const Scalar& u, const PadicConfig& cfg);

struct RootMagnitude {
  LogMag magnitude;
  int multiplicity = 0;
  friend bool operator==(const RootMagnitude&, const RootMagnitude&) = default;
};

/// Root absolute values (with multiplicity) from the lower convex hull of (i, v(c_i)).
/// Coefficients are low-degree-first; results are sorted by decreasing magnitude.
std::vector<RootMagnitude> newton_polygon_root_logmags(const std::vector<Scalar>& coeffs);

/// x mod p in [0, p) for |x| <= 1.
std::int64_t reduce_mod_m(const Scalar& x);

/// Legendre symbol of a unit residue a mod p (p odd): +1 or -1.
int legendre(const Integer& a, std::int64_t p);

}  // namespace berkp
