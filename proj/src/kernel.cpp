#include "berkp/kernel.hpp"

namespace berkp {

namespace {

LogMag clamp_one(const LogMag& m) { return max(LogMag::one(), m); }

}  // namespace

LogMag abs_point(const BerkPoint& s) {
  if (s.is_infinity()) throw Error(ErrorCode::InfinityOperand, "|inf - 0|");
  return max(s.diam(), logmag(s.center()));
}

LogMag chordal(const BerkPoint& z, const BerkPoint& w) {
  if (z.is_disk() || w.is_disk()) throw Error(ErrorCode::InvalidArgument, "chordal distance needs type I points");
  return hsia_gauss(z, w);
}

LogMag hsia_gauss(const BerkPoint& s, const BerkPoint& t) {
  if (s.is_infinity() && t.is_infinity()) return LogMag::bottom();
  if (s.is_infinity()) return LogMag::one() / clamp_one(abs_point(t));
  if (t.is_infinity()) return LogMag::one() / clamp_one(abs_point(s));
  return hsia_inf(s, t) / (clamp_one(abs_point(s)) * clamp_one(abs_point(t)));
}

LogMag hsia_rel(const BerkPoint& s, const BerkPoint& t, const BerkPoint& base) {
  LogMag den = hsia_gauss(s, base) * hsia_gauss(t, base);
  if (den.is_bottom()) return LogMag::top();
  return hsia_gauss(s, t) / den;
}

Rational gromov_product(const BerkPoint& s, const BerkPoint& t, const BerkPoint& base) {
  if (!s.is_disk() || !t.is_disk() || !base.is_disk())
    throw Error(ErrorCode::ClassicalPoint, "Gromov product needs points of H^1");
  return rho(base, median(s, t, base));
}

bool BerkBall::contains(const BerkPoint& x) const {
  if (flavor == Flavor::Chordal) return hsia_gauss(x, center) <= radius;
  if (x.is_infinity()) return false;
  return hsia_inf(x, center) <= radius;
}

BerkBall hsia_ball(const BerkPoint& center, const LogMag& radius) {
  if (center.is_infinity()) throw Error(ErrorCode::InfinityOperand, "Hsia ball around infinity");
  if (radius < center.diam()) throw Error(ErrorCode::InvalidArgument, "radius below diam of the center");
  return BerkBall{BerkBall::Flavor::Hsia, center, radius};
}

BerkBall chordal_ball(const BerkPoint& a, const LogMag& delta) {
  if (a.is_disk()) throw Error(ErrorCode::InvalidArgument, "chordal ball needs a type I center");
  if (delta > LogMag::one()) throw Error(ErrorCode::InvalidArgument, "chordal radius exceeds 1");
  return BerkBall{BerkBall::Flavor::Chordal, a, delta};
}

std::optional<BerkPoint> chordal_ball_top(const BerkPoint& a, const LogMag& delta) {
  if (a.is_infinity() || delta.is_bottom()) {
    if (delta.is_bottom()) return a;
    return std::nullopt;
  }
  LogMag abs_a = logmag(a.center());
  if (abs_a <= LogMag::one()) {
    if (delta < LogMag::one()) return BerkPoint::disk(a.center(), delta.exponent());
    return std::nullopt;
  }
  if (delta * abs_a < LogMag::one()) return BerkPoint::disk(a.center(), (delta * abs_a * abs_a).exponent());
  return std::nullopt;
}

BerkPoint invert_point(const BerkPoint& s) {
  std::int64_t p = s.prime();
  if (s.is_infinity()) return BerkPoint::classical(Scalar(p, 0L));
  if (s.is_classical()) {
    if (s.center().is_exact_zero() || s.center().is_indeterminate_zero()) return BerkPoint::infinity(p);
    return BerkPoint::classical(Scalar(p, 1L) / s.center());
  }
  LogMag b = logmag(s.center());
  if (b <= s.diam()) return BerkPoint::disk(Scalar(p, 0L), Rational(-s.logr()));
  return BerkPoint::disk(Scalar(p, 1L) / s.center(), Rational(s.logr() - 2 * b.exponent()));
}

BerkPoint chordal_ball_boundary(const BerkPoint& a, const LogMag& delta) {
  if (!(delta < LogMag::one())) throw Error(ErrorCode::InvalidArgument, "the ball is all of P^1");
  if (auto top = chordal_ball_top(a, delta)) return *top;
  auto mirrored = chordal_ball_top(invert_point(a), delta);
  return invert_point(*mirrored);
}

}  // namespace berkp
