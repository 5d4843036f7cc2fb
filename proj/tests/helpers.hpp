#pragma once

#include "berkp/selftest.hpp"

#include <doctest.h>

#include <random>

namespace berkp::testing {

inline BerkPoint Z(std::int64_t p, const Rational& a, const Rational& logr) {
  return BerkPoint::disk(Scalar(p, a), logr);
}
inline BerkPoint Z(std::int64_t p, long a, long logr) { return Z(p, Rational(a), Rational(logr)); }
inline BerkPoint pt(std::int64_t p, const Rational& a) { return BerkPoint::classical(Scalar(p, a)); }
inline BerkPoint inf(std::int64_t p) { return BerkPoint::infinity(p); }
inline LogMag L(long e) { return LogMag(e); }
inline LogMag L(const Rational& e) { return LogMag(e); }

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected " << error_name(code));
  } catch (const Error& e) {
    CHECK(e.name() == error_name(code));
  }
}

inline const int kPrecisions[] = {32, 64};

}  // namespace berkp::testing
