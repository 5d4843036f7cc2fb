#include "helpers.hpp"

#include "berkp/scalar.hpp"

using namespace berkp;
using namespace berkp::testing;

namespace {

// Independent valuation oracle: repeated division of the integer parts.
long digit_valuation(long n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("logmag examples") {
  CHECK(logmag(Scalar(5, 1L)) == L(0));
  CHECK(logmag(Scalar(5, frac(1, 25))) == L(2));
  CHECK(logmag(Scalar(5, 10L)) == L(-digit_valuation(10, 5)));
  CHECK(logmag(Scalar(5, 0L)).is_bottom());
  expect_error(ErrorCode::IndeterminateZero, [] { logmag(Scalar::from_unit(5, 3, 0, 0)); });
}

TEST_CASE("LogMag arithmetic and order") {
  CHECK(L(1) * L(2) == L(3));
  CHECK((LogMag::bottom() * L(4)).is_bottom());
  CHECK(LogMag::bottom() < L(-100));
  CHECK(L(100) < LogMag::top());
  CHECK((L(0) / LogMag::bottom()).is_top());
  CHECK(L(frac(1, 2)).pow(Rational(4)) == L(2));
  expect_error(ErrorCode::InvalidArgument, [] { (void)(LogMag::bottom() * LogMag::top()); });
}

TEST_CASE("hensel_sqrt") {
  for (int prec : kPrecisions) {
    PadicConfig cfg(5, prec);
    CHECK(hensel_sqrt(Scalar(5, 4L), cfg).rational() == 2);
    Scalar r = hensel_sqrt(Scalar(5, 6L), cfg);
    CHECK(reduce_mod_m(r) == 1);
    // Newton oracle: x_{k+1} = (x_k + 6/x_k)/2 from x_0 = 1, computed in exact rationals.
    Rational x = 1;
    for (int k = 0; k < 5; ++k) x = (x + 6 / x) / 2;
    Scalar diff = r - Scalar(5, x);
    CHECK((diff.is_indeterminate_zero() || logmag(diff) <= L(-16)));
    expect_error(ErrorCode::OddValuation, [&] { hensel_sqrt(Scalar(5, 10L), cfg); });
    expect_error(ErrorCode::NonResidue, [&] { hensel_sqrt(Scalar(5, 2L), cfg); });
  }
  expect_error(ErrorCode::EvenCharacteristic, [] { hensel_sqrt(Scalar(2, 9L), PadicConfig(2, 16)); });
}

TEST_CASE("hensel_sqrt squares back on random admissible units") {
  gen::Rng rng(11);
  for (int prec : kPrecisions) {
    for (int i = 0; i < 100; ++i) {
      std::int64_t p = std::vector<std::int64_t>{3, 5, 7, 11}[gen::uniform(rng, 0, 3)];
      PadicConfig cfg(p, prec);
      long a;
      do a = gen::uniform(rng, 1, 10000);
      while (a % p == 0 || legendre(Integer(a), p) != 1);
      Rational u = Rational(a) * rpow(p, 2 * gen::uniform(rng, -2, 2));
      Scalar s = hensel_sqrt(Scalar(p, u), cfg);
      Scalar err = s * s - Scalar(p, u);
      if (!err.is_exact_zero() && !err.is_indeterminate_zero()) CHECK(logmag(err) <= logmag(Scalar(p, u)) * L(-(prec - 2)));
      int first = s.digits(1)[0];
      CHECK(first >= 1);
      CHECK(2 * first < p);
    }
  }
}

TEST_CASE("Newton polygon examples") {
  auto np = [](std::vector<Rational> c) {
    std::vector<Scalar> s;
    for (auto& q : c) s.emplace_back(5, q);
    return newton_polygon_root_logmags(s);
  };
  // z^2 - z + 1/25: the points (0,-2),(1,0),(2,0) have one lower edge of slope 1,
  // so both roots have |z| = 5 (their product is 1/25 and their sum 1).
  auto r = np({frac(1, 25), -1, 1});
  REQUIRE(r.size() == 1);
  CHECK(r[0].magnitude == L(1));
  CHECK(r[0].multiplicity == 2);
  auto r2 = np({-5, 1});
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].magnitude == L(-1));
  auto r3 = np({1, 0, 1});
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].magnitude == L(0));
  CHECK(r3[0].multiplicity == 2);
  expect_error(ErrorCode::ZeroPolynomial, [&] { np({0, 0}); });
}

TEST_CASE("Newton polygon agrees with factored polynomials") {
  gen::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    std::int64_t p = 5;
    int deg = static_cast<int>(gen::uniform(rng, 1, 4));
    Poly f{Rational(gen::uniform(rng, 1, 9))};
    std::map<LogMag, int> want;
    for (int k = 0; k < deg; ++k) {
      Rational root = gen::rational(rng, p, 50, 2);
      f = f * Poly{-root, 1};
      want[logmag(Scalar(p, root))] += 1;
    }
    std::vector<Scalar> coeffs;
    for (auto& q : f) coeffs.emplace_back(p, q);
    std::map<LogMag, int> got;
    for (const auto& rm : newton_polygon_root_logmags(coeffs)) got[rm.magnitude] += rm.multiplicity;
    CHECK(got == want);
  }
}

TEST_CASE("reduce_mod_m") {
  CHECK(reduce_mod_m(Scalar(5, 7L)) == 2);
  // 6 * x = 1 mod 5 by search.
  long want = 0;
  for (long x = 0; x < 5; ++x)
    if ((6 * x) % 5 == 1) want = x;
  CHECK(reduce_mod_m(Scalar(5, frac(1, 6))) == want);
  expect_error(ErrorCode::NotIntegral, [] { reduce_mod_m(Scalar(5, frac(1, 5))); });
}

TEST_CASE("strong triangle and multiplicativity on sampled scalars") {
  gen::Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[gen::uniform(rng, 0, 2)];
    Scalar x(p, gen::rational(rng, p, 200, 3)), y(p, gen::rational(rng, p, 200, 3));
    LogMag a = logmag(x), b = logmag(y), s = logmag(x + y);
    CHECK(s <= max(a, b));
    if (a != b) CHECK(s == max(a, b));
    CHECK(logmag(x * y) == a * b);
  }
}

TEST_CASE("expansion arithmetic tracks precision") {
  for (int prec : kPrecisions) {
    Scalar x = Scalar::from_unit(5, 0, 1 + 5 * 3, prec);
    Scalar y = x - x;
    CHECK(y.is_indeterminate_zero());
    CHECK(*y.absolute_precision() == prec);
    Scalar z = x * Scalar(5, 25L);
    CHECK(z.valuation() == 2);
    CHECK(*z.absolute_precision() == prec + 2);
    CHECK(reduce_mod_m(x / Scalar(5, 2L)) == 3);
  }
}
