#include "helpers.hpp"

using namespace berkp;
using namespace berkp::testing;

namespace {

// Chordal metric straight from the defining formula on rationals.
LogMag chordal_oracle(std::int64_t p, const std::optional<Rational>& z, const std::optional<Rational>& w) {
  auto abs = [&](const Rational& x) { return x == 0 ? LogMag::bottom() : LogMag(Rational(-valuation(x, p))); };
  auto big = [&](const std::optional<Rational>& x) { return max(LogMag::one(), abs(*x)); };
  if (!z && !w) return LogMag::bottom();
  if (!z) return LogMag::one() / big(w);
  if (!w) return LogMag::one() / big(z);
  return abs(Rational(*z - *w)) / (big(z) * big(w));
}

std::optional<Rational> random_p1(gen::Rng& rng, std::int64_t p) {
  if (gen::uniform(rng, 0, 9) == 0) return std::nullopt;
  return gen::rational(rng, p, 400, 3);
}

BerkPoint as_point(std::int64_t p, const std::optional<Rational>& z) { return z ? pt(p, *z) : inf(p); }

}  // namespace

TEST_CASE("chordal examples") {
  std::int64_t p = 5;
  CHECK(chordal(pt(p, 0), inf(p)) == L(0));
  CHECK(chordal(pt(p, 0), pt(p, 5)) == L(-1));
  CHECK(chordal(pt(p, frac(1, 5)), inf(p)) == L(-1));
  CHECK(chordal(pt(p, 3), pt(p, 3)).is_bottom());
  expect_error(ErrorCode::InvalidArgument, [&] { chordal(BerkPoint::gauss(p), pt(p, 0)); });
}

TEST_CASE("hsia_gauss examples and restriction to chordal") {
  std::int64_t p = 5;
  BerkPoint g = BerkPoint::gauss(p);
  CHECK(hsia_gauss(g, g) == L(0));
  CHECK(hsia_gauss(Z(p, 0, -1), Z(p, 0, -1)) == L(-1));
  CHECK(hsia_gauss(pt(p, 0), pt(p, 1)) == L(0));
  CHECK(hsia_gauss(inf(p), inf(p)).is_bottom());
  gen::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    auto z = random_p1(rng, p), w = random_p1(rng, p);
    CHECK(hsia_gauss(as_point(p, z), as_point(p, w)) == chordal_oracle(p, z, w));
    CHECK(chordal(as_point(p, z), as_point(p, w)) == chordal_oracle(p, z, w));
  }
}

TEST_CASE("[S,S]_g = p^-rho(S_g, S)") {
  gen::Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[gen::uniform(rng, 0, 2)];
    BerkPoint s = gen::disk(rng, p);
    CHECK(hsia_gauss(s, s) == L(Rational(-rho(BerkPoint::gauss(p), s))));
  }
}

TEST_CASE("hsia_rel examples") {
  std::int64_t p = 5;
  BerkPoint a = Z(p, 0, -1), b = Z(p, 1, -1);
  CHECK(hsia_rel(a, b, inf(p)) == hsia_inf(a, b));
  CHECK(hsia_rel(a, b, inf(p)) == L(0));
  CHECK(hsia_rel(pt(p, 3), pt(p, 3), pt(p, 3)).is_top());
  CHECK(hsia_rel(pt(p, 0), pt(p, 1), BerkPoint::gauss(p)) == L(0));
  gen::Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    BerkPoint s = gen::disk(rng, p), t = gen::disk(rng, p);
    CHECK(hsia_rel(s, t, inf(p)) == hsia_inf(s, t));
  }
}

TEST_CASE("gromov_product examples") {
  std::int64_t p = 5;
  BerkPoint g = BerkPoint::gauss(p);
  CHECK(gromov_product(g, g, g) == 0);
  CHECK(gromov_product(Z(p, 0, -1), Z(p, 1, -1), g) == 0);
  CHECK(gromov_product(Z(p, 0, -1), Z(p, 0, -2), g) == 1);
  expect_error(ErrorCode::ClassicalPoint, [&] { gromov_product(g, g, pt(p, 0)); });
}

TEST_CASE("Gromov identity, ultrametric inequalities and Moebius invariance") {
  gen::Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[gen::uniform(rng, 0, 2)];
    BerkPoint s = gen::disk(rng, p), t = gen::disk(rng, p), o = gen::disk(rng, p), x = gen::disk(rng, p);
    CHECK(gromov_product(s, t, o) == -hsia_rel(s, t, o).exponent() + rho(BerkPoint::gauss(p), o));
    CHECK(hsia_rel(s, t, o) <= max(hsia_rel(s, x, o), hsia_rel(x, t, o)));
    CHECK(hsia_rel(s, t, o) == hsia_rel(t, s, o));
  }
  for (int i = 0; i < 20; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[gen::uniform(rng, 0, 2)];
    RationalMap m = gen::integral_mobius(rng, p);
    for (int k = 0; k < 10; ++k) {
      BerkPoint s = k % 3 == 0 ? gen::classical(rng, p) : gen::disk(rng, p);
      BerkPoint t = gen::disk(rng, p), o = gen::disk(rng, p);
      CHECK(hsia_rel(image_point(m, s), image_point(m, t), image_point(m, o)) == hsia_rel(s, t, o));
      CHECK(hsia_gauss(image_point(m, s), image_point(m, t)) == hsia_gauss(s, t));
    }
  }
}

TEST_CASE("uniform comparison with [S0,S0]_g") {
  gen::Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    std::int64_t p = 5;
    std::vector<BerkPoint> e = gen::disk_set(rng, p, 4);
    BerkPoint o = gen::disk(rng, p);
    LogMag d = hsia_gauss(o, o);
    LogMag inf_e = LogMag::top();
    for (const auto& x : e) inf_e = min(inf_e, hsia_gauss(x, inf(p)));
    for (const auto& s : e)
      for (const auto& t : e) {
        LogMag rel = hsia_rel(s, t, o);
        CHECK(d * d * rel <= hsia_inf(s, t));
        CHECK(hsia_inf(s, t) * inf_e * inf_e <= hsia_gauss(s, t));
      }
  }
}

TEST_CASE("balls") {
  std::int64_t p = 5;
  BerkBall b = hsia_ball(Z(p, 0, -2), L(-1));
  CHECK(b.contains(Z(p, 5, -1)));
  CHECK(!b.contains(Z(p, 1, -1)));
  BerkBall c = chordal_ball(pt(p, 0), L(-1));
  CHECK(c.contains(pt(p, 5)));
  CHECK(!c.contains(pt(p, 1)));
  CHECK(*chordal_ball_top(pt(p, 0), L(-1)) == Z(p, 0, -1));
  CHECK(*chordal_ball_top(pt(p, frac(1, 5)), L(-3)) == Z(p, frac(1, 5), Rational(-1)));
  CHECK(!chordal_ball_top(pt(p, 0), L(0)));
  CHECK(invert_point(Z(p, 0, -1)) == Z(p, 0, 1));
  CHECK(invert_point(Z(p, 5, -2)) == Z(p, frac(1, 5), Rational(0)));
  gen::Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    BerkPoint a = gen::classical(rng, p);
    LogMag delta = L(-gen::uniform(rng, 1, 6));
    BerkPoint top = chordal_ball_boundary(a, delta);
    CHECK(chordal_ball(a, delta).contains(top));
    // Leaving the ball upward from the boundary point exits.
    if (auto t = chordal_ball_top(a, delta)) CHECK(!chordal_ball(a, delta).contains(raise_to(*t, t->logr() + 1)));
  }
}
