#include "helpers.hpp"

#include "berkp/annulus.hpp"

#include <algorithm>

using namespace berkp;
using namespace berkp::testing;

namespace {

// Largest separating modulus over concentric annuli whose endpoints are hull nodes or edge
// points at quarter steps; every candidate is checked with separates().
Rational brute_c_e(const std::vector<BerkPoint>& e) {
  HullTree t = hull_tree(e);
  std::vector<BerkPoint> cand;
  for (const auto& edge : t.edges()) {
    const BerkPoint& lo = t.nodes[edge.b].point;
    const BerkPoint& hi = t.nodes[edge.a].point;
    const BerkPoint& below = precedes(lo, hi) ? lo : hi;
    const BerkPoint& above = precedes(lo, hi) ? hi : lo;
    for (int k = 0; k <= 4; ++k)
      cand.push_back(raise_to(below, below.logr() + frac(k, 4) * (above.logr() - below.logr())));
  }
  for (const auto& n : t.nodes) cand.push_back(n.point);
  for (const auto& x : e) {
    cand.push_back(BerkPoint::disk(x.center(), x.logr() - 1));
  }
  Rational best = 0;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = 0; j < cand.size(); ++j) {
      if (cand[i] == cand[j] || !precedes(cand[i], cand[j])) continue;
      Annulus a = make_annulus(cand[i], cand[j]);
      if (separates(a, e) && modulus(a) > best) best = modulus(a);
    }
  return best;
}

}  // namespace

TEST_CASE("modulus examples") {
  std::int64_t p = 5;
  BerkPoint g = BerkPoint::gauss(p);
  CHECK(modulus(make_annulus(Z(p, 0, -2), g)) == 2);
  CHECK(modulus(make_annulus(Z(p, 0, -1), Z(p, 1, -1))) == 2);
  CHECK(modulus(make_annulus(Z(p, 0, -2), Z(p, 0, -1))) + modulus(make_annulus(Z(p, 0, -1), g)) == 2);
  expect_error(ErrorCode::DegenerateAnnulus, [&] { make_annulus(g, g); });
  expect_error(ErrorCode::DegenerateAnnulus, [&] { make_annulus(g, pt(p, 0)); });
}

TEST_CASE("separates examples") {
  std::int64_t p = 5;
  BerkPoint g = BerkPoint::gauss(p);
  CHECK(separates(make_annulus(Z(p, 0, -1), g), {Z(p, 0, -2), g}));
  CHECK(!separates(make_annulus(Z(p, 0, -1), g), {g}));
  CHECK(!separates(make_annulus(Z(p, 0, -2), g), {Z(p, 0, -2), Z(p, 0, -1), g}));
  CHECK(in_annulus(make_annulus(Z(p, 0, -2), g), Z(p, 0, -1)));
  CHECK(!in_annulus(make_annulus(Z(p, 0, -2), g), Z(p, 1, -1)));
}

TEST_CASE("bounded_moduli_constant examples") {
  std::int64_t p = 5;
  BerkPoint g = BerkPoint::gauss(p);
  CHECK(*bounded_moduli_constant({g}) == 0);
  CHECK(*bounded_moduli_constant({Z(p, 0, -2), g}) == 2);
  CHECK(!bounded_moduli_constant({pt(p, 0), pt(p, 1)}));
  // The concentric annuli A(zeta(0,p^-k), zeta(0,p^-1)) separate {0, 1} with moduli k - 1.
  for (long k = 2; k < 10; ++k)
    CHECK(separates(make_annulus(Z(p, 0, -k), Z(p, 0, -1)), {pt(p, 0), pt(p, 1)}));
  expect_error(ErrorCode::EmptyInput, [] { bounded_moduli_constant({}); });
}

TEST_CASE("annuli through infinity") {
  // A(zeta(0,p^-2), zeta(1,p^-2)) contains infinity and separates the pair with modulus 4,
  // while every concentric separating annulus has modulus at most 2.
  std::int64_t p = 5;
  std::vector<BerkPoint> e{Z(p, 0, -2), Z(p, 1, -2)};
  Annulus a = make_annulus(e[0], e[1]);
  CHECK(in_annulus(a, inf(p)));
  CHECK(separates(a, e));
  CHECK(modulus(a) == 4);
  CHECK(*bounded_moduli_constant(e) == 2);
}

TEST_CASE("c_E equals the brute-force supremum on small sets") {
  gen::Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5}[gen::uniform(rng, 0, 1)];
    std::vector<BerkPoint> e = gen::disk_set(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 6)));
    CHECK(*bounded_moduli_constant(e) == brute_c_e(e));
  }
}

TEST_CASE("modulus additivity and Moebius invariance") {
  gen::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    std::int64_t p = 5;
    BerkPoint a = gen::disk(rng, p);
    Rational up = frac(gen::uniform(rng, 2, 8), 2);
    Rational cut = up * frac(gen::uniform(rng, 1, 3), 4);
    BerkPoint b = raise_to(a, a.logr() + up), mid = raise_to(a, a.logr() + cut);
    CHECK(modulus(make_annulus(a, b)) == modulus(make_annulus(a, mid)) + modulus(make_annulus(mid, b)));
  }
  for (int i = 0; i < 20; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[gen::uniform(rng, 0, 2)];
    RationalMap m = gen::integral_mobius(rng, p);
    for (int k = 0; k < 5; ++k) {
      BerkPoint a = gen::disk(rng, p), b = gen::disk(rng, p);
      if (a == b) continue;
      CHECK(modulus(make_annulus(image_point(m, a), image_point(m, b))) == modulus(make_annulus(a, b)));
    }
  }
}

TEST_CASE("adding a point inside the hull never increases c_E") {
  gen::Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    std::int64_t p = 5;
    std::vector<BerkPoint> e = gen::disk_set(rng, p, 4);
    HullTree t = hull_tree(e);
    const auto edges = t.edges();
    const auto& edge = edges[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(edges.size()) - 1))];
    const BerkPoint& x = t.nodes[edge.a].point;
    const BerkPoint& y = t.nodes[edge.b].point;
    const BerkPoint& lo = precedes(x, y) ? x : y;
    const BerkPoint& hi = precedes(x, y) ? y : x;
    BerkPoint inside = raise_to(lo, lo.logr() + (hi.logr() - lo.logr()) / 2);
    std::vector<BerkPoint> bigger = e;
    if (std::find(bigger.begin(), bigger.end(), inside) == bigger.end()) bigger.push_back(inside);
    CHECK(*bounded_moduli_constant(bigger) <= *bounded_moduli_constant(e));
  }
}
