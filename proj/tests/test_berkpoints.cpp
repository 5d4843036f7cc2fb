#include "helpers.hpp"

#include <algorithm>

using namespace berkp;
using namespace berkp::testing;

namespace {

// Membership oracle: B(a, p^q) contains B(b, p^s) iff s <= q and |a - b| <= p^q.
bool disk_contains(std::int64_t p, const Rational& a, const Rational& q, const Rational& b, const Rational& s) {
  return s <= q && (a == b || logmag(Scalar(p, Rational(a - b))) <= LogMag(q));
}

// Hull node set by brute force: the inputs and all pairwise wedges.
std::vector<BerkPoint> brute_nodes(const std::vector<BerkPoint>& pts) {
  std::vector<BerkPoint> out;
  auto add = [&](const BerkPoint& x) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    add(pts[i]);
    for (std::size_t j = i + 1; j < pts.size(); ++j) add(wedge(pts[i], pts[j]));
  }
  return out;
}

}  // namespace

TEST_CASE("compare examples") {
  std::int64_t p = 5;
  CHECK(compare(Z(p, 0, -1), BerkPoint::gauss(p)) == Order::Less);
  CHECK(compare(Z(p, 0, 0), Z(p, 1, 0)) == Order::Equal);
  CHECK(compare(Z(p, 0, -1), Z(p, 1, -1)) == Order::Incomparable);
  CHECK(!disk_contains(p, 0, -1, 1, -1));
  CHECK(!disk_contains(p, 1, -1, 0, -1));
  CHECK(compare(Z(p, 3, 2), inf(p)) == Order::Less);
  CHECK(compare(inf(p), pt(p, 7)) == Order::Greater);
}

TEST_CASE("disk identity normalization") {
  std::int64_t p = 5;
  CHECK(Z(p, frac(1, 5), 1) == Z(p, frac(1, 5) + 5, Rational(1)));
  CHECK(Z(p, 0, 0) == Z(p, 1234, 0));
  CHECK(!(Z(p, frac(1, 5), 0) == Z(p, 0, 0)));
  CHECK(Z(p, 7, 0).center().rational() == 0);
}

TEST_CASE("wedge, hsia_inf and rho examples") {
  std::int64_t p = 5;
  BerkPoint g = BerkPoint::gauss(p);
  CHECK(wedge(Z(p, 0, -1), Z(p, 1, -1)) == g);
  CHECK(wedge(Z(p, 3, -2), Z(p, 3, -2)) == Z(p, 3, -2));
  CHECK(wedge(Z(p, 0, -2), g) == g);
  CHECK(wedge(Z(p, 0, -2), inf(p)) == inf(p));
  CHECK(hsia_inf(Z(p, 0, -1), Z(p, 1, -1)) == L(0));
  CHECK(hsia_inf(pt(p, 3), pt(p, 3)).is_bottom());
  CHECK(hsia_inf(g, g) == L(0));
  expect_error(ErrorCode::InfinityOperand, [&] { hsia_inf(g, inf(p)); });
  CHECK(rho(g, Z(p, 0, -2)) == 2);
  CHECK(rho(Z(p, 0, -1), Z(p, 1, -1)) == 2);
  CHECK(rho(g, g) == 0);
  expect_error(ErrorCode::ClassicalPoint, [&] { rho(g, pt(p, 0)); });
}

TEST_CASE("hull_tree examples") {
  std::int64_t p = 5;
  BerkPoint g = BerkPoint::gauss(p);
  HullTree t1 = hull_tree({Z(p, 0, -2), g});
  REQUIRE(t1.edges().size() == 1);
  CHECK(*t1.edges()[0].length == 2);

  HullTree t2 = hull_tree({Z(p, 0, -1), Z(p, 1, -1)});
  REQUIRE(t2.nodes.size() == 3);
  CHECK(t2.nodes[t2.root].point == g);
  CHECK(!t2.nodes[t2.root].input);
  for (const auto& e : t2.edges()) CHECK(*e.length == 1);

  HullTree t3 = hull_tree({Z(p, 0, -1), Z(p, 1, -1), g});
  REQUIRE(t3.nodes.size() == 3);
  CHECK(t3.nodes[t3.root].input);

  expect_error(ErrorCode::EmptyInput, [] { hull_tree({}); });

  HullTree t4 = hull_tree({Z(p, 0, -1), inf(p)});
  bool infinite_edge = false;
  for (const auto& e : t4.edges()) infinite_edge = infinite_edge || !e.length;
  CHECK(infinite_edge);
}

TEST_CASE("order consistency, diameter inequality and strong triangle") {
  gen::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[gen::uniform(rng, 0, 2)];
    BerkPoint a = gen::disk(rng, p), b = gen::disk(rng, p), c = gen::disk(rng, p);
    bool less = compare(a, b) == Order::Less;
    CHECK(less == (wedge(a, b) == b && !(a == b)));
    CHECK(less == (disk_contains(p, b.center().rational(), b.logr(), a.center().rational(), a.logr()) &&
                   !(a == b)));
    CHECK(hsia_inf(a, b) >= max(a.diam(), b.diam()));
    CHECK(hsia_inf(a, b) <= max(hsia_inf(a, c), hsia_inf(c, b)));
    CHECK(rho(a, b) == rho(b, a));
    CHECK((rho(a, b) == 0) == (a == b));
  }
}

TEST_CASE("rho is additive along intervals") {
  gen::Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    std::int64_t p = 5;
    BerkPoint a = gen::disk(rng, p), b = gen::disk(rng, p);
    BerkPoint w = wedge(a, b);
    // A point on [a, w] by radius interpolation.
    Rational t = frac(gen::uniform(rng, 0, 4), 4);
    BerkPoint mid = raise_to(a, a.logr() + t * (w.logr() - a.logr()));
    CHECK(rho(a, b) == rho(a, mid) + rho(mid, b));
    CHECK(rho(a, b) == rho(a, w) + rho(w, b));
  }
}

TEST_CASE("hull_tree matches the brute-force node set and path lengths") {
  gen::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5}[gen::uniform(rng, 0, 1)];
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 7));
    std::vector<BerkPoint> pts = gen::disk_set(rng, p, n);
    HullTree t = hull_tree(pts);
    std::vector<BerkPoint> brute = brute_nodes(pts);
    CHECK(t.nodes.size() == brute.size());
    for (const auto& node : t.nodes) CHECK(std::find(brute.begin(), brute.end(), node.point) != brute.end());
    CHECK(t.edges().size() + 1 == t.nodes.size());
    for (const auto& e : t.edges()) CHECK(*e.length == rho(t.nodes[e.a].point, t.nodes[e.b].point));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        CHECK(*t.path_length(t.input_index[a], t.input_index[b]) == rho(pts[a], pts[b]));
    // No edge interior contains a node.
    for (const auto& e : t.edges()) {
      const BerkPoint& lo = t.nodes[e.a].point;
      const BerkPoint& hi = t.nodes[e.b].point;
      for (const auto& node : t.nodes) {
        if (node.point == lo || node.point == hi) continue;
        bool on_edge = rho(lo, node.point) + rho(node.point, hi) == rho(lo, hi);
        CHECK(!on_edge);
      }
    }
  }
}

TEST_CASE("directions") {
  std::int64_t p = 5;
  BerkPoint g = BerkPoint::gauss(p);
  CHECK(same_direction(g, pt(p, 0), Z(p, 5, -3)));
  CHECK(!same_direction(g, pt(p, 0), pt(p, 1)));
  CHECK(same_direction(g, inf(p), Z(p, 0, 4)));
  CHECK(same_direction(g, inf(p), Z(p, frac(1, 5), -1)));
  CHECK(!direction(g, pt(p, 2)).up);
  CHECK(direction(g, pt(p, 2)).residue == 2);
}
