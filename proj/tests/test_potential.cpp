#include "helpers.hpp"

#include <algorithm>

using namespace berkp;
using namespace berkp::testing;

namespace {

// Maximum of the energy over the simplex grid with step 1/60.
Rational grid_max_energy(const std::vector<BerkPoint>& e, const BerkPoint& base, std::vector<Rational>& arg) {
  const int steps = 60;
  std::size_t n = e.size();
  std::vector<std::vector<Rational>> k(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k[i][j] = hsia_rel(e[i], e[j], base).exponent();
  std::optional<Rational> best;
  std::vector<int> c(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      c[i] = left;
      Rational en = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) en += Rational(c[a] * c[b]) * k[a][b];
      en /= steps * steps;
      if (!best || en > *best) {
        best = en;
        arg.clear();
        for (int x : c) arg.push_back(frac(x, steps));
      }
      return;
    }
    for (int x = 0; x <= left; ++x) {
      c[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, steps);
  return *best;
}

}  // namespace

TEST_CASE("energy and potential examples") {
  std::int64_t p = 5;
  BerkPoint g = BerkPoint::gauss(p);
  CHECK(energy({{g}, {1}}, inf(p)) == L(0));
  CHECK(energy({{Z(p, 0, -2)}, {1}}, inf(p)) == L(-2));
  WeightedMeasure pair{{Z(p, 0, -1), Z(p, 1, -1)}, {frac(1, 2), frac(1, 2)}};
  CHECK(energy(pair, inf(p)) == L(frac(-1, 2)));
  CHECK(potential_value({{g}, {1}}, inf(p), Z(p, 0, -3)) == L(0));
  CHECK(potential_value(pair, inf(p), g) == L(0));
  BerkPoint o = Z(p, 3, 1);
  CHECK(potential_value(pair, o, o) == L(Rational(-hsia_gauss(o, o).exponent())));
  expect_error(ErrorCode::BasePointInSupport, [&] { energy({{g}, {1}}, g); });
  CHECK(energy({{pt(p, 0)}, {1}}, inf(p)).is_bottom());
}

TEST_CASE("equilibrium examples") {
  std::int64_t p = 5;
  auto eq1 = equilibrium({Z(p, 0, -2)}, inf(p));
  CHECK(eq1.log_capacity == -2);
  CHECK(eq1.measure.weights == std::vector<Rational>{1});

  auto eq2 = equilibrium({Z(p, 0, -1), Z(p, 1, -1)}, inf(p));
  CHECK(eq2.log_capacity == frac(-1, 2));
  CHECK(eq2.measure.weights == std::vector<Rational>{frac(1, 2), frac(1, 2)});

  // Energy of (t, 1 - t) is -t^2 - 2 (1 - t)^2, maximal at t = 2/3.
  std::vector<BerkPoint> e3{Z(p, 0, -1), Z(p, 1, -2)};
  auto eq3 = equilibrium(e3, inf(p));
  CHECK(eq3.log_capacity == frac(-2, 3));
  CHECK(eq3.measure.weights == std::vector<Rational>{frac(2, 3), frac(1, 3)});
  std::vector<Rational> arg;
  CHECK(grid_max_energy(e3, inf(p), arg) == frac(-2, 3));
  CHECK(arg == eq3.measure.weights);

  expect_error(ErrorCode::MixedTypes, [&] { equilibrium({pt(p, 0)}, inf(p)); });
  expect_error(ErrorCode::BaseInE, [&] { equilibrium({Z(p, 0, 0)}, Z(p, 0, 0)); });
}

TEST_CASE("equilibrium matches the simplex grid oracle and the active-set solver") {
  gen::Rng rng(51);
  for (int i = 0; i < 40; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[gen::uniform(rng, 0, 2)];
    std::vector<BerkPoint> e = gen::disk_set(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 3)));
    BerkPoint base = gen::uniform(rng, 0, 1) ? inf(p) : gen::disk(rng, p);
    if (std::find(e.begin(), e.end(), base) != e.end()) continue;
    auto eq = equilibrium(e, base);
    std::vector<Rational> arg;
    Rational grid = grid_max_energy(e, base, arg);
    CHECK(eq.energy >= grid);
    CHECK(eq.energy == eq.log_capacity);
    bool on_grid = std::all_of(eq.measure.weights.begin(), eq.measure.weights.end(),
                               [](const Rational& w) { return Rational(w * 60).get_den() == 1; });
    if (on_grid) CHECK(eq.energy == grid);
  }
  for (int i = 0; i < 60; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[gen::uniform(rng, 0, 2)];
    std::vector<BerkPoint> e = gen::disk_set(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 8)));
    BerkPoint base = gen::uniform(rng, 0, 1) ? inf(p) : gen::disk(rng, p);
    if (std::find(e.begin(), e.end(), base) != e.end()) continue;
    auto a = equilibrium(e, base);
    auto b = equilibrium_active_set(e, base);
    CHECK(a.log_capacity == b.log_capacity);
    CHECK(a.measure.weights == b.measure.weights);
  }
}

TEST_CASE("Frostman properties") {
  gen::Rng rng(52);
  for (int i = 0; i < 60; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5}[gen::uniform(rng, 0, 1)];
    std::vector<BerkPoint> e = gen::disk_set(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 6)));
    BerkPoint base = gen::disk(rng, p);
    if (std::any_of(e.begin(), e.end(), [&](const BerkPoint& x) { return precedes(base, x); })) continue;
    auto eq = equilibrium(e, base);
    validate(eq.measure);
    LogMag v(eq.log_capacity);
    for (std::size_t k = 0; k < e.size(); ++k) {
      LogMag pot = potential_value(eq.measure, base, eq.measure.support[k]);
      if (eq.measure.weights[k] > 0) CHECK(pot == v);
      CHECK(pot >= v);
    }
    LogMag top(Rational(-hsia_gauss(base, base).exponent()));
    CHECK(potential_value(eq.measure, base, base) == top);
    for (int k = 0; k < 10; ++k) CHECK(potential_value(eq.measure, base, gen::disk(rng, p)) <= top);
  }
}

TEST_CASE("capacity is monotone under inclusion") {
  gen::Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    std::int64_t p = 5;
    std::vector<BerkPoint> big = gen::disk_set(rng, p, 6);
    std::vector<BerkPoint> small(big.begin(), big.begin() + gen::uniform(rng, 1, 5));
    CHECK(equilibrium(small, inf(p)).log_capacity <= equilibrium(big, inf(p)).log_capacity);
  }
}

TEST_CASE("equilibrium is transported by integral Moebius maps") {
  gen::Rng rng(54);
  for (int i = 0; i < 20; ++i) {
    std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[gen::uniform(rng, 0, 2)];
    RationalMap m = gen::integral_mobius(rng, p);
    std::vector<BerkPoint> e = gen::disk_set(rng, p, 4);
    BerkPoint base = gen::disk(rng, p);
    if (std::find(e.begin(), e.end(), base) != e.end()) continue;
    std::vector<BerkPoint> me;
    for (const auto& x : e) me.push_back(image_point(m, x));
    auto a = equilibrium(e, base);
    auto b = equilibrium(me, image_point(m, base));
    CHECK(a.log_capacity == b.log_capacity);
    CHECK(a.measure.weights == b.measure.weights);
  }
}

TEST_CASE("transfinite diameter") {
  std::int64_t p = 5;
  for (int n = 2; n <= 6; ++n) CHECK(transfinite_diameter({Z(p, 0, -3)}, n) == L(-3));
  CHECK(transfinite_diameter({pt(p, 0), pt(p, 1)}, 3).is_bottom());
  std::vector<BerkPoint> pair{Z(p, 0, -1), Z(p, 1, -1)};
  CHECK(transfinite_diameter(pair, 4) == L(frac(-1, 3)));
  gen::Rng rng(55);
  for (int i = 0; i < 15; ++i) {
    std::vector<BerkPoint> e = gen::disk_set(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 3)));
    Rational v = equilibrium(e, inf(p)).log_capacity;
    std::optional<LogMag> prev;
    for (int n = 2; n <= 8; ++n) {
      LogMag d = transfinite_diameter(e, n);
      CHECK(d >= L(v));
      if (prev) CHECK(d <= *prev);
      prev = d;
    }
  }
  expect_error(ErrorCode::TooLarge, [&] { transfinite_diameter(gen::disk_set(rng, p, 8), 12, 1000); });
}

TEST_CASE("green examples") {
  std::int64_t p = 5;
  std::vector<BerkPoint> e{Z(p, 0, -2)};
  CHECK(green(e, inf(p), Z(p, 0, -3)) == L(0));
  CHECK(green(e, inf(p), BerkPoint::gauss(p)) == L(2));
  CHECK(green(e, inf(p), e[0]) == L(0));
  CHECK(green(e, inf(p), inf(p)).is_top());
  gen::Rng rng(56);
  for (int i = 0; i < 40; ++i) {
    std::vector<BerkPoint> s = gen::disk_set(rng, p, 3);
    auto eq = equilibrium(s, inf(p));
    for (int k = 0; k < 5; ++k) CHECK(green(eq, gen::disk(rng, p)) >= L(0));
  }
}
