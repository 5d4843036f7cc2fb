#pragma once

#include "berkp/dynamics.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace berkp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the acceptance criteria 1..10; every random choice derives from the seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

CriterionResult run_criterion(int id, std::uint64_t seed);

namespace gen {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long uniform(Rng& rng, long lo, long hi);
/// a / p^k with |a| <= num_max and 0 <= k <= max_den_power.
Rational rational(Rng& rng, std::int64_t p, long num_max, int max_den_power);
/// zeta(a, p^q) with q in [-4, 3] in steps of 1/den.
BerkPoint disk(Rng& rng, std::int64_t p, int den = 2);
/// n distinct disk points.
std::vector<BerkPoint> disk_set(Rng& rng, std::int64_t p, std::size_t n, int den = 2);
BerkPoint classical(Rng& rng, std::int64_t p);
/// (a z + b) / (c z + d) with integer entries and unit determinant.
RationalMap integral_mobius(Rng& rng, std::int64_t p);

}  // namespace gen

}  // namespace berkp
