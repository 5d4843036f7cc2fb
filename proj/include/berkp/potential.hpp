#pragma once

#include "berkp/kernel.hpp"

#include <cstdint>
#include <vector>

namespace berkp {

/// An extended log_p value: finite exponent, Bottom for -inf, Top for +inf.
using LogValue = LogMag;

struct WeightedMeasure {
  std::vector<BerkPoint> support;
  std::vector<Rational> weights;
};

/// InvalidMeasure unless weights are nonnegative, sum to 1 and the support is distinct.
void validate(const WeightedMeasure& nu);

/// I = sum_ij w_i w_j log_p [S_i,S_j]_{S0}.
LogValue energy(const WeightedMeasure& nu, const BerkPoint& base);

/// p(S) = sum_i w_i log_p [S,S_i]_{S0}.
LogValue potential_value(const WeightedMeasure& nu, const BerkPoint& base, const BerkPoint& s);

/**
 * The hull of E u {S0} rooted at S0, with the data of the equilibrium problem.
 *
 * h is log_p [X,X]_{S0}; cap is the log-capacity of the part of E behind each
 * node; mass is the equilibrium mass behind each node; pot is the equilibrium
 * potential at each node.
 */
struct EquilibriumTree {
  HullTree hull;
  int root = -1;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  /// Root-first order.
  std::vector<int> order;
  std::vector<bool> in_e;
  std::vector<LogValue> h;
  std::vector<Rational> cap;
  std::vector<Rational> mass;
  std::vector<Rational> pot;
};

struct EquilibriumResult {
  WeightedMeasure measure;
  Rational log_capacity;
  Rational energy;
  BerkPoint base;
};

EquilibriumTree equilibrium_tree(const std::vector<BerkPoint>& e, const BerkPoint& base);

/// Equilibrium measure of a finite set of type II points with respect to S0.
EquilibriumResult equilibrium(const std::vector<BerkPoint>& e, const BerkPoint& base);

/// Same problem by exact linear solves over support subsets with KKT checks.
EquilibriumResult equilibrium_active_set(const std::vector<BerkPoint>& e, const BerkPoint& base);

/// log_p of the n-th transfinite diameter with pole infinity; Bottom for -inf.
LogValue transfinite_diameter(const std::vector<BerkPoint>& e, int n, std::uint64_t budget = 2000000);

/// G_{S0,E}(S) = p(S) - log Cap; Top at a type I pole.
LogValue green(const EquilibriumResult& eq, const BerkPoint& s);
LogValue green(const std::vector<BerkPoint>& e, const BerkPoint& base, const BerkPoint& s);

}  // namespace berkp
