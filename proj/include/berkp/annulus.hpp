#pragma once

#include "berkp/point.hpp"

#include <optional>
#include <vector>

namespace berkp {

/// The open annulus A(S,S') between two distinct points of H^1.
struct Annulus {
  BerkPoint inner;
  BerkPoint outer;
};

/// Validates the endpoints; DegenerateAnnulus unless distinct points of H^1.
Annulus make_annulus(const BerkPoint& s, const BerkPoint& t);

Rational modulus(const Annulus& a);

bool in_annulus(const Annulus& a, const BerkPoint& x);

/// No point of E inside, and both complementary components meet E.
bool separates(const Annulus& a, const std::vector<BerkPoint>& e);

/// Supremum of moduli of annuli separating E; nullopt stands for +infinity.
std::optional<Rational> bounded_moduli_constant(const std::vector<BerkPoint>& e);

}  // namespace berkp
