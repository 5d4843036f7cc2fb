#pragma once

#include "berkp/point.hpp"

#include <optional>

namespace berkp {

/// |S - 0|_inf = max(diam S, |center|); InfinityOperand for infinity.
LogMag abs_point(const BerkPoint& s);

/// Chordal distance on P^1(Q_p); both arguments type I.
LogMag chordal(const BerkPoint& z, const BerkPoint& w);

/// Hsia kernel with respect to the Gauss point, extending the chordal metric.
LogMag hsia_gauss(const BerkPoint& s, const BerkPoint& t);

/// [S,S']_{S0} = [S,S']_g / ([S,S0]_g [S',S0]_g); Top when the denominator vanishes.
LogMag hsia_rel(const BerkPoint& s, const BerkPoint& t, const BerkPoint& base);

/// rho(S0, S wedge_{S0} S') for S, S', S0 in H^1.
Rational gromov_product(const BerkPoint& s, const BerkPoint& t, const BerkPoint& base);

struct BerkBall {
  enum class Flavor { Hsia, Chordal };
  Flavor flavor = Flavor::Hsia;
  BerkPoint center;
  LogMag radius;

  bool contains(const BerkPoint& x) const;
};

BerkBall hsia_ball(const BerkPoint& center, const LogMag& radius);
BerkBall chordal_ball(const BerkPoint& a, const LogMag& delta);

/// The maximal point of B_#(a, delta), or nullopt when the ball contains infinity.
std::optional<BerkPoint> chordal_ball_top(const BerkPoint& a, const LogMag& delta);

/// Image under z -> 1/z.
BerkPoint invert_point(const BerkPoint& s);

/// The boundary point of B_#(a, delta) for delta < 1: the top, or its mirror when the ball holds infinity.
BerkPoint chordal_ball_boundary(const BerkPoint& a, const LogMag& delta);

}  // namespace berkp
