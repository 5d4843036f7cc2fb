#pragma once

#include "berkp/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace berkp {

/**
 * A point of the Berkovich projective line: infinity, a classical point a,
 * or the disk point zeta(a, p^logr).
 *
 * Disk points are stored with a canonical rational center (the digits of a
 * below position ceil(-logr)), so structural equality is disk identity.
 */
class BerkPoint {
 public:
  enum class Kind { Infinity, Classical, Disk };

  static BerkPoint infinity(std::int64_t p);
  static BerkPoint classical(Scalar a);
  static BerkPoint disk(const Scalar& a, const Rational& logr);
  /// The Gauss point zeta(0, 1).
  static BerkPoint gauss(std::int64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_infinity() const noexcept { return kind_ == Kind::Infinity; }
  bool is_classical() const noexcept { return kind_ == Kind::Classical; }
  bool is_disk() const noexcept { return kind_ == Kind::Disk; }
  /// Type I (classical or infinity) points are 1, disk points 2.
  int type() const noexcept { return is_disk() ? 2 : 1; }
  std::int64_t prime() const noexcept { return p_; }

  /// Center; throws InfinityOperand for infinity.
  const Scalar& center() const;
  /// log_p radius; throws ClassicalPoint unless a disk point.
  const Rational& logr() const;
  /// diam as a magnitude: Bottom for classical points.
  LogMag diam() const;

  friend bool operator==(const BerkPoint& a, const BerkPoint& b);

  std::string debug_string() const;

 private:
  BerkPoint(std::int64_t p, Kind k, Scalar c, Rational r)
      : p_(p), kind_(k), center_(std::move(c)), logr_(std::move(r)) {}

  std::int64_t p_;
  Kind kind_;
  Scalar center_;
  Rational logr_;
};

enum class Order { Less, Equal, Greater, Incomparable };

/// |a - b| where a difference known only to be small counts as zero.
LogMag gap(const Scalar& a, const Scalar& b);

/// Disk inclusion; infinity is the maximum.
Order compare(const BerkPoint& s, const BerkPoint& t);
/// S below or equal to T.
bool precedes(const BerkPoint& s, const BerkPoint& t);
/// Least upper bound; infinity absorbs.
BerkPoint wedge(const BerkPoint& s, const BerkPoint& t);
/// Wedge of a nonempty set.
BerkPoint wedge_all(const std::vector<BerkPoint>& pts);
/// Meeting point of the three geodesics between a, b, c.
BerkPoint median(const BerkPoint& a, const BerkPoint& b, const BerkPoint& c);

/// |S - S'|_inf = diam(S wedge S'); InfinityOperand for infinity.
LogMag hsia_inf(const BerkPoint& s, const BerkPoint& t);
/// Hyperbolic distance in log_p units; ClassicalPoint for type I arguments.
Rational rho(const BerkPoint& s, const BerkPoint& t);

/// The germ of the path from `at` toward another point, up to equivalence.
struct Direction {
  bool up = true;
  /// Digits of the residue class when pointing down.
  Rational residue;
  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Direction at `at` containing `toward` (toward != at).
Direction direction(const BerkPoint& at, const BerkPoint& toward);
bool same_direction(const BerkPoint& at, const BerkPoint& x, const BerkPoint& y);

/// The ancestor zeta(center(x), p^logr) of a finite point x; needs logr >= logr(x).
BerkPoint raise_to(const BerkPoint& x, const Rational& logr);

struct HullNode {
  BerkPoint point;
  bool input = false;
  int parent = -1;
  std::vector<int> children;
  /// rho to the parent; nullopt for an infinite edge (type I endpoint).
  std::optional<Rational> edge_length;
};

struct HullEdge {
  int a = 0;
  int b = 0;
  std::optional<Rational> length;
};

/**
 * Finite tree spanned by a point set, rooted toward infinity.
 *
 * Nodes are the distinct inputs and their pairwise wedges; an input infinity
 * becomes an ideal root joined by an infinite edge.
 */
struct HullTree {
  std::vector<HullNode> nodes;
  int root = -1;
  /// Node holding each input point, by input position.
  std::vector<int> input_index;

  std::vector<HullEdge> edges() const;
  /// Sum of edge lengths on the path between two nodes; nullopt if any edge is infinite.
  std::optional<Rational> path_length(int a, int b) const;
  /// Nodes in root-first order.
  std::vector<int> preorder() const;
};

HullTree hull_tree(const std::vector<BerkPoint>& points);

}  // namespace berkp
