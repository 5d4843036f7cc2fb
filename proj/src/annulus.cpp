#include "berkp/annulus.hpp"

#include <algorithm>

namespace berkp {

Annulus make_annulus(const BerkPoint& s, const BerkPoint& t) {
  if (!s.is_disk() || !t.is_disk()) throw Error(ErrorCode::DegenerateAnnulus, "annulus endpoints must lie in H^1");
  if (s == t) throw Error(ErrorCode::DegenerateAnnulus, "annulus endpoints coincide");
  return Annulus{s, t};
}

Rational modulus(const Annulus& a) {
  if (a.inner == a.outer) throw Error(ErrorCode::DegenerateAnnulus, "annulus endpoints coincide");
  return rho(a.inner, a.outer);
}

bool in_annulus(const Annulus& a, const BerkPoint& x) {
  if (x == a.inner || x == a.outer) return false;
  return same_direction(a.inner, x, a.outer) && same_direction(a.outer, x, a.inner);
}

bool separates(const Annulus& a, const std::vector<BerkPoint>& e) {
  bool inner_side = false, outer_side = false;
  for (const auto& x : e) {
    if (in_annulus(a, x)) return false;
    if (x == a.inner || !same_direction(a.inner, x, a.outer)) inner_side = true;
    if (x == a.outer || !same_direction(a.outer, x, a.inner)) outer_side = true;
  }
  return inner_side && outer_side;
}

std::optional<Rational> bounded_moduli_constant(const std::vector<BerkPoint>& e) {
  if (e.empty()) throw Error(ErrorCode::EmptyInput, "c_E of an empty set");
  std::vector<BerkPoint> uniq;
  for (const auto& x : e)
    if (std::find(uniq.begin(), uniq.end(), x) == uniq.end()) uniq.push_back(x);
  if (uniq.size() == 1) return Rational(0);
  for (const auto& x : uniq)
    if (!x.is_disk()) return std::nullopt;
  HullTree tree = hull_tree(uniq);
  Rational best = 0;
  for (const auto& node : tree.nodes)
    if (node.edge_length && *node.edge_length > best) best = *node.edge_length;
  return best;
}

}  // namespace berkp
