#include "berkp/point.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace berkp {

BerkPoint BerkPoint::infinity(std::int64_t p) { return BerkPoint(p, Kind::Infinity, Scalar(p, 0L), Rational(0)); }

BerkPoint BerkPoint::classical(Scalar a) {
  std::int64_t p = a.prime();
  return BerkPoint(p, Kind::Classical, std::move(a), Rational(0));
}

BerkPoint BerkPoint::disk(const Scalar& a, const Rational& logr) {
  std::int64_t p = a.prime();
  Rational q = logr;
  q.canonicalize();
  std::int64_t n = to_int64(berkp::ceil(Rational(-q)));
  return BerkPoint(p, Kind::Disk, Scalar(p, truncate(a, n)), q);
}

BerkPoint BerkPoint::gauss(std::int64_t p) { return disk(Scalar(p, 0L), Rational(0)); }

const Scalar& BerkPoint::center() const {
  if (is_infinity()) throw Error(ErrorCode::InfinityOperand, "infinity has no center");
  return center_;
}

const Rational& BerkPoint::logr() const {
  if (!is_disk()) throw Error(ErrorCode::ClassicalPoint, "type I point has no finite log-radius");
  return logr_;
}

LogMag BerkPoint::diam() const {
  if (is_infinity()) throw Error(ErrorCode::InfinityOperand, "diam of infinity");
  if (is_classical()) return LogMag::bottom();
  return LogMag(logr_);
}

bool operator==(const BerkPoint& a, const BerkPoint& b) {
  if (a.kind_ != b.kind_ || a.p_ != b.p_) return false;
  switch (a.kind_) {
    case BerkPoint::Kind::Infinity: return true;
    case BerkPoint::Kind::Classical: return gap(a.center_, b.center_).is_bottom();
    case BerkPoint::Kind::Disk: return a.logr_ == b.logr_ && a.center_.rational() == b.center_.rational();
  }
  return false;
}

std::string BerkPoint::debug_string() const {
  if (is_infinity()) return "inf";
  if (is_classical()) return center_.debug_string();
  std::ostringstream os;
  os << "zeta(" << center_.debug_string() << ", p^" << to_string(logr_) << ")";
  return os.str();
}

LogMag gap(const Scalar& a, const Scalar& b) {
  Scalar d = a - b;
  if (d.is_indeterminate_zero()) return LogMag::bottom();
  return logmag(d);
}

bool precedes(const BerkPoint& s, const BerkPoint& t) {
  if (t.is_infinity()) return true;
  if (s.is_infinity()) return false;
  if (t.is_classical()) return s.is_classical() && gap(s.center(), t.center()).is_bottom();
  if (s.is_disk() && s.logr() > t.logr()) return false;
  return gap(s.center(), t.center()) <= t.diam();
}

Order compare(const BerkPoint& s, const BerkPoint& t) {
  if (s == t) return Order::Equal;
  if (precedes(s, t)) return Order::Less;
  if (precedes(t, s)) return Order::Greater;
  return Order::Incomparable;
}

BerkPoint wedge(const BerkPoint& s, const BerkPoint& t) {
  if (s.is_infinity()) return s;
  if (t.is_infinity()) return t;
  LogMag g = gap(s.center(), t.center());
  if (s.is_classical() && t.is_classical()) {
    if (g.is_bottom()) return s;
    return BerkPoint::disk(t.center(), g.exponent());
  }
  LogMag m = max(max(s.diam(), t.diam()), g);
  const BerkPoint& base = t.is_disk() ? t : s;
  return BerkPoint::disk(base.center(), m.exponent());
}

BerkPoint wedge_all(const std::vector<BerkPoint>& pts) {
  if (pts.empty()) throw Error(ErrorCode::EmptyInput, "wedge of an empty set");
  BerkPoint w = pts.front();
  for (std::size_t i = 1; i < pts.size(); ++i) w = wedge(w, pts[i]);
  return w;
}

BerkPoint median(const BerkPoint& a, const BerkPoint& b, const BerkPoint& c) {
  BerkPoint w[3] = {wedge(a, b), wedge(b, c), wedge(a, c)};
  for (int i = 0; i < 3; ++i) {
    if (precedes(w[i], w[(i + 1) % 3]) && precedes(w[i], w[(i + 2) % 3])) return w[i];
  }
  return w[0];
}

LogMag hsia_inf(const BerkPoint& s, const BerkPoint& t) {
  if (s.is_infinity() || t.is_infinity()) throw Error(ErrorCode::InfinityOperand, "hsia_inf needs finite points");
  return wedge(s, t).diam();
}

Rational rho(const BerkPoint& s, const BerkPoint& t) {
  if (!s.is_disk() || !t.is_disk()) throw Error(ErrorCode::ClassicalPoint, "rho is defined on H^1 only");
  return Rational(2 * wedge(s, t).logr() - s.logr() - t.logr());
}

Direction direction(const BerkPoint& at, const BerkPoint& toward) {
  if (!at.is_disk() || toward == at || !precedes(toward, at)) return Direction{};
  std::int64_t n = to_int64(berkp::floor(Rational(-at.logr()))) + 1;
  return Direction{false, truncate(toward.center(), n)};
}

bool same_direction(const BerkPoint& at, const BerkPoint& x, const BerkPoint& y) {
  return direction(at, x) == direction(at, y);
}

BerkPoint raise_to(const BerkPoint& x, const Rational& logr) {
  if (x.is_infinity()) throw Error(ErrorCode::InfinityOperand, "raise_to on infinity");
  if (x.is_disk() && logr < x.logr()) throw Error(ErrorCode::InvalidArgument, "raise_to below the point");
  return BerkPoint::disk(x.center(), logr);
}

std::vector<HullEdge> HullTree::edges() const {
  std::vector<HullEdge> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].parent >= 0) out.push_back({nodes[i].parent, i, nodes[i].edge_length});
  }
  return out;
}

std::optional<Rational> HullTree::path_length(int a, int b) const {
  auto depth = [&](int v) {
    int d = 0;
    for (; nodes[v].parent >= 0; v = nodes[v].parent) ++d;
    return d;
  };
  int da = depth(a), db = depth(b);
  Rational total = 0;
  bool finite = true;
  auto step = [&](int& v) {
    if (nodes[v].edge_length) total += *nodes[v].edge_length;
    else finite = false;
    v = nodes[v].parent;
  };
  while (da > db) { step(a); --da; }
  while (db > da) { step(b); --db; }
  while (a != b) { step(a); step(b); }
  if (!finite) return std::nullopt;
  return total;
}

std::vector<int> HullTree::preorder() const {
  std::vector<int> out;
  if (root < 0) return out;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (auto it = nodes[v].children.rbegin(); it != nodes[v].children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

HullTree hull_tree(const std::vector<BerkPoint>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "hull of an empty set");
  std::vector<BerkPoint> uniq;
  std::vector<int> which(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = std::find(uniq.begin(), uniq.end(), points[i]);
    which[i] = static_cast<int>(it - uniq.begin());
    if (it == uniq.end()) uniq.push_back(points[i]);
  }
  HullTree tree;
  std::vector<int> node_of(uniq.size(), -1);
  std::vector<int> finite;
  int inf_index = -1;
  for (int i = 0; i < static_cast<int>(uniq.size()); ++i) {
    if (uniq[i].is_infinity()) inf_index = i;
    else finite.push_back(i);
  }

  std::function<int(const std::vector<int>&)> build = [&](const std::vector<int>& idx) -> int {
    std::vector<BerkPoint> pts;
    pts.reserve(idx.size());
    for (int i : idx) pts.push_back(uniq[i]);
    BerkPoint w = wedge_all(pts);
    int node = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(HullNode{w, false, -1, {}, std::nullopt});
    std::map<Rational, std::vector<int>> groups;
    for (int i : idx) {
      if (uniq[i] == w) {
        tree.nodes[node].input = true;
        node_of[i] = node;
      } else {
        groups[direction(w, uniq[i]).residue].push_back(i);
      }
    }
    for (const auto& [key, members] : groups) {
      int child = build(members);
      tree.nodes[child].parent = node;
      if (w.is_disk() && tree.nodes[child].point.is_disk())
        tree.nodes[child].edge_length = rho(w, tree.nodes[child].point);
      tree.nodes[node].children.push_back(child);
    }
    return node;
  };

  int top = finite.empty() ? -1 : build(finite);
  if (inf_index >= 0) {
    int node = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(HullNode{uniq[inf_index], true, -1, {}, std::nullopt});
    node_of[inf_index] = node;
    if (top >= 0) {
      tree.nodes[top].parent = node;
      tree.nodes[node].children.push_back(top);
    }
    tree.root = node;
  } else {
    tree.root = top;
  }
  tree.input_index.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) tree.input_index[i] = node_of[which[i]];
  return tree;
}

}  // namespace berkp
