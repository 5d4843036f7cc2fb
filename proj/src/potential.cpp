#include "berkp/potential.hpp"

#include <algorithm>
#include <functional>

namespace berkp {

namespace {

std::vector<BerkPoint> distinct(const std::vector<BerkPoint>& pts) {
  std::vector<BerkPoint> out;
  for (const auto& x : pts)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

void check_support(const std::vector<BerkPoint>& e, const BerkPoint& base) {
  if (e.empty()) throw Error(ErrorCode::EmptyInput, "empty support");
  for (const auto& x : e) {
    if (!x.is_disk()) throw Error(ErrorCode::MixedTypes, "support must consist of type II points");
    if (x == base) throw Error(ErrorCode::BaseInE, "the pole lies in E");
  }
}

LogValue log_kernel(const BerkPoint& s, const BerkPoint& t, const BerkPoint& base) { return hsia_rel(s, t, base); }

// Solves A x = b exactly; false when A is singular.
bool solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

void validate(const WeightedMeasure& nu) {
  if (nu.support.empty() || nu.support.size() != nu.weights.size())
    throw Error(ErrorCode::InvalidMeasure, "support and weights must be nonempty and of equal length");
  Rational total = 0;
  for (const auto& w : nu.weights) {
    if (w < 0) throw Error(ErrorCode::InvalidMeasure, "negative weight");
    total += w;
  }
  if (total != 1) throw Error(ErrorCode::InvalidMeasure, "weights sum to " + to_string(total));
  if (distinct(nu.support).size() != nu.support.size())
    throw Error(ErrorCode::InvalidMeasure, "support points repeat");
}

LogValue potential_value(const WeightedMeasure& nu, const BerkPoint& base, const BerkPoint& s) {
  LogValue total = LogValue::one();
  for (std::size_t i = 0; i < nu.support.size(); ++i) {
    if (nu.weights[i] == 0) continue;
    total = total * log_kernel(s, nu.support[i], base).pow(nu.weights[i]);
  }
  return total;
}

LogValue energy(const WeightedMeasure& nu, const BerkPoint& base) {
  validate(nu);
  for (std::size_t i = 0; i < nu.support.size(); ++i)
    if (nu.support[i] == base) throw Error(ErrorCode::BasePointInSupport, "the pole lies in the support");
  LogValue total = LogValue::one();
  for (std::size_t i = 0; i < nu.support.size(); ++i) {
    if (nu.weights[i] == 0) continue;
    total = total * potential_value(nu, base, nu.support[i]).pow(nu.weights[i]);
  }
  return total;
}

EquilibriumTree equilibrium_tree(const std::vector<BerkPoint>& e_in, const BerkPoint& base) {
  std::vector<BerkPoint> e = distinct(e_in);
  check_support(e, base);
  std::vector<BerkPoint> pts = e;
  pts.push_back(base);
  EquilibriumTree t;
  t.hull = hull_tree(pts);
  std::size_t n = t.hull.nodes.size();
  t.root = t.hull.input_index.back();

  std::vector<std::vector<int>> adj(n);
  for (const auto& edge : t.hull.edges()) {
    adj[edge.a].push_back(edge.b);
    adj[edge.b].push_back(edge.a);
  }
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  std::vector<bool> seen(n, false);
  t.order = {t.root};
  seen[t.root] = true;
  for (std::size_t k = 0; k < t.order.size(); ++k) {
    int v = t.order[k];
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.children[v].push_back(w);
      t.order.push_back(w);
    }
  }

  t.in_e.assign(n, false);
  for (std::size_t i = 0; i < e.size(); ++i) t.in_e[t.hull.input_index[i]] = true;
  t.h.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const BerkPoint& x = t.hull.nodes[v].point;
    t.h[v] = (static_cast<int>(v) == t.root && !base.is_disk()) ? LogValue::top() : log_kernel(x, x, base);
  }

  t.cap.assign(n, Rational(0));
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    int v = *it;
    if (t.in_e[v]) {
      t.cap[v] = t.h[v].exponent();
      continue;
    }
    if (t.h[v].is_top()) {
      t.cap[v] = t.cap[t.children[v].front()];
      continue;
    }
    Rational inv = 0;
    for (int c : t.children[v]) inv += 1 / Rational(t.h[v].exponent() - t.cap[c]);
    t.cap[v] = t.h[v].exponent() - 1 / inv;
  }

  t.mass.assign(n, Rational(0));
  t.mass[t.root] = 1;
  for (int v : t.order) {
    if (t.in_e[v] || t.mass[v] == 0) continue;
    if (t.h[v].is_top()) {
      t.mass[t.children[v].front()] = t.mass[v];
      continue;
    }
    Rational inv = 0;
    for (int c : t.children[v]) inv += 1 / Rational(t.h[v].exponent() - t.cap[c]);
    for (int c : t.children[v]) t.mass[c] = t.mass[v] / Rational(t.h[v].exponent() - t.cap[c]) / inv;
  }

  t.pot.assign(n, Rational(0));
  for (int v : t.order) {
    int u = t.parent[v];
    if (u < 0) {
      if (t.h[v].is_finite()) t.pot[v] = t.h[v].exponent();
    } else if (t.h[u].is_top()) {
      t.pot[v] = t.h[v].exponent();
    } else {
      t.pot[v] = t.pot[u] + t.mass[v] * (t.h[v].exponent() - t.h[u].exponent());
    }
  }
  return t;
}

EquilibriumResult equilibrium(const std::vector<BerkPoint>& e_in, const BerkPoint& base) {
  std::vector<BerkPoint> e = distinct(e_in);
  EquilibriumTree t = equilibrium_tree(e, base);
  EquilibriumResult r{WeightedMeasure{e, {}}, t.cap[t.root], Rational(0), base};
  for (std::size_t i = 0; i < e.size(); ++i) {
    int v = t.hull.input_index[i];
    r.measure.weights.push_back(t.mass[v]);
    r.energy += t.mass[v] * t.pot[v];
  }
  return r;
}

EquilibriumResult equilibrium_active_set(const std::vector<BerkPoint>& e_in, const BerkPoint& base) {
  std::vector<BerkPoint> e = distinct(e_in);
  check_support(e, base);
  std::size_t n = e.size();
  if (n > 16) throw Error(ErrorCode::TooLarge, "active-set search is limited to 16 points");
  std::vector<std::vector<Rational>> k(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k[i][j] = log_kernel(e[i], e[j], base).exponent();

  for (std::size_t size = n; size >= 1; --size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::size_t m = size + 1;
      std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
      std::vector<Rational> b(m, Rational(0));
      for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) a[r][c] = k[idx[r]][idx[c]];
        a[r][size] = -1;
        a[size][r] = 1;
      }
      b[size] = 1;
      std::vector<Rational> x;
      if (solve(a, b, x) && std::all_of(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(size),
                                         [](const Rational& w) { return w >= 0; })) {
        std::vector<Rational> w(n, Rational(0));
        for (std::size_t r = 0; r < size; ++r) w[idx[r]] = x[r];
        const Rational& v = x[size];
        bool kkt = true;
        for (std::size_t j = 0; j < n && kkt; ++j) {
          Rational pj = 0;
          for (std::size_t i = 0; i < n; ++i) pj += k[j][i] * w[i];
          if (pj > v) kkt = false;
        }
        if (kkt) return EquilibriumResult{WeightedMeasure{e, w}, v, v, base};
      }
      // Next combination in lexicographic order.
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < size; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "no admissible active set");
}

LogValue transfinite_diameter(const std::vector<BerkPoint>& e_in, int n, std::uint64_t budget) {
  std::vector<BerkPoint> e = distinct(e_in);
  if (e.empty()) throw Error(ErrorCode::EmptyInput, "transfinite diameter of an empty set");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  std::size_t m = e.size();
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(n + m - 1), static_cast<unsigned long>(m - 1));
  if (count > Integer(static_cast<unsigned long>(budget)))
    throw Error(ErrorCode::TooLarge, "composition count " + count.get_str() + " exceeds the budget");
  std::vector<std::vector<LogValue>> l(m, std::vector<LogValue>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) l[i][j] = hsia_inf(e[i], e[j]);

  LogValue best = LogValue::bottom();
  std::vector<int> comp(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == m) {
      comp[i] = left;
      Rational total = 0;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          long coef = a == b ? static_cast<long>(comp[a]) * (comp[a] - 1) : static_cast<long>(comp[a]) * comp[b];
          if (coef == 0) continue;
          if (l[a][b].is_bottom()) return;
          total += coef * l[a][b].exponent();
        }
      }
      LogValue v(Rational(total / (static_cast<long>(n) * (n - 1))));
      if (best < v) best = v;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      comp[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, n);
  return best;
}

LogValue green(const EquilibriumResult& eq, const BerkPoint& s) {
  LogValue p = potential_value(eq.measure, eq.base, s);
  return p / LogValue(eq.log_capacity);
}

LogValue green(const std::vector<BerkPoint>& e, const BerkPoint& base, const BerkPoint& s) {
  return green(equilibrium(e, base), s);
}

}  // namespace berkp
