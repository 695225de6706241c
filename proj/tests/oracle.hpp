#pragma once

// Test-side reference computations. Nothing here calls the library's
// algorithms; only its data types are shared, so agreement with the library
// is evidence rather than tautology.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;  // row-major

// A finite groupoid given by raw tables: arrow p has source src[p] and target
// tgt[p] (both arrow indices of units), inv[p], and comp(p, q) = -1 when
// undefined.
struct RawGroupoid {
  std::size_t n = 0;
  std::vector<std::size_t> src, tgt, inv;
  std::vector<long> comp;  // comp[p * n + q]
  long operator()(std::size_t p, std::size_t q) const { return comp[p * n + q]; }
  bool unit(std::size_t p) const { return src[p] == p; }
};

// Pair groupoid on k objects built from tuples: (i, j) has target i and
// source j, (i, j)(j, l) = (i, l). Arrow (i, j) is index i * k + j.
inline RawGroupoid pair(std::size_t k) {
  RawGroupoid g;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) arrows.push_back({i, j});
  auto find = [&](std::size_t i, std::size_t j) {
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a] == std::make_pair(i, j)) return a;
    return arrows.size();
  };
  g.n = arrows.size();
  for (auto [i, j] : arrows) {
    g.tgt.push_back(find(i, i));
    g.src.push_back(find(j, j));
    g.inv.push_back(find(j, i));
  }
  g.comp.assign(g.n * g.n, -1);
  for (std::size_t p = 0; p < g.n; ++p)
    for (std::size_t q = 0; q < g.n; ++q)
      if (arrows[p].second == arrows[q].first)
        g.comp[p * g.n + q] = static_cast<long>(find(arrows[p].first, arrows[q].second));
  return g;
}

// A group given by its multiplication table, as a one-object groupoid.
inline RawGroupoid group(const std::vector<std::vector<std::size_t>>& table) {
  RawGroupoid g;
  g.n = table.size();
  std::size_t e = 0;
  for (std::size_t a = 0; a < g.n; ++a)
    if (table[a][a] == a) e = a;
  for (std::size_t a = 0; a < g.n; ++a) {
    g.src.push_back(e);
    g.tgt.push_back(e);
    for (std::size_t b = 0; b < g.n; ++b)
      if (table[a][b] == e) g.inv.push_back(b);
  }
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b) g.comp.push_back(static_cast<long>(table[a][b]));
  return g;
}

// Z/2 acting on {0, 1} by the swap; arrow (h.x, h, x) has index h * 2 + x.
inline RawGroupoid swap_action() {
  RawGroupoid g;
  g.n = 4;
  auto act = [](std::size_t h, std::size_t x) { return h == 0 ? x : 1 - x; };
  auto unit_at = [](std::size_t x) { return x; };  // (x, 0, x)
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t x = 0; x < 2; ++x) {
      g.src.push_back(unit_at(x));
      g.tgt.push_back(unit_at(act(h, x)));
      g.inv.push_back(h * 2 + act(h, x));
    }
  g.comp.assign(16, -1);
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t y = 0; y < 2; ++y)
          if (x == act(k, y)) g.comp[(h * 2 + x) * 4 + k * 2 + y] = static_cast<long>(((h + k) % 2) * 2 + y);
  return g;
}

inline std::size_t units(const RawGroupoid& g) {
  std::size_t c = 0;
  for (std::size_t p = 0; p < g.n; ++p) c += g.unit(p);
  return c;
}

inline std::size_t composable_pairs(const RawGroupoid& g) {
  std::size_t c = 0;
  for (std::size_t p = 0; p < g.n; ++p)
    for (std::size_t q = 0; q < g.n; ++q) c += g(p, q) >= 0;
  return c;
}

// E on K(G): indicator of composable pairs, indexed p * n + q.
inline Vec E(const RawGroupoid& g) {
  Vec e(g.n * g.n);
  for (std::size_t p = 0; p < g.n; ++p)
    for (std::size_t q = 0; q < g.n; ++q) e[p * g.n + q] = g(p, q) >= 0 ? 1 : 0;
  return e;
}

// Delta(delta_r) as a column: delta_p (x) delta_q for every p q = r.
inline Vec delta(const RawGroupoid& g, std::size_t r) {
  Vec d(g.n * g.n);
  for (std::size_t p = 0; p < g.n; ++p)
    for (std::size_t q = 0; q < g.n; ++q)
      if (g(p, q) == static_cast<long>(r)) d[p * g.n + q] = 1;
  return d;
}

inline Vec counit(const RawGroupoid& g) {
  Vec c(g.n);
  for (std::size_t p = 0; p < g.n; ++p) c[p] = g.unit(p) ? 1 : 0;
  return c;
}

// eps_s(delta_r) = sum over p q = r of S(delta_p) delta_q, with pointwise
// products of point masses.
inline Vec source_map(const RawGroupoid& g, std::size_t r) {
  Vec v(g.n);
  for (std::size_t p = 0; p < g.n; ++p)
    for (std::size_t q = 0; q < g.n; ++q)
      if (g(p, q) == static_cast<long>(r) && g.inv[p] == q) v[q] += 1;
  return v;
}

// eps_t(delta_r) = sum over p q = r of delta_p S(delta_q).
inline Vec target_map(const RawGroupoid& g, std::size_t r) {
  Vec v(g.n);
  for (std::size_t p = 0; p < g.n; ++p)
    for (std::size_t q = 0; q < g.n; ++q)
      if (g(p, q) == static_cast<long>(r) && g.inv[q] == p) v[p] += 1;
  return v;
}

// F1 = (id (x) S)E: indicator of pairs with equal sources.
inline Vec F1(const RawGroupoid& g) {
  Vec f(g.n * g.n);
  for (std::size_t p = 0; p < g.n; ++p)
    for (std::size_t q = 0; q < g.n; ++q) f[p * g.n + q] = g.src[p] == g.src[q] ? 1 : 0;
  return f;
}

// Rank by fraction-exact Gaussian elimination on a copy.
inline std::size_t rank(Mat m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// dim of E(A (x) A) on K(G): rank of the map X -> E X, E acting pointwise.
inline std::size_t dim_E_range(const RawGroupoid& g) {
  Vec e = E(g);
  Mat m(e.size(), Vec(e.size()));
  for (std::size_t k = 0; k < e.size(); ++k) m[k][k] = e[k];
  return rank(m);
}

// E = 1/2 sum_ij e_ij (x) e_ji on M_2 (x) M_2^op, matrix unit e_ij at index
// i * 2 + j.
inline Vec m2_trace_E() {
  Vec e(16);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) e[(i * 2 + j) * 4 + (j * 2 + i)] = Q(1, 2);
  return e;
}

// Product of 2x2 matrices in matrix-unit coordinates.
inline Vec m2_mul(const Vec& a, const Vec& b) {
  Vec c(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) c[i * 2 + j] += a[i * 2 + k] * b[k * 2 + j];
  return c;
}

}  // namespace oracle
