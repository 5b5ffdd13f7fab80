#pragma once

// Slow, independent re-implementations used only to cross-check library
// results in tests.  Each deliberately avoids the algorithm under test.

#include "fixnum/graph.hpp"
#include "fixnum/perm.hpp"
#include "fixnum/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracles {

// All-pairs distances via boolean adjacency-matrix powers: d(u,v) is the
// smallest k with (A^k)[u][v] != 0.  Unreachable pairs stay -1.
inline std::vector<std::vector<int>> power_distances(const fixnum::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u) {
    dist[u][u] = 0;
    for (int v = 0; v < n; ++v) reach[u][v] = g.adjacent(u, v);
  }
  for (int k = 1; k < n; ++k) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (reach[u][v] && dist[u][v] == -1) dist[u][v] = k;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (reach[u][w])
          for (int v = 0; v < n; ++v)
            if (g.adjacent(w, v)) next[u][v] = true;
    reach = std::move(next);
  }
  return dist;
}

// Graph isomorphism by degree-pruned backtracking; intended for n <= 10.
inline bool isomorphic(const fixnum::Graph& a, const fixnum::Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  if (n > 10) throw std::invalid_argument("isomorphism oracle limited to n <= 10");
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int u) -> bool {
    if (u == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[u] != db[w]) continue;
      bool ok = true;
      for (int v = 0; v < u && ok; ++v)
        if (a.adjacent(u, v) != b.adjacent(map[v], w)) ok = false;
      if (!ok) continue;
      map[u] = w;
      used[w] = true;
      if (self(self, u + 1)) return true;
      used[w] = false;
      map[u] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

// Minimum fixing-set size by exhausting vertex subsets in size order: S
// works iff every non-identity group element moves some vertex of S.
inline int min_fixing_by_subsets(int n, const std::vector<fixnum::Perm>& elements) {
  if (n > 20) throw std::invalid_argument("subset oracle limited to n <= 20");
  std::vector<std::uint32_t> moved;  // bitmask of support per non-identity element
  for (const auto& p : elements) {
    if (p.is_identity()) continue;
    std::uint32_t m = 0;
    for (int v = 0; v < n; ++v)
      if (p(v) != v) m |= std::uint32_t{1} << v;
    moved.push_back(m);
  }
  if (moved.empty()) return 0;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) masks.push_back(s);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  for (std::uint32_t s : masks) {
    bool fixing = true;
    for (std::uint32_t m : moved)
      if ((m & s) == 0) {
        fixing = false;
        break;
      }
    if (fixing) return std::popcount(s);
  }
  return n;  // unreachable: the full vertex set always works
}

// Exact optimum of min 1'x : Bx >= 1, x >= 0 by enumerating candidate
// polyhedron vertices (every n-subset of tight constraints), solving each
// square rational system, and keeping the best feasible point.  Intended
// for a handful of columns.
inline fixnum::Rational cover_lp_by_vertex_enumeration(
    int columns, const std::vector<std::vector<int>>& rows) {
  using fixnum::Rational;
  const int n = columns;
  if (n > 6) throw std::invalid_argument("LP oracle limited to 6 columns");
  for (const auto& r : rows)
    if (r.empty()) throw std::invalid_argument("empty covering row");
  // Constraint list: rows of B (rhs 1), then coordinate constraints (rhs 0).
  const int total = static_cast<int>(rows.size()) + n;
  auto constraint = [&](int idx, std::vector<Rational>& coeff, Rational& rhs) {
    coeff.assign(n, Rational(0));
    if (idx < static_cast<int>(rows.size())) {
      for (int c : rows[idx]) coeff[c] = 1;
      rhs = 1;
    } else {
      coeff[idx - static_cast<int>(rows.size())] = 1;
      rhs = 0;
    }
  };
  bool found = false;
  Rational best = 0;
  std::vector<int> pick(n);
  auto consider = [&](const std::vector<int>& chosen) {
    // Solve the n x n system of tight constraints by Gaussian elimination.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> coeff;
      Rational rhs;
      constraint(chosen[i], coeff, rhs);
      for (int j = 0; j < n; ++j) m[i][j] = coeff[j];
      m[i][n] = rhs;
    }
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (m[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot == -1) return;  // singular: not a vertex
      std::swap(m[col], m[pivot]);
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        Rational f = m[r][col] / m[col][col];
        for (int j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
      }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    for (int i = 0; i < n; ++i)
      if (x[i] < 0) return;
    for (const auto& row : rows) {
      Rational s = 0;
      for (int c : row) s += x[c];
      if (s < 1) return;
    }
    Rational value = std::accumulate(x.begin(), x.end(), Rational(0));
    if (!found || value < best) {
      found = true;
      best = value;
    }
  };
  auto choose = [&](auto&& self, int start, int depth) -> void {
    if (depth == n) {
      consider(pick);
      return;
    }
    for (int i = start; i < total; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  choose(choose, 0, 0);
  if (!found) throw std::logic_error("covering LP oracle found no vertex");
  return best;
}

}  // namespace oracles
