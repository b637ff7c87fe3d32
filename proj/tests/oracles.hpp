#pragma once

// Brute-force reference implementations used only by the tests. They work
// on plain adjacency matrices and never call the library algorithms they
// are compared against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "zdg/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const zdg::Graph& g) {
  Matrix m(g.size(), std::vector<bool>(g.size(), false));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) m[u][v] = g.adjacent(u, v);
  return m;
}

/// Largest clique by testing every vertex subset (n <= 20).
inline std::size_t clique_number(const Matrix& m) {
  const std::size_t n = m.size();
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if ((s >> i) & 1U)
        for (std::size_t j = i + 1; j < n && ok; ++j)
          if ((s >> j) & 1U) ok = m[i][j];
    if (ok) best = size;
  }
  return best;
}

/// Lexicographically smallest maximum clique, by enumerating sorted tuples.
inline std::vector<std::size_t> smallest_max_clique(const Matrix& m) {
  const std::size_t n = m.size();
  const std::size_t w = clique_number(m);
  std::vector<std::size_t> best;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (static_cast<std::size_t>(__builtin_popcount(s)) != w) continue;
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1U) c.push_back(i);
    bool ok = true;
    for (std::size_t i = 0; i < c.size() && ok; ++i)
      for (std::size_t j = i + 1; j < c.size() && ok; ++j) ok = m[c[i]][c[j]];
    if (ok && (best.empty() || c < best)) best = c;
  }
  return best;
}

/// True if `to` is reachable from `from` without passing through `banned`
/// and without using the direct edge from--to.
inline bool reachable_avoiding(const Matrix& m, std::size_t from, std::size_t to,
                               std::size_t banned) {
  std::vector<bool> seen(m.size(), false);
  std::queue<std::size_t> q;
  q.push(from);
  seen[from] = true;
  seen[banned] = true;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (std::size_t w = 0; w < m.size(); ++w) {
      if (!m[u][w] || seen[w]) continue;
      if (u == from && w == to) continue;
      if (w == to) return true;
      seen[w] = true;
      q.push(w);
    }
  }
  return false;
}

/// v lies on a cycle iff two distinct neighbours u, w of v are joined by a
/// path avoiding v.
inline std::vector<bool> core(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<bool> out(n, false);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n && !out[v]; ++u)
      for (std::size_t w = u + 1; w < n && !out[v]; ++w)
        if (m[v][u] && m[v][w]) {
          // any u-w path avoiding v closes a cycle through v
          std::vector<bool> seen(n, false);
          std::queue<std::size_t> q;
          q.push(u);
          seen[u] = seen[v] = true;
          while (!q.empty() && !out[v]) {
            const auto x = q.front();
            q.pop();
            for (std::size_t y = 0; y < n; ++y)
              if (m[x][y] && !seen[y]) {
                if (y == w) out[v] = true;
                seen[y] = true;
                q.push(y);
              }
          }
        }
  return out;
}

/// a ⊥ b by scanning every third vertex.
inline bool orthogonal(const Matrix& m, std::size_t a, std::size_t b) {
  if (!m[a][b]) return false;
  for (std::size_t c = 0; c < m.size(); ++c)
    if (c != a && c != b && m[a][c] && m[b][c]) return false;
  return true;
}

/// All-pairs BFS; returns -1 when disconnected.
inline long diameter(const Matrix& m) {
  const std::size_t n = m.size();
  long best = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<long> d(n, -1);
    d[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (std::size_t w = 0; w < n; ++w)
        if (m[u][w] && d[w] < 0) {
          d[w] = d[u] + 1;
          q.push(w);
        }
    }
    for (auto x : d) {
      if (x < 0) return -1;
      best = std::max(best, x);
    }
  }
  return best;
}

inline std::size_t edge_count(const Matrix& m) {
  std::size_t e = 0;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v) e += m[u][v];
  return e;
}

/// Random G(n, p) graph, for oracle cross-checks.
inline zdg::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  zdg::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Commutative semigroups with zero of the given order, up to relabeling
/// of nonzero elements. Enumerates full (not just upper-triangular) tables
/// and separates classes by pairwise isomorphism search.
inline std::size_t count_semigroup_classes(std::size_t order) {
  const std::size_t m = order - 1;
  std::vector<std::vector<std::size_t>> reps;
  std::vector<std::size_t> cell(m * m, 0);
  auto at = [&](const std::vector<std::size_t>& t, std::size_t i, std::size_t j) -> std::size_t {
    if (i == 0 || j == 0) return 0;
    return t[(i - 1) * m + (j - 1)];
  };
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < order && ok; ++i)
      for (std::size_t j = 0; j < order && ok; ++j) {
        ok = at(cell, i, j) == at(cell, j, i);
        for (std::size_t k = 0; k < order && ok; ++k)
          ok = at(cell, at(cell, i, j), k) == at(cell, i, at(cell, j, k));
      }
    if (ok) {
      bool fresh = true;
      for (const auto& r : reps) {
        std::vector<std::size_t> p(order);
        std::iota(p.begin(), p.end(), 0);
        do {
          bool iso = true;
          for (std::size_t i = 0; i < order && iso; ++i)
            for (std::size_t j = 0; j < order && iso; ++j)
              iso = p[at(cell, i, j)] == at(r, p[i], p[j]);
          if (iso) {
            fresh = false;
            break;
          }
        } while (std::next_permutation(p.begin() + 1, p.end()));
        if (!fresh) break;
      }
      if (fresh) reps.push_back(cell);
    }
    std::size_t q = 0;
    while (q < cell.size() && ++cell[q] == order) cell[q++] = 0;
    if (q == cell.size()) break;
  }
  return reps.size();
}

/// One representative per class of commutative semigroups with zero 0,
/// from all symmetric fillings of the nonzero block. Row-major tables.
inline std::vector<std::vector<std::uint32_t>> symmetric_class_reps(std::size_t order) {
  const std::size_t n = order;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  std::set<std::vector<std::uint32_t>> forms;
  std::vector<std::uint32_t> v(cells.size(), 0), t(n * n);
  while (true) {
    std::fill(t.begin(), t.end(), 0);
    for (std::size_t q = 0; q < cells.size(); ++q) {
      t[cells[q].first * n + cells[q].second] = v[q];
      t[cells[q].second * n + cells[q].first] = v[q];
    }
    bool ok = true;
    for (std::size_t a = 1; a < n && ok; ++a)
      for (std::size_t b = 1; b < n && ok; ++b)
        for (std::size_t c = 1; c < n && ok; ++c)
          ok = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
    if (ok) {
      std::vector<std::uint32_t> p(n), best;
      std::iota(p.begin(), p.end(), 0);
      do {
        std::vector<std::uint32_t> u(n * n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) u[p[a] * n + p[b]] = p[t[a * n + b]];
        if (best.empty() || u < best) best = u;
      } while (std::next_permutation(p.begin() + 1, p.end()));
      forms.insert(best);
    }
    std::size_t q = 0;
    while (q < v.size() && ++v[q] == n) v[q++] = 0;
    if (q == v.size()) break;
  }
  return {forms.begin(), forms.end()};
}

}  // namespace oracle
