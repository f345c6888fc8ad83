#pragma once

// Test-only oracles. Each one reaches its answer by a route independent of
// the library code it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "oddgirth/graph.hpp"

namespace oracle {

using oddgirth::Edge;
using oddgirth::Graph;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// BFS 2-coloring.
inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Length of the shortest odd simple cycle of length <= max_len found by
/// exhaustive DFS over simple paths; nullopt when there is none.
inline std::optional<unsigned> shortest_odd_cycle_bruteforce(const Graph& g, unsigned max_len) {
  std::optional<unsigned> best;
  const auto n = g.order();
  std::vector<bool> on_path(n, false);
  std::vector<std::size_t> path;
  auto dfs = [&](auto&& self, std::size_t start, std::size_t u) -> void {
    for (auto w : g.neighbors(u)) {
      const auto len = static_cast<unsigned>(path.size());
      if (w == start && len >= 3 && len % 2 == 1) {
        if (!best || len < *best) best = len;
      }
      // Paths only through vertices above start: each cycle is found from
      // its minimum vertex.
      if (w > start && !on_path[w] && len < max_len) {
        on_path[w] = true;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    path.assign(1, s);
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  return best;
}

/// Tr(A^j) by repeated dense integer matrix multiplication.
inline long long trace_power_dense(const Graph& g, int j) {
  const auto n = g.order();
  std::vector<long long> a(n * n, 0), p(n * n, 0), t(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    p[u * n + u] = 1;
    for (std::size_t v = 0; v < n; ++v) a[u * n + v] = g.has_edge(u, v) ? 1 : 0;
  }
  for (int step = 0; step < j; ++step) {
    std::fill(t.begin(), t.end(), 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t c = 0; c < n; ++c) t[r * n + c] += p[r * n + m] * a[m * n + c];
    p.swap(t);
  }
  long long trace = 0;
  for (std::size_t u = 0; u < n; ++u) trace += p[u * n + u];
  return trace;
}

/// det(x I - A) by Gaussian elimination with partial pivoting.
inline double characteristic_polynomial(const Graph& g, double x) {
  const auto n = g.order();
  std::vector<double> m(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r * n + c] = (r == c ? x : 0.0) - (g.has_edge(r, c) ? 1.0 : 0.0);
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
    if (m[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
      det = -det;
    }
    det *= m[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

/// Adjacency spectrum of C_k in closed form: 2 cos(2 pi j / k).
inline std::vector<double> cycle_spectrum(std::size_t k) {
  std::vector<double> out;
  for (std::size_t j = 0; j < k; ++j) out.push_back(2.0 * std::cos(2.0 * M_PI * j / k));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace oracle
