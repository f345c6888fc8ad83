#include "oddgirth/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "oddgirth/error.hpp"

namespace oddgirth {

Graph::Graph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") out of range for n = " +
                            std::to_string(n));
    }
    if (u == v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    }
    if (!has_edge(u, v)) set_edge(u, v);
  }
}

void Graph::set_edge(Vertex u, Vertex v) noexcept {
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++m_;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  const auto* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (Vertex v = 0; v < n_; ++v) adj[v] = neighbors(v);
  return adj;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

OddGirth OddGirth::finite(unsigned length) {
  if (length < 3 || length % 2 == 0) {
    throw InvalidArgument("odd girth must be odd and >= 3, got " +
                          std::to_string(length));
  }
  OddGirth g;
  g.length_ = length;
  return g;
}

unsigned OddGirth::value() const {
  if (!length_) throw InvalidArgument("odd girth is infinite");
  return *length_;
}

std::string OddGirth::to_string() const {
  return length_ ? std::to_string(*length_) : std::string("inf");
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) {
    throw InvalidArgument("cycle needs at least 3 vertices, got " +
                          std::to_string(k));
  }
  std::vector<Edge> edges;
  edges.reserve(k);
  for (std::size_t i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph(k, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle, spokes, inner pentagram.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, edges);
}

Graph blow_up(const Graph& g, std::size_t m) {
  if (m == 0) throw InvalidArgument("blow-up factor must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * m * m);
  for (const auto& [u, v] : g.edges()) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) edges.emplace_back(u * m + a, v * m + b);
  }
  return Graph(g.order() * m, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(a.order() + u, a.order() + v);
  return Graph(a.order() + b.order(), edges);
}

OddGirth odd_girth(const Graph& g) {
  const std::size_t n = g.order();
  const auto adj = g.adjacency_lists();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

  std::size_t best = kUnseen;
  // State index: 2*v + parity.
  std::vector<std::size_t> dist(2 * n);
  std::vector<std::size_t> queue(2 * n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::size_t head = 0, tail = 0;
    dist[2 * s] = 0;
    queue[tail++] = 2 * s;
    const std::size_t target = 2 * s + 1;
    while (head < tail && dist[target] == kUnseen) {
      const std::size_t state = queue[head++];
      const std::size_t d = dist[state];
      if (d + 1 >= best) break;
      const std::size_t flipped = (state & 1) ^ 1;
      for (Vertex w : adj[state >> 1]) {
        const std::size_t next = 2 * w + flipped;
        if (dist[next] == kUnseen) {
          dist[next] = d + 1;
          queue[tail++] = next;
        }
      }
    }
    best = std::min(best, dist[target]);
  }
  if (best == kUnseen) return OddGirth::infinite();
  return OddGirth::finite(static_cast<unsigned>(best));
}

}  // namespace oddgirth
