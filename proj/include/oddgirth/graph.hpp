#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oddgirth {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices {0, ..., n-1}, stored as a dense
/// symmetric bit matrix. Immutable once constructed.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws InvalidArgument on self-loops or out-of-range endpoints.
  /// Duplicate edges (in either orientation) are merged.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  std::size_t degree(Vertex v) const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Adjacency lists for all vertices, ascending.
  std::vector<std::vector<Vertex>> adjacency_lists() const;

  /// Edges (u, v) with u < v, in row-major order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  const std::uint64_t* row(Vertex v) const noexcept {
    return bits_.data() + v * words_;
  }
  void set_edge(Vertex u, Vertex v) noexcept;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Length of the shortest odd cycle, or Infinite when the graph is bipartite.
class OddGirth {
 public:
  static OddGirth infinite() noexcept { return OddGirth(); }
  /// Throws InvalidArgument unless `length` is odd and >= 3.
  static OddGirth finite(unsigned length);

  bool is_infinite() const noexcept { return !length_.has_value(); }
  /// Throws InvalidArgument when infinite.
  unsigned value() const;

  /// True iff the odd girth is >= k (always true when infinite).
  bool at_least(unsigned k) const noexcept {
    return is_infinite() || *length_ >= k;
  }

  std::string to_string() const;

  friend bool operator==(const OddGirth&, const OddGirth&) = default;

 private:
  OddGirth() = default;
  std::optional<unsigned> length_;
};

/// C_k. Throws InvalidArgument for k < 3.
Graph cycle_graph(std::size_t k);

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();

/// m-fold blow-up: vertex v becomes the independent set {v*m, ..., v*m+m-1}
/// and every edge becomes a complete bipartite join between the two sets.
Graph blow_up(const Graph& g, std::size_t m);

/// Disjoint union with b's vertices relabelled after a's.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Shortest odd cycle via BFS on the bipartite double cover. For each start
/// vertex v the distance from (v, even) to (v, odd) is the shortest odd
/// closed walk through v; the minimum over v is the odd girth.
OddGirth odd_girth(const Graph& g);

}  // namespace oddgirth
