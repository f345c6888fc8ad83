#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "oddgirth/enumerate.hpp"
#include "oddgirth/error.hpp"
#include "oddgirth/graph.hpp"
#include "oddgirth/graph6.hpp"
#include "oracles.hpp"

using namespace oddgirth;

TEST_CASE("graph construction rejects loops and out-of-range vertices") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), InvalidArgument);
  const std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(Graph(3, far), InvalidArgument);

  const std::vector<Edge> dup{{0, 1}, {1, 0}, {0, 1}};
  const Graph g(2, dup);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 0));
}

TEST_CASE("cycle_graph") {
  const auto c3 = cycle_graph(3);
  CHECK(c3.order() == 3);
  CHECK(c3.edge_count() == 3);

  const auto c7 = cycle_graph(7);
  for (Vertex v = 0; v < 7; ++v) CHECK(c7.degree(v) == 2);

  CHECK(odd_girth(cycle_graph(5)) == OddGirth::finite(5));
  CHECK(odd_girth(cycle_graph(6)).is_infinite());
  CHECK_THROWS_AS(cycle_graph(2), InvalidArgument);
  CHECK_THROWS_AS(cycle_graph(0), InvalidArgument);
}

TEST_CASE("odd girth of cycles is k for odd k, infinite for even k") {
  for (std::size_t k = 3; k <= 40; ++k) {
    const auto g = odd_girth(cycle_graph(k));
    if (k % 2 == 1) {
      CHECK(g.value() == k);
    } else {
      CHECK(g.is_infinite());
    }
  }
}

TEST_CASE("complete_bipartite") {
  const auto k11 = complete_bipartite(1, 1);
  CHECK(k11.order() == 2);
  CHECK(k11.edge_count() == 1);

  const auto k23 = complete_bipartite(2, 3);
  CHECK(k23.order() == 5);
  CHECK(k23.edge_count() == 6);

  CHECK(odd_girth(complete_bipartite(3, 3)).is_infinite());
  CHECK(complete_bipartite(0, 4).edge_count() == 0);
}

TEST_CASE("blow_up") {
  const auto petersen = petersen_graph();
  CHECK(blow_up(petersen, 1) == petersen);

  CHECK(blow_up(complete_graph(2), 2) == complete_bipartite(2, 2));

  const auto c5x3 = blow_up(cycle_graph(5), 3);
  CHECK(c5x3.order() == 15);
  CHECK(c5x3.edge_count() == 5 * 9);
  CHECK(odd_girth(c5x3).value() == 5);

  CHECK_THROWS_AS(blow_up(petersen, 0), InvalidArgument);
}

TEST_CASE("odd girth: Petersen against exhaustive cycle enumeration") {
  const auto g = petersen_graph();
  const auto brute = oracle::shortest_odd_cycle_bruteforce(g, 5);
  REQUIRE(brute.has_value());
  CHECK(*brute == 5);
  CHECK(odd_girth(g).value() == 5);
  CHECK(odd_girth(complete_graph(4)).value() == 3);
}

TEST_CASE("odd girth agrees with brute force and 2-coloring on random graphs") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const double p = 0.1 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    const auto g = oracle::random_graph(n, p, rng);
    const auto girth = odd_girth(g);
    const auto brute = oracle::shortest_odd_cycle_bruteforce(g, static_cast<unsigned>(n));
    CHECK(girth.is_infinite() == oracle::is_bipartite(g));
    if (brute) {
      CHECK(girth.value() == *brute);
    } else {
      CHECK(girth.is_infinite());
    }
  }
}

TEST_CASE("blow-up preserves odd girth") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(1 + rng() % 8, 0.35, rng);
    for (std::size_t m : {2, 3}) CHECK(odd_girth(blow_up(g, m)) == odd_girth(g));
  }
}

TEST_CASE("OddGirth value type") {
  CHECK_THROWS_AS(OddGirth::finite(4), InvalidArgument);
  CHECK_THROWS_AS(OddGirth::finite(1), InvalidArgument);
  CHECK_THROWS_AS(OddGirth::infinite().value(), InvalidArgument);
  CHECK(OddGirth::infinite().at_least(1001));
  CHECK(OddGirth::finite(7).at_least(7));
  CHECK_FALSE(OddGirth::finite(7).at_least(9));
  CHECK(OddGirth::infinite().to_string() == "inf");
}

TEST_CASE("labeled enumeration counts") {
  CHECK(enumerate_labeled_graphs(0).size() == 1);
  CHECK(enumerate_labeled_graphs(1).size() == 1);
  CHECK(enumerate_labeled_graphs(3).size() == 8);
  CHECK(enumerate_labeled_graphs(4).size() == 64);
  CHECK_THROWS_AS(enumerate_labeled_graphs(9), SizeLimitError);

  std::size_t iterated = 0;
  for (const auto& g : enumerate_labeled_graphs(3)) {
    CHECK(g.order() == 3);
    ++iterated;
  }
  CHECK(iterated == 8);
}

TEST_CASE("labeled enumeration yields 2^(n(n-1)/2) distinct graphs in mask order") {
  for (std::size_t n : {2, 4, 5}) {
    const auto graphs = enumerate_labeled_graphs(n);
    std::set<std::string> seen;
    for (auto it = graphs.begin(); it != graphs.end(); ++it) {
      const auto g = *it;
      seen.insert(encode_graph6(g));
      CHECK(g.edge_count() == static_cast<std::size_t>(std::popcount(it.mask())));
    }
    CHECK(seen.size() == graphs.size());
  }
  // Mask bit 0 is the pair (0,1), bit 2 is (1,2).
  const auto g = enumerate_labeled_graphs(3).at(0b101);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}
