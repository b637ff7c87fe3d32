#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zdg/enumerator.hpp"
#include "zdg/graph.hpp"
#include "zdg/recognizer.hpp"
#include "zdg/semigroup.hpp"

using namespace zdg;

namespace {

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Vertex of G(P(n)) for a subset mask.
constexpr Vertex vx(unsigned mask) { return mask - 1; }

}  // namespace

TEST_SUITE("zdgraph") {
  TEST_CASE("G(P(3)) and G(P(4)) sizes") {
    const auto g3 = zero_divisor_graph(powerset_semigroup(3));
    CHECK(g3.graph.size() == 6);
    CHECK(g3.graph.edge_count() == 6);
    const auto g4 = zero_divisor_graph(powerset_semigroup(4));
    CHECK(g4.graph.size() == 14);
    CHECK(g4.graph.edge_count() == 25);
    CHECK(g4.element_of.front() == 1);
    CHECK(g4.graph.label(vx(0b0101)) == "{x1,x3}");
  }

  TEST_CASE("semigroup without zero divisors gives the empty graph") {
    const std::vector<Element> t{0, 0, 0, 1};
    const auto g = zero_divisor_graph(*validate(t, 2, 0).semigroup);
    CHECK(g.graph.empty());
    CHECK(is_connected(g.graph));
    CHECK(diameter(g.graph) == std::size_t{0});
  }

  TEST_CASE("neighborhoods in G(P(3))") {
    const Graph g = powerset_graph(3);
    const Vertex b1 = vx(0b110), a1 = vx(0b001);
    CHECK(neighborhood(g, b1).to_vector() == std::vector<std::size_t>{a1});
    CHECK(degree(g, b1) == 1);
    CHECK(degree(g, a1) == 3);
    CHECK(closed_neighborhood(g, b1).to_vector() == std::vector<std::size_t>{a1, b1});
    CHECK_THROWS_AS(degree(g, 6), std::out_of_range);
    Graph iso(1);
    CHECK(neighborhood(iso, 0).none());
    CHECK(degree(iso, 0) == 0);
  }

  TEST_CASE("connectivity and diameter") {
    const Graph g = powerset_graph(3);
    CHECK(is_connected(g));
    CHECK(diameter(g) == std::size_t{3});
    CHECK(oracle::diameter(oracle::matrix_of(g)) == 3);
    CHECK(diameter(Graph(1)) == std::size_t{0});
    CHECK_FALSE(diameter(Graph(2)).has_value());
    CHECK_FALSE(is_connected(Graph(2)));
  }

  TEST_CASE("core") {
    const Graph g = powerset_graph(3);
    const auto c = core(g).to_vector();
    CHECK(c == std::vector<std::size_t>{vx(1), vx(2), vx(4)});
    CHECK(core(path(6)).none());
    CHECK(core(star(4)).none());
    CHECK(core(cycle(4)).count() == 4);
    // Two triangles joined by a bridge: the bridge endpoints stay in the core.
    Graph h = Graph::from_edges(
        6, std::vector<VertexPair>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(core(h).count() == 6);
  }

  TEST_CASE("orthogonality") {
    const Graph g = powerset_graph(3);
    const Vertex a1 = vx(1), a2 = vx(2), b1 = vx(6);
    CHECK(is_orthogonal(g, a1, b1));
    CHECK_FALSE(is_orthogonal(g, a1, a2));
    CHECK_FALSE(is_orthogonal(g, b1, vx(5)));  // not adjacent
    CHECK_THROWS_AS(is_orthogonal(g, a1, a1), std::invalid_argument);
  }

  TEST_CASE("complements") {
    const Graph g3 = powerset_graph(3);
    CHECK(complements_of(g3, vx(1)).to_vector() == std::vector<std::size_t>{vx(6)});
    const Graph g4 = powerset_graph(4);
    // b1*b2 = {x3,x4} has the single complement b3*b4 = {x1,x2}.
    CHECK(complements_of(g4, vx(0b1100)).to_vector() == std::vector<std::size_t>{vx(0b0011)});
    CHECK(complements_of(Graph(3), 1).none());
  }

  TEST_CASE("complement predicates") {
    for (unsigned n = 3; n <= 6; ++n) {
      const Graph g = powerset_graph(n);
      CHECK(is_complemented(g));
      CHECK(is_uniquely_complemented(g));
      CHECK(has_unique_complement_per_vertex(g));
    }
    const Graph p2 = path(2);
    CHECK(is_complemented(p2));
    CHECK(is_uniquely_complemented(p2));
    CHECK(has_unique_complement_per_vertex(p2));
    CHECK_FALSE(is_complemented(complete(3)));
    // Star K1,3: the centre has three complements with equal neighborhoods.
    CHECK(is_uniquely_complemented(star(3)));
    CHECK_FALSE(has_unique_complement_per_vertex(star(3)));
    // Path on 4 vertices: 1 ⊥ 0 and 1 ⊥ 2, N(0) = {1} != N(2) = {1, 3}.
    CHECK(is_complemented(path(4)));
    CHECK_FALSE(is_uniquely_complemented(path(4)));
  }

  TEST_CASE("absorption property") {
    CHECK(check_absorption_property(powerset_graph(4)));
    CHECK(check_absorption_property(complete(5)));
    const Graph two_k2 = Graph::from_edges(4, std::vector<VertexPair>{{0, 1}, {2, 3}});
    const auto w = find_absorption_failure(two_k2);
    REQUIRE(w);
    CHECK(w->first == 0);
    CHECK(w->second == 2);
  }

  TEST_CASE("ends") {
    CHECK(ends(powerset_graph(3)).to_vector() ==
          std::vector<std::size_t>{vx(3), vx(5), vx(6)});
    CHECK(ends(cycle(4)).none());
    CHECK(ends(star(4)).to_vector() == std::vector<std::size_t>{1, 2, 3, 4});
  }

  TEST_CASE("core edges on short cycles") {
    CHECK(core_edges_off_short_cycles(powerset_graph(5)).empty());
    CHECK(core_edges_off_short_cycles(cycle(4)).empty());
    CHECK(core_edges_off_short_cycles(cycle(5)).size() == 5);
  }

  TEST_CASE("orthogonality, core and degree sums agree with oracles on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 12;
      const Graph g = oracle::random_graph(n, 0.15 + 0.7 * double(rng() % 100) / 100.0, rng);
      const auto m = oracle::matrix_of(g);
      const auto c = core(g);
      const auto oc = oracle::core(m);
      std::size_t deg_sum = 0;
      for (Vertex v = 0; v < n; ++v) {
        CHECK(c.test(v) == oc[v]);
        deg_sum += degree(g, v);
        for (Vertex u = 0; u < n; ++u) {
          if (u == v) continue;
          const bool ortho = is_orthogonal(g, u, v);
          CHECK(ortho == oracle::orthogonal(m, u, v));
          // Orthogonal iff the edge lies on no triangle.
          bool on_triangle = false;
          for (Vertex w = 0; w < n; ++w)
            on_triangle = on_triangle || (w != u && w != v && m[u][w] && m[v][w]);
          CHECK(ortho == (m[u][v] && !on_triangle));
        }
      }
      CHECK(deg_sum == 2 * g.edge_count());
      const long od = oracle::diameter(m);
      const auto d = diameter(g);
      CHECK(d.has_value() == (od >= 0));
      if (d) CHECK(static_cast<long>(*d) == od);
    }
  }

  TEST_CASE("relabel preserves structure") {
    std::mt19937_64 rng(3);
    const Graph g = powerset_graph(4);
    const auto perm = oracle::random_permutation(g.size(), rng);
    const Graph h = relabel(g, perm);
    CHECK(h.edge_count() == g.edge_count());
    for (auto [u, v] : g.edges()) CHECK(h.adjacent(perm[u], perm[v]));
    CHECK(h.label(perm[0]) == g.label(0));
  }

  TEST_CASE("edge validation") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  }
}
