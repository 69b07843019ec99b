#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sgsr/signed_graph.hpp"
#include "test_util.hpp"

using namespace sgsr;
using namespace sgsr_test;

namespace {

void check_well_formed(const SignedGraph& g) {
  int n = g.order();
  for (int u = 0; u < n; ++u) {
    CHECK((g.adj_bits(u) >> u & 1u) == 0);
    CHECK((g.neg_bits(u) & ~g.adj_bits(u)) == 0);
    for (int v = 0; v < n; ++v) CHECK(g.sign(u, v) == g.sign(v, u));
  }
}

}  // namespace

TEST_CASE("from_edge_list basics and errors") {
  auto k2 = SignedGraph::from_edge_list(2, {{0, 1, 1}});
  CHECK(k2.edge_count() == 1);
  CHECK(k2.sign(0, 1) == 1);
  check_well_formed(k2);

  CHECK_THROWS_AS(SignedGraph::from_edge_list(3, {{0, 0, 1}}), SelfLoopError);
  CHECK_THROWS_AS(SignedGraph::from_edge_list(3, {{0, 3, 1}}), VertexRangeError);
  CHECK_THROWS_AS(SignedGraph::from_edge_list(3, {{-1, 1, 1}}), VertexRangeError);
  CHECK_THROWS_AS(SignedGraph::from_edge_list(3, {{0, 1, 1}, {0, 1, -1}}),
                  DuplicateEdgeError);
  CHECK_THROWS_AS(SignedGraph::from_edge_list(3, {{1, 0, -1}, {0, 1, 1}}),
                  DuplicateEdgeError);  // unordered pair
  CHECK_THROWS_AS(SignedGraph::from_edge_list(3, {{0, 1, 0}}), BadSignError);
}

TEST_CASE("degree triples and regularity flags") {
  auto rep = degrees(complete(6));
  for (const auto& t : rep.per_vertex) CHECK(t == DegreeTriple{5, 5, 0, 5});
  CHECK(rep.regular == 5);
  CHECK(rep.net_regular == 5);

  rep = degrees(g1());
  for (const auto& t : rep.per_vertex) CHECK(t == DegreeTriple{5, 4, 1, 3});
  CHECK(rep.regular == 5);
  CHECK(rep.net_regular == 3);

  // C5 with one negative edge: endpoints net 0, others net 2
  rep = degrees(cycle(5, {0}));  // edge 0-1 negative
  CHECK(rep.per_vertex[0].net == 0);
  CHECK(rep.per_vertex[1].net == 0);
  for (int v = 2; v < 5; ++v) CHECK(rep.per_vertex[v].net == 2);
  CHECK(rep.regular == 2);
  CHECK_FALSE(rep.net_regular);
}

TEST_CASE("negate, switch, sub graph operations") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    auto g = random_signed(8, 0.5, 0.4, rng);
    CHECK(negate(negate(g)) == g);
    check_well_formed(negate(g));

    CHECK(switched(g, 0ull) == g);
    CHECK(switched(g, bitmask_all(8)) == g);
    std::uint64_t subset = rng() & bitmask_all(8);
    CHECK(switched(switched(g, subset), subset) == g);

    auto sw = switched(g, subset);
    CHECK(underlying(sw) == underlying(g));
    for (int v = 0; v < 8; ++v)
      CHECK(sw.degree(v).total == g.degree(v).total);
    CHECK(is_balanced(sw) == is_balanced(g));
    for (int v = 0; v < 8; ++v)  // diagonal of the squared matrix
      CHECK(two_walk_counts(sw, v, v) == two_walk_counts(g, v, v));
  }

  // switching one endpoint of an edge flips that vertex's net-degree by
  // twice its cross-degree: on K2 the net-degree goes 1 -> -1
  auto k2 = SignedGraph::from_edge_list(2, {{0, 1, 1}});
  CHECK(k2.degree(0).net == 1);
  CHECK(switched(k2, std::vector<int>{0}).degree(0).net == -1);

  // negation ~ switching do not coincide: negate flips all, switch flips cuts
  auto tri = SignedGraph::from_edge_list(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  auto sw = switched(tri, std::vector<int>{0});
  CHECK(sw.sign(0, 1) == -1);
  CHECK(sw.sign(0, 2) == -1);
  CHECK(sw.sign(1, 2) == 1);

  auto gneg = subgraph_neg(g2());
  CHECK(gneg.edge_count() == 6);
  CHECK(gneg.negative_edge_count() == 6);
  // two disjoint triangles on 6 vertices
  CHECK_FALSE(is_connected(gneg));
  for (int v = 0; v < 6; ++v) CHECK(gneg.degree(v).total == 2);
  CHECK(unbalanced_triangles(underlying(gneg)).empty());

  auto gpos = subgraph_pos(g2());
  CHECK(gpos.edge_count() == 9);
  CHECK(gpos.negative_edge_count() == 0);
  CHECK(underlying(g1()) == complete(6));
}

TEST_CASE("two-walk counts") {
  // negative edge inside a negative triangle of G2: all four 2-walks positive
  auto g = g2();
  CHECK(g.sign(0, 1) == -1);
  CHECK(two_walk_counts(g, 0, 1) == WalkCounts2{4, 0});
  CHECK(two_walk_counts(g, 0, 1).a2() == 4);

  // diagonal: (d(u), 0) for every vertex of every graph
  std::mt19937 rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    auto h = random_signed(7, 0.5, 0.5, rng);
    for (int v = 0; v < 7; ++v)
      CHECK(two_walk_counts(h, v, v) == WalkCounts2{h.degree(v).total, 0});
  }

  // S12_1: vertices 1 and 6 are non-adjacent with two negative 2-walks
  auto s = s12_1();
  CHECK(s.sign(1, 6) == 0);
  CHECK(two_walk_counts(s, 1, 6) == WalkCounts2{0, 2});
  CHECK(two_walk_counts(s, 1, 6).a2() == -2);

  // pos+neg equals common neighbours; pos-neg equals the matrix square entry
  for (int iter = 0; iter < 20; ++iter) {
    auto h = random_signed(8, 0.6, 0.3, rng);
    auto sq = matrix_square(sign_matrix(h));
    for (int u = 0; u < 8; ++u)
      for (int v = 0; v < 8; ++v) {
        auto w = two_walk_counts(h, u, v);
        if (u != v)
          CHECK(w.pos + w.neg ==
                std::popcount(h.adj_bits(u) & h.adj_bits(v)));
        CHECK(w.a2() == sq[u][v]);
      }
  }
}

TEST_CASE("balance") {
  CHECK(is_balanced(complete(5)));
  CHECK(unbalanced_triangles(complete(5)).empty());

  auto tri = SignedGraph::from_edge_list(3, {{0, 1, -1}, {1, 2, 1}, {0, 2, 1}});
  CHECK_FALSE(is_balanced(tri));
  auto ubt = unbalanced_triangles(tri);
  REQUIRE(ubt.size() == 1);
  CHECK(ubt[0] == std::array<int, 3>{0, 1, 2});

  // balanced iff some switching makes the graph all-positive (exhaustive)
  std::mt19937 rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    auto g = random_signed(7, 0.45, 0.5, rng);
    bool switchable = false;
    for (std::uint64_t mask = 0; mask < 128 && !switchable; ++mask)
      switchable = switched(g, mask).negative_edge_count() == 0;
    CHECK(is_balanced(g) == switchable);
  }

  // all-negative even cycle is balanced, odd cycle is not
  CHECK(is_balanced(cycle(6, {0, 1, 2, 3, 4, 5})));
  CHECK_FALSE(is_balanced(cycle(5, {0, 1, 2, 3, 4})));

  // on chordal graphs balance coincides with "every triangle positive"
  for (int iter = 0; iter < 60; ++iter) {
    auto signs = rng();
    std::vector<SignedEdge> edges;
    int bit = 0;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v, ++bit)
        edges.push_back({u, v, (signs >> bit & 1u) ? -1 : 1});
    auto k5 = SignedGraph::from_edge_list(5, edges);
    CHECK(is_balanced(k5) == unbalanced_triangles(k5).empty());
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path(5)));
  CHECK(is_connected(complete(3)));
  auto two_parts = SignedGraph::from_edge_list(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_FALSE(is_connected(two_parts));
  CHECK(is_connected(SignedGraph(1)));
}
