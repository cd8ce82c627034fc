#include <gtest/gtest.h>

#include "edgereg/error.hpp"
#include "edgereg/even_connection.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/regularity.hpp"

using namespace edgereg;

namespace {

Graph k3() { return Graph(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}, {"x", "y", "z"}); }

Monomial var_product(std::size_t n, Vertex a, Vertex b) {
  std::vector<Exponent> e(n, 0);
  ++e[static_cast<std::size_t>(a)];
  ++e[static_cast<std::size_t>(b)];
  return Monomial(e);
}

}  // namespace

TEST(EvenConnection, PentagonChord) {
  const Graph c5 = cycle(5);
  const EdgeMultiset e({Edge(1, 2)});
  const auto c = find_even_connection(c5, e, 0, 3);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->k, 1);
  EXPECT_EQ(c->path, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(is_valid_even_connection(c5, e, 0, 3, *c));
  const MonomialIdeal col = colon(power(edge_ideal(c5), 2), edge_product(c5, e));
  EXPECT_TRUE(col.contains(var_product(5, 0, 3)));
}

TEST(EvenConnection, EdgesAreTrivial) {
  const Graph g = cycle(6);
  const EdgeMultiset e({Edge(0, 1), Edge(3, 4)});
  for (const Edge& x : g.edges()) {
    const auto c = find_even_connection(g, e, x.u, x.v);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->k, 0);
  }
}

TEST(EvenConnection, DifferentComponents) {
  const Graph g = disjoint_union(cycle(3), cycle(3));
  EXPECT_FALSE(find_even_connection(g, EdgeMultiset({Edge(0, 1)}), 0, 4).has_value());
  EXPECT_THROW(find_even_connection(g, EdgeMultiset({Edge(0, 1)}), 0, 9), DomainError);
}

TEST(EvenConnection, SelfConnectionInTriangle) {
  const Graph k = k3();
  const EdgeMultiset e({Edge(0, 1)});
  const auto c = find_even_connection(k, e, 2, 2);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->k, 1);
  EXPECT_EQ(c->path.front(), 2);
  EXPECT_EQ(c->path.back(), 2);
  EXPECT_TRUE(is_valid_even_connection(k, e, 2, 2, *c));
  EXPECT_EQ(c->to_json(), R"({"assignment":[0],"k":1,"path":[2,0,1,2]})");
}

TEST(EvenConnection, MultiplicityLimitsUse) {
  // On P4 = 0-1-2-3 with E = {12}, 0 and 3 connect; with E = {01} they do not.
  const Graph p = path(4);
  EXPECT_TRUE(find_even_connection(p, EdgeMultiset({Edge(1, 2)}), 0, 3).has_value());
  EXPECT_FALSE(find_even_connection(p, EdgeMultiset({Edge(0, 1)}), 0, 3).has_value());
  // P6 = 0-...-5 needs 12 and 34 once each.
  const Graph p6 = path(6);
  EXPECT_FALSE(find_even_connection(p6, EdgeMultiset({Edge(1, 2)}), 0, 5).has_value());
  const auto c = find_even_connection(p6, EdgeMultiset({Edge(1, 2), Edge(3, 4)}), 0, 5);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->k, 2);
}

TEST(EvenConnection, CertificatesMatchMonomialOracle) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const MonomialIdeal i = edge_ideal(g);
      for (int s = 1; s <= 2; ++s)
        for (const EdgeMultiset& e : edge_multisets(g, s)) {
          const MonomialIdeal col = colon(power(i, s + 1), edge_product(g, e));
          for (Vertex u : g.vertices())
            for (Vertex v = u; v < g.order(); ++v) {
              const auto c = find_even_connection(g, e, u, v);
              EXPECT_EQ(c.has_value(), col.contains(var_product(static_cast<std::size_t>(n), u, v)))
                  << to_graph6(g) << " u=" << u << " v=" << v;
              if (c) EXPECT_TRUE(is_valid_even_connection(g, e, u, v, *c));
            }
        }
    }
}

TEST(ColonGraph, PentagonGetsChord) {
  const Graph c5 = cycle(5);
  const ColonGraph cg = colon_graph(c5, EdgeMultiset({Edge(1, 2)}));
  EXPECT_EQ(cg.graph, c5.with_edge(0, 3));
}

TEST(ColonGraph, TriangleShadow) {
  const Graph k = k3();
  const EdgeMultiset e({Edge(0, 1)});
  const ColonGraph cg = colon_graph(k, e);
  const MonomialIdeal oracle = polarize(colon(power(edge_ideal(k), 2), edge_product(k, e))).ideal;
  EXPECT_EQ(edge_ideal(cg.graph), oracle);
  EXPECT_EQ(cg.graph.order(), 4);
  EXPECT_EQ(cg.graph.name(3), "z^(2)");
  EXPECT_EQ(cg.graph.neighbors(3), VertexSet::of({2}));
}

TEST(ColonGraph, WhiskerLeavesGraphUnchanged) {
  for (const Graph& g : enumerate_graphs(5, true))
    for (const Edge& w : g.edges())
      if (g.degree(w.u) == 1 || g.degree(w.v) == 1) EXPECT_EQ(colon_graph(g, EdgeMultiset({w})).graph, g);
}

TEST(ColonGraph, EmptyMultisetIsIdentity) {
  const Graph g = cycle(6);
  EXPECT_EQ(colon_graph(g, EdgeMultiset()).graph, g);
}

TEST(ColonGraph, OracleEquivalenceSmall) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const MonomialIdeal i = edge_ideal(g);
      for (int s = 1; s <= 3; ++s)
        for (const EdgeMultiset& e : edge_multisets(g, s)) {
          const MonomialIdeal c = colon(power(i, s + 1), edge_product(g, e));
          for (const Monomial& m : c.generators()) EXPECT_EQ(m.degree(), 2);
          EXPECT_EQ(edge_ideal(colon_graph(g, e).graph), polarize(c).ideal) << to_graph6(g);
        }
    }
}

TEST(KeyedGraph, MatchesColonGraph) {
  const Graph g = add_whiskers(cycle(5), VertexSet::of({0}));
  const EdgeMultiset e({Edge(1, 2), Edge(1, 2)});
  const KeyedGraph k = colon_keyed(g, g.vertices(), e);
  const ColonGraph cg = colon_graph(g, e);
  EXPECT_EQ(k.edges().size(), cg.graph.edge_count());
  for (const Edge& x : cg.graph.edges()) {
    const int a = ColonVertex{cg.base[static_cast<std::size_t>(x.u)], cg.level[static_cast<std::size_t>(x.u)]}.key();
    const int b = ColonVertex{cg.base[static_cast<std::size_t>(x.v)], cg.level[static_cast<std::size_t>(x.v)]}.key();
    EXPECT_TRUE(k.has_edge(a, b));
  }
  EXPECT_TRUE(is_induced_in(colon_keyed(g, VertexSet::of({0, 1, 2, 3}), e), k));
}

TEST(Classification, Examples) {
  const Graph c5 = cycle(5);
  const EdgeMultiset e({Edge(1, 2)});
  const NeighborClassification c = classify_neighbors(c5, e, 0, 2);
  EXPECT_EQ(c.x, 1);
  EXPECT_EQ(c.y, 2);
  auto in = [](const std::vector<ColonVertex>& s, Vertex v) {
    return std::find(s.begin(), s.end(), ColonVertex{v, 1}) != s.end();
  };
  EXPECT_TRUE(in(c.x1, 3));
  EXPECT_TRUE(in(c.x1, 1));
  EXPECT_THROW(classify_neighbors(c5, e, 3, 2), DomainError);
  EXPECT_THROW(classify_neighbors(c5, e, 0, 4), DomainError);
}

TEST(Classification, PartitionsNeighbourhood) {
  for (int n = 3; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true))
      for (int s = 1; s <= 2; ++s)
        for (const EdgeMultiset& e : edge_multisets(g, s))
          for (std::size_t i = 0; i < e.size(); ++i)
            for (Vertex y : {e[i].u, e[i].v}) {
              const NeighborClassification c = classify_neighbors(g, e, i, y);
              const KeyedGraph k = colon_keyed(g, g.vertices(), e);
              VertexSet seen;
              for (const auto* part : {&c.x1, &c.x2, &c.unclassified})
                for (const ColonVertex& u : *part) {
                  EXPECT_FALSE(seen.contains(u.key()));
                  seen.insert(u.key());
                }
              EXPECT_EQ(seen, k.closed_neighbors(ColonVertex{y, 1}.key()));
              for (Vertex w : g.neighbors(y))
                EXPECT_NE(std::find(c.x1.begin(), c.x1.end(), ColonVertex{w, 1}), c.x1.end());
              ASSERT_EQ(c.x1.size(), c.x1_witness.size());
              ASSERT_EQ(c.x2.size(), c.x2_witness.size());
            }
}
