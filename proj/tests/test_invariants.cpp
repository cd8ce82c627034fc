#include <gtest/gtest.h>

#include <algorithm>

#include "edgereg/error.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/invariants.hpp"

using namespace edgereg;

namespace {

Graph c4_pendant() { return add_whiskers(cycle(4), VertexSet::of({0})); }

// C6 with pendants on two vertices sharing a neighbour.
Graph c6_two_pendants() { return add_whiskers(cycle(6), VertexSet::of({0, 2})); }

// Brute-force induced matching number over all edge subsets.
int brute_induced_matching(const Graph& g) {
  const auto es = g.edges();
  int best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << es.size()); ++m) {
    VertexSet used;
    bool ok = true;
    int count = 0;
    for (std::size_t i = 0; i < es.size() && ok; ++i)
      if ((m >> i) & 1U) {
        ok = !used.intersects(es[i].ends());
        used |= es[i].ends();
        ++count;
      }
    if (!ok) continue;
    if (induced_subgraph(g, used).edge_count() != static_cast<std::size_t>(count)) continue;
    best = std::max(best, count);
  }
  return best;
}

// Zeta by direct recursion over the process, without memoisation.
int brute_zeta(const Graph& g, VertexSet h) {
  int best = -1;
  for (Vertex v : h) {
    if (g.neighbors_in(v, h).size() < 2) continue;
    VertexSet rest = h - g.closed_neighbors(v);
    for (Vertex w : rest)
      if (g.neighbors_in(w, rest).empty()) rest.erase(w);
    best = std::max(best, 1 + brute_zeta(g, rest));
  }
  if (best < 0) return static_cast<int>(g.edges_within(h).size());
  return best;
}

}  // namespace

TEST(Matchings, Examples) {
  EXPECT_EQ(induced_matching_number(cycle(7)), 2);
  EXPECT_EQ(induced_matching_number(complete(2)), 1);
  EXPECT_EQ(induced_matching_number(empty_graph(3)), 0);
  EXPECT_EQ(min_max_matching(c6_two_pendants()), 2);
  EXPECT_EQ(min_max_matching(cycle(4)), 2);
  EXPECT_EQ(matching_number(cycle(7)), 3);
}

TEST(Matchings, InducedAgreesWithBruteForce) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true))
      EXPECT_EQ(induced_matching_number(g), brute_induced_matching(g)) << to_graph6(g);
}

TEST(Cochord, Examples) {
  EXPECT_EQ(cochordal_cover_number(cycle(7)), 3);
  EXPECT_EQ(cochordal_cover_number(c4_pendant()), 1);
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(cochordal_cover_number(star(m)), 1);
}

TEST(Cochord, BoundsRegularityFromAbove) {
  // cochord >= nu always; equality for chordal-complement graphs is 1.
  for (const Graph& g : enumerate_graphs(5, true)) {
    EXPECT_GE(cochordal_cover_number(g), induced_matching_number(g));
    if (is_chordal(complement(g))) EXPECT_EQ(cochordal_cover_number(g), 1);
  }
}

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta(cycle(7)).value, 2);
  EXPECT_EQ(zeta(cycle(4)).value, 1);
  EXPECT_EQ(zeta(c4_pendant()).value, 2);
  EXPECT_EQ(zeta(cycle(5)).value, 2);
  EXPECT_EQ(zeta(c6_two_pendants()).value, 3);
}

TEST(Zeta, Cycles) {
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(zeta(cycle(n)).value, n / 3 + (n % 3 == 2 ? 1 : 0)) << n;
  for (int n = 3; n <= 13; ++n) EXPECT_EQ(zeta(cycle(n)).value, brute_zeta(cycle(n), cycle(n).support())) << n;
  // Centre 0, then the middle of the remaining P7, leaves two separate edges.
  const ZetaResult z = zeta(cycle(10));
  EXPECT_EQ(z.value, 4);
  EXPECT_EQ(z.witness.centers.size(), 2U);
  EXPECT_EQ(z.witness.residual_edges.size(), 2U);
}

TEST(Zeta, IncomparableWithOtherBounds) {
  EXPECT_LT(zeta(cycle(7)).value, cochordal_cover_number(cycle(7)));
  EXPECT_GT(zeta(c4_pendant()).value, cochordal_cover_number(c4_pendant()));
  EXPECT_GT(zeta(c6_two_pendants()).value, min_max_matching(c6_two_pendants()));
  EXPECT_LT(zeta(cycle(4)).value, min_max_matching(cycle(4)));
}

TEST(Zeta, WitnessIsAValidPacking) {
  for (const Graph& g : enumerate_graphs(6, true)) {
    const ZetaResult z = zeta(g);
    EXPECT_EQ(z.witness.weight(), z.value);
    VertexSet h = g.support();
    for (Vertex v : z.witness.centers) {
      EXPECT_GE(g.neighbors_in(v, h).size(), 2);
      h -= g.closed_neighbors(v);
      for (Vertex w : h)
        if (g.neighbors_in(w, h).empty()) h.erase(w);
    }
    EXPECT_EQ(g.edges_within(h), z.witness.residual_edges);
    for (Vertex w : h) EXPECT_EQ(g.neighbors_in(w, h).size(), 1);
  }
}

TEST(Zeta, Properties) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const int z = zeta(g).value;
      EXPECT_EQ(z, brute_zeta(g, g.support())) << to_graph6(g);
      EXPECT_LE(induced_matching_number(g), z);
      EXPECT_LE(z, matching_number(g));
      for (Vertex x : g.vertices())
        if (g.degree(x) >= 2) EXPECT_LE(zeta(delete_vertices(g, g.closed_neighbors(x))).value + 1, z);
    }
}

TEST(Zeta, IsomorphismInvariant) {
  const Graph g = add_whiskers(cycle(5), VertexSet::of({1}));
  const std::vector<Vertex> perm{5, 3, 1, 0, 2, 4};
  const Graph h = relabel(g, perm);
  EXPECT_EQ(zeta(g).value, zeta(h).value);
  EXPECT_EQ(induced_matching_number(g), induced_matching_number(h));
  EXPECT_EQ(cochordal_cover_number(g), cochordal_cover_number(h));
  EXPECT_EQ(min_max_matching(g), min_max_matching(h));
  EXPECT_EQ(is_vertex_decomposable(g), is_vertex_decomposable(h));
}

TEST(VertexDecomposable, Examples) {
  EXPECT_FALSE(is_vertex_decomposable(cycle(4)));
  EXPECT_TRUE(is_vertex_decomposable(cycle(5)));
  EXPECT_FALSE(is_vertex_decomposable(cycle(7)));
  EXPECT_TRUE(is_vertex_decomposable(empty_graph(3)));
  int vd = 0;
  for (const Graph& g : enumerate_graphs(5, true)) vd += is_vertex_decomposable(g);
  EXPECT_EQ(vd, 20);
}

TEST(VertexDecomposable, ChordalGraphsAreDecomposable) {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, false))
      if (is_chordal(g)) EXPECT_TRUE(is_vertex_decomposable(g)) << to_graph6(g);
}

TEST(VertexDecomposable, SheddingSetNonEmpty) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (!is_vertex_decomposable(g)) continue;
      const VertexSet s = shedding_set(g);
      EXPECT_FALSE(s.empty()) << to_graph6(g);
      for (Vertex x : s) {
        EXPECT_TRUE(is_shedding_vertex(g, x));
        EXPECT_TRUE(is_vertex_decomposable(delete_vertices(g, VertexSet::of({x}))));
      }
    }
}

TEST(VertexDecomposable, Certificate) {
  const auto cert = vertex_decomposition(add_whiskers(cycle(4), VertexSet::of({0})));
  ASSERT_TRUE(cert.has_value());
  EXPECT_GE(cert->vertex, 0);
  EXPECT_FALSE(vertex_decomposition(cycle(4)).has_value());
}

TEST(VertexDecomposable, Guard) {
  EXPECT_THROW(is_vertex_decomposable(cycle(13)), ResourceError);
}
