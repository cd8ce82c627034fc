#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "edgereg/error.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"

using namespace edgereg;

namespace {

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

// Every q-fold product of generators, then the elements no other divides.
std::set<std::vector<Exponent>> naive_power(const MonomialIdeal& i, int q) {
  std::vector<std::vector<Exponent>> all{std::vector<Exponent>(i.vars().size(), 0)};
  for (int k = 0; k < q; ++k) {
    std::vector<std::vector<Exponent>> next;
    for (const auto& a : all)
      for (const Monomial& g : i.generators()) {
        auto b = a;
        for (std::size_t v = 0; v < b.size(); ++v) b[v] = static_cast<Exponent>(b[v] + g[v]);
        next.push_back(b);
      }
    all = next;
  }
  std::set<std::vector<Exponent>> out;
  for (const auto& a : all) {
    bool minimal = true;
    for (const auto& b : all) {
      if (a == b) continue;
      bool divides = true;
      for (std::size_t v = 0; v < a.size(); ++v) divides = divides && b[v] <= a[v];
      if (divides) minimal = false;
    }
    if (minimal) out.insert(a);
  }
  return out;
}

std::set<std::vector<Exponent>> exponent_set(const MonomialIdeal& i) {
  std::set<std::vector<Exponent>> out;
  for (const Monomial& g : i.generators()) out.insert(g.exponents());
  return out;
}

bool is_antichain(const MonomialIdeal& i) {
  for (const Monomial& a : i.generators())
    for (const Monomial& b : i.generators())
      if (!(a == b) && a.divides(b)) return false;
  return true;
}

Graph p3() { return Graph(3, std::vector<Edge>{{0, 1}, {1, 2}}, {"x", "y", "z"}); }
Graph k3() { return Graph(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}, {"x", "y", "z"}); }

}  // namespace

TEST(EdgeIdeal, Examples) {
  EXPECT_EQ(edge_ideal(complete(2)).to_string(), "(x0*x1)");
  EXPECT_EQ(edge_ideal(cycle(5)).size(), 5U);
  EXPECT_TRUE(edge_ideal(empty_graph(3)).is_zero());
}

TEST(Power, Examples) {
  EXPECT_EQ(power(edge_ideal(complete(2)), 2).to_string(), "(x0^2*x1^2)");
  EXPECT_EQ(power(edge_ideal(p3()), 2).to_string(), "(x^2*y^2, x*y^2*z, y^2*z^2)");
  EXPECT_EQ(power(edge_ideal(cycle(5)), 2).size(), 15U);
  EXPECT_TRUE(power(edge_ideal(cycle(5)), 0).is_unit());
  EXPECT_THROW(power(edge_ideal(cycle(5)), -1), DomainError);
}

TEST(Power, MatchesNaiveExpansion) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const MonomialIdeal i = edge_ideal(g);
      for (int q = 1; q <= 3; ++q) {
        const MonomialIdeal p = power(i, q);
        EXPECT_EQ(exponent_set(p), naive_power(i, q)) << to_graph6(g) << " q=" << q;
        EXPECT_TRUE(is_antichain(p));
      }
    }
}

TEST(Power, Composes) {
  std::mt19937 rng(7);
  const auto graphs = enumerate_graphs(5, true);
  for (int t = 0; t < 8; ++t) {
    const MonomialIdeal i = edge_ideal(graphs[rng() % graphs.size()]);
    EXPECT_EQ(power(power(i, 2), 2), power(i, 4));
    EXPECT_EQ(power(power(i, 3), 1), power(i, 3));
  }
}

TEST(Colon, Examples) {
  const Graph g = p3();
  const MonomialIdeal i = edge_ideal(g);
  EXPECT_EQ(colon(power(i, 2), edge_product(g, EdgeMultiset({Edge(0, 1)}))), i);
  EXPECT_EQ(colon(i, Monomial(3)), i);
  const Graph k = k3();
  const MonomialIdeal c = colon(power(edge_ideal(k), 2), edge_product(k, EdgeMultiset({Edge(0, 1)})));
  EXPECT_TRUE(c.contains(mono({0, 0, 2})));
  EXPECT_EQ(c.to_string(), "(x*y, x*z, y*z, z^2)");
  EXPECT_TRUE(is_antichain(c));
}

TEST(Colon, MatchesMembershipDefinition) {
  // f is in (I : m) iff f*m is in I, for f ranging over low degree monomials.
  const Graph g = cycle(5);
  const MonomialIdeal i2 = power(edge_ideal(g), 2);
  const Monomial m = edge_product(g, EdgeMultiset({Edge(1, 2)}));
  const MonomialIdeal c = colon(i2, m);
  for (int a = 0; a < 3 * 3 * 3 * 3 * 3; ++a) {
    std::vector<Exponent> e(5);
    int r = a;
    for (auto& x : e) {
      x = static_cast<Exponent>(r % 3);
      r /= 3;
    }
    const Monomial f(e);
    EXPECT_EQ(c.contains(f), i2.contains(f * m));
  }
}

TEST(Polarization, Examples) {
  const auto ctx = VariableContext::make({"x", "y"});
  const MonomialIdeal i(ctx, {mono({2, 2})});
  const Polarization p = polarize(i);
  EXPECT_EQ(p.ideal.to_string(), "(x*x^(2)*y*y^(2))");
  EXPECT_TRUE(p.ideal.is_squarefree());
  EXPECT_EQ(polarize(edge_ideal(cycle(5))).ideal, edge_ideal(cycle(5)));

  const Polarization pp = polarize(power(edge_ideal(p3()), 2));
  EXPECT_EQ(pp.ideal.size(), 3U);
  EXPECT_EQ(pp.ideal.vars().size(), 6U);
}

TEST(Polarization, Depolarizes) {
  for (const Graph& g : enumerate_graphs(4, true))
    for (int q = 1; q <= 3; ++q) {
      const MonomialIdeal i = power(edge_ideal(g), q);
      EXPECT_EQ(depolarize(polarize(i), i.context()), i);
    }
}

TEST(QuadraticGraph, RoundTrip) {
  EXPECT_EQ(graph_of_quadratic_ideal(edge_ideal(p3())), p3());
  for (const Graph& g : enumerate_graphs(5, true)) EXPECT_EQ(graph_of_quadratic_ideal(edge_ideal(g)), g);
  EXPECT_THROW(graph_of_quadratic_ideal(power(edge_ideal(p3()), 2)), DomainError);
}

TEST(QuadraticGraph, KThreeColon) {
  const Graph k = k3();
  const MonomialIdeal c = colon(power(edge_ideal(k), 2), edge_product(k, EdgeMultiset({Edge(0, 1)})));
  const Graph h = graph_of_quadratic_ideal(polarize(c).ideal);
  EXPECT_EQ(h.order(), 4);
  EXPECT_EQ(h.edge_count(), 4U);
  EXPECT_EQ(h.name(3), "z^(2)");
  EXPECT_TRUE(h.has_edge(2, 3));
}

TEST(Json, IdealRoundTrip) {
  const MonomialIdeal i = power(edge_ideal(p3()), 2);
  EXPECT_EQ(MonomialIdeal::from_json(i.to_json()), i);
  EXPECT_THROW(MonomialIdeal::from_json("{"), ParseError);
  EXPECT_THROW(VariableContext::make({"x", "x"}), DomainError);
}
