#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "edgereg/error.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/regularity.hpp"

using namespace edgereg;

namespace {

// Independent oracle: multigraded Betti numbers from the upper Koszul
// simplicial complex K^b(I) = {tau squarefree, tau <= b : x^(b - tau) in I},
// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)), and reg(I) = max |b| - i. Ranks are
// taken mod 1000003 by dense elimination.
constexpr std::int64_t kOracleP = 1000003;

std::int64_t pow_mod(std::int64_t a, std::int64_t e) {
  std::int64_t r = 1;
  a %= kOracleP;
  for (; e; e >>= 1, a = a * a % kOracleP)
    if (e & 1) r = r * a % kOracleP;
  return r;
}

int dense_rank(std::vector<std::vector<std::int64_t>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) piv = r;
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = pow_mod(m[rank][c], kOracleP - 2);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c] * inv % kOracleP;
      for (int k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % kOracleP + kOracleP) % kOracleP;
    }
    ++rank;
  }
  return rank;
}

// Reduced homology ranks of a complex given by its face list (bitmasks,
// including the empty face). Index d + 1 holds dimension d.
std::vector<int> oracle_homology(const std::vector<std::uint32_t>& faces) {
  int top = -1;
  for (auto f : faces) top = std::max(top, std::popcount(f) - 1);
  std::vector<std::vector<std::uint32_t>> by_dim(static_cast<std::size_t>(top + 2));
  for (auto f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  std::vector<int> boundary_rank(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    const auto& hi = by_dim[k];
    const auto& lo = by_dim[k - 1];
    std::vector<std::vector<std::int64_t>> m(lo.size(), std::vector<std::int64_t>(hi.size(), 0));
    for (std::size_t c = 0; c < hi.size(); ++c) {
      int sign = 0;
      for (std::uint32_t rest = hi[c]; rest; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        const auto row = std::find(lo.begin(), lo.end(), hi[c] & ~bit) - lo.begin();
        m[static_cast<std::size_t>(row)][c] = sign % 2 == 0 ? 1 : kOracleP - 1;
        ++sign;
      }
    }
    boundary_rank[k] = dense_rank(std::move(m));
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < by_dim.size(); ++k)
    out.push_back(static_cast<int>(by_dim[k].size()) - boundary_rank[k] - boundary_rank[k + 1]);
  return out;
}

int koszul_regularity(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.vars().size();
  std::set<std::vector<Exponent>> lattice;
  for (const Monomial& g : ideal.generators()) lattice.insert(g.exponents());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::vector<Exponent>> now(lattice.begin(), lattice.end());
    for (const auto& a : now)
      for (const Monomial& g : ideal.generators()) {
        auto l = a;
        for (std::size_t v = 0; v < n; ++v) l[v] = std::max(l[v], g[v]);
        grew = lattice.insert(l).second || grew;
      }
  }
  int best = -1;
  for (const auto& b : lattice) {
    int deg = 0;
    std::uint32_t support = 0;
    for (std::size_t v = 0; v < n; ++v) {
      deg += b[v];
      if (b[v] > 0) support |= 1U << v;
    }
    std::vector<std::uint32_t> faces;
    for (std::uint32_t tau = support;; tau = (tau - 1) & support) {
      std::vector<Exponent> e = b;
      for (std::size_t v = 0; v < n; ++v)
        if ((tau >> v) & 1U) --e[v];
      if (ideal.contains(Monomial(e))) faces.push_back(tau);
      if (tau == 0) break;
    }
    const auto h = oracle_homology(faces);
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k] != 0) best = std::max(best, deg - static_cast<int>(k));  // dimension k - 1 gives i = k
  }
  return best;
}

SimplicialComplex hollow_triangle() { return SimplicialComplex(3, {0b011, 0b101, 0b110}); }

}  // namespace

TEST(Homology, Examples) {
  EXPECT_EQ(reduced_homology_ranks(hollow_triangle()), (std::vector<std::int64_t>{0, 0, 1}));
  const auto simplex = reduced_homology_ranks(SimplicialComplex(4, {0b1111}));
  EXPECT_TRUE(std::all_of(simplex.begin(), simplex.end(), [](auto r) { return r == 0; }));
  const auto pent = reduced_homology_ranks(independence_complex(cycle(5)));
  EXPECT_EQ(pent, (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_EQ(reduced_homology_ranks(SimplicialComplex(2, {0})), (std::vector<std::int64_t>{1}));
  EXPECT_TRUE(reduced_homology_ranks(SimplicialComplex(2, {})).empty());
}

TEST(Homology, FieldsAgreeOnProjectivePlane) {
  // Six-vertex real projective plane: H_1 is Z/2, so GF(32003) and Q agree
  // and both see nothing.
  const std::vector<Face> rp2{0b001011, 0b100011, 0b010101, 0b100101, 0b011001,
                              0b001110, 0b010110, 0b110010, 0b101100, 0b111000};
  const SimplicialComplex d(6, rp2);
  const auto q = reduced_homology_ranks(d, Field::QQ);
  EXPECT_EQ(q, reduced_homology_ranks(d, Field::GFp));
  EXPECT_TRUE(std::all_of(q.begin(), q.end(), [](auto r) { return r == 0; }));
}

TEST(Homology, AgreesWithDenseOracle) {
  for (const Graph& g : enumerate_graphs(6, false)) {
    const SimplicialComplex d = independence_complex(g);
    const auto faces = d.faces();
    const auto want = oracle_homology(faces);
    const auto got = reduced_homology_ranks(d);
    ASSERT_EQ(got.size(), want.size()) << to_graph6(g);
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(got[k], want[k]) << to_graph6(g);
  }
}

TEST(Homology, Guard) {
  EXPECT_THROW(reduced_homology_ranks(SimplicialComplex(25, {1U << 24})), ResourceError);
}

TEST(Complexes, IndependenceLinkRestrict) {
  EXPECT_EQ(independence_complex(complete(2)).facets(), (std::vector<Face>{0b01, 0b10}));
  EXPECT_EQ(independence_complex(cycle(5)).facets().size(), 5U);
  EXPECT_EQ(independence_complex(empty_graph(3)).facets(), (std::vector<Face>{0b111}));
  const SimplicialComplex full(4, {0b1111});
  EXPECT_EQ(link(full, 0b0001).facets(), (std::vector<Face>{0b1110}));
  const SimplicialComplex pent = independence_complex(cycle(5));
  EXPECT_EQ(link(pent, 0), pent);
  EXPECT_THROW(link(pent, 0b00011), DomainError);
  const SimplicialComplex p = restrict(pent, 0b01111);
  EXPECT_EQ(p.facets().size(), 3U);
  EXPECT_EQ(reduced_homology_ranks(p), (std::vector<std::int64_t>{0, 0, 0}));
}

TEST(Regularity, Examples) {
  EXPECT_EQ(edge_regularity(complete(2)).reg, 2);
  EXPECT_EQ(edge_regularity(cycle(5)).reg, 3);
  EXPECT_EQ(edge_regularity(cycle(7)).reg, 3);
  const auto ctx = VariableContext::make({"x", "y"});
  EXPECT_EQ(regularity(MonomialIdeal(ctx, {Monomial(std::vector<Exponent>{2, 2})})).reg, 4);
  EXPECT_EQ(power_regularity(cycle(5), 2).reg, 4);
  EXPECT_EQ(power_regularity(path(3), 2).reg, 4);
  EXPECT_THROW(regularity_squarefree(power(edge_ideal(path(3)), 2)), DomainError);
}

TEST(Regularity, ReportShape) {
  const RegularityReport r = edge_regularity(cycle(5));
  EXPECT_EQ(r.reg_mod, 2);
  EXPECT_EQ(r.witness_dim, 1);
  EXPECT_EQ(r.witness.size(), 5U);
  EXPECT_EQ(r.to_json(), R"({"degenerate":false,"field":"QQ","reg":3,"reg_mod":2,"witness":{"W":["x0","x1","x2","x3","x4"],"dim":1}})");
  const RegularityReport z = edge_regularity(empty_graph(3));
  EXPECT_TRUE(z.degenerate);
  EXPECT_EQ(z.reg, 0);
}

TEST(Regularity, WitnessRecomputes) {
  for (const Graph& g : enumerate_graphs(5, true)) {
    const RegularityReport r = edge_regularity(g);
    Face w = 0;
    for (const std::string& name : r.witness) w |= Face{1} << std::stoi(name.substr(1));
    const auto h = reduced_homology_ranks(restrict(independence_complex(g), w));
    ASSERT_LT(static_cast<std::size_t>(r.witness_dim + 1), h.size());
    EXPECT_NE(h[static_cast<std::size_t>(r.witness_dim + 1)], 0);
    EXPECT_EQ(r.reg, r.witness_dim + 2);
  }
}

TEST(Regularity, KoszulOracleEdgeIdeals) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const MonomialIdeal i = edge_ideal(g);
      EXPECT_EQ(regularity(i).reg, koszul_regularity(i)) << to_graph6(g);
    }
}

TEST(Regularity, KoszulOraclePowers) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const MonomialIdeal i2 = power(edge_ideal(g), 2);
      EXPECT_EQ(regularity(i2).reg, koszul_regularity(i2)) << to_graph6(g);
    }
  for (const Graph& g : enumerate_graphs(4, true)) {
    const MonomialIdeal i3 = power(edge_ideal(g), 3);
    EXPECT_EQ(regularity(i3).reg, koszul_regularity(i3)) << to_graph6(g);
  }
}

TEST(Regularity, KoszulOracleColons) {
  for (const Graph& g : enumerate_graphs(5, true))
    for (const EdgeMultiset& e : edge_multisets(g, 2)) {
      const MonomialIdeal c = colon(power(edge_ideal(g), 3), edge_product(g, e));
      const int want = koszul_regularity(c);
      EXPECT_EQ(colon_regularity(g, e).reg, want) << to_graph6(g);
      EXPECT_EQ(colon_regularity_monomial(g, e).reg, want) << to_graph6(g);
    }
}

TEST(Regularity, FrobergCrossOracle) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      if (g.edge_count() == 0) continue;
      EXPECT_EQ(edge_regularity(g).reg == 2, is_chordal(complement(g))) << to_graph6(g);
    }
}

TEST(Regularity, InducedSubgraphMonotone) {
  for (const Graph& g : enumerate_graphs(6, true)) {
    const int r = edge_regularity(g).reg;
    for (Vertex x : g.vertices()) {
      const Graph h = delete_vertices(g, VertexSet::of({x}));
      if (h.edge_count() > 0) EXPECT_LE(edge_regularity(h).reg, r);
    }
  }
}

TEST(Regularity, FieldsAgree) {
  reset_field_audit();
  set_field_audit(true);
  for (const Graph& g : enumerate_graphs(5, true)) power_regularity(g, 2);
  set_field_audit(false);
  const FieldAudit a = field_audit();
  EXPECT_GT(a.complexes, 0U);
  EXPECT_EQ(a.mismatches, 0U);
  EXPECT_EQ(power_regularity(cycle(5), 2, Field::GFp).field, Field::GFp);
}

TEST(Regularity, Guards) {
  EXPECT_THROW(edge_regularity(cycle(21)), ResourceError);
  EXPECT_THROW(power_regularity(cycle(11), 2), ResourceError);
  EXPECT_THROW(power_regularity(cycle(5), 0), DomainError);
}

TEST(Banerjee, BoundsPowerRegularity) {
  EXPECT_EQ(banerjee_bound(complete(2), 2), 4);
  EXPECT_LE(banerjee_bound(cycle(5), 2), 2 * 2 + zeta(cycle(5)).value - 1);
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) EXPECT_GE(banerjee_bound(g, 2), power_regularity(g, 2).reg);
  EXPECT_THROW(banerjee_bound(cycle(5), 1), DomainError);
}

TEST(EdgeMultisets, Counts) {
  // Multisets of size s from m edges: C(m + s - 1, s).
  EXPECT_EQ(edge_multisets(cycle(5), 1).size(), 5U);
  EXPECT_EQ(edge_multisets(cycle(5), 2).size(), 15U);
  EXPECT_EQ(edge_multisets(cycle(5), 3).size(), 35U);
  EXPECT_EQ(edge_multisets(cycle(5), 0).size(), 1U);
}
