#include <gtest/gtest.h>

#include "edgereg/error.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/verify.hpp"
#include "json.hpp"

using namespace edgereg;
using nlohmann::json;

TEST(DropSet, House) {
  const Graph h = house_graph();
  VertexSet degenerate;
  EXPECT_EQ(reg_drop_set(h, &degenerate), VertexSet::of({1, 4}));
  EXPECT_EQ(h.name(1), "t2");
  EXPECT_EQ(h.name(4), "t5");
}

TEST(DropSet, EdgeIsDegenerate) {
  VertexSet degenerate;
  EXPECT_EQ(reg_drop_set(complete(2), &degenerate), VertexSet::of({0, 1}));
  EXPECT_EQ(degenerate, VertexSet::of({0, 1}));
}

TEST(DropSet, ContainsSheddingSet) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (!is_vertex_decomposable(g)) continue;
      EXPECT_TRUE(shedding_set(g).is_subset_of(reg_drop_set(g))) << to_graph6(g);
    }
}

TEST(Registry, UnknownIdListsValidOnes) {
  try {
    run_check("thm-9.9");
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("thm-4.6"), std::string::npos);
  }
  EXPECT_TRUE(is_check_id("lem-3.5"));
  EXPECT_FALSE(is_check_id("lem-3.1"));
}

TEST(Registry, HouseColon) {
  const CheckReport r = run_check("house-colon");
  EXPECT_EQ(r.verdict, "holds");
  EXPECT_EQ(r.checked, 4U);
  const json j = json::parse(r.to_json());
  EXPECT_EQ(j["evidence"]["P"], json::array({"t2", "t5"}));
}

TEST(Registry, ReportSchema) {
  FamilySpec s;
  s.nmax = 4;
  s.qmax = 2;
  const json j = json::parse(run_check("thm-4.6", s).to_json());
  for (const char* key : {"id", "family", "checked", "violations", "seed", "elapsed_ms", "verdict", "statement"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["verdict"], "holds");
  EXPECT_EQ(CheckReport::csv_header(), "id,family,checked,skipped,violations,seed,elapsed_ms,budget_ms,verdict");
}

TEST(Registry, SeededSamplingIsDeterministic) {
  FamilySpec s;
  s.nmax = 5;
  s.smax = 3;
  s.s3_samples = 2;
  s.seed = 11;
  const CheckReport a = run_check("lem-3.5", s);
  const CheckReport b = run_check("lem-3.5", s);
  EXPECT_EQ(a.checked, b.checked);
  s.jobs = 3;
  EXPECT_EQ(run_check("lem-3.5", s).checked, a.checked);
}

TEST(Registry, ExplicitInstances) {
  FamilySpec s;
  s.graphs = {cycle(5), disjoint_union(cycle(3), cycle(4))};
  s.qmax = 2;
  const CheckReport r = run_check("thm-4.6", s);
  EXPECT_EQ(r.checked, 4U);
  EXPECT_EQ(r.verdict, "holds");
}

TEST(Registry, ViolationCarriesInstance) {
  // The prism is vertex decomposable with no induced C5 and reg(I) = 3 > nu + 1.
  FamilySpec s;
  s.graphs = {complement(cycle(6))};
  s.qmax = 1;
  EXPECT_EQ(run_check("cor-5.4-c5free-vd", s).checked, 0U);
  const CheckReport r = run_check("cor-5.4-c5free-vd-induced", s);
  ASSERT_EQ(r.violations.size(), 1U);
  EXPECT_EQ(r.verdict, "violated");
  EXPECT_EQ(from_graph6(r.violations[0].graph6), complement(cycle(6)));
  EXPECT_EQ(r.violations[0].lhs, "3");
  EXPECT_EQ(r.violations[0].rhs, "2");
}

TEST(Registry, QuestionIsEvidence) {
  FamilySpec s;
  s.nmax = 5;
  const CheckReport r = search_question(s);
  EXPECT_EQ(r.verdict, "evidence");
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.id, "q-4.10");
}

TEST(Registry, Enum5) {
  const CheckReport r = run_check("enum-5");
  EXPECT_EQ(r.verdict, "holds");
  const json e = json::parse(r.evidence);
  EXPECT_EQ(e["graphs"], 23);
  EXPECT_EQ(e["vertex_decomposable"], 20);
  EXPECT_EQ(e["vd_with_edge_outside_S"].size(), 2U);
}

TEST(Registry, LowerBoundOverCache) {
  FamilySpec s;
  s.nmax = 4;
  run_check("thm-4.6", s);
  EXPECT_GT(regularity_cache_size(), 0U);
  const CheckReport r = lower_bound_over_cache();
  EXPECT_EQ(r.verdict, "holds");
  EXPECT_GT(r.checked, 0U);
}
