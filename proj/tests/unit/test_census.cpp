#include <gtest/gtest.h>

#include "turanl2/canonical.hpp"
#include "turanl2/census.hpp"
#include "turanl2/constructions.hpp"
#include "turanl2/errors.hpp"

using namespace turanl2;

TEST(CensusK43, FrozenSmallN) {
  struct Row {
    int n;
    std::int64_t optimum;
    std::uint64_t raw;
    std::size_t classes;
  };
  for (const auto& row : {Row{4, 15, 4, 1}, Row{5, 47, 30, 1}, Row{6, 120, 30, 1}}) {
    K43CensusOptions naive;
    naive.naive = true;
    auto a = censusK43(row.n);
    auto b = censusK43(row.n, naive);
    EXPECT_EQ(a.optimum, row.optimum);
    EXPECT_EQ(b.optimum, row.optimum);
    EXPECT_EQ(b.rawMaximizers, row.raw);
    EXPECT_EQ(a.extremalClasses, row.classes);
    EXPECT_EQ(b.extremalClasses, row.classes);
    EXPECT_TRUE(a.referenceAttains);
  }
}

TEST(CensusK43, C6IsTheUniqueMaximizer) {
  auto r = censusK43(6);
  EXPECT_TRUE(r.referenceUnique);
  ASSERT_EQ(r.extremalThreeGraphs.size(), 1U);
  EXPECT_EQ(canonicalForm(r.extremalThreeGraphs[0]), canonicalForm(buildBalancedC(6).graph));
}

TEST(CensusK43, Limits) {
  K43CensusOptions naive;
  naive.naive = true;
  EXPECT_THROW(censusK43(7, naive), TuranError);
  EXPECT_THROW(censusK43(9), TuranError);
}

TEST(CensusMantel, FrozenExhaustive) {
  auto e1 = censusColoredMantel(1, MantelObjective::Edges);
  EXPECT_EQ(e1.optimum, 2);
  EXPECT_EQ(e1.rawMaximizers, 3U);
  auto l1 = censusColoredMantel(1, MantelObjective::L2);
  EXPECT_EQ(l1.optimum, 6);
  auto e2 = censusColoredMantel(2, MantelObjective::Edges);
  EXPECT_EQ(e2.method, "exhaustive");
  EXPECT_EQ(e2.optimum, 9);
  EXPECT_EQ(e2.rawMaximizers, 25U);
  EXPECT_EQ(e2.extremalClasses, 10U);
  EXPECT_EQ(e2.extremalClassesRotation, 4U);
  for (const auto& b : e2.bounds) EXPECT_TRUE(b.pass) << b.name;
  auto l2 = censusColoredMantel(2, MantelObjective::L2);
  EXPECT_EQ(l2.optimum, 58);
  EXPECT_EQ(l2.rawMaximizers, 3U);
  EXPECT_TRUE(l2.referenceAttains);
}

TEST(CensusMantel, SymmetrizedAgreesWhereExact) {
  MantelCensusOptions o;
  o.forceSymmetrized = true;
  auto s = censusColoredMantel(2, MantelObjective::Edges, o);
  auto e = censusColoredMantel(2, MantelObjective::Edges);
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.optimum, e.optimum);
  EXPECT_EQ(s.extremalClasses, e.extremalClasses);
  EXPECT_EQ(s.extremalClassesRotation, e.extremalClassesRotation);
  auto s3 = censusColoredMantel(3, MantelObjective::Edges, o);
  EXPECT_FALSE(s3.exact);
  EXPECT_EQ(s3.optimum, 21);
  for (const auto& g : s3.extremalColored) EXPECT_TRUE(isCyclicTriangleFree(g));
}

TEST(CensusTripartite, FrozenAndStructure) {
  const std::int64_t optimum[] = {2, 8, 18};
  for (int n = 1; n <= 3; ++n) {
    auto r = censusTripartiteTriangleFree(n);
    EXPECT_EQ(r.optimum, optimum[n - 1]);
    EXPECT_TRUE(r.structureMatches.value());
    if (n <= 2) EXPECT_EQ(censusTripartiteTriangleFree(n, true).optimum, r.optimum);
  }
  EXPECT_EQ(censusTripartiteTriangleFree(1).rawMaximizers, 3U);
  EXPECT_EQ(censusTripartiteTriangleFree(2).rawMaximizers, 9U);
}

TEST(SplitTemplate, ShapeAndMatch) {
  Graph t = splitTemplate(2, 0, {true, false});
  EXPECT_EQ(t.size(), 8U);
  Partition3 p = Partition3::fromSizes(2, 2, 2);
  EXPECT_TRUE(matchesSplitTemplate(ColoredGraph(t, p)));
  EXPECT_FALSE(matchesSplitTemplate(ColoredGraph(Graph::fromPairs(6, {{0, 2}}), p)));
}
