#include <gtest/gtest.h>

#include "test_support.hpp"
#include "turanl2/classification.hpp"
#include "turanl2/constructions.hpp"
#include "turanl2/errors.hpp"

using namespace turanl2;
using turanl2::testing::rngFor;

namespace {

ThreeGraph withEdits(const ThreeGraph& h, std::vector<Triple> add, std::vector<Triple> remove) {
  std::vector<Triple> edges;
  for (const auto& t : h.edges())
    if (std::find(remove.begin(), remove.end(), t) == remove.end()) edges.push_back(t);
  edges.insert(edges.end(), add.begin(), add.end());
  return ThreeGraph(h.n(), std::move(edges));
}

}  // namespace

TEST(Classify, ConstructionIsClean) {
  auto c = buildBalancedC(9);
  auto ec = classifyEdges(c.graph, c.partition);
  EXPECT_TRUE(ec.bad.empty());
  EXPECT_TRUE(ec.missing.empty());
  EXPECT_EQ(intersectionSize(c.graph, c.partition), static_cast<std::int64_t>(c.graph.size()));
}

TEST(Classify, FourFamilies) {
  // Parts {0,1,2}, {3,4,5}, {6,7,8}.
  auto c = buildBalancedC(9);
  ThreeGraph h = withEdits(c.graph, {{0, 1, 2}, {0, 1, 6}}, {{0, 3, 6}, {0, 1, 3}});
  auto ec = classifyEdges(h, c.partition);
  EXPECT_EQ(ec.badInternal, (std::vector<Triple>{{0, 1, 2}}));
  EXPECT_EQ(ec.badBipartite, (std::vector<Triple>{{0, 1, 6}}));
  EXPECT_EQ(ec.missingTransversal, (std::vector<Triple>{{0, 3, 6}}));
  EXPECT_EQ(ec.missingBipartite, (std::vector<Triple>{{0, 1, 3}}));
  EXPECT_EQ(ec.family(Family::B).size(), 2U);
  EXPECT_EQ(parseFamily("M_tri"), Family::MTri);
  EXPECT_THROW(parseFamily("X"), TuranError);
  auto stats = familyStats(ec, Family::B);
  EXPECT_EQ(stats.maxVertexDegree, 2);
  EXPECT_EQ(stats.maxPairCodegree, 2);
}

TEST(Classify, PartitionMismatch) {
  auto c = buildBalancedC(6);
  EXPECT_THROW(classifyEdges(c.graph, Partition3::balanced(7)), TuranError);
}

TEST(Optimize, ExhaustiveRecoversConstruction) {
  auto c = buildBalancedC(7);
  auto r = optimizePartitionExhaustive(c.graph);
  EXPECT_EQ(r.intersection, static_cast<std::int64_t>(c.graph.size()));
  EXPECT_TRUE(classifyEdges(c.graph, r.partition).bad.empty());
}

TEST(Optimize, MovesEndAtLocalOptimum) {
  auto rng = rngFor(401);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 6 + static_cast<int>(rng() % 6);
    ThreeGraph h = suite::randomThreeGraph(n, 0.3, rng);
    auto r = optimizePartitionMoves(h, suite::randomPartition(n, rng));
    EXPECT_EQ(r.intersection, intersectionSize(h, r.partition));
    for (Vertex v = 0; v < n; ++v) EXPECT_TRUE(linkMoveInequality(h, r.partition, v).holds());
    EXPECT_LE(r.intersection, optimizePartitionExhaustive(h).intersection);
  }
}

TEST(Thresholds, ExactAndEnclosedRoots) {
  Thresholds exact(Rational(1, 4));
  ASSERT_TRUE(exact.sqrtXi().has_value());
  EXPECT_EQ(*exact.sqrtXi(), Rational(1, 2));
  Thresholds irr(Rational(1, 2));
  EXPECT_FALSE(irr.sqrtXi().has_value());
  EXPECT_LE(irr.sqrtLower() * irr.sqrtLower(), Rational(1, 2));
  EXPECT_GE(irr.sqrtUpper() * irr.sqrtUpper(), Rational(1, 2));
  EXPECT_LT(irr.sqrtUpper() - irr.sqrtLower(), Rational(1, 1000000));
}

TEST(Hypotheses, PhaseOneOnConstruction) {
  auto c = buildBalancedC(9);
  // {0,1} is internal and in the shadow; nothing is missing there.
  Checklist list = checkPhaseOneHypotheses(c.graph, c.partition, {0, 1}, Thresholds(Rational(1, 9)));
  EXPECT_FALSE(list.allPass());
  auto iii = std::find_if(list.items.begin(), list.items.end(), [](const auto& i) { return i.id == "iii"; });
  ASSERT_NE(iii, list.items.end());
  EXPECT_FALSE(iii->pass);
  EXPECT_THROW(checkPhaseOneHypotheses(c.graph, c.partition, {0, 3}, Thresholds(Rational(1, 9))), TuranError);
  EXPECT_THROW(checkPhaseTwoHypotheses(c.graph, c.partition, {0, 1}, Thresholds(Rational(1, 9))), TuranError);
}
