#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "turanl2/classification.hpp"
#include "turanl2/constructions.hpp"
#include "turanl2/errors.hpp"
#include "turanl2/local_improvement.hpp"

using namespace turanl2;
using turanl2::testing::rngFor;

TEST(Toggle, PhaseOneRestoresConstructionAtPair) {
  // Parts {0,1,2}, {3,4,5}, {6,7,8}; e* = {0,1} internal to part 1.
  auto c = buildBalancedC(9);
  std::vector<Triple> edges;
  for (const auto& t : c.graph.edges())
    if (!(t.contains(Pair{0, 1}) && t.c >= 3 && t.c <= 5)) edges.push_back(t);
  edges.push_back({0, 1, 2});
  ThreeGraph h(9, edges);
  auto [g, r] = applyToggle(h, c.partition, {0, 1}, Phase::One);
  EXPECT_EQ(r.removed, (std::vector<Triple>{{0, 1, 2}}));
  EXPECT_EQ(r.added.size(), 3U);
  EXPECT_EQ(r.codegreeBefore, 1);
  EXPECT_EQ(r.codegreeAfter, 3);
  EXPECT_TRUE(r.reconciles());
  EXPECT_EQ(g, c.graph);
}

TEST(Toggle, PhaseTwoAddsOnlyTransversals) {
  auto c = buildBalancedC(9);
  std::vector<Triple> edges;
  for (const auto& t : c.graph.edges())
    if (!t.contains(Pair{0, 3})) edges.push_back(t);
  ThreeGraph h(9, edges);
  auto r = applyToggle(h, c.partition, {0, 3}, Phase::Two).report;
  for (const auto& t : r.added) EXPECT_GE(t.c, 6);
  EXPECT_EQ(r.added.size(), 3U);
  EXPECT_THROW(applyToggle(h, c.partition, {0, 3}, Phase::One), TuranError);
}

TEST(Toggle, DeltaReconcilesOnRandomInstances) {
  auto rng = rngFor(501);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + static_cast<int>(rng() % 14);
    ThreeGraph h = suite::randomThreeGraph(n, 0.35, rng);
    Partition3 p = suite::randomPartition(n, rng);
    Vertex a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
    if (a == b) continue;
    Pair e = Pair::of(a, b);
    Phase phase = isInternalPair(p, e) ? Phase::One : Phase::Two;
    auto [g, r] = applyToggle(h, p, e, phase);
    EXPECT_EQ(r.delta, l2Norm(g) - l2Norm(h));
    EXPECT_EQ(r.eStarTerm + r.s1Term + r.s2Term + r.s3Term, r.delta);
    CodegreeTable before(h), after(g);
    std::set<Pair> changed{e};
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y)
        if (before(x, y) != after(x, y)) changed.insert({x, y});
    auto cs = r.changeSet();
    EXPECT_EQ(changed, std::set<Pair>(cs.begin(), cs.end()));
  }
}

TEST(Planted, DeltaPositiveAndHypothesisThreeUnmet) {
  auto rng = rngFor(502);
  for (Phase phase : {Phase::One, Phase::Two})
    for (int trial = 0; trial < 5; ++trial) {
      auto inst = plantInstance(60 + trial, phase, rng);
      auto r = verifyToggleIncrease(inst.graph, inst.partition, inst.eStar, phase, Thresholds(inst.xi));
      EXPECT_GT(r.delta, 0);
      EXPECT_FALSE(r.claimed);
      EXPECT_TRUE(r.pass);
    }
  EXPECT_THROW(plantInstance(5, Phase::One, rng), TuranError);
}

TEST(Queues, SeededOrderIsAPermutation) {
  auto c = buildBalancedC(12);
  std::vector<Triple> edges;
  for (const auto& t : c.graph.edges())
    if (t.a != 0) edges.push_back(t);
  ThreeGraph h(12, edges);
  auto lex = buildQueues(h, c.partition, Rational(1, 40));
  auto s1 = buildQueues(h, c.partition, Rational(1, 40), 7);
  auto s2 = buildQueues(h, c.partition, Rational(1, 40), 7);
  EXPECT_TRUE(std::is_sorted(lex.internal.begin(), lex.internal.end()));
  EXPECT_EQ(s1.internal, s2.internal);
  EXPECT_EQ(std::set<Pair>(s1.internal.begin(), s1.internal.end()), std::set<Pair>(lex.internal.begin(), lex.internal.end()));
  EXPECT_FALSE(lex.internal.empty());
  EXPECT_THROW(buildQueues(h, c.partition, Rational(0)), TuranError);
}

TEST(Driver, ConstructionIsFixedPoint) {
  auto c = buildBalancedC(9);
  auto trace = twoPhaseDriver(c.graph, c.partition);
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_EQ(trace.finalGraph, c.graph);
  EXPECT_TRUE(trace.finalInsideC());
}

TEST(Driver, ClearsCoveredBadEdges) {
  auto rng = rngFor(503);
  auto c = buildBalancedC(9);
  // Bad internal {0,1,2} plus a missing {0,1,3} puts {0,1} in the internal queue.
  std::vector<Triple> edges;
  for (const auto& t : c.graph.edges())
    if (t != Triple{0, 1, 3}) edges.push_back(t);
  edges.push_back({0, 1, 2});
  ThreeGraph h(9, edges);
  auto trace = twoPhaseDriver(h, c.partition, Rational(1, 40), rng());
  EXPECT_TRUE(trace.everyBadCovered);
  EXPECT_TRUE(trace.monotone);
  EXPECT_TRUE(trace.leftoverBad.empty());
  EXPECT_GE(trace.l2Trajectory.back(), trace.l2Trajectory.front());
}
