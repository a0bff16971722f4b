#include <gtest/gtest.h>

#include "test_support.hpp"
#include "turanl2/errors.hpp"
#include "turanl2/hypergraph.hpp"

using namespace turanl2;
using turanl2::testing::fromList;
using turanl2::testing::rngFor;

TEST(Triple, NormalizesAndRejectsRepeats) {
  Triple t = Triple::of(5, 1, 3);
  EXPECT_EQ(t, (Triple{1, 3, 5}));
  EXPECT_EQ(t.other(Pair{1, 5}), 3);
  EXPECT_THROW(Triple::of(1, 1, 2), TuranError);
}

TEST(Triple, ColexRankRoundTrips) {
  for (std::int64_t r = 0; r < tripleCount(12); ++r) EXPECT_EQ(tripleRank(tripleFromRank(r)), r);
  EXPECT_EQ(tripleRank({0, 1, 2}), 0);
  EXPECT_EQ(tripleRank({0, 1, 3}), 1);
  EXPECT_EQ(tripleCount(6), 20);
}

TEST(ThreeGraph, RejectsOutOfRangeVertices) {
  std::vector<std::array<Vertex, 3>> bad{{0, 1, 4}};
  EXPECT_THROW(makeThreeGraph(4, bad), TuranError);
}

TEST(ThreeGraph, ContainsMatchesEdgeListAboveAndBelowPackedLimit) {
  for (int n : {8, 30}) {
    auto rng = rngFor(n);
    ThreeGraph h = suite::randomThreeGraph(n, 0.3, rng);
    std::int64_t hits = 0;
    for (std::int64_t r = 0; r < tripleCount(n); ++r) hits += h.contains(tripleFromRank(r));
    EXPECT_EQ(hits, static_cast<std::int64_t>(h.size()));
  }
}

TEST(Codegree, SingleEdge) {
  ThreeGraph h = fromList(3, {{0, 1, 2}});
  EXPECT_EQ(codegree(h, {0, 1}), 1);
  EXPECT_EQ(l2Norm(h), 3);
  EXPECT_EQ(countS2(h), 0);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(twoNormDegree(h, v), 3);
}

TEST(Codegree, K43MinusEdge) {
  ThreeGraph h = fromList(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  EXPECT_EQ(codegree(h, {0, 1}), 2);
  EXPECT_EQ(codegree(h, {1, 2}), 1);
  EXPECT_EQ(codegreeNeighborhood(h, {0, 1}), (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(l2Norm(h), 3 * 4 + 3 * 1);
  EXPECT_EQ(countS2(h), 3);
  EXPECT_FALSE(containsK43(h));
  EXPECT_TRUE(additionCreatesK43(h, {1, 2, 3}));
}

TEST(Codegree, CompleteGraph) {
  ThreeGraph k5 = completeThreeGraph(5);
  EXPECT_EQ(k5.size(), 10U);
  EXPECT_EQ(l2Norm(k5), 10 * 9);
  EXPECT_TRUE(containsK43(k5));
  EXPECT_EQ(vertexDegree(k5, 0), 6);
}

TEST(LinkAndShadow, SmallExample) {
  ThreeGraph h = fromList(5, {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}});
  Graph l = link(h, 0);
  EXPECT_EQ(l.size(), 2U);
  EXPECT_TRUE(l.hasEdge(1, 2));
  EXPECT_TRUE(l.hasEdge(3, 4));
  Graph s = shadow(h);
  EXPECT_EQ(s.size(), 8U);
  EXPECT_FALSE(s.hasEdge(0, 0));
}

TEST(Operations, DeleteInduceRelabel) {
  ThreeGraph h = fromList(5, {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}});
  ThreeGraph d = deleteVertex(h, 0);
  EXPECT_EQ(d.n(), 4);
  EXPECT_EQ(d.size(), 1U);
  EXPECT_TRUE(d.contains({0, 1, 2}));
  std::vector<Vertex> keep{1, 2, 3};
  EXPECT_EQ(induce(h, keep).size(), 1U);
  std::vector<Vertex> perm{4, 3, 2, 1, 0};
  ThreeGraph r = relabel(h, perm);
  EXPECT_TRUE(r.contains({2, 3, 4}));
  EXPECT_TRUE(r.contains({0, 1, 4}));
}

// ---- properties

TEST(Properties, L2IdentityAndHandshake) {
  auto rng = rngFor(101);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng() % 11);
    ThreeGraph h = suite::randomThreeGraph(n, (rng() % 100) / 100.0, rng);
    CodegreeTable d(h);
    std::int64_t sum = 0;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) sum += d(x, y);
    EXPECT_EQ(sum, 3 * static_cast<std::int64_t>(h.size()));
    EXPECT_EQ(l2Norm(h), 2 * countS2(h) + 3 * static_cast<std::int64_t>(h.size()));
  }
}

TEST(Properties, TwoNormDegreeIsDeletionDrop) {
  auto rng = rngFor(102);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 11);
    ThreeGraph h = suite::randomThreeGraph(n, (rng() % 100) / 100.0, rng);
    Vertex v = static_cast<Vertex>(rng() % n);
    EXPECT_EQ(twoNormDegree(h, v), l2Norm(h) - l2Norm(deleteVertex(h, v)));
  }
}

TEST(Properties, InvariantsUnderRelabel) {
  auto rng = rngFor(103);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    ThreeGraph h = suite::randomThreeGraph(n, 0.4, rng);
    auto perm = turanl2::testing::randomPermutation(n, rng);
    ThreeGraph r = relabel(h, perm);
    EXPECT_EQ(l2Norm(r), l2Norm(h));
    EXPECT_EQ(containsK43(r), containsK43(h));
    EXPECT_EQ(countS2(r), countS2(h));
  }
}

TEST(Properties, FindK43AgreesWithQuadrupleScan) {
  auto rng = rngFor(104);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    ThreeGraph h = suite::randomThreeGraph(n, 0.5, rng);
    bool brute = false;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c)
          for (Vertex d = c + 1; d < n; ++d)
            brute = brute || (h.contains({a, b, c}) && h.contains({a, b, d}) && h.contains({a, c, d}) && h.contains({b, c, d}));
    EXPECT_EQ(containsK43(h), brute);
  }
}
