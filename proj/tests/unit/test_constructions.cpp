#include <gtest/gtest.h>

#include "test_support.hpp"
#include "turanl2/constructions.hpp"

using namespace turanl2;

TEST(BuildC, FrozenValues) {
  struct Row {
    Composition3 c;
    std::size_t edges;
    std::int64_t l2;
  };
  for (const auto& row : {Row{{1, 1, 1}, 1, 3}, Row{{2, 2, 2}, 14, 120}, Row{{2, 1, 1}, 3, 15}, Row{{3, 3, 3}, 54, 756},
                          Row{{4, 2, 1}, 21, 219}}) {
    auto built = buildC(row.c);
    EXPECT_EQ(built.graph.size(), row.edges) << row.c.toString();
    EXPECT_EQ(l2Norm(built.graph), row.l2) << row.c.toString();
    EXPECT_EQ(cL2Closed(row.c), Rational(row.l2)) << row.c.toString();
  }
}

TEST(BuildC, EveryEdgeIsACTripleAndNoK43) {
  for (int n = 0; n <= 9; ++n)
    for (const auto& c : compositions(n)) {
      auto built = buildC(c);
      EXPECT_FALSE(containsK43(built.graph)) << c.toString();
      for (const auto& t : built.graph.edges()) EXPECT_TRUE(isCTriple(built.partition, t));
    }
}

TEST(BuildC, ClosedFormMatchesDirectCount) {
  for (int n = 0; n <= 15; ++n)
    for (const auto& c : compositions(n)) EXPECT_EQ(cL2Closed(c), Rational(l2Norm(buildC(c).graph))) << c.toString();
}

TEST(BuildC, RotationInvariance) {
  for (const auto& c : compositions(11)) {
    EXPECT_EQ(cL2Closed(c), cL2Closed(c.rotated()));
    EXPECT_EQ(cL2Closed(rotationRepresentative(c)), cL2Closed(c));
  }
}

TEST(BuildB, EdgeCount) {
  auto b = buildB(3, 4);
  EXPECT_EQ(b.graph.size(), static_cast<std::size_t>(3 * 4 + 6 * 3));
  EXPECT_EQ(std::count(b.side.begin(), b.side.end(), 1), 4);
}

TEST(Sweep, BalancedMaximaFrozen) {
  const std::int64_t expected[] = {47,    120,   239,   438,   756,   1185,  1794,  2640,  3690,
                                   5060,  6825,  8915,  11505, 14688, 18345, 22722, 27930, 33789,
                                   40628, 48576, 57380, 67464, 78975, 91575, 105795, 121800};
  for (int n = 5; n <= 30; ++n) {
    SweepReport s = balancednessSweep(n);
    EXPECT_EQ(s.maximum, Rational(expected[n - 5])) << n;
    EXPECT_TRUE(s.maximizersNearBalanced) << n;
    EXPECT_TRUE(s.nearBalancedAttain) << n;
    EXPECT_TRUE(s.gainsPass()) << n;
    auto sizes = buildBalancedC(n).partition.sizes();
    EXPECT_EQ(s.maximum, cL2Closed({sizes[0], sizes[1], sizes[2]})) << n;
  }
}

TEST(Sweep, SmallNOutsideStatedRange) {
  SweepReport s = balancednessSweep(4);
  EXPECT_FALSE(s.inStatedRange);
  EXPECT_EQ(s.maximum, Rational(15));
}

TEST(LowerBound, PreconditionAndValue) {
  auto r = cLowerBoundCheck(Rational(1, 10), {30, 30, 30});
  EXPECT_FALSE(r.preconditionMet);  // n = 90 < 9 / (2 delta^2) = 450
  auto ok = cLowerBoundCheck(Rational(1, 10), {150, 150, 150});
  EXPECT_TRUE(ok.preconditionMet);
  EXPECT_TRUE(ok.holds);
  EXPECT_EQ(ok.lhs, cL2Closed({150, 150, 150}));
  auto lop = cLowerBoundCheck(Rational(1, 10), {100, 150, 200});
  EXPECT_FALSE(lop.preconditionMet);
}
