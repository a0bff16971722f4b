#include <gtest/gtest.h>

#include "test_support.hpp"
#include "turanl2/constructions.hpp"
#include "turanl2/errors.hpp"
#include "turanl2/inequality_lab.hpp"

using namespace turanl2;
using turanl2::testing::rngFor;

TEST(Simplex, PointMargins) {
  EXPECT_EQ(simplexMargin(rat(1, 3), rat(1, 3), rat(1, 3)), Rational(0));
  EXPECT_EQ(simplexMargin(1, 0, 0), rat(107, 1350));
  EXPECT_EQ(simplexMargin(1, 0, 0), rat(5, 54) - rat(1, 75));
}

TEST(Simplex, GridSweeps) {
  auto d2 = verifySimplexInequality(2);
  EXPECT_EQ(d2.worstMargin, rat(289, 10800));
  auto d50 = verifySimplexInequality(50);
  EXPECT_EQ(d50.worstMargin, rat(53, 1350000));
  EXPECT_EQ(d50.argmin, (std::array<int, 3>{16, 17, 17}));
  EXPECT_TRUE(d50.pass());
  auto d200 = verifySimplexInequality(200);
  EXPECT_EQ(d200.worstMargin, rat(1057, 432000000));
  EXPECT_EQ(d200.argmin, (std::array<int, 3>{66, 67, 67}));
  EXPECT_EQ(d200.points, 201U * 202U / 2U);
  EXPECT_THROW(verifySimplexInequality(0), TuranError);
}

TEST(Simplex, ZerosOnlyAtBarycenter) {
  for (int d = 1; d <= 50; ++d) {
    auto r = verifySimplexInequality(d);
    EXPECT_TRUE(r.pass()) << d;
    EXPECT_EQ(r.zeros.size(), d % 3 == 0 ? 1U : 0U) << d;
    if (d % 3 == 0) EXPECT_EQ(r.worstMargin, Rational(0));
  }
}

TEST(Simplex, GridIsDeterministicAcrossWorkerCounts) {
  auto a = verifySimplexInequality(60, 1);
  auto b = verifySimplexInequality(60, 4);
  EXPECT_EQ(a.worstMargin, b.worstMargin);
  EXPECT_EQ(a.argmin, b.argmin);
  EXPECT_EQ(a.zeros, b.zeros);
}

TEST(Poly2, ExpansionFrozen) {
  Poly2 f = simplexMarginPolynomial();
  EXPECT_EQ(f.coefficient(0, 0), Rational(0));
  EXPECT_EQ(f.coefficient(1, 0), Rational(0));
  EXPECT_EQ(f.coefficient(2, 0), rat(22, 75));
  EXPECT_EQ(f.coefficient(1, 1), rat(22, 75));
  EXPECT_EQ(f.coefficient(0, 2), rat(22, 75));
  EXPECT_EQ(f.coefficient(0, 3), rat(1, 2));
  EXPECT_EQ(f.coefficient(1, 2), Rational(1));
  EXPECT_EQ(f.coefficient(2, 1), rat(-1, 2));
  EXPECT_EQ(f.coefficient(3, 0), rat(-1, 2));
  EXPECT_EQ(f.terms().size(), 7U);
}

TEST(Poly2, AgreesWithDirectMargin) {
  Poly2 f = simplexMarginPolynomial();
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; a + b <= 12; ++b) {
      Rational x1 = rat(a, 12), x2 = rat(b, 12), x3 = 1 - x1 - x2;
      EXPECT_EQ(f(x1 - rat(1, 3), x2 - rat(1, 3)), simplexMargin(x1, x2, x3));
    }
}

TEST(Interval, CertifiesWithoutUndecidedBoxes) {
  auto c = certifySimplexInequality(1e-6);
  EXPECT_TRUE(c.certified());
  EXPECT_EQ(c.ballRadius, rat(22, 375));
  EXPECT_GT(c.ballBoxes, 0U);
  const auto leaves = c.ballBoxes + c.intervalBoxes + c.outsideBoxes;
  EXPECT_EQ(c.boxes, leaves + (leaves - 1) / 3);
  EXPECT_THROW(certifySimplexInequality(0), TuranError);
}

TEST(Spread, SymmetricGraphsHaveZeroSpread) {
  ThreeGraph one = turanl2::testing::fromList(3, {{0, 1, 2}});
  auto s = sSpread(one);
  EXPECT_EQ(s.s, (std::vector<std::int64_t>{3, 3, 3}));
  EXPECT_EQ(s.maxPairGap, 0);
  for (int n = 3; n <= 5; ++n) {
    auto k = sSpread(completeThreeGraph(n));
    EXPECT_EQ(k.maxPairGap, 0);
    EXPECT_EQ(k.vsAverageGap, Rational(0));
  }
  // K4^3 minus {1,2,3}: vertices 1,2,3 are symmetric.
  auto km = sSpread(turanl2::testing::fromList(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
  EXPECT_EQ(km.s[1], km.s[2]);
  EXPECT_EQ(km.s[2], km.s[3]);
}

TEST(Spread, ConstructionAndCensusWinnersWithinBound) {
  auto c6 = sSpread(buildBalancedC(6).graph);
  EXPECT_TRUE(c6.withinBound());
  EXPECT_EQ(c6.bound, 60 * 36);
  EXPECT_EQ(c6.maxPairGap, 0);
}

TEST(Duplicate, Examples) {
  ThreeGraph h = turanl2::testing::fromList(4, {{0, 1, 2}});
  ThreeGraph d = duplicateVertex(h, 0, 3);
  EXPECT_EQ(d, turanl2::testing::fromList(4, {{0, 1, 2}, {1, 2, 3}}));
  ThreeGraph iso = duplicateVertex(h, 3, 0);
  EXPECT_TRUE(iso.empty());
  EXPECT_THROW(duplicateVertex(h, 1, 1), TuranError);
}

TEST(Duplicate, PreservesFreenessAndEqualizesCopies) {
  auto rng = rngFor(601);
  int tested = 0;
  while (tested < 100) {
    int n = 5 + static_cast<int>(rng() % 5);
    ThreeGraph h = suite::randomThreeGraph(n, 0.25, rng);
    if (containsK43(h)) continue;
    ++tested;
    Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u == v) continue;
    ThreeGraph d = duplicateVertex(h, u, v);
    EXPECT_FALSE(containsK43(d));
    auto s = sSpread(d);
    EXPECT_EQ(s.s[u], s.s[v]);
  }
}
