#include <gtest/gtest.h>

#include "test_support.hpp"
#include "turanl2/colored_graph.hpp"
#include "turanl2/errors.hpp"

using namespace turanl2;
using turanl2::testing::rngFor;

namespace {

ColoredGraph colored(const std::string& colours, std::vector<Pair> edges) {
  Partition3 p = Partition3::parse(colours);
  return ColoredGraph(Graph::fromPairs(p.n(), std::move(edges)), p);
}

}  // namespace

TEST(CyclicTriangles, Types) {
  EXPECT_TRUE(isCyclicTriangleType(0, 1, 2));
  EXPECT_TRUE(isCyclicTriangleType(0, 0, 1));
  EXPECT_TRUE(isCyclicTriangleType(1, 1, 2));
  EXPECT_TRUE(isCyclicTriangleType(2, 2, 0));
  EXPECT_TRUE(isCyclicTriangleType(0, 2, 2));
  EXPECT_FALSE(isCyclicTriangleType(0, 0, 2));
  EXPECT_FALSE(isCyclicTriangleType(2, 2, 2));
}

TEST(Lambda, IsCyclicallyTriangleFreeAndLocallyMaximal) {
  for (int n = 1; n <= 5; ++n) {
    ColoredGraph l = buildLambda(n, n, n);
    EXPECT_TRUE(isCyclicTriangleFree(l));
    EXPECT_EQ(l.graph.size(), static_cast<std::size_t>(2 * n * n + n * (n - 1) / 2));
    EXPECT_TRUE(isLocallyMaximal(l).has_value());
  }
  EXPECT_EQ(graphL2Norm(buildLambda(2, 2, 2).graph), 58);
  EXPECT_EQ(graphL2Norm(buildLambda(1, 1, 1).graph), 6);
}

TEST(CyclicTriangles, DensityAndErrors) {
  ColoredGraph g = colored("123", {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(countCyclicTriangles(g), 1);
  EXPECT_EQ(rho3(g), Rational(1));
  EXPECT_THROW(rho3(colored("12", {})), TuranError);
  EXPECT_THROW(ColoredGraph(Graph::fromPairs(3, {}), Partition3::parse("12")), TuranError);
}

TEST(Symmetrize, CopiesNeighbourhood) {
  // 0,1 in part 1; 2 in part 2; 3 in part 3. 0 ~ 2, 1 ~ 3.
  ColoredGraph g = colored("1123", {{0, 2}, {1, 3}});
  ColoredGraph s = symmetrize(g, 1, 0);
  EXPECT_TRUE(s.graph.hasEdge(1, 2));
  EXPECT_FALSE(s.graph.hasEdge(1, 3));
  EXPECT_TRUE(s.graph.hasEdge(0, 2));
  EXPECT_THROW(symmetrize(g, 1, 1), TuranError);
}

TEST(Symmetrize, EquivalenceClasses) {
  ColoredGraph g = colored("11123", {{0, 3}, {1, 3}, {2, 4}});
  auto ec = equivalenceClasses(g);
  EXPECT_EQ(ec.classOf[0], ec.classOf[1]);
  EXPECT_NE(ec.classOf[0], ec.classOf[2]);
  EXPECT_FALSE(isLocallySymmetrized(g));
  EXPECT_THROW(classSymmetrize(g, {0, 1}, {3}), TuranError);
}

TEST(Symmetrize, LocalSymmetrizationProperties) {
  auto rng = rngFor(301);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    ColoredGraph g = suite::randomCyclicTriangleFree(n, rng);
    auto res = locallySymmetrize(g);
    EXPECT_TRUE(isLocallySymmetrized(res.graph));
    EXPECT_TRUE(isCyclicTriangleFree(res.graph));
    EXPECT_GE(res.graph.graph.size(), g.graph.size());
    for (const auto& s : res.steps) EXPECT_GE(s.edgesAfter, s.edgesBefore);
    EXPECT_TRUE(checkSymmetrizedFacts(res.graph).allPass());
  }
}

TEST(Symmetrize, FactsRequireSymmetrizedInput) {
  ColoredGraph g = colored("11123", {{0, 3}, {1, 3}, {2, 4}});
  EXPECT_THROW(checkSymmetrizedFacts(g), TuranError);
}

TEST(DirectedView, CycleAndLongestPath) {
  ColoredGraph g = colored("123", {{0, 1}, {1, 2}, {0, 2}});
  DirectedView d(g);
  EXPECT_TRUE(d.hasDirectedCycle());
  EXPECT_EQ(d.shortestDirectedCycle()->size(), 3U);
  ColoredGraph l = buildLambda(1, 1, 1);
  DirectedView dl(l);
  EXPECT_FALSE(dl.hasDirectedCycle());
  auto lp = dl.longestDirectedPath();
  EXPECT_TRUE(lp.exact);
  EXPECT_EQ(lp.path, (std::vector<Vertex>{0, 1, 2}));
}

TEST(PathDegree, BoundAndMalformedPath) {
  ColoredGraph l = buildLambda(2, 2, 2);
  auto res = locallySymmetrize(l);
  auto r = degreeSumOnPath(res.graph, {0, 2, 4});
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.bound, 3 * 2 * 2);
  EXPECT_THROW(degreeSumOnPath(l, {0, 2}), TuranError);
}
