#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"
#include "turanl2/canonical.hpp"
#include "turanl2/colored_graph.hpp"
#include "turanl2/errors.hpp"
#include "turanl2/io.hpp"
#include "turanl2/partition.hpp"

using namespace turanl2;
using turanl2::testing::fromList;
using turanl2::testing::rngFor;

TEST(Canonical, InvariantUnderRelabel) {
  auto rng = rngFor(201);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    ThreeGraph h = suite::randomThreeGraph(n, 0.4, rng);
    auto perm = turanl2::testing::randomPermutation(n, rng);
    EXPECT_EQ(canonicalForm(h), canonicalForm(relabel(h, perm)));
  }
}

TEST(Canonical, RelabelMapReproducesForm) {
  auto rng = rngFor(202);
  ThreeGraph h = suite::randomThreeGraph(7, 0.35, rng);
  CanonicalForm cf = canonicalForm(h);
  EXPECT_EQ(relabel(h, cf.relabel), toThreeGraph(cf));
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  // Two edges sharing a pair vs two edges sharing one vertex.
  ThreeGraph a = fromList(5, {{0, 1, 2}, {0, 1, 3}});
  ThreeGraph b = fromList(5, {{0, 1, 2}, {0, 3, 4}});
  EXPECT_FALSE(canonicalForm(a) == canonicalForm(b));
}

TEST(Canonical, SizeCap) {
  EXPECT_THROW(canonicalForm(ThreeGraph(9, {}), 8), TuranError);
}

TEST(Partition, ParseAndBalanced) {
  Partition3 p = Partition3::parse("112233");
  EXPECT_EQ(p.sizes(), (std::array<int, 3>{2, 2, 2}));
  EXPECT_EQ(p.toString(), "112233");
  EXPECT_EQ(Partition3::balanced(7).sizes(), (std::array<int, 3>{3, 2, 2}));
  EXPECT_EQ(nextPart(2), 0);
  EXPECT_EQ(prevPart(0), 2);
  EXPECT_THROW(Partition3::parse("1x3"), TuranError);
}

TEST(Io, H3RoundTrip) {
  auto rng = rngFor(203);
  ThreeGraph h = suite::randomThreeGraph(9, 0.3, rng);
  std::stringstream ss;
  writeH3(ss, h);
  EXPECT_EQ(readH3(ss), h);
}

TEST(Io, P3AndCgRoundTrip) {
  Partition3 p = Partition3::parse("1231231");
  std::stringstream ps;
  writeP3(ps, p);
  EXPECT_EQ(readP3(ps), p);
  ColoredGraph g = buildLambda(2, 1, 3);
  std::stringstream gs;
  writeCg(gs, g);
  EXPECT_EQ(readCg(gs), g);
}

TEST(Io, MalformedInputIsParseError) {
  for (const char* text : {"3 1\n0 1\n", "3 2\n0 1 2\n", "x\n", "3 1\n0 1 7\n", "3 1\n0 0 1\n"}) {
    std::stringstream ss(text);
    EXPECT_THROW(readH3(ss), TuranError) << text;
  }
}
