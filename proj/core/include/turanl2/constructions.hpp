#pragma once

#include <array>
#include <string>
#include <vector>

#include "turanl2/hypergraph.hpp"
#include "turanl2/partition.hpp"
#include "turanl2/rational.hpp"

namespace turanl2 {

struct Composition3 {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;

  int n() const { return n1 + n2 + n3; }
  int operator[](int i) const { return i == 0 ? n1 : i == 1 ? n2 : n3; }
  /// (n2, n3, n1)
  Composition3 rotated() const { return {n2, n3, n1}; }
  bool nearBalanced() const;
  std::string toString() const;
  auto operator<=>(const Composition3&) const = default;
};

/// Every ordered composition of n into three nonnegative parts.
std::vector<Composition3> compositions(int n);

struct PartitionedThreeGraph {
  ThreeGraph graph;
  Partition3 partition;
};

/// Cyclic construction: triples meeting the parts as (1,1,1), (2,1,0), (0,2,1) or (1,0,2).
PartitionedThreeGraph buildC(const Composition3& c);
/// Near-balanced cyclic construction on n vertices.
PartitionedThreeGraph buildBalancedC(int n);
/// Does the triple's part profile belong to the cyclic construction?
bool isCTriple(const Partition3& p, const Triple& t);

struct BipartiteConstruction {
  ThreeGraph graph;
  std::vector<int> side;  // 0 or 1 per vertex
};

/// All triples with two vertices on one side and one on the other.
BipartiteConstruction buildB(int n1, int n2);

/// Exact closed-form l2 norm of the cyclic construction.
Rational cL2Closed(const Composition3& c);

struct LowerBoundReport {
  bool preconditionMet = false;
  std::string reason;
  Rational lhs;  // closed-form l2
  Rational rhs;  // n^4/6 - 2 delta n^4
  bool holds = false;
};

LowerBoundReport cLowerBoundCheck(const Rational& delta, const Composition3& c);

struct GainCheck {
  std::string family;
  Composition3 from;
  Composition3 to;
  Rational expected;
  Rational actual;
  bool pass = false;
};

struct SweepReport {
  int n = 0;
  bool inStatedRange = false;  // n >= 6
  Rational maximum;
  std::vector<Composition3> maximizers;       // ordered compositions attaining the maximum
  std::vector<Composition3> representatives;  // one per cyclic-rotation orbit
  std::vector<Rational> values;               // aligned with representatives
  bool maximizersNearBalanced = false;        // every maximizer is near-balanced
  bool nearBalancedAttain = false;            // every near-balanced composition is a maximizer
  std::vector<GainCheck> gains;
  bool gainsPass() const;
};

/// Maximizes the closed form over all compositions of n and checks the
/// rebalancing gain formulas on every composition of n they apply to.
SweepReport balancednessSweep(int n);

/// Largest rotation of c in lexicographic order.
Composition3 rotationRepresentative(const Composition3& c);

}  // namespace turanl2
