#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turanl2/hypergraph.hpp"
#include "turanl2/partition.hpp"
#include "turanl2/rational.hpp"

namespace turanl2 {

enum class Family { B, M, BInt, BBi, MTri, MBi };

Family parseFamily(std::string_view name);  // "B", "M", "B_int", "B_bi", "M_tri", "M_bi"
const char* familyName(Family f);

/// Bad edges (in H, outside the cyclic construction on P) and missing edges
/// (in the construction, absent from H), each split in two.
struct EdgeClassification {
  int n = 0;
  std::vector<Triple> bad, missing;
  std::vector<Triple> badInternal, badBipartite;
  std::vector<Triple> missingTransversal, missingBipartite;

  const std::vector<Triple>& family(Family f) const;
};

/// Throws PartitionMismatch.
EdgeClassification classifyEdges(const ThreeGraph& h, const Partition3& p);

/// Pair kind relative to P.
inline bool isInternalPair(const Partition3& p, Pair e) { return p.part(e.u) == p.part(e.v); }

struct FamilyStats {
  int maxVertexDegree = 0;
  int maxPairCodegree = 0;
  ThreeGraph graph;  // the family as a 3-graph; query codegrees with CodegreeTable or codegree()
};

FamilyStats familyStats(const EdgeClassification& ec, Family f);

struct PartitionResult {
  Partition3 partition;
  std::int64_t intersection = 0;  // |H ∩ C[P]|
  int moves = 0;
};

std::int64_t intersectionSize(const ThreeGraph& h, const Partition3& p);

/// Global maximizer of |H ∩ C[P]|, ties to the lexicographically smallest
/// colour string. Throws SizeLimitExceeded for n > maxN.
PartitionResult optimizePartitionExhaustive(const ThreeGraph& h, int maxN = 12);
/// Single-vertex moves from `start` (default: balanced by label) until no move strictly improves.
PartitionResult optimizePartitionMoves(const ThreeGraph& h, std::optional<Partition3> start = std::nullopt);

struct MoveInequality {
  Vertex v = 0;
  int lhsA = 0, rhsA = 0;  // move to the next part does not help
  int lhsB = 0, rhsB = 0;  // move to the part after does not help
  bool holds() const { return lhsA >= rhsA && lhsB >= rhsB; }
};

/// The two link inequalities at v, which together say no single move of v improves.
MoveInequality linkMoveInequality(const ThreeGraph& h, const Partition3& p, Vertex v);

/// Lemma parameter xi with enclosures of sqrt(xi).
class Thresholds {
 public:
  explicit Thresholds(Rational xi);
  const Rational& xi() const { return xi_; }
  /// Exact when xi is the square of a rational.
  const std::optional<Rational>& sqrtXi() const { return sqrt_; }
  Rational sqrtLower() const { return lo_; }
  Rational sqrtUpper() const { return hi_; }

 private:
  Rational xi_;
  std::optional<Rational> sqrt_;
  Rational lo_, hi_;
};

struct ChecklistItem {
  std::string id;
  std::string what;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

struct Checklist {
  std::vector<ChecklistItem> items;
  bool allPass() const;
};

/// Items (i)-(v) for an internal pair. Square-root comparisons are squared.
/// Throws EdgeNotInternal / EdgeNotInShadow.
Checklist checkPhaseOneHypotheses(const ThreeGraph& h, const Partition3& p, Pair eStar, const Thresholds& t);
Checklist checkPhaseOneHypotheses(const ThreeGraph& h, const Partition3& p, const EdgeClassification& ec,
                                  Pair eStar, const Thresholds& t);
/// Items (i)-(iv) for a crossing pair. Throws EdgeNotCrossing / EdgeNotInShadow.
Checklist checkPhaseTwoHypotheses(const ThreeGraph& h, const Partition3& p, Pair eStar, const Thresholds& t);
Checklist checkPhaseTwoHypotheses(const ThreeGraph& h, const Partition3& p, const EdgeClassification& ec,
                                  Pair eStar, const Thresholds& t);

}  // namespace turanl2
