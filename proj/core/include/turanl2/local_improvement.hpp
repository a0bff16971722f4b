#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "turanl2/classification.hpp"
#include "turanl2/hypergraph.hpp"
#include "turanl2/partition.hpp"
#include "turanl2/rational.hpp"

namespace turanl2 {

enum class Phase { One, Two };
const char* phaseName(Phase p);

/// Exact l2 bookkeeping for one toggle at eStar.
/// Phase one: s1 from added edges, s2 / s3 from removed edges with the third
/// vertex in the same part / in the previous part.
/// Phase two: s1 from added edges, s2a = {u1 w}, s2b = {u2 w} over removed edges,
/// where u1 is the endpoint whose part precedes the other's.
struct DeltaReport {
  Pair eStar;
  Phase phase = Phase::One;
  std::vector<Triple> removed, added;
  std::vector<Pair> s1, s2, s3, s2a, s2b;
  int codegreeBefore = 0, codegreeAfter = 0;
  std::int64_t eStarTerm = 0, s1Term = 0, s2Term = 0, s3Term = 0;
  std::int64_t l2Before = 0, l2After = 0;
  std::int64_t delta = 0;  // sum of the terms

  bool reconciles() const { return delta == l2After - l2Before; }
  std::vector<Pair> changeSet() const;  // {e*} and every S-set
};

struct ToggleResult {
  ThreeGraph graph;
  DeltaReport report;
};

/// Phase one: (H \ B(e*)) ∪ M(e*) for an internal e*. Phase two: (H \ B(e*)) ∪ M_tri(e*)
/// for a crossing e*. Throws EdgePhaseMismatch.
ToggleResult applyToggle(const ThreeGraph& h, const Partition3& p, Pair eStar, Phase phase);

struct IncreaseReport {
  Checklist hypotheses;
  bool claimed = false;  // all hypotheses hold
  std::int64_t delta = 0;
  bool pass = true;      // !claimed || delta > 0
  std::string outcome;
};

IncreaseReport verifyToggleIncrease(const ThreeGraph& h, const Partition3& p, Pair eStar, Phase phase,
                                    const Thresholds& t);

/// Near-construction instance with a heavy missing neighbourhood planted at eStar.
struct PlantedInstance {
  ThreeGraph graph;
  Partition3 partition;
  Pair eStar;
  Phase phase = Phase::One;
  Rational xi;  // smallest xi meeting every item except the codegree threshold
};

/// Balanced partition; every construction edge through eStar of the toggled
/// kind removed, a few bad edges at eStar and random noise elsewhere.
PlantedInstance plantInstance(int n, Phase phase, std::mt19937_64& rng);

struct Queues {
  std::vector<Pair> internal;  // internal pairs with d_M >= delta4 n
  std::vector<Pair> crossing;  // crossing pairs with 10 d_Mtri >= n
  std::vector<Triple> tildeB;  // bipartite bad edges whose internal pair has d_M <= delta4 n
};

/// Lexicographic order, or a seeded shuffle of it.
Queues buildQueues(const ThreeGraph& h, const Partition3& p, const Rational& delta4,
                   std::optional<std::uint64_t> seed = std::nullopt);

struct DriverStep {
  DeltaReport report;
  bool monotone = true;  // removed ⊆ current bad, added ⊆ current missing of the right kind
};

struct DriverTrace {
  Queues queues;
  std::vector<DriverStep> steps;
  ThreeGraph finalGraph;
  std::vector<std::int64_t> l2Trajectory;
  std::vector<Triple> leftoverBad;
  bool everyBadCovered = false;  // each input bad edge contains a queue pair
  bool monotone = true;
  bool inputK43Free = false;
  bool k43Created = false;
  bool finalInsideC() const { return leftoverBad.empty(); }
};

DriverTrace twoPhaseDriver(const ThreeGraph& h, const Partition3& p, const Rational& delta4 = Rational(1, 40),
                           std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace turanl2
