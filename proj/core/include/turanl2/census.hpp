#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turanl2/canonical.hpp"
#include "turanl2/colored_graph.hpp"
#include "turanl2/hypergraph.hpp"

namespace turanl2 {

struct BoundCheck {
  std::string name;
  std::int64_t value = 0;
  bool pass = false;
};

struct StructureWitness {
  ColoredGraph graph;  // an extremal graph matching no split template
};

struct CensusReport {
  int n = 0;
  std::string problem;  // k43-l2, mantel-edges, mantel-l2, tripartite
  std::string method;   // canonical, naive, exhaustive, symmetrized
  bool exact = true;
  std::int64_t optimum = 0;
  std::uint64_t rawMaximizers = 0;  // labelled maximizers; 0 when not enumerated
  std::size_t extremalClasses = 0;
  std::size_t extremalClassesRotation = 0;  // colored problems: also up to part rotation
  std::vector<ThreeGraph> extremalThreeGraphs;
  std::vector<ColoredGraph> extremalColored;
  std::string reference;
  std::int64_t referenceValue = 0;
  bool referenceAttains = false;
  bool referenceUnique = false;
  std::vector<BoundCheck> bounds;
  std::optional<bool> structureMatches;  // tripartite only
  std::vector<StructureWitness> structureWitnesses;
  std::uint64_t nodes = 0;
};

struct K43CensusOptions {
  bool naive = false;  // full 2^C(n,3) scan instead of canonical augmentation
  int maxN = 8;
  unsigned workers = 0;
};

/// Maximum l2 norm over tetrahedron-free 3-graphs on n vertices, with every
/// extremal isomorphism class. Throws SizeLimitExceeded beyond maxN (naive: n <= 6).
CensusReport censusK43(int n, const K43CensusOptions& options = {});

enum class MantelObjective { Edges, L2 };

struct MantelCensusOptions {
  int classCap = 6;  // total classes in symmetrized mode
  bool forceSymmetrized = false;
  unsigned workers = 0;
};

/// Maximum edges or degree-square sum over cyclically triangle-free graphs with
/// three parts of size n. Exhaustive for n <= 2; larger n search locally
/// symmetrized blow-ups with at most classCap classes.
CensusReport censusColoredMantel(int n, MantelObjective objective, const MantelCensusOptions& options = {});

/// Maximum edges of triangle-free 3-partite graphs with parts of size n <= 3,
/// plus the split-bipartite structure check on every maximizer.
CensusReport censusTripartiteTriangleFree(int n, bool naive = false);

/// K[U_i1 ∪ U_{i+1}, U_i2 ∪ U_{i+2}] restricted to crossing pairs; parts by label ranges of size n.
Graph splitTemplate(int n, int i, const std::vector<bool>& inFirstHalf);
bool matchesSplitTemplate(const ColoredGraph& g);

/// Minimum edge list over colour-preserving relabelings (and part rotations
/// when `rotations` is set). Parts must have equal sizes; n <= 9 vertices.
std::vector<Pair> coloredCanonicalForm(const ColoredGraph& g, bool rotations);

}  // namespace turanl2
