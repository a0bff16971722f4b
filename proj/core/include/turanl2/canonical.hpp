#pragma once

#include <vector>

#include "turanl2/hypergraph.hpp"

namespace turanl2 {

struct CanonicalForm {
  int n = 0;
  std::vector<Triple> edges;   // sorted, in canonical labels
  std::vector<Vertex> relabel; // original vertex -> canonical label

  bool operator==(const CanonicalForm& other) const { return n == other.n && edges == other.edges; }
  bool operator<(const CanonicalForm& other) const {
    return n != other.n ? n < other.n : edges < other.edges;
  }
};

/// Isomorphism-invariant labeling. Vertices are first split by iterated
/// codegree refinement; the result is the lexicographically least sorted
/// edge list over all labelings that respect the refined cell order.
/// Throws SizeLimitExceeded when h.n() > maxN.
CanonicalForm canonicalForm(const ThreeGraph& h, int maxN = 8);

inline ThreeGraph toThreeGraph(const CanonicalForm& c) { return ThreeGraph(c.n, c.edges); }

}  // namespace turanl2
