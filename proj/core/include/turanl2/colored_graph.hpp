#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "turanl2/hypergraph.hpp"
#include "turanl2/partition.hpp"
#include "turanl2/rational.hpp"

namespace turanl2 {

/// 2-graph whose vertices carry a part label. Throws PartitionMismatch when
/// the partition does not cover exactly the graph's vertices.
struct ColoredGraph {
  Graph graph;
  Partition3 partition;

  ColoredGraph() = default;
  ColoredGraph(Graph g, Partition3 p);

  int n() const { return graph.n(); }
  int edgeCount(int i, int j) const;  // |G[V_i,V_j]| for i != j, |G[V_i]| for i == j
  std::vector<Vertex> inNeighbors(Vertex v) const;
  std::vector<Vertex> outNeighbors(Vertex v) const;
  std::vector<Vertex> internalNeighbors(Vertex v) const;

  bool operator==(const ColoredGraph& other) const {
    return graph == other.graph && partition == other.partition;
  }
};

/// Part-colour multiset of a triangle is one of 123, 112, 223, 133.
bool isCyclicTriangleType(int pa, int pb, int pc);

/// Density of cyclic triangles among all vertex triples. Throws TooFewVertices for n < 3.
Rational rho3(const ColoredGraph& g);
std::int64_t countCyclicTriangles(const ColoredGraph& g);
bool isCyclicTriangleFree(const ColoredGraph& g);

/// All V1-V2 pairs, all V2-V3 pairs, all pairs inside V3.
ColoredGraph buildLambda(int n1, int n2, int n3);

/// Sum of squared vertex degrees.
std::int64_t graphL2Norm(const Graph& g);

/// Smallest part index i (0-based) satisfying both local maximality inequalities.
std::optional<int> isLocallyMaximal(const ColoredGraph& g);

/// G_{u->v}: u's edges replaced by {uw : w in N(v), w != u}.
ColoredGraph symmetrize(const ColoredGraph& g, Vertex u, Vertex v);

struct EquivalenceClasses {
  std::vector<std::vector<Vertex>> classes;  // sorted by smallest member
  std::vector<int> classOf;
};

EquivalenceClasses equivalenceClasses(const ColoredGraph& g);

/// Every vertex of `from` receives N(v) \ {itself} for a representative v of `to`,
/// evaluated simultaneously on the input graph.
ColoredGraph classSymmetrize(const ColoredGraph& g, const std::vector<Vertex>& from,
                             const std::vector<Vertex>& to);

bool isLocallySymmetrized(const ColoredGraph& g);

struct SymmetrizationStep {
  int part = 0;
  std::vector<Vertex> from;
  std::vector<Vertex> to;
  std::size_t edgesBefore = 0;
  std::size_t edgesAfter = 0;
};

struct SymmetrizationResult {
  ColoredGraph graph;
  std::vector<SymmetrizationStep> steps;
};

SymmetrizationResult locallySymmetrize(const ColoredGraph& g);

struct FactCheck {
  std::string id;
  bool pass = true;
  std::string witness;
};

struct FactReport {
  std::vector<FactCheck> facts;
  bool allPass() const;
};

/// Checks the structural facts of locally symmetrized graphs, plus the
/// in-neighbourhood facts when g is also cyclically triangle-free.
/// Throws NotLocallySymmetrized.
FactReport checkSymmetrizedFacts(const ColoredGraph& g);

/// Orientation V_i -> V_{i+1} of all crossing edges.
class DirectedView {
 public:
  explicit DirectedView(const ColoredGraph& g);

  const std::vector<std::vector<Vertex>>& out() const { return out_; }
  bool hasDirectedCycle() const;
  /// Vertex sequence of a shortest directed cycle, if any.
  std::optional<std::vector<Vertex>> shortestDirectedCycle() const;

  struct LongestPath {
    std::vector<Vertex> path;
    bool exact = true;
  };
  /// Exact subset DP for n <= 15, greedy extension otherwise.
  LongestPath longestDirectedPath() const;

 private:
  int n_;
  std::vector<std::vector<Vertex>> out_;
};

struct PathDegreeReport {
  std::int64_t degreeSum = 0;
  std::int64_t bound = 0;  // 3(k+1) * max part size
  int k = 0;
  int partSize = 0;
  bool locallySymmetrized = false;
  bool cyclicTriangleFree = false;
  bool distinct = false;
  bool inNeighborhoodCondition = false;
  bool preconditionsMet() const {
    return locallySymmetrized && cyclicTriangleFree && distinct && inNeighborhoodCondition;
  }
  bool withinBound() const { return degreeSum <= bound; }
};

/// `path` = x1 y1 z1 ... xk yk zk, a directed path with (x_i,y_i,z_i) in V1 x V2 x V3.
/// Throws MalformedPath.
PathDegreeReport degreeSumOnPath(const ColoredGraph& g, const std::vector<Vertex>& path);

}  // namespace turanl2
