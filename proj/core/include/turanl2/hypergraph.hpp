#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace turanl2 {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Pair {
  Vertex u = 0;
  Vertex v = 0;

  static Pair of(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }
  bool contains(Vertex x) const { return x == u || x == v; }
  auto operator<=>(const Pair&) const = default;
};

/// 3-edge, stored with a < b < c.
struct Triple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  /// Sorts the three labels; does not check for repeats.
  static Triple of(Vertex x, Vertex y, Vertex z);
  bool contains(Vertex x) const { return x == a || x == b || x == c; }
  bool contains(Pair p) const { return contains(p.u) && contains(p.v); }
  std::array<Pair, 3> pairs() const { return {Pair{a, b}, Pair{a, c}, Pair{b, c}}; }
  /// The vertex of this triple outside `p`; requires contains(p).
  Vertex other(Pair p) const;
  auto operator<=>(const Triple&) const = default;
};

/// Number of 3-subsets of an n-set.
std::int64_t tripleCount(int n);
/// Colex rank of a sorted triple within the C(n,3) universe.
std::int64_t tripleRank(const Triple& t);
/// Inverse of tripleRank.
Triple tripleFromRank(std::int64_t rank);

/// Simple 2-graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Normalizes and deduplicates pairs; throws DegenerateEdge / VertexOutOfRange.
  static Graph make(int n, std::span<const std::array<Vertex, 2>> pairs);
  static Graph fromPairs(int n, std::vector<Pair> pairs);

  int n() const { return n_; }
  std::span<const Pair> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool hasEdge(Vertex x, Vertex y) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Pair> edges_;
  std::vector<std::uint8_t> adj_;
  std::vector<int> degree_;
};

/// 3-uniform hypergraph on vertices 0..n-1 with lexicographically sorted,
/// duplicate-free edges. For n <= kPackedLimit a bit table over the C(n,3)
/// triple universe answers membership in O(1).
class ThreeGraph {
 public:
  static constexpr int kPackedLimit = 24;

  ThreeGraph() = default;
  explicit ThreeGraph(int n) : ThreeGraph(n, {}) {}
  /// Takes any list of valid triples; sorts and deduplicates.
  ThreeGraph(int n, std::vector<Triple> edges);

  int n() const { return n_; }
  std::span<const Triple> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Triple& t) const;

  bool operator==(const ThreeGraph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
  std::vector<std::uint64_t> packed_;
};

/// Validating constructor from raw triples in any order.
/// Throws DegenerateEdge (repeated vertex) or VertexOutOfRange.
ThreeGraph makeThreeGraph(int n, std::span<const std::array<Vertex, 3>> triples);

/// Dense symmetric table of pair codegrees.
class CodegreeTable {
 public:
  explicit CodegreeTable(const ThreeGraph& h);
  int operator()(Vertex x, Vertex y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  int operator()(Pair p) const { return (*this)(p.u, p.v); }
  int n() const { return n_; }

 private:
  int n_;
  std::vector<int> table_;
};

void checkVertex(int n, Vertex v);
void checkPair(int n, Pair p);

int codegree(const ThreeGraph& h, Pair e);
/// Vertices w with e + w an edge of h.
std::vector<Vertex> codegreeNeighborhood(const ThreeGraph& h, Pair e);
int vertexDegree(const ThreeGraph& h, Vertex v);
Graph link(const ThreeGraph& h, Vertex v);
Graph shadow(const ThreeGraph& h);

/// Sum over all pairs of squared codegrees.
std::int64_t l2Norm(const ThreeGraph& h);
/// ||L(v)||_2 + 2 * sum_{e in L(v)} d(e) - d(v), the l2 loss from deleting v.
std::int64_t twoNormDegree(const ThreeGraph& h, Vertex v);
/// Unordered pairs of edges sharing exactly two vertices.
std::int64_t countS2(const ThreeGraph& h);

/// A 4-set spanning all four of its triples, if one exists.
std::optional<std::array<Vertex, 4>> findK43(const ThreeGraph& h);
inline bool containsK43(const ThreeGraph& h) { return findK43(h).has_value(); }
/// True iff adding `t` to `h` would complete a tetrahedron.
bool additionCreatesK43(const ThreeGraph& h, const Triple& t);

/// Induced subgraph on `keep`, relabeled by ascending original label.
ThreeGraph induce(const ThreeGraph& h, std::span<const Vertex> keep);
ThreeGraph deleteVertex(const ThreeGraph& h, Vertex v);

/// Relabels vertex v to perm[v].
ThreeGraph relabel(const ThreeGraph& h, std::span<const Vertex> perm);

/// Complete 3-graph on n vertices.
ThreeGraph completeThreeGraph(int n);

}  // namespace turanl2
