#include "turanl2/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "turanl2/errors.hpp"

namespace turanl2 {

Triple Triple::of(Vertex x, Vertex y, Vertex z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  if (x == y || y == z)
    throw TuranError(ErrorCode::DegenerateEdge, "repeated vertex " + std::to_string(y));
  return Triple{x, y, z};
}

Vertex Triple::other(Pair p) const {
  if (a != p.u && a != p.v) return a;
  if (b != p.u && b != p.v) return b;
  return c;
}

std::int64_t tripleCount(int n) {
  if (n < 3) return 0;
  std::int64_t m = n;
  return m * (m - 1) * (m - 2) / 6;
}

std::int64_t tripleRank(const Triple& t) {
  std::int64_t c = t.c, b = t.b;
  return c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + t.a;
}

Triple tripleFromRank(std::int64_t rank) {
  Vertex c = 2;
  while (tripleCount(c + 1) <= rank) ++c;
  rank -= tripleCount(c);
  Vertex b = 1;
  while (static_cast<std::int64_t>(b + 1) * b / 2 <= rank) ++b;
  rank -= static_cast<std::int64_t>(b) * (b - 1) / 2;
  return Triple{static_cast<Vertex>(rank), b, c};
}

void checkVertex(int n, Vertex v) {
  if (v < 0 || v >= n)
    throw TuranError(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in [0," + std::to_string(n) + ")");
}

void checkPair(int n, Pair p) {
  checkVertex(n, p.u);
  checkVertex(n, p.v);
  if (p.u == p.v) throw TuranError(ErrorCode::DegenerateEdge, "pair with repeated vertex " + std::to_string(p.u));
}

// ---------------------------------------------------------------- Graph

Graph Graph::make(int n, std::span<const std::array<Vertex, 2>> pairs) {
  std::vector<Pair> edges;
  edges.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    checkVertex(n, x);
    checkVertex(n, y);
    if (x == y) throw TuranError(ErrorCode::DegenerateEdge, "loop at vertex " + std::to_string(x));
    edges.push_back(Pair::of(x, y));
  }
  return fromPairs(n, std::move(edges));
}

Graph Graph::fromPairs(int n, std::vector<Pair> pairs) {
  Graph g;
  g.n_ = n;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  g.edges_ = std::move(pairs);
  g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
  g.degree_.assign(n, 0);
  for (const auto& e : g.edges_) {
    checkPair(n, e);
    g.adj_[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    g.adj_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    ++g.degree_[e.u];
    ++g.degree_[e.v];
  }
  return g;
}

bool Graph::hasEdge(Vertex x, Vertex y) const {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) return false;
  return adj_[static_cast<std::size_t>(x) * n_ + y] != 0;
}

int Graph::degree(Vertex v) const {
  checkVertex(n_, v);
  return degree_[v];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  checkVertex(n_, v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w)
    if (adj_[static_cast<std::size_t>(v) * n_ + w]) out.push_back(w);
  return out;
}

// ----------------------------------------------------------- ThreeGraph

ThreeGraph::ThreeGraph(int n, std::vector<Triple> edges) : n_(n), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  if (n_ <= kPackedLimit) {
    packed_.assign(static_cast<std::size_t>((tripleCount(n_) + 63) / 64), 0);
    for (const auto& t : edges_) {
      auto r = tripleRank(t);
      packed_[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
  }
}

bool ThreeGraph::contains(const Triple& t) const {
  if (t.a < 0 || t.c >= n_ || !(t.a < t.b && t.b < t.c)) return false;
  if (n_ <= kPackedLimit) {
    auto r = tripleRank(t);
    return (packed_[r >> 6] >> (r & 63)) & 1U;
  }
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

ThreeGraph makeThreeGraph(int n, std::span<const std::array<Vertex, 3>> triples) {
  if (n < 0) throw TuranError(ErrorCode::InvalidArgument, "negative vertex count");
  std::vector<Triple> edges;
  edges.reserve(triples.size());
  for (const auto& [x, y, z] : triples) {
    checkVertex(n, x);
    checkVertex(n, y);
    checkVertex(n, z);
    if (x == y || y == z || x == z)
      throw TuranError(ErrorCode::DegenerateEdge,
                       "triple " + std::to_string(x) + " " + std::to_string(y) + " " + std::to_string(z));
    edges.push_back(Triple::of(x, y, z));
  }
  return ThreeGraph(n, std::move(edges));
}

CodegreeTable::CodegreeTable(const ThreeGraph& h) : n_(h.n()), table_(static_cast<std::size_t>(h.n()) * h.n(), 0) {
  for (const auto& t : h.edges()) {
    for (const auto& p : t.pairs()) {
      ++table_[static_cast<std::size_t>(p.u) * n_ + p.v];
      ++table_[static_cast<std::size_t>(p.v) * n_ + p.u];
    }
  }
}

// ----------------------------------------------------------- operations

int codegree(const ThreeGraph& h, Pair e) {
  checkPair(h.n(), e);
  int d = 0;
  for (Vertex w = 0; w < h.n(); ++w)
    if (!e.contains(w) && h.contains(Triple::of(e.u, e.v, w))) ++d;
  return d;
}

std::vector<Vertex> codegreeNeighborhood(const ThreeGraph& h, Pair e) {
  checkPair(h.n(), e);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < h.n(); ++w)
    if (!e.contains(w) && h.contains(Triple::of(e.u, e.v, w))) out.push_back(w);
  return out;
}

int vertexDegree(const ThreeGraph& h, Vertex v) {
  checkVertex(h.n(), v);
  return static_cast<int>(std::count_if(h.edges().begin(), h.edges().end(),
                                        [v](const Triple& t) { return t.contains(v); }));
}

Graph link(const ThreeGraph& h, Vertex v) {
  checkVertex(h.n(), v);
  std::vector<Pair> pairs;
  for (const auto& t : h.edges()) {
    if (t.a == v) pairs.push_back(Pair{t.b, t.c});
    else if (t.b == v) pairs.push_back(Pair{t.a, t.c});
    else if (t.c == v) pairs.push_back(Pair{t.a, t.b});
  }
  return Graph::fromPairs(h.n(), std::move(pairs));
}

Graph shadow(const ThreeGraph& h) {
  std::vector<Pair> pairs;
  pairs.reserve(h.size() * 3);
  for (const auto& t : h.edges())
    for (const auto& p : t.pairs()) pairs.push_back(p);
  return Graph::fromPairs(h.n(), std::move(pairs));
}

std::int64_t l2Norm(const ThreeGraph& h) {
  CodegreeTable d(h);
  std::int64_t total = 0;
  for (Vertex x = 0; x < h.n(); ++x)
    for (Vertex y = x + 1; y < h.n(); ++y) total += static_cast<std::int64_t>(d(x, y)) * d(x, y);
  return total;
}

std::int64_t twoNormDegree(const ThreeGraph& h, Vertex v) {
  checkVertex(h.n(), v);
  CodegreeTable d(h);
  Graph l = link(h, v);
  std::int64_t linkNorm = 0;
  for (Vertex w = 0; w < h.n(); ++w) {
    std::int64_t dw = l.degree(w);
    linkNorm += dw * dw;
  }
  std::int64_t codegreeSum = 0;
  for (const auto& e : l.edges()) codegreeSum += d(e);
  return linkNorm + 2 * codegreeSum - static_cast<std::int64_t>(l.size());
}

std::int64_t countS2(const ThreeGraph& h) {
  CodegreeTable d(h);
  std::int64_t total = 0;
  for (Vertex x = 0; x < h.n(); ++x)
    for (Vertex y = x + 1; y < h.n(); ++y) {
      std::int64_t c = d(x, y);
      total += c * (c - 1) / 2;
    }
  return total;
}

std::optional<std::array<Vertex, 4>> findK43(const ThreeGraph& h) {
  for (const auto& t : h.edges()) {
    // Extend the edge abc by a vertex w > c: needs abw, acw, bcw.
    for (Vertex w = t.c + 1; w < h.n(); ++w) {
      if (h.contains(Triple{t.a, t.b, w}) && h.contains(Triple{t.a, t.c, w}) && h.contains(Triple{t.b, t.c, w}))
        return std::array<Vertex, 4>{t.a, t.b, t.c, w};
    }
  }
  return std::nullopt;
}

bool additionCreatesK43(const ThreeGraph& h, const Triple& t) {
  for (Vertex w = 0; w < h.n(); ++w) {
    if (t.contains(w)) continue;
    if (h.contains(Triple::of(t.a, t.b, w)) && h.contains(Triple::of(t.a, t.c, w)) &&
        h.contains(Triple::of(t.b, t.c, w)))
      return true;
  }
  return false;
}

ThreeGraph induce(const ThreeGraph& h, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  for (Vertex v : sorted) checkVertex(h.n(), v);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> newLabel(h.n(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) newLabel[sorted[i]] = static_cast<Vertex>(i);
  std::vector<Triple> edges;
  for (const auto& t : h.edges()) {
    if (newLabel[t.a] >= 0 && newLabel[t.b] >= 0 && newLabel[t.c] >= 0)
      edges.push_back(Triple{newLabel[t.a], newLabel[t.b], newLabel[t.c]});
  }
  return ThreeGraph(static_cast<int>(sorted.size()), std::move(edges));
}

ThreeGraph deleteVertex(const ThreeGraph& h, Vertex v) {
  checkVertex(h.n(), v);
  std::vector<Vertex> keep;
  for (Vertex w = 0; w < h.n(); ++w)
    if (w != v) keep.push_back(w);
  return induce(h, keep);
}

ThreeGraph relabel(const ThreeGraph& h, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != h.n())
    throw TuranError(ErrorCode::InvalidArgument, "permutation size does not match vertex count");
  std::vector<Triple> edges;
  edges.reserve(h.size());
  for (const auto& t : h.edges()) edges.push_back(Triple::of(perm[t.a], perm[t.b], perm[t.c]));
  return ThreeGraph(h.n(), std::move(edges));
}

ThreeGraph completeThreeGraph(int n) {
  std::vector<Triple> edges;
  for (Vertex c = 2; c < n; ++c)
    for (Vertex b = 1; b < c; ++b)
      for (Vertex a = 0; a < b; ++a) edges.push_back(Triple{a, b, c});
  return ThreeGraph(n, std::move(edges));
}

}  // namespace turanl2
