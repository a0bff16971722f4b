#include "turanl2/colored_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "turanl2/errors.hpp"

namespace turanl2 {
namespace {

std::string listString(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << '}';
  return out.str();
}

std::vector<Vertex> neighborsInPart(const ColoredGraph& g, Vertex v, int part) {
  std::vector<Vertex> out;
  for (Vertex w : g.graph.neighbors(v))
    if (g.partition.part(w) == part) out.push_back(w);
  return out;
}

}  // namespace

ColoredGraph::ColoredGraph(Graph g, Partition3 p) : graph(std::move(g)), partition(std::move(p)) {
  if (graph.n() != partition.n())
    throw TuranError(ErrorCode::PartitionMismatch, "graph has " + std::to_string(graph.n()) +
                                                       " vertices, partition covers " +
                                                       std::to_string(partition.n()));
}

int ColoredGraph::edgeCount(int i, int j) const {
  int count = 0;
  for (const auto& e : graph.edges()) {
    int a = partition.part(e.u), b = partition.part(e.v);
    if ((a == i && b == j) || (a == j && b == i)) ++count;
  }
  return count;
}

std::vector<Vertex> ColoredGraph::inNeighbors(Vertex v) const {
  return neighborsInPart(*this, v, prevPart(partition.part(v)));
}
std::vector<Vertex> ColoredGraph::outNeighbors(Vertex v) const {
  return neighborsInPart(*this, v, nextPart(partition.part(v)));
}
std::vector<Vertex> ColoredGraph::internalNeighbors(Vertex v) const {
  return neighborsInPart(*this, v, partition.part(v));
}

bool isCyclicTriangleType(int pa, int pb, int pc) {
  std::array<int, 3> s{pa, pb, pc};
  std::sort(s.begin(), s.end());
  if (s[0] == s[1] && s[1] == s[2]) return false;
  if (s[0] != s[1] && s[1] != s[2]) return true;  // 123
  // Two in part i, one in part j: cyclic iff j = i + 1.
  int doubled = s[1];
  int single = s[0] == s[1] ? s[2] : s[0];
  return single == nextPart(doubled);
}

std::int64_t countCyclicTriangles(const ColoredGraph& g) {
  const Graph& G = g.graph;
  std::int64_t count = 0;
  for (const auto& e : G.edges())
    for (Vertex w = e.v + 1; w < G.n(); ++w)
      if (G.hasEdge(e.u, w) && G.hasEdge(e.v, w) &&
          isCyclicTriangleType(g.partition.part(e.u), g.partition.part(e.v), g.partition.part(w)))
        ++count;
  return count;
}

Rational rho3(const ColoredGraph& g) {
  if (g.n() < 3) throw TuranError(ErrorCode::TooFewVertices, "rho3 needs at least 3 vertices");
  return Rational(countCyclicTriangles(g)) / Rational(tripleCount(g.n()));
}

bool isCyclicTriangleFree(const ColoredGraph& g) { return countCyclicTriangles(g) == 0; }

ColoredGraph buildLambda(int n1, int n2, int n3) {
  Partition3 p = Partition3::fromSizes(n1, n2, n3);
  std::vector<Pair> edges;
  for (Vertex x = 0; x < p.n(); ++x)
    for (Vertex y = x + 1; y < p.n(); ++y) {
      int a = p.part(x), b = p.part(y);
      if ((a == 0 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 2)) edges.push_back(Pair{x, y});
    }
  Graph g = Graph::fromPairs(p.n(), std::move(edges));
  return ColoredGraph(std::move(g), std::move(p));
}

std::int64_t graphL2Norm(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.n(); ++v) total += static_cast<std::int64_t>(g.degree(v)) * g.degree(v);
  return total;
}

std::optional<int> isLocallyMaximal(const ColoredGraph& g) {
  for (int i = 0; i < 3; ++i) {
    int j = nextPart(i), k = nextPart(j);
    bool first = g.edgeCount(i, j) + g.edgeCount(k, k) >= g.edgeCount(i, k) + g.edgeCount(i, i);
    bool second = g.edgeCount(j, k) + g.edgeCount(k, k) >= g.edgeCount(i, k) + g.edgeCount(j, j);
    if (first && second) return i;
  }
  return std::nullopt;
}

ColoredGraph symmetrize(const ColoredGraph& g, Vertex u, Vertex v) {
  checkVertex(g.n(), u);
  checkVertex(g.n(), v);
  if (u == v) throw TuranError(ErrorCode::SameVertex, "cannot symmetrize a vertex to itself");
  return classSymmetrize(g, {u}, {v});
}

EquivalenceClasses equivalenceClasses(const ColoredGraph& g) {
  std::map<std::pair<int, std::vector<Vertex>>, std::vector<Vertex>> byKey;
  for (Vertex v = 0; v < g.n(); ++v) byKey[{g.partition.part(v), g.graph.neighbors(v)}].push_back(v);
  EquivalenceClasses out;
  for (auto& [key, members] : byKey) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.classOf.assign(g.n(), -1);
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (Vertex v : out.classes[c]) out.classOf[v] = static_cast<int>(c);
  return out;
}

ColoredGraph classSymmetrize(const ColoredGraph& g, const std::vector<Vertex>& from,
                             const std::vector<Vertex>& to) {
  if (from.empty() || to.empty()) throw TuranError(ErrorCode::InvalidArgument, "empty class");
  for (Vertex v : from) checkVertex(g.n(), v);
  for (Vertex v : to) checkVertex(g.n(), v);
  int part = g.partition.part(from.front());
  for (Vertex v : from)
    if (g.partition.part(v) != part) throw TuranError(ErrorCode::CrossPartClasses, "class spans parts");
  for (Vertex v : to)
    if (g.partition.part(v) != part)
      throw TuranError(ErrorCode::CrossPartClasses, "classes lie in different parts");
  for (Vertex v : from)
    if (std::find(to.begin(), to.end(), v) != to.end())
      throw TuranError(ErrorCode::SameClass, "classes overlap at vertex " + std::to_string(v));

  std::vector<bool> moving(g.n(), false);
  for (Vertex v : from) moving[v] = true;
  std::vector<Pair> edges;
  for (const auto& e : g.graph.edges())
    if (!moving[e.u] && !moving[e.v]) edges.push_back(e);
  auto target = g.graph.neighbors(to.front());
  for (Vertex x : from)
    for (Vertex w : target)
      if (w != x) edges.push_back(Pair::of(x, w));
  return ColoredGraph(Graph::fromPairs(g.n(), std::move(edges)), g.partition);
}

bool isLocallySymmetrized(const ColoredGraph& g) {
  auto eq = equivalenceClasses(g);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (g.partition.part(u) == g.partition.part(v) && !g.graph.hasEdge(u, v) && eq.classOf[u] != eq.classOf[v])
        return false;
  return true;
}

SymmetrizationResult locallySymmetrize(const ColoredGraph& input) {
  SymmetrizationResult result{input, {}};
  for (;;) {
    const ColoredGraph& g = result.graph;
    auto eq = equivalenceClasses(g);
    std::optional<std::pair<Vertex, Vertex>> pick;
    for (int part = 0; part < 3 && !pick; ++part) {
      auto members = g.partition.members(part);
      for (std::size_t a = 0; a < members.size() && !pick; ++a)
        for (std::size_t b = a + 1; b < members.size() && !pick; ++b) {
          Vertex u = members[a], v = members[b];
          if (!g.graph.hasEdge(u, v) && eq.classOf[u] != eq.classOf[v]) pick = {u, v};
        }
    }
    if (!pick) break;

    const auto& cu = eq.classes[eq.classOf[pick->first]];
    const auto& cv = eq.classes[eq.classOf[pick->second]];
    ColoredGraph toV = classSymmetrize(g, cu, cv);
    ColoredGraph toU = classSymmetrize(g, cv, cu);
    // Ties go toward the class with the smaller minimum label; cu.front() < cv.front().
    bool intoU = toU.graph.size() >= toV.graph.size();
    SymmetrizationStep step;
    step.part = g.partition.part(pick->first);
    step.from = intoU ? cv : cu;
    step.to = intoU ? cu : cv;
    step.edgesBefore = g.graph.size();
    ColoredGraph next = intoU ? std::move(toU) : std::move(toV);
    step.edgesAfter = next.graph.size();
    result.steps.push_back(std::move(step));
    result.graph = std::move(next);
  }
  return result;
}

bool FactReport::allPass() const {
  return std::all_of(facts.begin(), facts.end(), [](const FactCheck& f) { return f.pass; });
}

FactReport checkSymmetrizedFacts(const ColoredGraph& g) {
  if (!isLocallySymmetrized(g))
    throw TuranError(ErrorCode::NotLocallySymmetrized, "some nonadjacent same-part pair is inequivalent");
  auto eq = equivalenceClasses(g);
  const Graph& G = g.graph;
  FactReport report;

  FactCheck independent{"classes_independent", true, ""};
  for (const auto& cls : eq.classes) {
    for (std::size_t a = 0; a < cls.size() && independent.pass; ++a)
      for (std::size_t b = a + 1; b < cls.size() && independent.pass; ++b)
        if (G.hasEdge(cls[a], cls[b])) {
          independent.pass = false;
          independent.witness = "edge " + std::to_string(cls[a]) + "-" + std::to_string(cls[b]) + " inside class";
        }
  }
  report.facts.push_back(independent);

  FactCheck complete{"classes_complete_bipartite", true, ""};
  for (std::size_t c = 0; c < eq.classes.size() && complete.pass; ++c)
    for (std::size_t d = c + 1; d < eq.classes.size() && complete.pass; ++d) {
      const auto& x = eq.classes[c];
      const auto& y = eq.classes[d];
      if (g.partition.part(x.front()) != g.partition.part(y.front())) continue;
      for (Vertex a : x)
        for (Vertex b : y)
          if (complete.pass && !G.hasEdge(a, b)) {
            complete.pass = false;
            complete.witness = "missing " + std::to_string(a) + "-" + std::to_string(b) + " between classes";
          }
    }
  report.facts.push_back(complete);

  FactCheck internal{"internal_degree", true, ""};
  for (Vertex v = 0; v < g.n() && internal.pass; ++v) {
    int expected = g.partition.size(g.partition.part(v)) - static_cast<int>(eq.classes[eq.classOf[v]].size());
    int actual = static_cast<int>(g.internalNeighbors(v).size());
    if (actual != expected) {
      internal.pass = false;
      internal.witness = "vertex " + std::to_string(v) + " has " + std::to_string(actual) + " internal neighbours, expected " +
                         std::to_string(expected);
    }
  }
  report.facts.push_back(internal);

  DirectedView view(g);
  FactCheck distinctCycle{"min_cycle_distinct", true, ""};
  if (auto cycle = view.shortestDirectedCycle()) {
    std::vector<int> seen;
    for (Vertex v : *cycle) seen.push_back(eq.classOf[v]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      distinctCycle.pass = false;
      distinctCycle.witness = "cycle " + listString(*cycle) + " repeats a class";
    }
  }
  report.facts.push_back(distinctCycle);

  if (!isCyclicTriangleFree(g)) return report;

  FactCheck inClass{"in_neighborhood_is_class", true, ""};
  for (Vertex v = 0; v < g.n() && inClass.pass; ++v) {
    auto in = g.inNeighbors(v);
    if (in.empty()) continue;
    if (in != eq.classes[eq.classOf[in.front()]]) {
      inClass.pass = false;
      inClass.witness = "N-(" + std::to_string(v) + ") = " + listString(in);
    }
  }
  report.facts.push_back(inClass);

  FactCheck disjoint{"in_out_disjoint", true, ""};
  for (const auto& e : G.edges()) {
    if (!disjoint.pass) break;
    Vertex u = e.u, v = e.v;
    int pu = g.partition.part(u), pv = g.partition.part(v);
    if (pu == pv) continue;
    if (pv != nextPart(pu)) std::swap(u, v);
    auto in = g.inNeighbors(u);
    auto out = g.outNeighbors(v);
    for (Vertex w : in)
      if (std::find(out.begin(), out.end(), w) != out.end()) {
        disjoint.pass = false;
        disjoint.witness = "directed edge " + std::to_string(u) + "->" + std::to_string(v) + " shares " + std::to_string(w);
        break;
      }
  }
  report.facts.push_back(disjoint);
  return report;
}

DirectedView::DirectedView(const ColoredGraph& g) : n_(g.n()), out_(g.n()) {
  for (Vertex v = 0; v < n_; ++v) out_[v] = g.outNeighbors(v);
}

bool DirectedView::hasDirectedCycle() const {
  std::vector<int> state(n_, 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 0; root < n_; ++root) {
    if (state[root]) continue;
    stack.push_back({root, 0});
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < out_[v].size()) {
        Vertex w = out_[v][idx++];
        if (state[w] == 1) return true;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

std::optional<std::vector<Vertex>> DirectedView::shortestDirectedCycle() const {
  std::optional<std::vector<Vertex>> best;
  for (Vertex s = 0; s < n_; ++s) {
    std::vector<int> dist(n_, -1), parent(n_, -1);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (best && dist[v] + 1 >= static_cast<int>(best->size())) break;
      bool closed = false;
      for (Vertex w : out_[v]) {
        if (w == s) {
          std::vector<Vertex> cycle;
          for (Vertex x = v; x != -1; x = parent[x]) cycle.push_back(x);
          std::reverse(cycle.begin(), cycle.end());
          best = std::move(cycle);
          closed = true;
          break;
        }
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
      if (closed) break;
    }
  }
  return best;
}

DirectedView::LongestPath DirectedView::longestDirectedPath() const {
  LongestPath result;
  if (n_ == 0) return result;
  if (n_ <= 15) {
    const std::size_t full = std::size_t{1} << n_;
    // reach[mask] bit v: a path visiting exactly `mask` ends at v.
    std::vector<std::uint16_t> reach(full, 0);
    for (Vertex v = 0; v < n_; ++v) reach[std::size_t{1} << v] |= static_cast<std::uint16_t>(1U << v);
    std::size_t bestMask = 1;
    Vertex bestEnd = 0;
    for (std::size_t mask = 1; mask < full; ++mask) {
      if (!reach[mask]) continue;
      if (__builtin_popcountll(mask) > __builtin_popcountll(bestMask)) {
        bestMask = mask;
        bestEnd = __builtin_ctz(reach[mask]);
      }
      for (Vertex v = 0; v < n_; ++v) {
        if (!((reach[mask] >> v) & 1U)) continue;
        for (Vertex w : out_[v])
          if (!((mask >> w) & 1U)) reach[mask | (std::size_t{1} << w)] |= static_cast<std::uint16_t>(1U << w);
      }
    }
    // Walk back through the DP.
    std::size_t mask = bestMask;
    Vertex end = bestEnd;
    result.path.push_back(end);
    while (__builtin_popcountll(mask) > 1) {
      std::size_t prev = mask & ~(std::size_t{1} << end);
      for (Vertex v = 0; v < n_; ++v) {
        if (!((reach[prev] >> v) & 1U)) continue;
        if (std::find(out_[v].begin(), out_[v].end(), end) != out_[v].end()) {
          end = v;
          break;
        }
      }
      mask = prev;
      result.path.push_back(end);
    }
    std::reverse(result.path.begin(), result.path.end());
    return result;
  }
  result.exact = false;
  for (Vertex s = 0; s < n_; ++s) {
    std::vector<bool> used(n_, false);
    std::vector<Vertex> path{s};
    used[s] = true;
    for (;;) {
      Vertex v = path.back(), pick = -1;
      std::size_t bestOut = 0;
      for (Vertex w : out_[v])
        if (!used[w] && (pick < 0 || out_[w].size() > bestOut)) {
          pick = w;
          bestOut = out_[w].size();
        }
      if (pick < 0) break;
      used[pick] = true;
      path.push_back(pick);
    }
    if (path.size() > result.path.size()) result.path = std::move(path);
  }
  return result;
}

PathDegreeReport degreeSumOnPath(const ColoredGraph& g, const std::vector<Vertex>& path) {
  if (path.empty() || path.size() % 3 != 0)
    throw TuranError(ErrorCode::MalformedPath, "path length must be a positive multiple of 3");
  for (Vertex v : path) checkVertex(g.n(), v);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (g.partition.part(path[i]) != static_cast<int>(i % 3))
      throw TuranError(ErrorCode::MalformedPath, "vertex " + std::to_string(path[i]) + " in the wrong part");
    if (i + 1 < path.size() && !g.graph.hasEdge(path[i], path[i + 1]))
      throw TuranError(ErrorCode::MalformedPath,
                       "no edge " + std::to_string(path[i]) + "-" + std::to_string(path[i + 1]));
  }
  std::vector<Vertex> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw TuranError(ErrorCode::MalformedPath, "path repeats a vertex");

  PathDegreeReport report;
  report.k = static_cast<int>(path.size() / 3);
  report.partSize = g.partition.maxPartSize();
  for (Vertex v : path) report.degreeSum += g.graph.degree(v);
  report.bound = 3LL * (report.k + 1) * report.partSize;
  report.locallySymmetrized = isLocallySymmetrized(g);
  report.cyclicTriangleFree = isCyclicTriangleFree(g);
  auto eq = equivalenceClasses(g);
  std::vector<int> cls;
  for (Vertex v : path) cls.push_back(eq.classOf[v]);
  std::sort(cls.begin(), cls.end());
  report.distinct = std::adjacent_find(cls.begin(), cls.end()) == cls.end();
  auto in = g.inNeighbors(path.front());
  report.inNeighborhoodCondition = in.empty() || in == eq.classes[eq.classOf[path.back()]];
  return report;
}

}  // namespace turanl2
