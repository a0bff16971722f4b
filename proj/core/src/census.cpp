#include "turanl2/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "turanl2/constructions.hpp"
#include "turanl2/errors.hpp"
#include "turanl2/parallel.hpp"

namespace turanl2 {
namespace {

// ------------------------------------------------------------ K4^3 census

struct CanonicalSearch {
  int n = 0;
  std::int64_t best = -1;
  std::set<std::vector<Triple>> seen;
  std::set<std::vector<Triple>> extremal;
  std::uint64_t nodes = 0;

  void visit(const ThreeGraph& h) {
    ++nodes;
    std::vector<Triple> addable;
    for (std::int64_t r = 0; r < tripleCount(n); ++r) {
      Triple t = tripleFromRank(r);
      if (!h.contains(t) && !additionCreatesK43(h, t)) addable.push_back(t);
    }
    CodegreeTable d(h);
    std::int64_t l2 = 0;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) l2 += static_cast<std::int64_t>(d(x, y)) * d(x, y);
    if (addable.empty()) {
      if (l2 > best) {
        best = l2;
        extremal.clear();
      }
      if (l2 == best) extremal.insert(std::vector<Triple>(h.edges().begin(), h.edges().end()));
      return;
    }
    // Completing with s(e) <= a(e) new triples at each pair adds at most
    // s(e) (2 d(e) + a(e)); charge it to the addable triples.
    std::map<Pair, int> a;
    for (const auto& t : addable)
      for (const auto& e : t.pairs()) ++a[e];
    std::int64_t ub = l2;
    for (const auto& t : addable)
      for (const auto& e : t.pairs()) ub += 2LL * d(e) + a[e];
    if (ub < best) return;
    for (const auto& t : addable) {
      std::vector<Triple> edges(h.edges().begin(), h.edges().end());
      edges.push_back(t);
      CanonicalForm cf = canonicalForm(ThreeGraph(n, std::move(edges)), n);
      if (seen.insert(cf.edges).second) visit(toThreeGraph(cf));
    }
  }
};

struct NaiveScanResult {
  std::int64_t best = -1;
  std::vector<std::uint64_t> masks;
};

NaiveScanResult naiveK43Scan(int n, unsigned workers) {
  const int m = static_cast<int>(tripleCount(n));
  std::vector<Triple> triples(m);
  for (int r = 0; r < m; ++r) triples[r] = tripleFromRank(r);
  std::vector<std::uint64_t> pairMask;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      std::uint64_t mask = 0;
      for (int r = 0; r < m; ++r)
        if (triples[r].contains(Pair{x, y})) mask |= std::uint64_t{1} << r;
      pairMask.push_back(mask);
    }
  std::vector<std::uint64_t> k4Mask;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          k4Mask.push_back((std::uint64_t{1} << tripleRank({a, b, c})) | (std::uint64_t{1} << tripleRank({a, b, d})) |
                           (std::uint64_t{1} << tripleRank({a, c, d})) | (std::uint64_t{1} << tripleRank({b, c, d})));

  const std::uint64_t total = std::uint64_t{1} << m;
  const std::size_t chunks = std::min<std::uint64_t>(total, 256);
  std::vector<NaiveScanResult> partial(chunks);
  parallelFor(chunks, workers, [&](std::size_t c) {
    auto& out = partial[c];
    std::uint64_t lo = total / chunks * c, hi = c + 1 == chunks ? total : total / chunks * (c + 1);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      bool free = true;
      for (auto k : k4Mask)
        if ((mask & k) == k) {
          free = false;
          break;
        }
      if (!free) continue;
      std::int64_t l2 = 0;
      for (auto pm : pairMask) {
        std::int64_t d = __builtin_popcountll(mask & pm);
        l2 += d * d;
      }
      if (l2 > out.best) {
        out.best = l2;
        out.masks.clear();
      }
      if (l2 == out.best) out.masks.push_back(mask);
    }
  });
  NaiveScanResult merged;
  for (auto& p : partial) merged.best = std::max(merged.best, p.best);
  for (auto& p : partial)
    if (p.best == merged.best) merged.masks.insert(merged.masks.end(), p.masks.begin(), p.masks.end());
  return merged;
}

ThreeGraph fromMask(int n, std::uint64_t mask) {
  std::vector<Triple> edges;
  for (int r = 0; mask; ++r, mask >>= 1)
    if (mask & 1) edges.push_back(tripleFromRank(r));
  return ThreeGraph(n, std::move(edges));
}

// ------------------------------------------------------ colored utilities

std::vector<std::vector<Vertex>> membersByPart(const ColoredGraph& g) {
  return {g.partition.members(0), g.partition.members(1), g.partition.members(2)};
}

ColoredGraph coloredFromMask(const Partition3& p, const std::vector<Pair>& pairs, std::uint64_t mask) {
  std::vector<Pair> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((mask >> k) & 1U) edges.push_back(pairs[k]);
  return ColoredGraph(Graph::fromPairs(p.n(), std::move(edges)), p);
}

void addColoredClasses(CensusReport& r, const std::vector<ColoredGraph>& maximizers) {
  std::map<std::vector<Pair>, ColoredGraph> plain;
  std::set<std::vector<Pair>> rotated;
  for (const auto& g : maximizers) {
    plain.emplace(coloredCanonicalForm(g, false), g);
    rotated.insert(coloredCanonicalForm(g, true));
  }
  r.extremalClasses = plain.size();
  r.extremalClassesRotation = rotated.size();
  for (auto& [key, g] : plain) {
    Partition3 p = Partition3::fromSizes(g.partition.size(0), g.partition.size(1), g.partition.size(2));
    r.extremalColored.push_back(ColoredGraph(Graph::fromPairs(g.n(), key), p));
  }
}

// ------------------------------------------------ symmetrized Mantel mode

struct ClassPattern {
  std::array<int, 3> k{};
  std::vector<int> partOf;                  // class -> part
  std::vector<std::pair<int, int>> cross;   // cross-part class pairs, bit order
  std::vector<std::uint32_t> triangles;     // cross-bit masks that would close a cyclic triangle
};

ClassPattern makePattern(std::array<int, 3> k) {
  ClassPattern cp;
  cp.k = k;
  for (int i = 0; i < 3; ++i) cp.partOf.insert(cp.partOf.end(), k[i], i);
  const int c = static_cast<int>(cp.partOf.size());
  std::map<std::pair<int, int>, int> bit;
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b)
      if (cp.partOf[a] != cp.partOf[b]) {
        bit[{a, b}] = static_cast<int>(cp.cross.size());
        cp.cross.push_back({a, b});
      }
  auto need = [&](int a, int b) -> std::uint32_t {
    if (cp.partOf[a] == cp.partOf[b]) return 0;
    return std::uint32_t{1} << bit[{std::min(a, b), std::max(a, b)}];
  };
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b)
      for (int d = b + 1; d < c; ++d)
        if (isCyclicTriangleType(cp.partOf[a], cp.partOf[b], cp.partOf[d]))
          cp.triangles.push_back(need(a, b) | need(a, d) | need(b, d));
  return cp;
}

void compositionsPositive(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    cur.push_back(first);
    compositionsPositive(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

// Class-level key, minimized over class orders inside each part (and part rotations).
std::vector<int> blowUpKey(const ClassPattern& cp, std::uint32_t mask, const std::vector<int>& sizes, bool rotations) {
  const int c = static_cast<int>(cp.partOf.size());
  std::vector<std::vector<bool>> adj(c, std::vector<bool>(c, false));
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b)
      if (a != b && cp.partOf[a] == cp.partOf[b]) adj[a][b] = true;
  for (std::size_t k = 0; k < cp.cross.size(); ++k)
    if ((mask >> k) & 1U) adj[cp.cross[k].first][cp.cross[k].second] = adj[cp.cross[k].second][cp.cross[k].first] = true;

  std::array<std::vector<int>, 3> classes;
  for (int a = 0; a < c; ++a) classes[cp.partOf[a]].push_back(a);
  std::vector<int> best;
  for (int rot = 0; rot < (rotations ? 3 : 1); ++rot) {
    // New part j holds old part (j - rot).
    std::array<std::vector<int>, 3> order;
    for (int j = 0; j < 3; ++j) order[j] = classes[(j + 3 - rot) % 3];
    for (auto& o : order) std::sort(o.begin(), o.end());
    do {
      do {
        do {
          std::vector<int> seq;
          for (int j = 0; j < 3; ++j) seq.insert(seq.end(), order[j].begin(), order[j].end());
          std::vector<int> key{static_cast<int>(order[0].size()), static_cast<int>(order[1].size()),
                               static_cast<int>(order[2].size())};
          for (int a : seq) key.push_back(sizes[a]);
          for (std::size_t x = 0; x < seq.size(); ++x)
            for (std::size_t y = x + 1; y < seq.size(); ++y) key.push_back(adj[seq[x]][seq[y]] ? 1 : 0);
          if (best.empty() || key < best) best = key;
        } while (std::next_permutation(order[2].begin(), order[2].end()));
      } while (std::next_permutation(order[1].begin(), order[1].end()));
    } while (std::next_permutation(order[0].begin(), order[0].end()));
  }
  return best;
}

ColoredGraph blowUp(const ClassPattern& cp, std::uint32_t mask, const std::vector<int>& sizes, int n) {
  const int c = static_cast<int>(cp.partOf.size());
  std::vector<int> first(c);
  std::array<int, 3> offset{0, n, 2 * n};
  for (int a = 0; a < c; ++a) {
    first[a] = offset[cp.partOf[a]];
    offset[cp.partOf[a]] += sizes[a];
  }
  std::vector<Pair> edges;
  auto join = [&](int a, int b) {
    for (int x = 0; x < sizes[a]; ++x)
      for (int y = 0; y < sizes[b]; ++y) edges.push_back(Pair::of(first[a] + x, first[b] + y));
  };
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b)
      if (cp.partOf[a] == cp.partOf[b]) join(a, b);
  for (std::size_t k = 0; k < cp.cross.size(); ++k)
    if ((mask >> k) & 1U) join(cp.cross[k].first, cp.cross[k].second);
  return ColoredGraph(Graph::fromPairs(3 * n, std::move(edges)), Partition3::fromSizes(n, n, n));
}

void symmetrizedMantel(CensusReport& r, int n, MantelObjective objective, const MantelCensusOptions& options) {
  struct Found {
    std::int64_t value = -1;
    std::vector<std::tuple<std::array<int, 3>, std::uint32_t, std::vector<int>>> hits;
    std::uint64_t nodes = 0;
  };
  std::vector<std::array<int, 3>> profiles;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (a + b + c <= options.classCap) profiles.push_back({a, b, c});
  r.exact = objective == MantelObjective::Edges && 3 * n <= options.classCap;

  std::vector<Found> found(profiles.size());
  parallelFor(profiles.size(), options.workers, [&](std::size_t idx) {
    auto cp = makePattern(profiles[idx]);
    const int c = static_cast<int>(cp.partOf.size());
    std::array<std::vector<std::vector<int>>, 3> sizeChoices;
    for (int i = 0; i < 3; ++i) {
      std::vector<int> cur;
      compositionsPositive(n, cp.k[i], cur, sizeChoices[i]);
    }
    auto& out = found[idx];
    const std::uint32_t patterns = std::uint32_t{1} << cp.cross.size();
    for (std::uint32_t mask = 0; mask < patterns; ++mask) {
      bool ok = true;
      for (auto t : cp.triangles)
        if ((mask & t) == t) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<std::vector<bool>> adj(c, std::vector<bool>(c, false));
      for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b)
          if (a != b && cp.partOf[a] == cp.partOf[b]) adj[a][b] = true;
      for (std::size_t k = 0; k < cp.cross.size(); ++k)
        if ((mask >> k) & 1U) adj[cp.cross[k].first][cp.cross[k].second] = adj[cp.cross[k].second][cp.cross[k].first] = true;
      for (const auto& s0 : sizeChoices[0])
        for (const auto& s1 : sizeChoices[1])
          for (const auto& s2 : sizeChoices[2]) {
            ++out.nodes;
            std::vector<int> sizes(s0);
            sizes.insert(sizes.end(), s1.begin(), s1.end());
            sizes.insert(sizes.end(), s2.begin(), s2.end());
            std::int64_t value = 0;
            for (int a = 0; a < c; ++a) {
              std::int64_t deg = 0;
              for (int b = 0; b < c; ++b)
                if (adj[a][b]) deg += sizes[b];
              value += objective == MantelObjective::Edges ? sizes[a] * deg : sizes[a] * deg * deg;
            }
            if (objective == MantelObjective::Edges) value /= 2;
            if (value > out.value) {
              out.value = value;
              out.hits.clear();
            }
            if (value == out.value) out.hits.emplace_back(cp.k, mask, sizes);
          }
    }
  });

  std::int64_t best = -1;
  for (const auto& f : found) {
    best = std::max(best, f.value);
    r.nodes += f.nodes;
  }
  r.optimum = best;
  std::map<std::vector<int>, ColoredGraph> plain;
  std::set<std::vector<int>> rotated;
  for (const auto& f : found) {
    if (f.value != best) continue;
    for (const auto& [k, mask, sizes] : f.hits) {
      auto cp = makePattern(k);
      auto key = blowUpKey(cp, mask, sizes, false);
      if (!plain.count(key)) plain.emplace(key, blowUp(cp, mask, sizes, n));
      rotated.insert(blowUpKey(cp, mask, sizes, true));
    }
  }
  r.extremalClasses = plain.size();
  r.extremalClassesRotation = rotated.size();
  for (auto& [key, g] : plain) r.extremalColored.push_back(g);
}

}  // namespace

// --------------------------------------------------------------- public

std::vector<Pair> coloredCanonicalForm(const ColoredGraph& g, bool rotations) {
  const int s = g.partition.size(0);
  if (g.partition.size(1) != s || g.partition.size(2) != s)
    throw TuranError(ErrorCode::InvalidArgument, "colored canonical form needs equal part sizes");
  if (s > 3) throw TuranError(ErrorCode::SizeLimitExceeded, "colored canonical form needs parts of size <= 3");
  auto members = membersByPart(g);
  std::vector<Pair> best;
  bool have = false;
  std::vector<Vertex> label(g.n());
  for (int rot = 0; rot < (rotations ? 3 : 1); ++rot) {
    std::array<std::vector<int>, 3> perm;
    for (auto& p : perm) {
      p.resize(s);
      std::iota(p.begin(), p.end(), 0);
    }
    do {
      do {
        do {
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < s; ++j) label[members[i][j]] = ((i + rot) % 3) * s + perm[i][j];
          std::vector<Pair> edges;
          for (const auto& e : g.graph.edges()) edges.push_back(Pair::of(label[e.u], label[e.v]));
          std::sort(edges.begin(), edges.end());
          if (!have || edges < best) {
            best = std::move(edges);
            have = true;
          }
        } while (std::next_permutation(perm[2].begin(), perm[2].end()));
      } while (std::next_permutation(perm[1].begin(), perm[1].end()));
    } while (std::next_permutation(perm[0].begin(), perm[0].end()));
  }
  return best;
}

CensusReport censusK43(int n, const K43CensusOptions& options) {
  if (n < 0) throw TuranError(ErrorCode::InvalidArgument, "negative n");
  if (n > options.maxN)
    throw TuranError(ErrorCode::SizeLimitExceeded, "census cap is n <= " + std::to_string(options.maxN));
  if (options.naive && n > 6) throw TuranError(ErrorCode::SizeLimitExceeded, "naive scan needs n <= 6");
  CensusReport r;
  r.n = n;
  r.problem = "k43-l2";
  r.method = options.naive ? "naive" : "canonical";

  Composition3 bestComposition{0, 0, n};
  Rational refValue = -1;
  for (const auto& c : compositions(n))
    if (cL2Closed(c) > refValue) {
      refValue = cL2Closed(c);
      bestComposition = c;
    }
  r.reference = "C(" + bestComposition.toString() + ")";
  r.referenceValue = static_cast<std::int64_t>(numerator(refValue));

  std::set<std::vector<Triple>> classes;
  if (options.naive) {
    auto scan = naiveK43Scan(n, options.workers);
    r.optimum = scan.best;
    r.rawMaximizers = scan.masks.size();
    r.nodes = std::uint64_t{1} << tripleCount(n);
    for (auto mask : scan.masks) classes.insert(canonicalForm(fromMask(n, mask), n).edges);
  } else {
    CanonicalSearch s;
    s.n = n;
    s.best = r.referenceValue;
    ThreeGraph empty(n);
    s.seen.insert({});
    s.visit(empty);
    r.optimum = s.best;
    r.nodes = s.nodes;
    classes = std::move(s.extremal);
  }
  r.extremalClasses = classes.size();
  for (const auto& edges : classes) r.extremalThreeGraphs.push_back(ThreeGraph(n, edges));
  r.referenceAttains = r.referenceValue == r.optimum;
  if (r.referenceAttains) {
    auto ref = canonicalForm(buildC(bestComposition).graph, n).edges;
    r.referenceUnique = classes.size() == 1 && *classes.begin() == ref;
  }
  return r;
}

CensusReport censusColoredMantel(int n, MantelObjective objective, const MantelCensusOptions& options) {
  if (n < 1) throw TuranError(ErrorCode::InvalidArgument, "part size must be positive");
  CensusReport r;
  r.n = n;
  r.problem = objective == MantelObjective::Edges ? "mantel-edges" : "mantel-l2";
  ColoredGraph lambda = buildLambda(n, n, n);
  r.reference = "Lambda(" + std::to_string(n) + "," + std::to_string(n) + "," + std::to_string(n) + ")";
  r.referenceValue = objective == MantelObjective::Edges ? static_cast<std::int64_t>(lambda.graph.size())
                                                         : graphL2Norm(lambda.graph);

  if (3 * n <= 8 && !options.forceSymmetrized) {
    r.method = "exhaustive";
    Partition3 p = Partition3::fromSizes(n, n, n);
    std::vector<Pair> pairs;
    for (Vertex x = 0; x < 3 * n; ++x)
      for (Vertex y = x + 1; y < 3 * n; ++y) pairs.push_back({x, y});
    auto bitOf = [&](Vertex x, Vertex y) {
      return static_cast<int>(std::find(pairs.begin(), pairs.end(), Pair::of(x, y)) - pairs.begin());
    };
    std::vector<std::uint64_t> triangles;
    for (Vertex x = 0; x < 3 * n; ++x)
      for (Vertex y = x + 1; y < 3 * n; ++y)
        for (Vertex z = y + 1; z < 3 * n; ++z)
          if (isCyclicTriangleType(p.part(x), p.part(y), p.part(z)))
            triangles.push_back((std::uint64_t{1} << bitOf(x, y)) | (std::uint64_t{1} << bitOf(x, z)) |
                                (std::uint64_t{1} << bitOf(y, z)));
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::int64_t best = -1;
    std::vector<std::uint64_t> hits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      bool ok = true;
      for (auto t : triangles)
        if ((mask & t) == t) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::int64_t value;
      if (objective == MantelObjective::Edges) {
        value = __builtin_popcountll(mask);
      } else {
        std::vector<std::int64_t> deg(3 * n, 0);
        for (std::size_t k = 0; k < pairs.size(); ++k)
          if ((mask >> k) & 1U) {
            ++deg[pairs[k].u];
            ++deg[pairs[k].v];
          }
        value = 0;
        for (auto d : deg) value += d * d;
      }
      if (value > best) {
        best = value;
        hits.clear();
      }
      if (value == best) hits.push_back(mask);
    }
    r.optimum = best;
    r.rawMaximizers = hits.size();
    r.nodes = total;
    std::vector<ColoredGraph> maximizers;
    for (auto mask : hits) maximizers.push_back(coloredFromMask(p, pairs, mask));
    addColoredClasses(r, maximizers);
  } else {
    r.method = "symmetrized";
    symmetrizedMantel(r, n, objective, options);
  }

  r.referenceAttains = r.optimum == r.referenceValue;
  if (r.exact) r.bounds.push_back({"at_least_reference", r.referenceValue, r.optimum >= r.referenceValue});
  if (objective == MantelObjective::Edges) {
    // 5n^2/2 + 5n, floored.
    std::int64_t ub = (5LL * n * n + 10LL * n) / 2;
    r.bounds.push_back({"at_most_5n2/2+5n", ub, r.optimum <= ub});
  }
  return r;
}

Graph splitTemplate(int n, int i, const std::vector<bool>& inFirstHalf) {
  Partition3 p = Partition3::fromSizes(n, n, n);
  auto side = [&](Vertex v) {
    int part = p.part(v);
    if (part == i) return inFirstHalf[v - i * n] ? 0 : 1;
    return part == nextPart(i) ? 0 : 1;
  };
  std::vector<Pair> edges;
  for (Vertex x = 0; x < 3 * n; ++x)
    for (Vertex y = x + 1; y < 3 * n; ++y)
      if (p.part(x) != p.part(y) && side(x) != side(y)) edges.push_back({x, y});
  return Graph::fromPairs(3 * n, std::move(edges));
}

bool matchesSplitTemplate(const ColoredGraph& g) {
  const int n = g.partition.size(0);
  for (int i = 0; i < 3; ++i)
    for (std::uint32_t split = 0; split < (std::uint32_t{1} << n); ++split) {
      std::vector<bool> first(n);
      for (int j = 0; j < n; ++j) first[j] = (split >> j) & 1U;
      if (splitTemplate(n, i, first) == g.graph) return true;
    }
  return false;
}

namespace {

struct TripartiteSearch {
  int n;
  std::vector<Pair> pairs;
  std::vector<std::vector<bool>> adj;
  std::int64_t best = -1;
  std::vector<std::vector<Pair>> hits;
  std::vector<Pair> current;
  std::uint64_t nodes = 0;
  Partition3 p;

  bool closesTriangle(Pair e) const {
    int third = 3 - p.part(e.u) - p.part(e.v);
    for (Vertex w = third * n; w < (third + 1) * n; ++w)
      if (adj[e.u][w] && adj[e.v][w]) return true;
    return false;
  }

  void run(std::size_t k) {
    ++nodes;
    if (static_cast<std::int64_t>(current.size() + (pairs.size() - k)) < best) return;
    if (k == pairs.size()) {
      auto size = static_cast<std::int64_t>(current.size());
      if (size > best) {
        best = size;
        hits.clear();
      }
      if (size == best) hits.push_back(current);
      return;
    }
    Pair e = pairs[k];
    if (!closesTriangle(e)) {
      adj[e.u][e.v] = adj[e.v][e.u] = true;
      current.push_back(e);
      run(k + 1);
      current.pop_back();
      adj[e.u][e.v] = adj[e.v][e.u] = false;
    }
    run(k + 1);
  }
};

}  // namespace

CensusReport censusTripartiteTriangleFree(int n, bool naive) {
  if (n < 1) throw TuranError(ErrorCode::InvalidArgument, "part size must be positive");
  if (n > 3 || (naive && n > 2))
    throw TuranError(ErrorCode::SizeLimitExceeded, naive ? "naive tripartite scan needs n <= 2" : "tripartite census needs n <= 3");
  CensusReport r;
  r.n = n;
  r.problem = "tripartite";
  r.method = naive ? "naive" : "branch-and-bound";
  r.reference = "2n^2";
  r.referenceValue = 2LL * n * n;

  Partition3 p = Partition3::fromSizes(n, n, n);
  std::vector<Pair> pairs;
  for (Vertex x = 0; x < 3 * n; ++x)
    for (Vertex y = x + 1; y < 3 * n; ++y)
      if (p.part(x) != p.part(y)) pairs.push_back({x, y});

  std::vector<std::vector<Pair>> hits;
  if (naive) {
    std::vector<std::array<int, 3>> triangles;
    auto idx = [&](Vertex x, Vertex y) {
      return static_cast<int>(std::find(pairs.begin(), pairs.end(), Pair::of(x, y)) - pairs.begin());
    };
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = n; b < 2 * n; ++b)
        for (Vertex c = 2 * n; c < 3 * n; ++c) triangles.push_back({idx(a, b), idx(a, c), idx(b, c)});
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::int64_t best = -1;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      bool ok = true;
      for (const auto& t : triangles)
        if (((mask >> t[0]) & (mask >> t[1]) & (mask >> t[2]) & 1U)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::int64_t size = __builtin_popcountll(mask);
      if (size > best) {
        best = size;
        hits.clear();
      }
      if (size == best) {
        std::vector<Pair> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
          if ((mask >> k) & 1U) edges.push_back(pairs[k]);
        hits.push_back(std::move(edges));
      }
    }
    r.optimum = best;
    r.nodes = total;
  } else {
    TripartiteSearch s{n, pairs, std::vector<std::vector<bool>>(3 * n, std::vector<bool>(3 * n, false)), -1, {}, {}, 0, p};
    s.run(0);
    r.optimum = s.best;
    r.nodes = s.nodes;
    hits = std::move(s.hits);
  }
  r.rawMaximizers = hits.size();
  std::vector<ColoredGraph> maximizers;
  bool allMatch = true;
  for (auto& edges : hits) {
    ColoredGraph g(Graph::fromPairs(3 * n, edges), p);
    if (!matchesSplitTemplate(g)) {
      allMatch = false;
      r.structureWitnesses.push_back({g});
    }
    maximizers.push_back(std::move(g));
  }
  r.structureMatches = allMatch;
  addColoredClasses(r, maximizers);
  r.referenceAttains = r.optimum == r.referenceValue;
  r.bounds.push_back({"at_most_2n2+n", 2LL * n * n + n, r.optimum <= 2LL * n * n + n});
  return r;
}

}  // namespace turanl2
