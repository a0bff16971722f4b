#include "turanl2/classification.hpp"

#include <algorithm>

#include "turanl2/constructions.hpp"
#include "turanl2/errors.hpp"

namespace turanl2 {

Family parseFamily(std::string_view name) {
  if (name == "B") return Family::B;
  if (name == "M") return Family::M;
  if (name == "B_int") return Family::BInt;
  if (name == "B_bi") return Family::BBi;
  if (name == "M_tri") return Family::MTri;
  if (name == "M_bi") return Family::MBi;
  throw TuranError(ErrorCode::UnknownFamily, std::string(name));
}

const char* familyName(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::M: return "M";
    case Family::BInt: return "B_int";
    case Family::BBi: return "B_bi";
    case Family::MTri: return "M_tri";
    case Family::MBi: return "M_bi";
  }
  return "?";
}

const std::vector<Triple>& EdgeClassification::family(Family f) const {
  switch (f) {
    case Family::B: return bad;
    case Family::M: return missing;
    case Family::BInt: return badInternal;
    case Family::BBi: return badBipartite;
    case Family::MTri: return missingTransversal;
    case Family::MBi: return missingBipartite;
  }
  throw TuranError(ErrorCode::UnknownFamily, "family id");
}

EdgeClassification classifyEdges(const ThreeGraph& h, const Partition3& p) {
  if (h.n() != p.n())
    throw TuranError(ErrorCode::PartitionMismatch, "graph has " + std::to_string(h.n()) +
                                                       " vertices, partition covers " + std::to_string(p.n()));
  EdgeClassification ec;
  ec.n = h.n();
  for (const auto& t : h.edges()) {
    if (isCTriple(p, t)) continue;
    ec.bad.push_back(t);
    bool internal = p.part(t.a) == p.part(t.b) && p.part(t.b) == p.part(t.c);
    (internal ? ec.badInternal : ec.badBipartite).push_back(t);
  }
  const int n = h.n();
  for (Vertex z = 2; z < n; ++z)
    for (Vertex y = 1; y < z; ++y)
      for (Vertex x = 0; x < y; ++x) {
        Triple t{x, y, z};
        if (!isCTriple(p, t) || h.contains(t)) continue;
        ec.missing.push_back(t);
        bool transversal = p.part(x) != p.part(y) && p.part(y) != p.part(z) && p.part(x) != p.part(z);
        (transversal ? ec.missingTransversal : ec.missingBipartite).push_back(t);
      }
  std::sort(ec.missing.begin(), ec.missing.end());
  std::sort(ec.missingTransversal.begin(), ec.missingTransversal.end());
  std::sort(ec.missingBipartite.begin(), ec.missingBipartite.end());
  return ec;
}

FamilyStats familyStats(const EdgeClassification& ec, Family f) {
  FamilyStats s;
  s.graph = ThreeGraph(ec.n, ec.family(f));
  std::vector<int> deg(ec.n, 0);
  for (const auto& t : s.graph.edges()) {
    ++deg[t.a];
    ++deg[t.b];
    ++deg[t.c];
  }
  if (!deg.empty()) s.maxVertexDegree = *std::max_element(deg.begin(), deg.end());
  CodegreeTable d(s.graph);
  for (Vertex x = 0; x < ec.n; ++x)
    for (Vertex y = x + 1; y < ec.n; ++y) s.maxPairCodegree = std::max(s.maxPairCodegree, d(x, y));
  return s;
}

std::int64_t intersectionSize(const ThreeGraph& h, const Partition3& p) {
  if (h.n() != p.n()) throw TuranError(ErrorCode::PartitionMismatch, "partition size differs from graph");
  return std::count_if(h.edges().begin(), h.edges().end(), [&](const Triple& t) { return isCTriple(p, t); });
}

namespace {

bool cProfile(int pa, int pb, int pc) {
  std::array<int, 3> k{0, 0, 0};
  ++k[pa];
  ++k[pb];
  ++k[pc];
  if (k[0] == 1 && k[1] == 1) return true;
  for (int i = 0; i < 3; ++i)
    if (k[i] == 2 && k[nextPart(i)] == 1) return true;
  return false;
}

struct ExhaustiveSearch {
  int n;
  std::vector<std::vector<Triple>> byTop;  // edges grouped by largest vertex
  std::vector<std::int64_t> remainingAfter;
  std::vector<int> assign, bestAssign;
  std::int64_t best = -1;

  void run(int v, std::int64_t current) {
    if (v == n) {
      if (current > best) {
        best = current;
        bestAssign = assign;
      }
      return;
    }
    for (int part = 0; part < 3; ++part) {
      assign[v] = part;
      std::int64_t gained = 0;
      for (const auto& t : byTop[v])
        if (cProfile(assign[t.a], assign[t.b], part)) ++gained;
      if (best >= 0 && current + gained + remainingAfter[v] <= best) continue;
      run(v + 1, current + gained);
    }
  }
};

}  // namespace

PartitionResult optimizePartitionExhaustive(const ThreeGraph& h, int maxN) {
  if (h.n() > maxN)
    throw TuranError(ErrorCode::SizeLimitExceeded,
                     "exhaustive partition search needs n <= " + std::to_string(maxN));
  ExhaustiveSearch s;
  s.n = h.n();
  s.byTop.resize(s.n);
  for (const auto& t : h.edges()) s.byTop[t.c].push_back(t);
  s.remainingAfter.assign(s.n, 0);
  for (int v = s.n - 2; v >= 0; --v)
    s.remainingAfter[v] = s.remainingAfter[v + 1] + static_cast<std::int64_t>(s.byTop[v + 1].size());
  s.assign.assign(s.n, 0);
  s.run(0, 0);
  if (s.n == 0) s.best = 0;
  PartitionResult r{Partition3(s.bestAssign), s.best, 0};
  return r;
}

PartitionResult optimizePartitionMoves(const ThreeGraph& h, std::optional<Partition3> start) {
  const int n = h.n();
  std::vector<int> parts = start ? start->parts() : Partition3::balanced(n).parts();
  if (static_cast<int>(parts.size()) != n) throw TuranError(ErrorCode::PartitionMismatch, "start partition size");
  std::vector<std::vector<Triple>> incident(n);
  for (const auto& t : h.edges()) {
    incident[t.a].push_back(t);
    incident[t.b].push_back(t);
    incident[t.c].push_back(t);
  }
  auto countAt = [&](Vertex v, int part) {
    int c = 0;
    for (const auto& t : incident[v]) {
      int pa = t.a == v ? part : parts[t.a];
      int pb = t.b == v ? part : parts[t.b];
      int pc = t.c == v ? part : parts[t.c];
      if (cProfile(pa, pb, pc)) ++c;
    }
    return c;
  };
  int moves = 0, idle = 0;
  for (Vertex v = 0; n > 0 && idle < n; v = (v + 1) % n) {
    int here = countAt(v, parts[v]);
    bool moved = false;
    for (int part = 0; part < 3 && !moved; ++part) {
      if (part == parts[v]) continue;
      if (countAt(v, part) > here) {
        parts[v] = part;
        moved = true;
      }
    }
    if (moved) {
      ++moves;
      idle = 0;
    } else {
      ++idle;
    }
  }
  Partition3 p(parts);
  return {p, intersectionSize(h, p), moves};
}

MoveInequality linkMoveInequality(const ThreeGraph& h, const Partition3& p, Vertex v) {
  checkVertex(h.n(), v);
  Graph l = link(h, v);
  int i = p.part(v), j = nextPart(i), k = nextPart(j);
  std::array<std::array<int, 3>, 3> count{};
  for (const auto& e : l.edges()) {
    int a = p.part(e.u), b = p.part(e.v);
    ++count[a][b];
    if (a != b) ++count[b][a];
  }
  MoveInequality m;
  m.v = v;
  m.lhsA = count[i][j] + count[k][k];
  m.rhsA = count[i][k] + count[i][i];
  m.lhsB = count[j][k] + count[k][k];
  m.rhsB = count[i][k] + count[j][j];
  return m;
}

Thresholds::Thresholds(Rational xi) : xi_(std::move(xi)) {
  if (xi_ <= 0) throw TuranError(ErrorCode::InvalidArgument, "xi must be positive");
  BigInt p = numerator(xi_), q = denominator(xi_);
  BigInt rp = boost::multiprecision::sqrt(p), rq = boost::multiprecision::sqrt(q);
  if (rp * rp == p && rq * rq == q) {
    sqrt_ = Rational(rp) / Rational(rq);
    lo_ = hi_ = *sqrt_;
    return;
  }
  BigInt scale = BigInt(1) << 64;
  BigInt radicand = p * q * scale * scale;
  BigInt s = boost::multiprecision::sqrt(radicand);
  lo_ = Rational(s) / Rational(q * scale);
  hi_ = Rational(s + 1) / Rational(q * scale);
}

bool Checklist::allPass() const {
  return std::all_of(items.begin(), items.end(), [](const ChecklistItem& i) { return i.pass; });
}

namespace {

int maxDegree(int n, const std::vector<Triple>& edges) {
  std::vector<int> deg(n, 0);
  for (const auto& t : edges) {
    ++deg[t.a];
    ++deg[t.b];
    ++deg[t.c];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int pairCodegree(const std::vector<Triple>& edges, Pair e) {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Triple& t) { return t.contains(e); }));
}

void commonItems(Checklist& c, const Partition3& p, const EdgeClassification& ec, const Rational& xi) {
  const Rational n = p.n();
  Rational spread = 0;
  for (int i = 0; i < 3; ++i) spread = std::max(spread, absValue(Rational(p.size(i)) - n / 3));
  c.items.push_back({"i", "max |V_i - n/3| <= xi n", spread, xi * n, spread <= xi * n});
  Rational delta = std::max(maxDegree(ec.n, ec.missing), maxDegree(ec.n, ec.bad));
  c.items.push_back({"ii", "max(Delta(M), Delta(B)) <= xi n^2", delta, xi * n * n, delta <= xi * n * n});
}

void requireShadow(const ThreeGraph& h, Pair e) {
  if (codegree(h, e) == 0)
    throw TuranError(ErrorCode::EdgeNotInShadow,
                     "pair " + std::to_string(e.u) + "," + std::to_string(e.v) + " is in no edge");
}

}  // namespace

Checklist checkPhaseOneHypotheses(const ThreeGraph& h, const Partition3& p, Pair eStar, const Thresholds& t) {
  return checkPhaseOneHypotheses(h, p, classifyEdges(h, p), eStar, t);
}

Checklist checkPhaseOneHypotheses(const ThreeGraph& h, const Partition3& p, const EdgeClassification& ec,
                                  Pair eStar, const Thresholds& t) {
  checkPair(h.n(), eStar);
  if (!isInternalPair(p, eStar)) throw TuranError(ErrorCode::EdgeNotInternal, "pair crosses two parts");
  requireShadow(h, eStar);
  const Rational& xi = t.xi();
  const Rational n = h.n();
  Rational dM = pairCodegree(ec.missing, eStar);
  Rational dB = pairCodegree(ec.bad, eStar);
  Rational dBbi = pairCodegree(ec.badBipartite, eStar);
  Checklist c;
  commonItems(c, p, ec, xi);
  Rational rhs3 = 47 * 47 * xi * n * n;
  c.items.push_back({"iii", "d_M(e*)^2 >= 47^2 xi n^2", dM * dM, rhs3, dM * dM >= rhs3});
  c.items.push_back({"iv", "d_M(e*) >= d_B(e*) - xi n", dM, dB - xi * n, dM >= dB - xi * n});
  c.items.push_back({"v", "d_Bbi(e*) <= xi n", dBbi, xi * n, dBbi <= xi * n});
  return c;
}

Checklist checkPhaseTwoHypotheses(const ThreeGraph& h, const Partition3& p, Pair eStar, const Thresholds& t) {
  return checkPhaseTwoHypotheses(h, p, classifyEdges(h, p), eStar, t);
}

Checklist checkPhaseTwoHypotheses(const ThreeGraph& h, const Partition3& p, const EdgeClassification& ec,
                                  Pair eStar, const Thresholds& t) {
  checkPair(h.n(), eStar);
  if (isInternalPair(p, eStar)) throw TuranError(ErrorCode::EdgeNotCrossing, "pair lies inside one part");
  requireShadow(h, eStar);
  const Rational& xi = t.xi();
  const Rational n = h.n();
  Rational dT = pairCodegree(ec.missingTransversal, eStar);
  Rational dB = pairCodegree(ec.bad, eStar);
  Checklist c;
  commonItems(c, p, ec, xi);
  Rational rhs3 = 90 * 90 * xi * n * n;
  c.items.push_back({"iii", "d_Mtri(e*)^2 >= 90^2 xi n^2", dT * dT, rhs3, dT * dT >= rhs3});
  c.items.push_back({"iv", "d_Mtri(e*) >= d_B(e*) - xi n", dT, dB - xi * n, dT >= dB - xi * n});
  return c;
}

}  // namespace turanl2
