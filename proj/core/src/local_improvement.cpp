#include "turanl2/local_improvement.hpp"

#include <algorithm>
#include <set>

#include "turanl2/constructions.hpp"
#include "turanl2/errors.hpp"

namespace turanl2 {

const char* phaseName(Phase p) { return p == Phase::One ? "one" : "two"; }

std::vector<Pair> DeltaReport::changeSet() const {
  std::vector<Pair> out{eStar};
  for (const auto* s : {&s1, &s2, &s3, &s2a, &s2b}) out.insert(out.end(), s->begin(), s->end());
  std::sort(out.begin(), out.end());
  return out;
}

ToggleResult applyToggle(const ThreeGraph& h, const Partition3& p, Pair eStar, Phase phase) {
  if (h.n() != p.n()) throw TuranError(ErrorCode::PartitionMismatch, "partition size differs from graph");
  checkPair(h.n(), eStar);
  const bool internal = isInternalPair(p, eStar);
  if (internal != (phase == Phase::One))
    throw TuranError(ErrorCode::EdgePhaseMismatch, std::string("phase ") + phaseName(phase) + " needs " +
                                                       (phase == Phase::One ? "an internal" : "a crossing") + " pair");

  DeltaReport r;
  r.eStar = eStar;
  r.phase = phase;
  Vertex u1 = eStar.u, u2 = eStar.v;
  int i = p.part(u1);
  if (!internal && p.part(u2) != nextPart(i)) {
    std::swap(u1, u2);
    i = p.part(u1);
  }

  std::vector<Vertex> nb, nm;
  for (Vertex w = 0; w < h.n(); ++w) {
    if (w == u1 || w == u2) continue;
    Triple t = Triple::of(u1, u2, w);
    bool present = h.contains(t);
    int pw = p.part(w);
    bool inC = isCTriple(p, t);
    if (present && !inC) nb.push_back(w);
    if (!present && inC) {
      // Phase two adds only transversal triples.
      if (phase == Phase::One || pw == nextPart(nextPart(i))) nm.push_back(w);
    }
  }

  CodegreeTable d(h);
  r.l2Before = l2Norm(h);
  r.codegreeBefore = d(eStar);
  r.codegreeAfter = r.codegreeBefore - static_cast<int>(nb.size()) + static_cast<int>(nm.size());
  r.eStarTerm = static_cast<std::int64_t>(r.codegreeAfter) * r.codegreeAfter -
                static_cast<std::int64_t>(r.codegreeBefore) * r.codegreeBefore;

  for (Vertex w : nb) r.removed.push_back(Triple::of(u1, u2, w));
  for (Vertex w : nm) r.added.push_back(Triple::of(u1, u2, w));

  auto up = [&](Pair e) { return 2LL * d(e) + 1; };
  auto down = [&](Pair e) { return -2LL * d(e) + 1; };
  for (Vertex w : nm) {
    r.s1.push_back(Pair::of(u1, w));
    r.s1.push_back(Pair::of(u2, w));
  }
  for (const auto& e : r.s1) r.s1Term += up(e);
  if (phase == Phase::One) {
    for (Vertex w : nb) {
      auto& target = p.part(w) == i ? r.s2 : r.s3;
      target.push_back(Pair::of(u1, w));
      target.push_back(Pair::of(u2, w));
    }
    for (const auto& e : r.s2) r.s2Term += down(e);
    for (const auto& e : r.s3) r.s3Term += down(e);
  } else {
    for (Vertex w : nb) {
      r.s2a.push_back(Pair::of(u1, w));
      r.s2b.push_back(Pair::of(u2, w));
    }
    for (const auto& e : r.s2a) r.s2Term += down(e);
    for (const auto& e : r.s2b) r.s3Term += down(e);
  }
  r.delta = r.eStarTerm + r.s1Term + r.s2Term + r.s3Term;

  std::vector<Triple> edges;
  edges.reserve(h.size() + r.added.size());
  std::set<Triple> drop(r.removed.begin(), r.removed.end());
  for (const auto& t : h.edges())
    if (!drop.count(t)) edges.push_back(t);
  edges.insert(edges.end(), r.added.begin(), r.added.end());
  ThreeGraph after(h.n(), std::move(edges));
  r.l2After = l2Norm(after);
  return {std::move(after), std::move(r)};
}

IncreaseReport verifyToggleIncrease(const ThreeGraph& h, const Partition3& p, Pair eStar, Phase phase,
                                    const Thresholds& t) {
  IncreaseReport out;
  out.hypotheses = phase == Phase::One ? checkPhaseOneHypotheses(h, p, eStar, t)
                                       : checkPhaseTwoHypotheses(h, p, eStar, t);
  out.claimed = out.hypotheses.allPass();
  out.delta = applyToggle(h, p, eStar, phase).report.delta;
  out.pass = !out.claimed || out.delta > 0;
  if (!out.claimed)
    out.outcome = "hypotheses unmet, no claim";
  else
    out.outcome = out.pass ? "increase confirmed" : "counterexample";
  return out;
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

int pairCount(const std::vector<Triple>& edges, Pair e) {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Triple& t) { return t.contains(e); }));
}

Vertex pickFrom(const std::vector<Vertex>& vs, std::mt19937_64& rng) {
  return vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
}

}  // namespace

PlantedInstance plantInstance(int n, Phase phase, std::mt19937_64& rng) {
  if (n < 6) throw TuranError(ErrorCode::InvalidArgument, "planted instances need n >= 6");
  PlantedInstance out;
  out.phase = phase;
  out.partition = Partition3::balanced(n);
  const Partition3& p = out.partition;
  auto c = buildC({p.size(0), p.size(1), p.size(2)});
  std::set<Triple> dropped;
  std::vector<Triple> extra;

  int i = std::uniform_int_distribution<int>(0, 2)(rng);
  auto home = p.members(i), next = p.members(nextPart(i)), prev = p.members(prevPart(i));
  Vertex u1 = pickFrom(home, rng), u2;
  if (phase == Phase::One) {
    do u2 = pickFrom(home, rng);
    while (u2 == u1);
  } else {
    u2 = pickFrom(next, rng);
  }
  out.eStar = Pair::of(u1, u2);

  // Remove every construction edge at eStar of the kind the toggle restores.
  const auto& restore = phase == Phase::One ? next : prev;
  for (Vertex w : restore) dropped.insert(Triple::of(u1, u2, w));

  // Bad edges at eStar; at least one so eStar stays in the shadow.
  std::vector<Vertex> badThird;
  if (phase == Phase::One) {
    for (Vertex w : home)
      if (w != u1 && w != u2) badThird.push_back(w);
    int internalBad = std::uniform_int_distribution<int>(1, 2)(rng);
    std::shuffle(badThird.begin(), badThird.end(), rng);
    badThird.resize(std::min<std::size_t>(badThird.size(), internalBad));
    if (std::uniform_int_distribution<int>(0, 1)(rng)) badThird.push_back(pickFrom(prev, rng));
  } else {
    for (Vertex w : next)
      if (w != u2) badThird.push_back(w);
    std::shuffle(badThird.begin(), badThird.end(), rng);
    badThird.resize(std::min<std::size_t>(badThird.size(), std::uniform_int_distribution<int>(1, 2)(rng)));
  }
  for (Vertex w : badThird) extra.push_back(Triple::of(u1, u2, w));

  // Noise away from eStar.
  std::uniform_int_distribution<int> vertex(0, n - 1);
  int drops = std::uniform_int_distribution<int>(0, n / 2)(rng);
  int adds = std::uniform_int_distribution<int>(0, n / 2)(rng);
  for (int k = 0; k < drops + adds; ++k) {
    Vertex a = vertex(rng), b = vertex(rng), w = vertex(rng);
    if (a == b || b == w || a == w) continue;
    Triple t = Triple::of(a, b, w);
    if (t.contains(out.eStar)) continue;
    if (k < drops) {
      dropped.insert(t);
    } else if (!isCTriple(p, t)) {
      extra.push_back(t);
    }
  }
  std::vector<Triple> edges;
  for (const auto& t : c.graph.edges())
    if (!dropped.count(t)) edges.push_back(t);
  edges.insert(edges.end(), extra.begin(), extra.end());
  out.graph = ThreeGraph(n, std::move(edges));

  auto ec = classifyEdges(out.graph, p);
  const Rational nn = n;
  Rational xi = Rational(1) / nn;
  for (int k = 0; k < 3; ++k) xi = std::max(xi, absValue(Rational(p.size(k)) - nn / 3) / nn);
  xi = std::max(xi, Rational(std::max(maxDegree(n, ec.missing), maxDegree(n, ec.bad))) / (nn * nn));
  int dB = pairCount(ec.bad, out.eStar);
  int dM = pairCount(phase == Phase::One ? ec.missing : ec.missingTransversal, out.eStar);
  xi = std::max(xi, Rational(dB - dM) / nn);
  if (phase == Phase::One) xi = std::max(xi, Rational(pairCount(ec.badBipartite, out.eStar)) / nn);
  out.xi = xi;
  return out;
}

Queues buildQueues(const ThreeGraph& h, const Partition3& p, const Rational& delta4,
                   std::optional<std::uint64_t> seed) {
  if (delta4 <= 0 || delta4 >= 1) throw TuranError(ErrorCode::InvalidArgument, "delta4 must lie in (0,1)");
  auto ec = classifyEdges(h, p);
  const int n = h.n();
  CodegreeTable dM(ThreeGraph(n, ec.missing));
  CodegreeTable dT(ThreeGraph(n, ec.missingTransversal));
  Queues q;
  const Rational bound = delta4 * n;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      Pair e{x, y};
      if (isInternalPair(p, e)) {
        if (Rational(dM(e)) >= bound) q.internal.push_back(e);
      } else if (10 * dT(e) >= n) {
        q.crossing.push_back(e);
      }
    }
  for (const auto& t : ec.badBipartite) {
    // Two vertices share a part; the third sits in the previous part.
    Pair inner = p.part(t.a) == p.part(t.b) ? Pair{t.a, t.b} : p.part(t.a) == p.part(t.c) ? Pair{t.a, t.c} : Pair{t.b, t.c};
    if (Rational(dM(inner)) <= bound) q.tildeB.push_back(t);
  }
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(q.internal.begin(), q.internal.end(), rng);
    std::shuffle(q.crossing.begin(), q.crossing.end(), rng);
  }
  return q;
}

DriverTrace twoPhaseDriver(const ThreeGraph& h, const Partition3& p, const Rational& delta4,
                           std::optional<std::uint64_t> seed) {
  DriverTrace trace;
  trace.queues = buildQueues(h, p, delta4, seed);
  trace.inputK43Free = !containsK43(h);

  auto initial = classifyEdges(h, p);
  std::set<Pair> queued(trace.queues.internal.begin(), trace.queues.internal.end());
  queued.insert(trace.queues.crossing.begin(), trace.queues.crossing.end());
  trace.everyBadCovered = std::all_of(initial.bad.begin(), initial.bad.end(), [&](const Triple& t) {
    auto ps = t.pairs();
    return std::any_of(ps.begin(), ps.end(), [&](Pair e) { return queued.count(e) > 0; });
  });

  ThreeGraph current = h;
  trace.l2Trajectory.push_back(l2Norm(current));
  auto run = [&](const std::vector<Pair>& queue, Phase phase) {
    for (Pair e : queue) {
      auto [next, report] = applyToggle(current, p, e, phase);
      DriverStep step;
      for (const auto& t : report.removed)
        if (!current.contains(t) || isCTriple(p, t)) step.monotone = false;
      for (const auto& t : report.added) {
        bool transversal = p.part(t.a) != p.part(t.b) && p.part(t.b) != p.part(t.c) && p.part(t.a) != p.part(t.c);
        if (current.contains(t) || !isCTriple(p, t) || (phase == Phase::Two && !transversal)) step.monotone = false;
      }
      trace.monotone = trace.monotone && step.monotone;
      step.report = std::move(report);
      current = std::move(next);
      if (trace.inputK43Free && !trace.k43Created && containsK43(current)) trace.k43Created = true;
      trace.l2Trajectory.push_back(step.report.l2After);
      trace.steps.push_back(std::move(step));
    }
  };
  run(trace.queues.internal, Phase::One);
  run(trace.queues.crossing, Phase::Two);

  trace.leftoverBad = classifyEdges(current, p).bad;
  trace.finalGraph = std::move(current);
  return trace;
}

}  // namespace turanl2
