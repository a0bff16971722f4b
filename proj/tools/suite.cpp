#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <tuple>
#include <set>

#include "turanl2/census.hpp"
#include "turanl2/classification.hpp"
#include "turanl2/constructions.hpp"
#include "turanl2/errors.hpp"
#include "turanl2/inequality_lab.hpp"
#include "turanl2/io.hpp"
#include "turanl2/local_improvement.hpp"
#include "turanl2/parallel.hpp"

namespace turanl2::suite {
namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int uniformInt(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string str(std::int64_t x) { return std::to_string(x); }

// ---------------------------------------------------------------- 1

Result formulaOracle(const Options&) {
  Result r;
  std::int64_t checked = 0;
  Json mismatches = Json::array();
  for (int n = 0; n <= 40; ++n)
    for (const auto& c : compositions(n)) {
      ++checked;
      Rational closed = cL2Closed(c);
      std::int64_t direct = l2Norm(buildC(c).graph);
      if (closed != direct && mismatches.size() < 10)
        mismatches.push_back({{"composition", toJson(c)}, {"closed", toJson(closed)}, {"direct", str(direct)}});
    }
  r.pass = mismatches.empty();
  r.detail = str(checked) + " compositions, " + str(static_cast<std::int64_t>(mismatches.size())) + " mismatches";
  r.data = {{"compositions", checked}, {"mismatches", mismatches}};
  return r;
}

// ---------------------------------------------------------------- 2

Result identitySuite(const Options& o) {
  Result r;
  const int trials = 10000;
  std::vector<int> bad(trials, 0);
  parallelFor(trials, o.workers, [&](std::size_t t) {
    std::mt19937_64 rng(o.seed + 2 * 1000003 + t);
    int n = uniformInt(rng, 0, 10);
    double density = std::uniform_real_distribution<double>(0, 1)(rng);
    ThreeGraph h = randomThreeGraph(n, density, rng);
    CodegreeTable d(h);
    std::int64_t sum = 0;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) sum += d(x, y);
    bool ok = l2Norm(h) == 2 * countS2(h) + 3 * static_cast<std::int64_t>(h.size()) &&
              sum == 3 * static_cast<std::int64_t>(h.size());
    bad[t] = ok ? 0 : 1;
  });
  auto violations = std::count(bad.begin(), bad.end(), 1);
  r.pass = violations == 0;
  r.detail = str(trials) + " random 3-graphs, " + str(violations) + " violations";
  r.data = {{"trials", trials}, {"violations", violations}};
  return r;
}

// ---------------------------------------------------------------- 3

Result degreeConsistency(const Options& o) {
  Result r;
  const int trials = 2000;
  std::vector<int> bad(trials, 0);
  parallelFor(trials, o.workers, [&](std::size_t t) {
    std::mt19937_64 rng(o.seed + 3 * 1000003 + t);
    int n = uniformInt(rng, 1, 12);
    double density = std::uniform_real_distribution<double>(0, 1)(rng);
    ThreeGraph h = randomThreeGraph(n, density, rng);
    Vertex v = uniformInt(rng, 0, n - 1);
    bad[t] = twoNormDegree(h, v) == l2Norm(h) - l2Norm(deleteVertex(h, v)) ? 0 : 1;
  });
  auto violations = std::count(bad.begin(), bad.end(), 1);
  r.pass = violations == 0;
  r.detail = str(trials) + " (H,v) pairs, " + str(violations) + " violations";
  r.data = {{"trials", trials}, {"violations", violations}};
  return r;
}

// ---------------------------------------------------------------- 4

Result balancedness(const Options&) {
  Result r;
  Json failing = Json::array();
  std::size_t gains = 0;
  for (int n = 6; n <= 30; ++n) {
    SweepReport s = balancednessSweep(n);
    gains += s.gains.size();
    if (!(s.maximizersNearBalanced && s.nearBalancedAttain && s.gainsPass())) failing.push_back(n);
  }
  r.pass = failing.empty();
  r.detail = "n = 6..30, " + std::to_string(gains) + " gain identities, failing n: " + failing.dump();
  r.data = {{"gain_checks", gains}, {"failing_n", failing}};
  return r;
}

// ---------------------------------------------------------------- 5

Result simplex(const Options& o) {
  Result r;
  auto t0 = Clock::now();
  SimplexGridReport grid = verifySimplexInequality(200, o.workers);
  bool smallOk = true;
  for (int d = 1; d <= 50; ++d) {
    auto g = verifySimplexInequality(d, o.workers);
    bool zeroOk = d % 3 == 0 ? g.zeros.size() == 1 : g.zeros.empty();
    if (!g.pass() || !zeroOk) smallOk = false;
  }
  IntervalCertificate cert = certifySimplexInequality(o.intervalWidth);
  bool fast = secondsSince(t0) < 300;
  r.pass = grid.pass() && smallOk && cert.certified() && fast;
  r.detail = "d=200 worst margin " + toString(grid.worstMargin) + " at (" + std::to_string(grid.argmin[0]) + "," +
             std::to_string(grid.argmin[1]) + "," + std::to_string(grid.argmin[2]) + "); d<=50 zeros only at barycenter: " +
             (smallOk ? "yes" : "no") + "; interval boxes " + std::to_string(cert.boxes) + ", undecided " +
             std::to_string(cert.undecided.size());
  r.data = {{"grid", toJson(grid)}, {"small_resolutions_ok", smallOk}, {"interval", toJson(cert)}, {"within_time_limit", fast}};
  return r;
}

// ---------------------------------------------------------------- 6

Result toggleExactness(const Options& o) {
  Result r;
  const int trials = 5000;
  std::vector<int> bad(trials, 0);
  parallelFor(trials, o.workers, [&](std::size_t t) {
    std::mt19937_64 rng(o.seed + 6 * 1000003 + t);
    int n = uniformInt(rng, 4, 30);
    Partition3 p = randomPartition(n, rng);
    ThreeGraph h;
    if (t % 2 == 0) {
      h = randomThreeGraph(n, std::uniform_real_distribution<double>(0, 0.6)(rng), rng);
    } else {
      // Perturbed C[P].
      std::vector<Triple> edges;
      double keep = std::uniform_real_distribution<double>(0.5, 1)(rng);
      double noise = std::uniform_real_distribution<double>(0, 0.1)(rng);
      std::bernoulli_distribution k(keep), z(noise);
      for (std::int64_t rank = 0; rank < tripleCount(n); ++rank) {
        Triple tr = tripleFromRank(rank);
        if (isCTriple(p, tr) ? k(rng) : z(rng)) edges.push_back(tr);
      }
      h = ThreeGraph(n, std::move(edges));
    }
    Vertex a = uniformInt(rng, 0, n - 1), b = uniformInt(rng, 0, n - 2);
    if (b >= a) ++b;
    Pair e = Pair::of(a, b);
    Phase phase = isInternalPair(p, e) ? Phase::One : Phase::Two;
    ToggleResult res = applyToggle(h, p, e, phase);
    bool ok = res.report.reconciles() && res.report.delta == l2Norm(res.graph) - l2Norm(h);
    CodegreeTable before(h), after(res.graph);
    std::set<Pair> changed;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y)
        if (before(x, y) != after(x, y)) changed.insert({x, y});
    auto cs = res.report.changeSet();
    std::set<Pair> expected(cs.begin(), cs.end());
    std::set<Pair> withStar = changed;
    withStar.insert(e);
    ok = ok && withStar == expected;
    bad[t] = ok ? 0 : 1;
  });
  auto violations = std::count(bad.begin(), bad.end(), 1);
  r.pass = violations == 0;
  r.detail = str(trials) + " toggles at n <= 30, " + str(violations) + " violations";
  r.data = {{"trials", trials}, {"violations", violations}};
  return r;
}

// ---------------------------------------------------------------- 7

struct ToggleTrial {
  IncreaseReport report;
  int n = 0;
  std::size_t index = 0;
};

PlantedInstance plantTrial(Phase phase, std::size_t t, const Options& o) {
  std::mt19937_64 rng(o.seed + 7 * 1000003 + (phase == Phase::One ? 0 : 500009) + t);
  int n = uniformInt(rng, 60, 120);
  return plantInstance(n, phase, rng);
}

std::vector<ToggleTrial> runToggleTrialsUncached(Phase phase, int trials, const Options& o) {
  std::vector<ToggleTrial> out(trials);
  parallelFor(trials, o.workers, [&](std::size_t t) {
    PlantedInstance inst = plantTrial(phase, t, o);
    out[t].n = inst.graph.n();
    out[t].index = t;
    out[t].report = verifyToggleIncrease(inst.graph, inst.partition, inst.eStar, phase, Thresholds(inst.xi));
  });
  return out;
}

// The supplementary line reuses the trials of criterion 7.
const std::vector<ToggleTrial>& runToggleTrials(Phase phase, int trials, const Options& o) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::uint64_t>, std::vector<ToggleTrial>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(static_cast<int>(phase), trials, o.seed);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, runToggleTrialsUncached(phase, trials, o)).first;
  return it->second;
}

void writeCounterexample(const Options& o, Phase phase, const ToggleTrial& trial) {
  PlantedInstance inst = plantTrial(phase, trial.index, o);
  std::error_code ec;
  std::filesystem::create_directories(o.artifactDir, ec);
  std::string stem = std::string("counterexample_phase_") + phaseName(phase);
  saveH3(o.artifactDir / (stem + ".h3"), inst.graph);
  saveP3(o.artifactDir / (stem + ".p3"), inst.partition);
  Json j = toJson(trial.report);
  j["trial"] = trial.index;
  j["e_star"] = toJson(inst.eStar);
  j["xi"] = toJson(inst.xi);
  std::ofstream(o.artifactDir / (stem + ".json")) << j.dump(2) << "\n";
}

Result toggleIncrease(const Options& o) {
  Result r;
  r.pass = true;
  Json phases = Json::object();
  std::string detail;
  for (Phase phase : {Phase::One, Phase::Two}) {
    const auto& trials = runToggleTrials(phase, 1000, o);
    int claimedPositive = 0, hypothesesHeld = 0, positive = 0;
    const ToggleTrial* firstFailure = nullptr;
    for (const auto& t : trials) {
      hypothesesHeld += t.report.claimed;
      positive += t.report.delta > 0;
      bool ok = t.report.claimed && t.report.delta > 0;
      claimedPositive += ok;
      if (!ok && !firstFailure) firstFailure = &t;
    }
    if (firstFailure) writeCounterexample(o, phase, *firstFailure);
    bool pass = claimedPositive == 1000;
    r.pass = r.pass && pass;
    Json failed = Json::object();
    if (firstFailure)
      for (const auto& item : firstFailure->report.hypotheses.items)
        if (!item.pass) failed[item.id] = {{"lhs", toJson(item.lhs)}, {"rhs", toJson(item.rhs)}};
    // Delta(M) >= d(e*) turns (ii)+(iii) into d(e*) >= c^2, and d(e*) <= n - 2.
    const int c = phase == Phase::One ? 47 : 90;
    phases[phaseName(phase)] = {{"trials", 1000},
                                {"smallest_n_hypotheses_allow", c * c + 2},
                                {"hypotheses_held", hypothesesHeld},
                                {"delta_positive_with_hypotheses", claimedPositive},
                                {"delta_positive", positive},
                                {"first_failure_unmet_items", failed}};
    detail += std::string(detail.empty() ? "" : "; ") + "phase " + phaseName(phase) + ": " +
              std::to_string(claimedPositive) + "/1000 (hypotheses held in " + std::to_string(hypothesesHeld) +
              ", delta > 0 in " + std::to_string(positive) + ")";
  }
  r.detail = detail;
  r.data = phases;
  return r;
}

// ---------------------------------------------------------------- 8

struct PlantedDriverCase {
  ThreeGraph graph;
  Partition3 partition;
  int planted = 0;
};

PlantedDriverCase plantDriverCase(int n, std::mt19937_64& rng) {
  auto c = buildBalancedC(n);
  const Partition3& p = c.partition;
  std::set<Triple> edges(c.graph.edges().begin(), c.graph.edges().end());
  auto pick = [&](int part) {
    auto m = p.members(part);
    return m[uniformInt(rng, 0, static_cast<int>(m.size()) - 1)];
  };
  int count = uniformInt(rng, 1, 5);
  for (int k = 0; k < count; ++k) {
    int i = uniformInt(rng, 0, 2);
    Vertex u = pick(i), v = pick(i);
    while (v == u) v = pick(i);
    if (p.size(i) >= 3 && rng() % 2 == 0) {
      // Internal bad edge; one missing edge at {u,v} puts it in the internal queue.
      Vertex w = pick(i);
      while (w == u || w == v) w = pick(i);
      edges.insert(Triple::of(u, v, w));
      edges.erase(Triple::of(u, v, pick(nextPart(i))));
    } else {
      // Bipartite bad edge {u,v,x}; missing transversals at {x,u} put it in the crossing queue.
      Vertex x = pick(prevPart(i));
      edges.insert(Triple::of(u, v, x));
      auto far = p.members(nextPart(i));
      std::shuffle(far.begin(), far.end(), rng);
      for (int j = 0; j < (n + 9) / 10; ++j) edges.erase(Triple::of(x, u, far[j]));
    }
  }
  return {ThreeGraph(n, std::vector<Triple>(edges.begin(), edges.end())), p, count};
}

Result driverSoundness(const Options& o) {
  Result r;
  const int perN = 30;
  Json cases = Json::array();
  int failures = 0, total = 0, uncovered = 0;
  for (int n : {6, 9, 12}) {
    std::vector<Json> rows(perN);
    std::vector<int> fail(perN, 0), unc(perN, 0);
    parallelFor(perN, o.workers, [&](std::size_t t) {
      std::mt19937_64 rng(o.seed + 8 * 1000003 + n * 1009 + t);
      auto c = plantDriverCase(n, rng);
      DriverTrace trace = twoPhaseDriver(c.graph, c.partition, Rational(1, 40), o.seed + t);
      bool ok = trace.everyBadCovered && trace.leftoverBad.empty() && trace.finalInsideC() && trace.monotone;
      fail[t] = ok ? 0 : 1;
      unc[t] = trace.everyBadCovered ? 0 : 1;
      rows[t] = {{"n", n},
                 {"planted", c.planted},
                 {"steps", trace.steps.size()},
                 {"bad_left", trace.leftoverBad.size()},
                 {"monotone", trace.monotone},
                 {"covered", trace.everyBadCovered}};
    });
    for (int t = 0; t < perN; ++t) {
      failures += fail[t];
      uncovered += unc[t];
      ++total;
      if (fail[t]) cases.push_back(rows[t]);
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(total) + " perturbed C_n (n in {6,9,12}), " + std::to_string(failures) + " failures";
  r.data = {{"cases", total}, {"failures", failures}, {"uncovered", uncovered}, {"failing_cases", cases}};
  return r;
}

// ---------------------------------------------------------------- 9

Result symmetrization(const Options& o) {
  Result r;
  const int trials = 500;
  std::vector<std::string> why(trials);
  parallelFor(trials, o.workers, [&](std::size_t t) {
    std::mt19937_64 rng(o.seed + 9 * 1000003 + t);
    int n = uniformInt(rng, 1, 12);
    ColoredGraph g = randomCyclicTriangleFree(n, rng);
    SymmetrizationResult res = locallySymmetrize(g);
    std::size_t edges = g.graph.size();
    for (const auto& s : res.steps) {
      if (s.edgesBefore != edges || s.edgesAfter < s.edgesBefore) why[t] = "edge count decreased";
      edges = s.edgesAfter;
    }
    if (res.graph.graph.size() < g.graph.size()) why[t] = "edge count decreased";
    if (!isCyclicTriangleFree(res.graph)) why[t] = "cyclic triangle created";
    if (!isLocallySymmetrized(res.graph)) why[t] = "not locally symmetrized";
    else if (!checkSymmetrizedFacts(res.graph).allPass()) why[t] = "fact check failed";
  });
  int failures = 0;
  std::map<std::string, int> reasons;
  for (const auto& w : why)
    if (!w.empty()) {
      ++failures;
      ++reasons[w];
    }
  r.pass = failures == 0;
  r.detail = std::to_string(trials) + " random colored graphs, " + std::to_string(failures) + " failures";
  r.data = {{"trials", trials}, {"failures", failures}, {"reasons", reasons}};
  return r;
}

// ---------------------------------------------------------------- 10

Result coloredMantel(const Options& o) {
  Result r;
  auto t0 = Clock::now();
  MantelCensusOptions mo;
  mo.workers = o.workers;
  CensusReport c = censusColoredMantel(2, MantelObjective::Edges, mo);
  bool fast = secondsSince(t0) < 10;
  r.pass = c.method == "exhaustive" && c.optimum <= 20 && c.optimum >= 9 && fast;
  r.detail = "n=2 optimum " + str(c.optimum) + " in [9, 20] over 2^15 graphs; " + std::to_string(c.extremalClasses) +
             " classes, " + std::to_string(c.extremalClassesRotation) + " up to rotation";
  r.data = {{"census", toJson(c)}, {"within_time_limit", fast}};
  r.data["census"].erase("extremal");
  return r;
}

// ---------------------------------------------------------------- 11

Result census(const Options& o) {
  Result r;
  bool ok = true;
  Json rows = Json::array();
  std::string detail;
  for (int n = 4; n <= 5; ++n) {
    K43CensusOptions naive;
    naive.naive = true;
    naive.workers = o.workers;
    auto a = censusK43(n);
    auto b = censusK43(n, naive);
    bool agree = a.optimum == b.optimum && a.extremalClasses == b.extremalClasses;
    ok = ok && agree && (n != 4 || a.optimum == 15);
    rows.push_back({{"n", n}, {"canonical", str(a.optimum)}, {"naive", str(b.optimum)}, {"agree", agree}});
    detail += "n=" + std::to_string(n) + " " + str(a.optimum) + (agree ? "=" : "!=") + str(b.optimum) + "; ";
  }
  for (int n = 6; n <= std::max(6, o.nMax); ++n) {
    auto c = censusK43(n);
    rows.push_back({{"n", n},
                    {"canonical", str(c.optimum)},
                    {"classes", c.extremalClasses},
                    {"reference", c.reference},
                    {"reference_attains", c.referenceAttains},
                    {"reference_unique", c.referenceUnique}});
    detail += "n=" + std::to_string(n) + " optimum " + str(c.optimum) + ", " + c.reference +
              (c.referenceAttains ? (c.referenceUnique ? " attains uniquely" : " attains") : " does not attain") + "; ";
  }
  detail.resize(detail.size() - 2);
  r.pass = ok;
  r.detail = detail;
  r.data = {{"rows", rows}};
  return r;
}

// ---------------------------------------------------------------- 12

Result tripartite(const Options&) {
  Result r;
  bool ok = true;
  Json rows = Json::array();
  std::string detail;
  for (int n = 1; n <= 2; ++n) {
    auto a = censusTripartiteTriangleFree(n, false);
    auto b = censusTripartiteTriangleFree(n, true);
    bool agree = a.optimum == b.optimum && a.rawMaximizers == b.rawMaximizers;
    bool bound = a.optimum <= 2LL * n * n + n;
    bool structure = *a.structureMatches || !a.structureWitnesses.empty();
    ok = ok && agree && bound && structure;
    rows.push_back({{"n", n},
                    {"search", str(a.optimum)},
                    {"scan", str(b.optimum)},
                    {"maximizers", a.rawMaximizers},
                    {"structure_matches", *a.structureMatches},
                    {"witnesses", a.structureWitnesses.size()}});
    detail += "n=" + std::to_string(n) + " " + str(a.optimum) + (agree ? "=" : "!=") + str(b.optimum) + " <= " +
              str(2LL * n * n + n) + (*a.structureMatches ? " split template" : " witness emitted") + "; ";
  }
  detail.resize(detail.size() - 2);
  r.pass = ok;
  r.detail = detail;
  r.data = {{"rows", rows}};
  return r;
}

}  // namespace

const char* criterionName(int id) {
  static const char* names[] = {"",
                                "formula-oracle",
                                "identity-suite",
                                "l2-degree-consistency",
                                "balancedness",
                                "simplex-inequality",
                                "toggle-exactness",
                                "toggle-increase",
                                "driver-soundness",
                                "symmetrization",
                                "colored-mantel",
                                "census-cross-validation",
                                "tripartite-oracle"};
  return id >= 1 && id <= kCriteria ? names[id] : "unknown";
}

Result runCriterion(int id, const Options& options) {
  Result r;
  switch (id) {
    case 1: r = formulaOracle(options); break;
    case 2: r = identitySuite(options); break;
    case 3: r = degreeConsistency(options); break;
    case 4: r = balancedness(options); break;
    case 5: r = simplex(options); break;
    case 6: r = toggleExactness(options); break;
    case 7: r = toggleIncrease(options); break;
    case 8: r = driverSoundness(options); break;
    case 9: r = symmetrization(options); break;
    case 10: r = coloredMantel(options); break;
    case 11: r = census(options); break;
    case 12: r = tripartite(options); break;
    default: throw TuranError(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
  }
  r.id = id;
  r.name = criterionName(id);
  return r;
}

Result runToggleDeltaSupplement(const Options& options) {
  Result r;
  r.id = 7;
  r.name = "toggle-delta-positive";
  r.pass = true;
  std::string detail;
  Json data = Json::object();
  for (Phase phase : {Phase::One, Phase::Two}) {
    const auto& trials = runToggleTrials(phase, 1000, options);
    int positive = 0;
    for (const auto& t : trials) positive += t.report.delta > 0;
    r.pass = r.pass && positive == 1000;
    data[phaseName(phase)] = positive;
    detail += std::string(detail.empty() ? "" : "; ") + "phase " + phaseName(phase) + ": delta > 0 in " +
              std::to_string(positive) + "/1000";
  }
  r.detail = detail + " (planted instances, hypotheses not required)";
  r.data = data;
  return r;
}

std::string formatLine(const Result& r) {
  return "criterion " + std::to_string(r.id) + " " + r.name + ": " + (r.pass ? "PASS" : "FAIL") + " | " + r.detail;
}

ThreeGraph randomThreeGraph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Triple> edges;
  for (std::int64_t r = 0; r < tripleCount(n); ++r)
    if (coin(rng)) edges.push_back(tripleFromRank(r));
  return ThreeGraph(n, std::move(edges));
}

Partition3 randomPartition(int n, std::mt19937_64& rng) {
  std::vector<int> colour(n);
  for (auto& c : colour) c = uniformInt(rng, 0, 2);
  return Partition3(std::move(colour));
}

ColoredGraph randomCyclicTriangleFree(int n, std::mt19937_64& rng) {
  Partition3 p = randomPartition(n, rng);
  std::vector<Pair> pairs;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) pairs.push_back({x, y});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(std::uniform_real_distribution<double>(0.3, 1)(rng));
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Pair> edges;
  for (const auto& e : pairs) {
    if (!keep(rng)) continue;
    bool closes = false;
    for (Vertex w = 0; w < n && !closes; ++w)
      if (adj[e.u][w] && adj[e.v][w] && isCyclicTriangleType(p.part(e.u), p.part(e.v), p.part(w))) closes = true;
    if (closes) continue;
    adj[e.u][e.v] = adj[e.v][e.u] = true;
    edges.push_back(e);
  }
  return ColoredGraph(Graph::fromPairs(n, std::move(edges)), p);
}

}  // namespace turanl2::suite
