#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "suite.hpp"
#include "turanl2/census.hpp"
#include "turanl2/classification.hpp"
#include "turanl2/constructions.hpp"
#include "turanl2/errors.hpp"
#include "turanl2/inequality_lab.hpp"
#include "turanl2/io.hpp"
#include "turanl2/local_improvement.hpp"
#include "turanl2/report_json.hpp"

using namespace turanl2;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string input;
  std::string partition;
  std::string output;
  std::uint64_t seed = suite::kDefaultSeed;
  bool seedGiven = false;
  unsigned workers = 0;
  bool json = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parseInts(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

Pair parseEdge(const std::string& text) {
  auto v = parseInts(text);
  if (v.size() != 2) throw UsageError("--edge needs two vertices a,b");
  return Pair::of(v[0], v[1]);
}

Phase parsePhase(const std::string& text) {
  if (text == "one" || text == "1") return Phase::One;
  if (text == "two" || text == "2") return Phase::Two;
  throw UsageError("--phase must be one or two");
}

Json header(const std::string& command, const Globals& g, bool randomized) {
  Json h = {{"tool", "turanl2"}, {"version", "0.1.0"}, {"command", command}};
  if (randomized) {
    h["seed"] = std::to_string(g.seed);
    h["generator"] = suite::kGenerator;
  }
  return h;
}

// Report goes to --output when given, else stdout. Text mode prints `text` instead.
void emit(const Globals& g, const Json& report, const std::string& text, bool outputIsArtifact = false) {
  if (!g.output.empty() && !outputIsArtifact) {
    std::ofstream out(g.output);
    if (!out) throw UsageError("cannot write " + g.output);
    out << report.dump(2) << "\n";
  }
  if (g.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

ThreeGraph requireGraph(const Globals& g) {
  if (g.input.empty()) throw UsageError("--input <file.h3> is required");
  return loadH3(g.input);
}

Partition3 requirePartition(const Globals& g, int n) {
  if (g.partition.empty()) throw UsageError("--partition <file.p3> is required");
  Partition3 p = loadP3(g.partition);
  if (p.n() != n) throw UsageError("partition has " + std::to_string(p.n()) + " vertices, graph has " + std::to_string(n));
  return p;
}

// ------------------------------------------------------------- commands

struct ConstructArgs {
  std::string type = "C";
  std::string sizes;
  int sweep = -1;
};

int runConstruct(const Globals& g, const ConstructArgs& a) {
  if (a.sweep >= 0) {
    SweepReport s = balancednessSweep(a.sweep);
    std::ostringstream csv;
    csv << "n1,n2,n3,l2\n";
    for (const auto& c : compositions(a.sweep)) csv << c.n1 << "," << c.n2 << "," << c.n3 << "," << toString(cL2Closed(c)) << "\n";
    if (!g.output.empty()) std::ofstream(g.output) << csv.str();
    Json report = header("construct", g, false);
    report["sweep"] = toJson(s);
    bool ok = !s.inStatedRange || (s.maximizersNearBalanced && s.nearBalancedAttain && s.gainsPass());
    ok = ok && s.gainsPass();
    if (g.json)
      std::cout << report.dump(2) << "\n";
    else if (g.output.empty())
      std::cout << csv.str();
    else
      std::cout << "maximum " << toString(s.maximum) << " over " << s.maximizers.size() << " maximizers; wrote " << g.output << "\n";
    return ok ? kOk : kViolation;
  }
  auto sizes = parseInts(a.sizes);
  for (int s : sizes)
    if (s < 0) throw UsageError("--sizes must be nonnegative");
  Json report = header("construct", g, false);
  std::ostringstream text;
  if (a.type == "C") {
    if (sizes.size() != 3) throw UsageError("--sizes needs n1,n2,n3 for type C");
    Composition3 c{sizes[0], sizes[1], sizes[2]};
    auto built = buildC(c);
    std::string prefix = g.output.empty() ? "c" + std::to_string(c.n()) : g.output;
    saveH3(prefix + ".h3", built.graph);
    saveP3(prefix + ".p3", built.partition);
    std::int64_t l2 = l2Norm(built.graph);
    Rational closed = cL2Closed(c);
    report["type"] = "C";
    report["sizes"] = toJson(c);
    report["edges"] = built.graph.size();
    report["l2"] = std::to_string(l2);
    report["l2_closed_form"] = toJson(closed);
    report["files"] = {prefix + ".h3", prefix + ".p3"};
    text << "C(" << c.toString() << "): " << built.graph.size() << " edges, l2 " << l2 << " (closed form "
         << toString(closed) << "); wrote " << prefix << ".h3, " << prefix << ".p3\n";
    emit(g, report, text.str(), true);
    return closed == l2 ? kOk : kViolation;
  }
  if (a.type == "B") {
    if (sizes.size() != 2) throw UsageError("--sizes needs n1,n2 for type B");
    auto built = buildB(sizes[0], sizes[1]);
    std::string prefix = g.output.empty() ? "b" + std::to_string(sizes[0] + sizes[1]) : g.output;
    saveH3(prefix + ".h3", built.graph);
    saveP3(prefix + ".p3", Partition3(built.side));
    report["type"] = "B";
    report["sizes"] = sizes;
    report["edges"] = built.graph.size();
    report["l2"] = std::to_string(l2Norm(built.graph));
    report["files"] = {prefix + ".h3", prefix + ".p3"};
    text << "B(" << sizes[0] << "," << sizes[1] << "): " << built.graph.size() << " edges, l2 " << l2Norm(built.graph)
         << "; wrote " << prefix << ".h3, " << prefix << ".p3\n";
    emit(g, report, text.str(), true);
    return kOk;
  }
  throw UsageError("--type must be C or B");
}

struct NormArgs {
  std::optional<int> vertex;
  bool spread = false;
};

int runNorm(const Globals& g, const NormArgs& a) {
  ThreeGraph h = requireGraph(g);
  std::int64_t l2 = l2Norm(h), s2 = countS2(h);
  bool identity = l2 == 2 * s2 + 3 * static_cast<std::int64_t>(h.size());
  Json report = header("norm", g, false);
  report["n"] = h.n();
  report["edges"] = h.size();
  report["l2"] = std::to_string(l2);
  report["s2"] = std::to_string(s2);
  report["identity_holds"] = identity;
  std::ostringstream text;
  text << "n " << h.n() << ", edges " << h.size() << ", l2 " << l2 << "\n";
  text << "2*S2 + 3|H| = " << 2 * s2 + 3 * static_cast<std::int64_t>(h.size()) << (identity ? " (ok)" : " (MISMATCH)") << "\n";
  bool ok = identity;
  if (a.vertex) {
    checkVertex(h.n(), *a.vertex);
    std::int64_t s = twoNormDegree(h, *a.vertex);
    std::int64_t drop = l2 - l2Norm(deleteVertex(h, *a.vertex));
    report["two_norm_degree"] = {{"vertex", *a.vertex}, {"s", std::to_string(s)}, {"deletion_drop", std::to_string(drop)}};
    text << "s(" << *a.vertex << ") = " << s << ", deletion drop " << drop << "\n";
    ok = ok && s == drop;
  }
  if (a.spread) {
    SpreadReport sp = sSpread(h);
    report["spread"] = toJson(sp);
    text << "s-spread " << sp.maxPairGap << " (vs average " << toString(sp.vsAverageGap) << "), 60n^2 = " << sp.bound << "\n";
  }
  emit(g, report, text.str());
  return ok ? kOk : kViolation;
}

struct ClassifyArgs {
  std::string optimize;
  std::string edge;
  std::string xi;
  std::string phase = "one";
};

int runClassify(const Globals& g, const ClassifyArgs& a) {
  ThreeGraph h = requireGraph(g);
  Json report = header("classify", g, false);
  Partition3 p;
  if (!a.optimize.empty()) {
    PartitionResult pr;
    if (a.optimize == "exhaustive")
      pr = optimizePartitionExhaustive(h);
    else if (a.optimize == "moves")
      pr = g.partition.empty() ? optimizePartitionMoves(h) : optimizePartitionMoves(h, requirePartition(g, h.n()));
    else
      throw UsageError("--optimize must be exhaustive or moves");
    report["optimized"] = toJson(pr);
    p = pr.partition;
  } else {
    p = requirePartition(g, h.n());
  }
  EdgeClassification ec = classifyEdges(h, p);
  report["partition"] = p.toString();
  report["intersection"] = std::to_string(intersectionSize(h, p));
  report["classification"] = toJson(ec);
  Json families = Json::object();
  for (Family f : {Family::B, Family::M, Family::BInt, Family::BBi, Family::MTri, Family::MBi}) {
    FamilyStats fs = familyStats(ec, f);
    families[familyName(f)] = {{"size", fs.graph.size()}, {"max_vertex_degree", fs.maxVertexDegree}, {"max_pair_codegree", fs.maxPairCodegree}};
  }
  report["families"] = families;
  int violations = 0;
  for (Vertex v = 0; v < h.n(); ++v) violations += !linkMoveInequality(h, p, v).holds();
  report["vertices_with_improving_move"] = violations;
  std::ostringstream text;
  text << "partition " << p.toString() << ": |H ∩ C[P]| = " << intersectionSize(h, p) << ", bad " << ec.bad.size()
       << " (internal " << ec.badInternal.size() << ", bipartite " << ec.badBipartite.size() << "), missing "
       << ec.missing.size() << " (transversal " << ec.missingTransversal.size() << ", bipartite " << ec.missingBipartite.size()
       << ")\n";
  text << violations << " vertices have an improving move\n";
  bool ok = true;
  if (!a.edge.empty()) {
    if (a.xi.empty()) throw UsageError("--edge needs --xi p/q");
    Pair e = parseEdge(a.edge);
    Thresholds t(parseRational(a.xi));
    Checklist c = parsePhase(a.phase) == Phase::One ? checkPhaseOneHypotheses(h, p, ec, e, t)
                                                    : checkPhaseTwoHypotheses(h, p, ec, e, t);
    report["hypotheses"] = toJson(c);
    for (const auto& item : c.items)
      text << "  " << item.id << " " << item.what << ": " << toString(item.lhs) << " vs " << toString(item.rhs) << " "
           << (item.pass ? "ok" : "fails") << "\n";
  }
  emit(g, report, text.str());
  return ok ? kOk : kViolation;
}

struct ImproveArgs {
  std::string delta4 = "1/40";
  std::string edge;
  std::string phase;
  std::string xi;
  std::string graphOut;
};

int runImprove(const Globals& g, const ImproveArgs& a) {
  ThreeGraph h = requireGraph(g);
  Partition3 p = requirePartition(g, h.n());
  std::ostringstream text;
  if (!a.edge.empty()) {
    Pair e = parseEdge(a.edge);
    Phase phase = a.phase.empty() ? (isInternalPair(p, e) ? Phase::One : Phase::Two) : parsePhase(a.phase);
    Json report = header("improve", g, false);
    bool ok = true;
    if (!a.xi.empty()) {
      IncreaseReport ir = verifyToggleIncrease(h, p, e, phase, Thresholds(parseRational(a.xi)));
      report["increase"] = toJson(ir);
      ok = ir.pass;
      text << ir.outcome << "\n";
    }
    ToggleResult tr = applyToggle(h, p, e, phase);
    report["toggle"] = toJson(tr.report);
    ok = ok && tr.report.reconciles();
    text << "toggle at {" << e.u << "," << e.v << "} (phase " << phaseName(phase) << "): removed " << tr.report.removed.size()
         << ", added " << tr.report.added.size() << ", delta " << tr.report.delta << " (l2 " << tr.report.l2Before << " -> "
         << tr.report.l2After << ")\n";
    if (!a.graphOut.empty()) saveH3(a.graphOut, tr.graph);
    emit(g, report, text.str());
    return ok ? kOk : kViolation;
  }

  Rational delta4 = parseRational(a.delta4);
  if (delta4 <= 0) throw UsageError("--delta4 must be positive");
  std::optional<std::uint64_t> seed;
  if (g.seedGiven) seed = g.seed;
  DriverTrace trace = twoPhaseDriver(h, p, delta4, seed);
  Json head = header("improve", g, seed.has_value());
  head["delta4"] = toString(delta4);
  head["order"] = seed ? "shuffled" : "lexicographic";
  Json summary = toJson(trace);
  if (!g.output.empty()) {
    std::ofstream out(g.output);
    if (!out) throw UsageError("cannot write " + g.output);
    out << head.dump() << "\n";
    for (const auto& s : trace.steps) out << toJson(s).dump() << "\n";
    out << Json{{"summary", summary}}.dump() << "\n";
  }
  if (!a.graphOut.empty()) saveH3(a.graphOut, trace.finalGraph);
  text << trace.steps.size() << " toggles; l2 " << trace.l2Trajectory.front() << " -> " << trace.l2Trajectory.back()
       << "; bad edges left " << trace.leftoverBad.size() << "; monotone " << (trace.monotone ? "yes" : "no") << "\n";
  Json report = head;
  report["summary"] = summary;
  if (g.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text.str();
  return trace.monotone ? kOk : kViolation;
}

struct CensusArgs {
  std::string problem = "k43";
  int n = 0;
  bool exhaustive = false;
  int maxN = 8;
};

int finishCensus(const Globals& g, const std::string& command, const CensusReport& c) {
  Json report = header(command, g, false);
  report["census"] = toJson(c);
  std::ostringstream text;
  text << c.problem << " n=" << c.n << " (" << c.method << (c.exact ? "" : ", lower bound") << "): optimum " << c.optimum;
  if (c.rawMaximizers) text << ", " << c.rawMaximizers << " labelled maximizers";
  text << ", " << c.extremalClasses << " classes";
  if (c.problem != "k43-l2") text << " (" << c.extremalClassesRotation << " up to rotation)";
  text << "\n" << c.reference << " = " << c.referenceValue << (c.referenceAttains ? " attains" : " does not attain");
  if (c.problem == "k43-l2" && c.referenceAttains) text << (c.referenceUnique ? " uniquely" : ", not uniquely");
  text << "\n";
  bool ok = true;
  for (const auto& b : c.bounds) {
    text << "  " << b.name << " (" << b.value << "): " << (b.pass ? "ok" : "VIOLATED") << "\n";
    ok = ok && b.pass;
  }
  if (c.structureMatches) text << "  split template: " << (*c.structureMatches ? "all maximizers match" : "witness emitted") << "\n";
  emit(g, report, text.str());
  return ok ? kOk : kViolation;
}

int runCensus(const Globals& g, const CensusArgs& a) {
  if (a.problem == "k43") {
    K43CensusOptions o;
    o.naive = a.exhaustive;
    o.maxN = a.maxN;
    o.workers = g.workers;
    return finishCensus(g, "census", censusK43(a.n, o));
  }
  if (a.problem == "tripartite") return finishCensus(g, "census", censusTripartiteTriangleFree(a.n, a.exhaustive));
  throw UsageError("--problem must be k43 or tripartite");
}

struct MantelArgs {
  int n = 0;
  std::string objective = "edges";
  int cap = 6;
  bool symmetrized = false;
};

int runMantel(const Globals& g, const MantelArgs& a) {
  MantelObjective obj;
  if (a.objective == "edges")
    obj = MantelObjective::Edges;
  else if (a.objective == "l2")
    obj = MantelObjective::L2;
  else
    throw UsageError("--objective must be edges or l2");
  MantelCensusOptions o;
  o.classCap = a.cap;
  o.forceSymmetrized = a.symmetrized;
  o.workers = g.workers;
  return finishCensus(g, "mantel", censusColoredMantel(a.n, obj, o));
}

int runSymmetrize(const Globals& g) {
  if (g.input.empty()) throw UsageError("--input <file.cg> is required");
  ColoredGraph in = loadCg(g.input);
  bool freeBefore = isCyclicTriangleFree(in);
  SymmetrizationResult res = locallySymmetrize(in);
  FactReport facts = checkSymmetrizedFacts(res.graph);
  bool freeAfter = isCyclicTriangleFree(res.graph);
  Json report = header("symmetrize", g, false);
  report["edges_before"] = in.graph.size();
  report["edges_after"] = res.graph.graph.size();
  report["rho3_before"] = toJson(rho3(in));
  report["rho3_after"] = toJson(rho3(res.graph));
  report["symmetrization"] = toJson(res);
  report["facts"] = toJson(facts)["facts"];
  if (!g.output.empty()) saveCg(g.output, res.graph);
  std::ostringstream text;
  text << res.steps.size() << " class moves; edges " << in.graph.size() << " -> " << res.graph.graph.size() << "; rho3 "
       << toString(rho3(in)) << " -> " << toString(rho3(res.graph)) << "\n";
  for (const auto& f : facts.facts)
    text << "  " << f.id << ": " << (f.pass ? "ok" : "FAILS") << (f.witness.empty() ? "" : " (" + f.witness + ")") << "\n";
  if (g.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text.str();
  bool ok = facts.allPass() && res.graph.graph.size() >= in.graph.size() && (!freeBefore || freeAfter);
  return ok ? kOk : kViolation;
}

struct IneqArgs {
  int resolution = 0;
  bool interval = false;
  double width = 1e-9;
};

int runIneq(const Globals& g, const IneqArgs& a) {
  SimplexGridReport grid = verifySimplexInequality(a.resolution, g.workers);
  Json report = header("ineq", g, false);
  Json j = toJson(grid);
  for (auto& [k, v] : j.items()) report[k] = v;
  std::ostringstream text;
  text << "resolution " << a.resolution << ": " << grid.points << " points, worst margin " << toString(grid.worstMargin)
       << " at (" << grid.argmin[0] << "/" << a.resolution << ", " << grid.argmin[1] << "/" << a.resolution << ", "
       << grid.argmin[2] << "/" << a.resolution << "), zero margins " << grid.zeros.size() << ", worst margin/deviation ratio "
       << toString(grid.worstRatio) << "\n";
  bool ok = grid.pass();
  if (a.interval) {
    IntervalCertificate c = certifySimplexInequality(a.width);
    report["interval"] = toJson(c);
    text << "interval certificate (width " << a.width << "): " << c.boxes << " boxes, " << c.undecided.size()
         << " undecided\n";
    ok = ok && c.certified();
  }
  emit(g, report, text.str());
  return ok ? kOk : kViolation;
}

struct CheckArgs {
  std::string suiteList = "all";
  int nMax = 6;
  std::string artifacts = ".";
};

int runCheck(const Globals& g, const CheckArgs& a) {
  std::vector<int> ids;
  if (a.suiteList == "all") {
    for (int i = 1; i <= suite::kCriteria; ++i) ids.push_back(i);
  } else {
    ids = parseInts(a.suiteList);
    for (int id : ids)
      if (id < 1 || id > suite::kCriteria) throw UsageError("criteria are numbered 1.." + std::to_string(suite::kCriteria));
  }
  if (a.nMax < 6 || a.nMax > 7) throw UsageError("--n-max must be 6 or 7");
  suite::Options o;
  o.seed = g.seed;
  o.workers = g.workers;
  o.nMax = a.nMax;
  o.artifactDir = a.artifacts;
  Json report = header("check", g, true);
  Json results = Json::array();
  bool ok = true;
  for (int id : ids) {
    auto r = suite::runCriterion(id, o);
    ok = ok && r.pass;
    if (!g.json) std::cout << suite::formatLine(r) << std::endl;
    results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"data", r.data}});
    if (id == 7) {
      auto s = suite::runToggleDeltaSupplement(o);
      if (!g.json) std::cout << "  supplementary " << s.name << ": " << (s.pass ? "PASS" : "FAIL") << " | " << s.detail << std::endl;
      results.push_back({{"id", "7s"}, {"name", s.name}, {"pass", s.pass}, {"detail", s.detail}, {"data", s.data}});
    }
  }
  report["criteria"] = results;
  report["all_pass"] = ok;
  if (!g.output.empty()) std::ofstream(g.output) << report.dump(2) << "\n";
  if (g.json) std::cout << report.dump(2) << "\n";
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turan l2-norm toolkit for K4^3-free 3-graphs"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--input", g.input, "Input file (.h3 or .cg)");
  app.add_option("--partition", g.partition, "Partition file (.p3)");
  app.add_option("--output", g.output, "Output path");
  auto* seedOpt = app.add_option("--seed", g.seed, "Seed for mt19937_64");
  app.add_option("--workers", g.workers, "Worker threads (0: TURANL2_WORKERS or all cores)");
  app.add_flag("--json", g.json, "Print the JSON report");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build C or B and write .h3/.p3");
  construct->add_option("--type", ca.type, "C or B");
  construct->add_option("--sizes", ca.sizes, "Part sizes, e.g. 2,2,2");
  construct->add_option("--sweep", ca.sweep, "CSV of the closed-form l2 over all compositions of n");

  NormArgs na;
  auto* norm = app.add_subcommand("norm", "Exact l2-norm with the S2 identity cross-check");
  norm->add_option("--vertex", na.vertex, "Also report the 2-norm degree of this vertex");
  norm->add_flag("--spread", na.spread, "Report the s-spread");

  ClassifyArgs cla;
  auto* classify = app.add_subcommand("classify", "Bad/missing edge classification against C[P]");
  classify->add_option("--optimize", cla.optimize, "exhaustive or moves");
  classify->add_option("--edge", cla.edge, "Check toggle hypotheses at pair a,b");
  classify->add_option("--xi", cla.xi, "Closeness parameter p/q");
  classify->add_option("--phase", cla.phase, "one or two");

  ImproveArgs ia;
  auto* improve = app.add_subcommand("improve", "Two-phase local improvement (JSONL trace to --output)");
  improve->add_option("--delta4", ia.delta4, "Internal queue threshold p/q");
  improve->add_option("--edge", ia.edge, "Single toggle at pair a,b");
  improve->add_option("--phase", ia.phase, "one or two");
  improve->add_option("--xi", ia.xi, "Check the increase hypotheses with this xi");
  improve->add_option("--graph-out", ia.graphOut, "Write the resulting 3-graph");

  CensusArgs cea;
  auto* census = app.add_subcommand("census", "Exact small-n census");
  census->add_option("--problem", cea.problem, "k43 or tripartite");
  census->add_option("--n", cea.n, "Vertices (k43) or part size (tripartite)")->required();
  census->add_flag("--exhaustive", cea.exhaustive, "Full scan instead of the pruned search");
  census->add_option("--max-n", cea.maxN, "Size cap for the k43 canonical search");

  MantelArgs ma;
  auto* mantel = app.add_subcommand("mantel", "Colored Mantel census over cyclically triangle-free graphs");
  mantel->add_option("--n", ma.n, "Part size")->required();
  mantel->add_option("--objective", ma.objective, "edges or l2");
  mantel->add_option("--cap", ma.cap, "Class cap for the symmetrized search");
  mantel->add_flag("--symmetrized", ma.symmetrized, "Use the symmetrized search even when exhaustive is possible");

  auto* symmetrize = app.add_subcommand("symmetrize", "Local symmetrization with structural checks");

  IneqArgs qa;
  auto* ineq = app.add_subcommand("ineq", "Simplex inequality on a grid, optionally with an interval certificate");
  ineq->add_option("--resolution", qa.resolution, "Grid resolution d")->required()->check(CLI::PositiveNumber);
  ineq->add_flag("--interval", qa.interval, "Run the interval quadtree certificate");
  ineq->add_option("--width", qa.width, "Minimum box width for the certificate");

  CheckArgs cka;
  auto* check = app.add_subcommand("check", "Acceptance battery");
  check->add_option("--suite", cka.suiteList, "all or a comma list of criterion numbers");
  check->add_option("--n-max", cka.nMax, "Largest K4^3 census size (6 or 7)");
  check->add_option("--artifacts", cka.artifacts, "Directory for counterexample files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  g.seedGiven = seedOpt->count() > 0;

  try {
    if (*construct) {
      if (ca.sweep < 0 && ca.sizes.empty()) throw UsageError("construct needs --sizes or --sweep");
      return runConstruct(g, ca);
    }
    if (*norm) return runNorm(g, na);
    if (*classify) return runClassify(g, cla);
    if (*improve) return runImprove(g, ia);
    if (*census) return runCensus(g, cea);
    if (*mantel) return runMantel(g, ma);
    if (*symmetrize) return runSymmetrize(g);
    if (*ineq) return runIneq(g, qa);
    if (*check) return runCheck(g, cka);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const TuranError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
