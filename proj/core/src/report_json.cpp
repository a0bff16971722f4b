#include "turanl2/report_json.hpp"

#include <cstdlib>
#include <string>

#include "turanl2/parallel.hpp"

namespace turanl2 {

unsigned resolveWorkers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TURANL2_WORKERS")) {
    try {
      int w = std::stoi(env);
      if (w > 0) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

Json big(std::int64_t x) { return std::to_string(x); }

template <typename T>
Json list(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(toJson(x));
  return a;
}

}  // namespace

Json toJson(const Rational& value) { return toString(value); }

Json toJson(const Pair& e) { return Json::array({e.u, e.v}); }

Json toJson(const Triple& t) { return Json::array({t.a, t.b, t.c}); }

Json toJson(const Composition3& c) { return Json::array({c.n1, c.n2, c.n3}); }

Json toJson(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(toJson(e));
  return {{"n", g.n()}, {"edges", edges}};
}

Json toJson(const ThreeGraph& h) {
  Json edges = Json::array();
  for (const auto& t : h.edges()) edges.push_back(toJson(t));
  return {{"n", h.n()}, {"edges", edges}};
}

Json toJson(const ColoredGraph& g) {
  Json j = toJson(g.graph);
  j["parts"] = g.partition.toString();
  return j;
}

Json toJson(const SweepReport& r) {
  Json gains = Json::array();
  for (const auto& g : r.gains)
    gains.push_back({{"family", g.family},
                     {"from", toJson(g.from)},
                     {"to", toJson(g.to)},
                     {"expected", toJson(g.expected)},
                     {"actual", toJson(g.actual)},
                     {"pass", g.pass}});
  Json values = Json::array();
  for (std::size_t k = 0; k < r.representatives.size(); ++k)
    values.push_back({{"composition", toJson(r.representatives[k])}, {"l2", toJson(r.values[k])}});
  return {{"n", r.n},
          {"in_stated_range", r.inStatedRange},
          {"maximum", toJson(r.maximum)},
          {"maximizers", list(r.maximizers)},
          {"maximizers_near_balanced", r.maximizersNearBalanced},
          {"near_balanced_attain", r.nearBalancedAttain},
          {"values", values},
          {"gains", gains},
          {"gains_pass", r.gainsPass()}};
}

Json toJson(const LowerBoundReport& r) {
  return {{"precondition_met", r.preconditionMet},
          {"reason", r.reason},
          {"lhs", toJson(r.lhs)},
          {"rhs", toJson(r.rhs)},
          {"holds", r.holds}};
}

Json toJson(const EdgeClassification& c) {
  return {{"n", c.n},
          {"bad", c.bad.size()},
          {"missing", c.missing.size()},
          {"bad_internal", list(c.badInternal)},
          {"bad_bipartite", list(c.badBipartite)},
          {"missing_transversal", list(c.missingTransversal)},
          {"missing_bipartite", list(c.missingBipartite)}};
}

Json toJson(const PartitionResult& r) {
  return {{"partition", r.partition.toString()}, {"intersection", big(r.intersection)}, {"moves", r.moves}};
}

Json toJson(const Checklist& c) {
  Json items = Json::array();
  for (const auto& item : c.items)
    items.push_back({{"id", item.id}, {"lhs", toJson(item.lhs)}, {"rhs", toJson(item.rhs)}, {"pass", item.pass}});
  return {{"items", items}, {"all_pass", c.allPass()}};
}

Json toJson(const DeltaReport& r) {
  return {{"e_star", toJson(r.eStar)},
          {"phase", phaseName(r.phase)},
          {"removed", list(r.removed)},
          {"added", list(r.added)},
          {"s1", list(r.s1)},
          {"s2", list(r.s2)},
          {"s3", list(r.s3)},
          {"s2a", list(r.s2a)},
          {"s2b", list(r.s2b)},
          {"codegree_before", r.codegreeBefore},
          {"codegree_after", r.codegreeAfter},
          {"e_star_term", big(r.eStarTerm)},
          {"s1_term", big(r.s1Term)},
          {"s2_term", big(r.s2Term)},
          {"s3_term", big(r.s3Term)},
          {"l2_before", big(r.l2Before)},
          {"l2_after", big(r.l2After)},
          {"delta", big(r.delta)},
          {"reconciles", r.reconciles()}};
}

Json toJson(const IncreaseReport& r) {
  return {{"hypotheses", toJson(r.hypotheses)},
          {"claimed", r.claimed},
          {"delta", big(r.delta)},
          {"pass", r.pass},
          {"outcome", r.outcome}};
}

Json toJson(const DriverStep& s) {
  Json j = toJson(s.report);
  j["monotone"] = s.monotone;
  return j;
}

Json toJson(const DriverTrace& t) {
  Json trajectory = Json::array();
  for (auto x : t.l2Trajectory) trajectory.push_back(big(x));
  return {{"queues",
           {{"internal", list(t.queues.internal)},
            {"crossing", list(t.queues.crossing)},
            {"tilde_b", list(t.queues.tildeB)}}},
          {"steps", t.steps.size()},
          {"l2_trajectory", trajectory},
          {"leftover_bad", list(t.leftoverBad)},
          {"every_bad_covered", t.everyBadCovered},
          {"monotone", t.monotone},
          {"input_k43_free", t.inputK43Free},
          {"k43_created", t.k43Created},
          {"final_inside_c", t.finalInsideC()}};
}

Json toJson(const SymmetrizationResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"part", s.part + 1},
                     {"from", s.from},
                     {"to", s.to},
                     {"edges_before", s.edgesBefore},
                     {"edges_after", s.edgesAfter}});
  return {{"steps", steps}, {"graph", toJson(r.graph)}};
}

Json toJson(const FactReport& r) {
  Json facts = Json::array();
  for (const auto& f : r.facts) {
    Json j = {{"id", f.id}, {"pass", f.pass}};
    if (!f.witness.empty()) j["witness"] = f.witness;
    facts.push_back(j);
  }
  return {{"facts", facts}};
}

Json toJson(const CensusReport& r) {
  Json j = {{"n", r.n},
            {"problem", r.problem},
            {"method", r.method},
            {"exact", r.exact},
            {"optimum", big(r.optimum)},
            {"raw_maximizers", big(static_cast<std::int64_t>(r.rawMaximizers))},
            {"extremal_classes", r.extremalClasses}};
  if (r.problem != "k43-l2") j["extremal_classes_up_to_rotation"] = r.extremalClassesRotation;
  j["reference"] = r.reference;
  j["reference_value"] = big(r.referenceValue);
  j["reference_attains"] = r.referenceAttains;
  if (r.problem == "k43-l2") j["reference_unique"] = r.referenceUnique;
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back({{"name", b.name}, {"value", big(b.value)}, {"pass", b.pass}});
  j["bounds"] = bounds;
  if (r.structureMatches) {
    j["structure_matches"] = *r.structureMatches;
    Json w = Json::array();
    for (const auto& s : r.structureWitnesses) w.push_back(toJson(s.graph));
    j["structure_witnesses"] = w;
  }
  Json extremal = Json::array();
  for (const auto& h : r.extremalThreeGraphs) extremal.push_back(toJson(h));
  for (const auto& g : r.extremalColored) extremal.push_back(toJson(g));
  j["extremal"] = extremal;
  j["nodes"] = big(static_cast<std::int64_t>(r.nodes));
  return j;
}

Json toJson(const SimplexGridReport& r) {
  const auto& m = r.worstMargin;
  Json zeros = Json::array();
  for (const auto& z : r.zeros) zeros.push_back(z);
  return {{"resolution", r.resolution},
          {"points", big(static_cast<std::int64_t>(r.points))},
          {"worst_margin_num", numerator(m).str()},
          {"worst_margin_den", denominator(m).str()},
          {"argmin", r.argmin},
          {"zeros", zeros},
          {"worst_ratio", toJson(r.worstRatio)},
          {"pass", r.pass()}};
}

Json toJson(const IntervalCertificate& c) {
  Json undecided = Json::array();
  for (const auto& b : c.undecided) undecided.push_back({b.uLo, b.uHi, b.vLo, b.vHi});
  return {{"min_width", c.minWidth},
          {"ball_radius", toJson(c.ballRadius)},
          {"boxes", big(static_cast<std::int64_t>(c.boxes))},
          {"ball_boxes", big(static_cast<std::int64_t>(c.ballBoxes))},
          {"interval_boxes", big(static_cast<std::int64_t>(c.intervalBoxes))},
          {"outside_boxes", big(static_cast<std::int64_t>(c.outsideBoxes))},
          {"undecided", undecided},
          {"certified", c.certified()}};
}

Json toJson(const SpreadReport& r) {
  Json s = Json::array();
  for (auto x : r.s) s.push_back(big(x));
  return {{"s", s},
          {"max_pair_gap", big(r.maxPairGap)},
          {"vs_average_gap", toJson(r.vsAverageGap)},
          {"bound_60n2", big(r.bound)},
          {"within_bound", r.withinBound()}};
}

}  // namespace turanl2
