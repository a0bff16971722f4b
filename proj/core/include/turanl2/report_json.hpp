#pragma once

#include "json.hpp"

#include "turanl2/census.hpp"
#include "turanl2/classification.hpp"
#include "turanl2/colored_graph.hpp"
#include "turanl2/constructions.hpp"
#include "turanl2/inequality_lab.hpp"
#include "turanl2/local_improvement.hpp"

namespace turanl2 {

using Json = nlohmann::ordered_json;

// Integers that may exceed 2^53 and all rationals are written as decimal strings.
Json toJson(const Rational& value);
Json toJson(const Pair& e);
Json toJson(const Triple& t);
Json toJson(const Composition3& c);
Json toJson(const Graph& g);
Json toJson(const ThreeGraph& h);
Json toJson(const ColoredGraph& g);
Json toJson(const SweepReport& r);
Json toJson(const LowerBoundReport& r);
Json toJson(const EdgeClassification& c);
Json toJson(const PartitionResult& r);
Json toJson(const Checklist& c);
Json toJson(const DeltaReport& r);
Json toJson(const IncreaseReport& r);
Json toJson(const DriverStep& s);
Json toJson(const DriverTrace& t);
Json toJson(const SymmetrizationResult& r);
Json toJson(const FactReport& r);
Json toJson(const CensusReport& r);
Json toJson(const SimplexGridReport& r);
Json toJson(const IntervalCertificate& c);
Json toJson(const SpreadReport& r);

}  // namespace turanl2
