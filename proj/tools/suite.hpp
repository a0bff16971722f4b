#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "turanl2/colored_graph.hpp"
#include "turanl2/hypergraph.hpp"
#include "turanl2/report_json.hpp"

namespace turanl2::suite {

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr const char* kGenerator = "mt19937_64";

struct Options {
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 0;
  int nMax = 6;                         // largest K4^3 census size
  double intervalWidth = 1e-6;
  std::filesystem::path artifactDir = ".";  // counterexample files
};

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  Json data = Json::object();
};

inline constexpr int kCriteria = 12;

const char* criterionName(int id);
Result runCriterion(int id, const Options& options);

/// Toggle trials of criterion 7 with the hypotheses dropped: delta > 0 only.
Result runToggleDeltaSupplement(const Options& options);

std::string formatLine(const Result& r);

// Random generators shared with the tests.
ThreeGraph randomThreeGraph(int n, double density, std::mt19937_64& rng);
ColoredGraph randomCyclicTriangleFree(int n, std::mt19937_64& rng);
Partition3 randomPartition(int n, std::mt19937_64& rng);

}  // namespace turanl2::suite
