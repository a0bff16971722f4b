#include <benchmark/benchmark.h>

#include <random>

#include "turanl2/canonical.hpp"
#include "turanl2/census.hpp"
#include "turanl2/constructions.hpp"
#include "turanl2/inequality_lab.hpp"
#include "turanl2/local_improvement.hpp"

using namespace turanl2;

static void BM_L2Norm(benchmark::State& state) {
  const auto c = buildBalancedC(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(l2Norm(c.graph));
}
BENCHMARK(BM_L2Norm)->Arg(30)->Arg(60)->Arg(120);

static void BM_CanonicalForm(benchmark::State& state) {
  const auto c = buildC({3, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(canonicalForm(c.graph));
}
BENCHMARK(BM_CanonicalForm);

static void BM_CensusK43(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(censusK43(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CensusK43)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_SimplexGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verifySimplexInequality(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_SimplexGrid)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_IntervalCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certifySimplexInequality(1e-9));
}
BENCHMARK(BM_IntervalCertificate)->Unit(benchmark::kMillisecond);

static void BM_ApplyToggle(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto inst = plantInstance(static_cast<int>(state.range(0)), Phase::One, rng);
  for (auto _ : state) benchmark::DoNotOptimize(applyToggle(inst.graph, inst.partition, inst.eStar, inst.phase));
}
BENCHMARK(BM_ApplyToggle)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
