#include "kromatic/heaps.hpp"
#include "kromatic/kromatic.hpp"
#include "kromatic/quasisym.hpp"

#include <benchmark/benchmark.h>

using namespace kromatic;

static void BM_KromaticPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = Graph::path(n);
  for (auto _ : state) benchmark::DoNotOptimize(kromatic_function(g, 6, 6));
}
BENCHMARK(BM_KromaticPath)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_KromaticJobs(benchmark::State& state) {
  const Graph g = Graph::cycle(6);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kromatic_function(g, 6, 6, jobs));
}
BENCHMARK(BM_KromaticJobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_BruteForce(benchmark::State& state) {
  const Graph g = Graph::path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_kromatic(g, 4, 4));
}
BENCHMARK(BM_BruteForce)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ExtractPbar(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  const auto f = kromatic_function(Graph::complete(3), cap, cap);
  for (auto _ : state) benchmark::DoNotOptimize(extract(f, Basis::PBar));
}
BENCHMARK(BM_ExtractPbar)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_EnumerateLyndon(benchmark::State& state) {
  auto g = std::make_shared<const Graph>(Graph::path(4));
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lyndon(g, size));
}
BENCHMARK(BM_EnumerateLyndon)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_TheoremCoefficient(benchmark::State& state) {
  const Graph g = Graph::path(4);
  const LyndonTable table(g, 6);
  const Partition lambda{3, 2, 1};
  const auto method = state.range(0) ? Coverage::Direct : Coverage::InclusionExclusion;
  for (auto _ : state) benchmark::DoNotOptimize(theorem_coefficient(table, 4, lambda, Theorem::T1_5, method));
}
BENCHMARK(BM_TheoremCoefficient)->Arg(0)->Arg(1);

static void BM_ClanFormula(benchmark::State& state) {
  const Graph g = Graph::path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kromatic_q_via_clans(g, 4, 4));
}
BENCHMARK(BM_ClanFormula)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_PyramidExpansion(benchmark::State& state) {
  const Graph g = unit_interval_graph({4, {3, 4, 4, 4}});
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pyramid_p_expansion_q(g, cap));
}
BENCHMARK(BM_PyramidExpansion)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
