#include <benchmark/benchmark.h>

#include "nodalvf/hopf.hpp"
#include "nodalvf/limits.hpp"
#include "nodalvf/strata.hpp"

using namespace nvf;

static void BM_LMTypes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lm_types(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LMTypes)->DenseRange(3, 6);

static void BM_PnTypes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pn_types(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PnTypes)->DenseRange(3, 5);

static void BM_PnClosureCovers(benchmark::State& state) {
  auto types = pn_types(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(closure_covers(types));
}
BENCHMARK(BM_PnClosureCovers)->Arg(3)->Arg(4);

static void BM_HopfAxioms(benchmark::State& state) {
  auto h = HopfPresentation::interpolating();
  for (auto _ : state) benchmark::DoNotOptimize(hopf_verify_axioms(h));
}
BENCHMARK(BM_HopfAxioms);

static void BM_StableLimit(benchmark::State& state) {
  LMType t = LMType::parse("1|2|3");
  auto paths = sampler_paths(t, {1, 2, 3}, {1, 0, -1}, {0, 1, 0});
  PathFamily f{LimitMode::Degeneration, paths};
  for (auto _ : state) benchmark::DoNotOptimize(stable_limit(f));
}
BENCHMARK(BM_StableLimit);

static void BM_SpecializeColumn(benchmark::State& state) {
  LMType t = LMType::parse("1|23");
  SampleGrid g = SampleGrid::default_grid();
  for (auto _ : state) benchmark::DoNotOptimize(specialize_lm(t, g));
}
BENCHMARK(BM_SpecializeColumn)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
