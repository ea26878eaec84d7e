#include <benchmark/benchmark.h>

#include "flagclass/kernels.hpp"

using namespace flagclass;

namespace {

struct Fixture {
  explicit Fixture(const char* flag)
      : f(FlagSpec::parse(flag)), ts(f), sc(compute_structure_constants(f.root_system_ptr())), ctx(ts, sc) {}
  FlagSpec f;
  TRootSystem ts;
  StructureConstants sc;
  CensusContext ctx;
};

const Fixture& b4() {
  static const Fixture fx("B4");
  return fx;
}

const Fixture& a3() {
  static const Fixture fx("A3");
  return fx;
}

void BM_IntegrabilitySerial(benchmark::State& state) {
  const auto& fx = b4();
  const std::uint64_t n = iacs_count(fx.ts);
  for (auto _ : state) benchmark::DoNotOptimize(integrability_census_serial(fx.ctx, 0, n));
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_IntegrabilityParallel(benchmark::State& state) {
  const auto& fx = b4();
  const std::uint64_t n = iacs_count(fx.ts);
  for (auto _ : state) benchmark::DoNotOptimize(integrability_census_parallel(fx.ctx, 0, n));
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_G1Serial(benchmark::State& state) {
  const auto& fx = a3();
  for (auto _ : state) benchmark::DoNotOptimize(g1_census_serial(fx.ctx, {1, 2, 3}));
}

void BM_G1Parallel(benchmark::State& state) {
  const auto& fx = a3();
  for (auto _ : state) benchmark::DoNotOptimize(g1_census_parallel(fx.ctx, {1, 2, 3}));
}

}  // namespace

BENCHMARK(BM_IntegrabilitySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IntegrabilityParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_G1Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_G1Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
