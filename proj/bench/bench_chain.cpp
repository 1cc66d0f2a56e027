// Serial vs OpenMP transition counting and full limit computation.
#include <benchmark/benchmark.h>

#include "mvf/chain/chain.hpp"
#include "mvf/chain/kernels.hpp"

using namespace mvf;

namespace {

Poly poly(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

// Contexts of growing size: closure degree times number of places.
ContextPtr context(int which) {
  switch (which) {
    case 0:
      return ChainContext::create(BaseStructure{{PlaceSpec::rcf(), PlaceSpec::acvf(5)}},
                                  GaloisClosure::build(poly({-2, 0, 0, 1})));
    case 1:
      return ChainContext::create(BaseStructure{{PlaceSpec::pcf(2), PlaceSpec::pcf(3), PlaceSpec::rcf()}},
                                  GaloisClosure::build(poly({-2, 0, 0, 1})));
    default:
      return ChainContext::create(BaseStructure{{PlaceSpec::rcf(), PlaceSpec::acvf(7), PlaceSpec::pcf(5)}},
                                  GaloisClosure::build(poly({-2, 0, 0, 0, 1})));
  }
}

void BM_StepSerial(benchmark::State& st) {
  auto ctx = context(static_cast<int>(st.range(0)));
  State s = ctx->initial_state();
  for (auto _ : st) benchmark::DoNotOptimize(step_counts_serial(*ctx, s));
}

void BM_StepParallel(benchmark::State& st) {
  auto ctx = context(static_cast<int>(st.range(0)));
  State s = ctx->initial_state();
  for (auto _ : st) benchmark::DoNotOptimize(step_counts_parallel(*ctx, s));
}

void BM_LimitSerial(benchmark::State& st) {
  auto ctx = context(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(limit_distribution(*ctx, Kernel::Serial));
}

void BM_LimitParallel(benchmark::State& st) {
  auto ctx = context(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(limit_distribution(*ctx, Kernel::Parallel));
}

}  // namespace

BENCHMARK(BM_StepSerial)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StepParallel)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LimitSerial)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LimitParallel)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
