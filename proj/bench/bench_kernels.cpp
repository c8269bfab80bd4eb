// Parallel kernels against their serial references.

#include "bnwall/fan.hpp"
#include "bnwall/representation.hpp"
#include "bnwall/stability.hpp"
#include "bnwall/subobjects.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace bnwall;

void BM_SubobjectsParallel(benchmark::State& st) {
  const auto rep = biserial_module(0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(subobject_dimvectors(rep));
}
void BM_SubobjectsSerial(benchmark::State& st) {
  const auto rep = biserial_module(0, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::subobject_dimvectors(rep));
}
BENCHMARK(BM_SubobjectsParallel)->DenseRange(2, 6, 2);
BENCHMARK(BM_SubobjectsSerial)->DenseRange(2, 6, 2);

void BM_SweepParallel(benchmark::State& st) {
  const auto cat = enumerate_indecomposables(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(stability_sweep(cat));
}
void BM_SweepSerial(benchmark::State& st) {
  const auto cat = enumerate_indecomposables(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::stability_sweep(cat));
}
BENCHMARK(BM_SweepParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RegionsParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto hs = interval_hyperplanes(n);
  for (auto _ : st) benchmark::DoNotOptimize(arrangement_regions(hs, n + 1));
}
void BM_RegionsSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto hs = interval_hyperplanes(n);
  for (auto _ : st) benchmark::DoNotOptimize(serial::arrangement_regions(hs, n + 1));
}
BENCHMARK(BM_RegionsParallel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionsSerial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

std::vector<ConeH> wall_cones(int n) {
  std::vector<ConeH> out;
  for (const auto& r : walls(n)) out.push_back(r.cone);
  return out;
}

void BM_ChambersParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto hs = interval_hyperplanes(n);
  const auto ws = wall_cones(n);
  for (auto _ : st) benchmark::DoNotOptimize(chambers_from(hs, ws, n + 1));
}
void BM_ChambersSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto hs = interval_hyperplanes(n);
  const auto ws = wall_cones(n);
  for (auto _ : st) benchmark::DoNotOptimize(serial::chambers_from(hs, ws, n + 1));
}
BENCHMARK(BM_ChambersParallel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChambersSerial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
