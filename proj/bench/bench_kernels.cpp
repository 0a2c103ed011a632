// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "treecross/geometry.hpp"
#include "treecross/kernels.hpp"

using namespace treecross;

namespace {

void BM_HistogramSerial(benchmark::State& state) {
  const PointConfig c = PointConfig::convex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::crossing_histogram_serial(c));
}

void BM_HistogramParallel(benchmark::State& state) {
  const PointConfig c = PointConfig::convex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::crossing_histogram_parallel(c, 4));
}

void BM_SampleConvexSerial(benchmark::State& state) {
  const PointConfig c = PointConfig::convex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sample_crossings_serial(c, 4096, 7));
}

void BM_SampleConvexParallel(benchmark::State& state) {
  const PointConfig c = PointConfig::convex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sample_crossings_parallel(c, 4096, 7));
}

void BM_SampleCoordsSerial(benchmark::State& state) {
  const PointConfig c = random_general_position(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sample_crossings_serial(c, 1024, 7));
}

void BM_SampleCoordsParallel(benchmark::State& state) {
  const PointConfig c = random_general_position(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sample_crossings_parallel(c, 1024, 7));
}

void BM_QuadsSerial(benchmark::State& state) {
  const PointConfig c = random_general_position(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convex_quadrilaterals_serial(c.points()));
}

void BM_QuadsParallel(benchmark::State& state) {
  const PointConfig c = random_general_position(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convex_quadrilaterals_parallel(c.points()));
}

void BM_SegmentPairsSerial(benchmark::State& state) {
  const PointConfig c = random_general_position(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::crossing_segment_pairs_serial(c.points()));
}

void BM_SegmentPairsParallel(benchmark::State& state) {
  const PointConfig c = random_general_position(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::crossing_segment_pairs_parallel(c.points()));
}

}  // namespace

BENCHMARK(BM_HistogramSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleConvexSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleConvexParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleCoordsSerial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleCoordsParallel)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadsSerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadsParallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SegmentPairsSerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SegmentPairsParallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
