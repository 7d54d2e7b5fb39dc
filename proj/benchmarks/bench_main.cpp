// Microbenchmarks for the hot paths: the two volume-ratio formulas, the
// reduced-objective solver, the geometric oracle, and one search cell.

#include <benchmark/benchmark.h>

#include "cevopt/cevopt.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace {

cevopt::BarycentricPoint<double> sample_point(int n) {
  cevopt::Rng rng = cevopt::Rng::stream(1, static_cast<std::uint64_t>(n));
  return cevopt::BarycentricPoint<double>(
      cevopt::uniform_interior_point(rng, static_cast<std::size_t>(n) + 1, 0.02));
}

void BM_VolumeRatioProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto point = sample_point(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cevopt::volume_ratio_product(point, 0));
  }
}
BENCHMARK(BM_VolumeRatioProduct)->Arg(3)->Arg(5)->Arg(8);

void BM_VolumeRatioDeterminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto point = sample_point(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cevopt::volume_ratio_determinant(point, 0));
  }
}
BENCHMARK(BM_VolumeRatioDeterminant)->Arg(3)->Arg(5)->Arg(8);

void BM_PartialRatioSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto point = sample_point(n);
  const cevopt::CevianConfig config(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cevopt::partial_ratio_sum(point, config));
  }
}
BENCHMARK(BM_PartialRatioSum)->Arg(3)->Arg(5)->Arg(8);

void BM_SolveOptimum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cevopt::CevianConfig config(n, std::max(2, n / 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cevopt::solve_optimum(config));
  }
}
BENCHMARK(BM_SolveOptimum)->Arg(3)->Arg(8)->Arg(12);

void BM_MeasureGeometric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cevopt::Rng rng = cevopt::Rng::stream(2, static_cast<std::uint64_t>(n));
  const auto simplex = cevopt::CartesianSimplex::random(n, rng);
  const auto point = sample_point(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cevopt::measure_geometric(simplex, point, 0));
  }
}
BENCHMARK(BM_MeasureGeometric)->Arg(3)->Arg(5)->Arg(8);

void BM_AnalyzeCell(benchmark::State& state) {
  const long long k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cevopt::analyze_cell(k, k));
  }
}
BENCHMARK(BM_AnalyzeCell)->Arg(2)->Arg(12)->Arg(50);

void BM_MaximizeDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cevopt::CevianConfig config(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cevopt::maximize_direct(config, 4, 42));
  }
}
BENCHMARK(BM_MaximizeDirect)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
