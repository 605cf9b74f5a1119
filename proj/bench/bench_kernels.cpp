// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "specht/homspace.hpp"

using namespace specht;

namespace {

struct Pair {
  Partition lambda, mu;
};

const std::vector<Pair>& pairs() {
  static const std::vector<Pair> p{
      {Partition({10, 5}), Partition({8, 3, 1, 1, 1, 1})},
      {Partition({9, 6}), Partition({6, 3, 2, 2, 1, 1})},
      {Partition({10, 6}), Partition({6, 3, 2, 2, 1, 1, 1})},
  };
  return p;
}

void BM_BuildMatrix(benchmark::State& state) {
  const auto& p = pairs()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix(p.lambda, p.mu));
}

void BM_BuildMatrixReference(benchmark::State& state) {
  const auto& p = pairs()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix_reference(p.lambda, p.mu));
}

void BM_Corank(benchmark::State& state) {
  const auto& p = pairs()[static_cast<std::size_t>(state.range(0))];
  const HomMatrix m = build_matrix(p.lambda, p.mu);
  for (auto _ : state) benchmark::DoNotOptimize(corank(m, {3, 0}));
}

void BM_RankReference(benchmark::State& state) {
  const auto& p = pairs()[static_cast<std::size_t>(state.range(0))];
  const HomMatrix m = build_matrix(p.lambda, p.mu);
  for (auto _ : state) benchmark::DoNotOptimize(rank_reference(m, {3, 0}));
}

}  // namespace

BENCHMARK(BM_BuildMatrix)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildMatrixReference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Corank)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankReference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
