// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "scissors/scissors.hpp"

namespace {

using namespace scissors;

void BM_K0Intervals(benchmark::State& state) {
  Assembler a = intervals(static_cast<int>(state.range(0)), 2, IntervalVariant::kTotal);
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(k0(a, budget).group());
  }
}
BENCHMARK(BM_K0Intervals)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_K0FiniteSets(benchmark::State& state) {
  Assembler a = finite_sets(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(k0(a, budget).group());
  }
}
BENCHMARK(BM_K0FiniteSets)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

// Every subfamily of the incoming morphisms at the top object, fresh engine
// per iteration so memoization is measured too.
void BM_CoverageAllSubfamilies(benchmark::State& state) {
  Assembler a = finite_sets(3);
  ObjIdx top = 0;
  for (ObjIdx x : a.noninitial_objects()) {
    if (a.noninitial_incoming(x).size() > a.noninitial_incoming(top).size()) top = x;
  }
  auto pool = a.noninitial_incoming(top);
  const std::size_t n = std::min<std::size_t>(pool.size(), 14);
  for (auto _ : state) {
    CoverageEngine engine(a);
    std::size_t covering = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<MorIdx> fam;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) fam.push_back(pool[i]);
      }
      covering += engine.covers(make_family(top, fam));
    }
    benchmark::DoNotOptimize(covering);
  }
}
BENCHMARK(BM_CoverageAllSubfamilies)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-20, 20);
  IntMatrix m(n, IntVector(n, 0));
  for (auto& row : m) {
    for (auto& x : row) x = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, n, false).diagonal);
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);

void BM_LevelOneHomology(benchmark::State& state) {
  Assembler a = sphere_group(symmetric_group3());
  for (auto _ : state) {
    Budget budget;
    TruncatedSimplicialSet x = diagonal_level_space(a, 1, 2, 2, budget);
    benchmark::DoNotOptimize(homology(x, 1));
  }
}
BENCHMARK(BM_LevelOneHomology)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
