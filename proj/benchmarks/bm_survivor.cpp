// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "openbaker/trapped_set.hpp"

namespace {

using openbaker::OpeningSpec;
using openbaker::Rational;

void BM_SurvivorSet(benchmark::State& state) {
  const OpeningSpec opening(Rational::from_decimal("0.3"), Rational::from_decimal("0.1"));
  for (auto _ : state) benchmark::DoNotOptimize(openbaker::survivor_set(opening, state.range(0)));
}
BENCHMARK(BM_SurvivorSet)->DenseRange(5, 20, 5)->Unit(benchmark::kMicrosecond);

void BM_MonteCarlo(benchmark::State& state) {
  const OpeningSpec opening(Rational::from_decimal("0.5"), Rational::from_decimal("0.1"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(openbaker::monte_carlo_area(opening, 9, 100'000, 7));
  }
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace
