// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "openbaker/propagator.hpp"

namespace {

void BM_BakerPropagator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(openbaker::baker_propagator(n));
}
BENCHMARK(BM_BakerPropagator)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_GnMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(openbaker::gn_matrix(n));
}
BENCHMARK(BM_GnMatrix)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

}  // namespace
