// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "openbaker/eigensolver.hpp"
#include "openbaker/propagator.hpp"

namespace {

using openbaker::OpeningSpec;
using openbaker::PropagatorSpec;
using openbaker::Rational;

PropagatorSpec spec_for(int n) {
  return {n, OpeningSpec(Rational::from_decimal("0.3"), Rational::from_decimal("0.1"))};
}

void BM_KeptBlockEigenvalues(benchmark::State& state) {
  const auto block = openbaker::kept_block(spec_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(openbaker::eigenvalues(block));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KeptBlockEigenvalues)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);

void BM_Hessenberg(benchmark::State& state) {
  const auto block = openbaker::kept_block(spec_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto a = block;
    openbaker::reduce_to_hessenberg(a);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_Hessenberg)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

}  // namespace
