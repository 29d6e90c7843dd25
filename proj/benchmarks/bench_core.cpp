// Copyright 2026 The edrsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "edrsim/sweep.hpp"

using namespace edrsim;

static void BM_BuildReport(benchmark::State& state) {
  const GaussianState signal = make_squeezed_db(-2.9, 3.9);
  const GaussianState meter = make_vacuum();
  const Transmission t(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_report(signal, meter, t));
  }
}
BENCHMARK(BM_BuildReport);

static void BM_MinimizeBranciard(benchmark::State& state) {
  const GaussianState signal = make_squeezed_db(-2.9, 3.9);
  const GaussianState meter = make_vacuum();
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_branciard(signal, meter));
  }
}
BENCHMARK(BM_MinimizeBranciard);

static void BM_DrawPairs(benchmark::State& state) {
  const TwoModeState joint =
      beam_split(make_coherent(0.0, 0.0), make_vacuum(), Transmission(0.5));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        draw_pairs(joint, Basis::X, n, 1, Transmission(0.5)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_DrawPairs)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 19);

static void BM_AnalyticSweep(benchmark::State& state) {
  const SweepConfig config = SweepConfig::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(config));
  }
}
BENCHMARK(BM_AnalyticSweep);

BENCHMARK_MAIN();
