// Copyright 2026 The tutteseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tutteseq/betti.hpp"
#include "tutteseq/exactness.hpp"
#include "tutteseq/presentation.hpp"
#include "tutteseq/series.hpp"

namespace ts = tutteseq;

namespace {

// K5 minus an edge, with one doubled edge.
ts::Multigraph sample() {
  return ts::Multigraph(5, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
}

ts::Multigraph k4() { return ts::Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

ts::Execution mode(const benchmark::State& s) { return s.range(0) ? ts::Execution::parallel : ts::Execution::serial; }

void BM_HilbertFunction(benchmark::State& state) {
  const auto g = sample();
  const auto p = ts::gpark_presentation(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ts::hilbert_function(p, g.genus() + 2, mode(state)));
}

void BM_ExactnessReport(benchmark::State& state) {
  const auto g = k4();
  for (auto _ : state)
    benchmark::DoNotOptimize(ts::exactness_report(ts::SequenceKind::toppling, g, 0, 1, 1, std::nullopt, mode(state)));
}

void BM_BettiTable(benchmark::State& state) {
  const auto g = sample();
  for (auto _ : state) benchmark::DoNotOptimize(ts::betti_table(g, 1, mode(state)));
}

void BM_Superstables(benchmark::State& state) {
  const auto g = sample();
  for (auto _ : state) benchmark::DoNotOptimize(ts::superstables(g, 1, mode(state)));
}

void BM_BscCoefficients(benchmark::State& state) {
  const auto g = k4();
  for (auto _ : state) benchmark::DoNotOptimize(ts::bsc_coefficients(g, 0, g.genus() + 3, mode(state)));
}

}  // namespace

// Arg 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_HilbertFunction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactnessReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Superstables)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BscCoefficients)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
