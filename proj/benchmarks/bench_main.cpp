// Copyright 2026 The duality-lab Authors
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

#include "duality_lab/discrimination.hpp"
#include "duality_lab/duality.hpp"
#include "duality_lab/ensemble.hpp"
#include "duality_lab/saturation.hpp"

namespace {

using namespace duality_lab;

DetectorSpec bench_spec(int big_n) {
  Rng rng(7);
  return sample_spec(big_n, big_n, rng);
}

void BM_BuildConcatenated(benchmark::State& state) {
  const auto spec = bench_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_frio_concatenated(spec, 0.5));
}
BENCHMARK(BM_BuildConcatenated)->Arg(4)->Arg(8)->Arg(16);

void BM_CheckPovm(benchmark::State& state) {
  const auto m = build_frio_concatenated(bench_spec(static_cast<int>(state.range(0))), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(check_povm(m));
}
BENCHMARK(BM_CheckPovm)->Arg(4)->Arg(8)->Arg(16);

void BM_KnowledgeClosedForm(benchmark::State& state) {
  const auto spec = bench_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(knowledge_concatenated(spec, 0.5));
}
BENCHMARK(BM_KnowledgeClosedForm)->Arg(6)->Arg(16)->Arg(64);

void BM_OracleTable(benchmark::State& state) {
  const auto spec = bench_spec(static_cast<int>(state.range(0)));
  const auto set = build_symmetric_set(spec);
  const auto m = build_frio_concatenated(spec, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_outcome_table(set, m));
}
BENCHMARK(BM_OracleTable)->Arg(4)->Arg(8);

void BM_MeSweep(benchmark::State& state) {
  SweepConfig config;
  config.num_paths = 6;
  config.dimension = 6;
  config.samples = static_cast<std::size_t>(state.range(0));
  config.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MeSweep)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SaturationScan(benchmark::State& state) {
  const int big_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    saturation_scan_each(big_n, [&](const SaturationReport& r) { count += r.saturating; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SaturationScan)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
