// Copyright 2026 The quditconv developers
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

#include "quditconv/analysis.hpp"
#include "quditconv/encoder.hpp"
#include "quditconv/search.hpp"
#include "quditconv/state_diagram.hpp"

namespace {

qconv::SymplecticEncoder bench_encoder(uint32_t p, size_t m, size_t n, size_t k,
                                        uint64_t seed) {
    return qconv::random_encoder(qconv::CodeParams(p, m, n, k), seed, 20);
}

void BM_EncoderApply(benchmark::State& state) {
    auto enc = bench_encoder(3, 2, 2, 1, 7);
    qconv::PauliOp in = qconv::PauliOp::identity(3, 4);
    in.x[0] = 1;
    in.z[3] = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enc.apply(in));
    }
}
BENCHMARK(BM_EncoderApply);

void BM_DiagramConstruction(benchmark::State& state) {
    auto p = static_cast<uint32_t>(state.range(0));
    auto enc = bench_encoder(p, 2, 2, 1, 11);
    for (auto _ : state) {
        qconv::StateDiagram diagram(enc);
        benchmark::DoNotOptimize(diagram.vertex_count());
    }
}
BENCHMARK(BM_DiagramConstruction)->Arg(2)->Arg(3)->Arg(5);

void BM_SccZeroPhysical(benchmark::State& state) {
    auto p = static_cast<uint32_t>(state.range(0));
    qconv::StateDiagram diagram(bench_encoder(p, 2, 2, 1, 13));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            diagram.scc(qconv::EdgeFilter::zero_physical()));
    }
}
BENCHMARK(BM_SccZeroPhysical)->Arg(2)->Arg(3);

void BM_ClassifyFull(benchmark::State& state) {
    auto p = static_cast<uint32_t>(state.range(0));
    qconv::StateDiagram diagram(bench_encoder(p, 2, 2, 1, 17));
    qconv::AnalysisBudgets budgets;
    budgets.enum_budget = 5000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qconv::classify(diagram, budgets));
    }
}
BENCHMARK(BM_ClassifyFull)->Arg(2)->Arg(3);

void BM_SearchSampled100(benchmark::State& state) {
    qconv::SearchConfig config;
    config.params = qconv::CodeParams(3, 1, 2, 1);
    config.mode = qconv::SearchMode::sampled;
    config.sample_count = 100;
    config.seed = 42;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qconv::run_search(config));
    }
}
BENCHMARK(BM_SearchSampled100);

}  // namespace

BENCHMARK_MAIN();
