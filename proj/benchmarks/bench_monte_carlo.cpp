// SPDX-License-Identifier: Apache-2.0
//
// rissec - secrecy analysis of FC-RIS and UAV assisted multiuser downlinks
// Copyright (C) 2026 The rissec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "rissec/secrecy.hpp"

using namespace rissec;

static void BM_MonteCarloAllSchemes(benchmark::State& state)
{
    ScenarioConfig cfg;
    cfg.fading.L = static_cast<int>(state.range(0));
    MonteCarloOptions mc;
    mc.trials = 20000;
    const std::vector<SchemeId> schemes(kAllSchemes.begin(), kAllSchemes.end());
    for (auto _ : state)
        benchmark::DoNotOptimize(run_monte_carlo(cfg, schemes, mc));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(mc.trials));
}
BENCHMARK(BM_MonteCarloAllSchemes)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_MonteCarloConditional(benchmark::State& state)
{
    ScenarioConfig cfg;
    MonteCarloOptions mc;
    mc.trials = 20000;
    mc.eve = EveAveraging::Conditional;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_monte_carlo(cfg, mc));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(mc.trials));
}
BENCHMARK(BM_MonteCarloConditional)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
