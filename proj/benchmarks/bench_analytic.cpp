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

#include "rissec/analytic.hpp"

using namespace rissec;

static ClosedFormParams params(int L)
{
    ClosedFormParams p = reduce_config(ScenarioConfig{});
    p.L = L;
    return p;
}

static void BM_CdfZSingle(benchmark::State& state)
{
    const ClosedFormParams p = params(static_cast<int>(state.range(0)));
    const double z = p.sigma1_sq * p.sigma2_sq * p.L * p.L;
    for (auto _ : state)
        benchmark::DoNotOptimize(cdf_Z_single(z, p));
}
BENCHMARK(BM_CdfZSingle)->Arg(4)->Arg(16)->Arg(32);

static void BM_ZsrpRs(benchmark::State& state)
{
    const ClosedFormParams p = params(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(zsrp_rs(p));
}
BENCHMARK(BM_ZsrpRs)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ZsrpPfs(benchmark::State& state)
{
    const ClosedFormParams p = params(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(zsrp_pfs(p));
}
BENCHMARK(BM_ZsrpPfs)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ZsrpPfsClosedForm(benchmark::State& state)
{
    const ClosedFormParams p = params(16);
    AnalyticOptions opt;
    opt.closed_form = true;
    for (auto _ : state)
        benchmark::DoNotOptimize(zsrp_pfs(p, opt));
}
BENCHMARK(BM_ZsrpPfsClosedForm)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
