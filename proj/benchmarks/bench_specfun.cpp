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

#include "rissec/specfun.hpp"

using namespace rissec;

static void BM_BesselK(benchmark::State& state)
{
    const int nu = static_cast<int>(state.range(0));
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_k(nu, x));
        x = x < 50.0 ? x * 1.01 : 0.5;
    }
}
BENCHMARK(BM_BesselK)->Arg(0)->Arg(1)->Arg(16)->Arg(48);

static void BM_LogBesselK(benchmark::State& state)
{
    const int nu = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(log_bessel_k(nu, 3.7));
}
BENCHMARK(BM_LogBesselK)->Arg(2)->Arg(32);

static void BM_UpperGamma(benchmark::State& state)
{
    const int a = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(regularized_upper_gamma(a, 0.8 * a));
}
BENCHMARK(BM_UpperGamma)->Arg(4)->Arg(32)->Arg(128);

static void BM_MeijerG30(benchmark::State& state)
{
    const double b = static_cast<double>(state.range(0));
    const MeijerGm0Params p = meijer_g30_params(2.5, 1.5, b, 3.0, 2.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(meijer_g_m0(p, -ln_gamma(b)));
}
BENCHMARK(BM_MeijerG30)->Arg(2)->Arg(32)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
