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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "rissec/errors.hpp"
#include "rissec/optimize.hpp"

using namespace rissec;
using Catch::Matchers::WithinAbs;

TEST_CASE("golden_section_min - quadratic")
{
    const auto r = golden_section_min([](double x) { return (x - 2.0) * (x - 2.0) + 1.0; }, -3.0, 10.0, 1e-7);
    CHECK_THAT(r.argmin, WithinAbs(2.0, 1e-6));
    CHECK_THAT(r.value, WithinAbs(1.0, 1e-12));
    // Bracket shrinks by 1/phi per iteration.
    const double bound = std::ceil(std::log(13.0 / 1e-7) / std::log((1.0 + std::sqrt(5.0)) / 2.0));
    CHECK(r.iterations <= bound);
    CHECK(r.evaluations == r.iterations + 3);
}

TEST_CASE("golden_section_min - monotone objective hits the endpoint")
{
    const auto up = golden_section_min([](double x) { return x; }, 1.0, 5.0, 1e-3);
    CHECK(up.argmin - 1.0 <= 1e-3);
    const auto down = golden_section_min([](double x) { return -std::exp(x); }, 1.0, 5.0, 1e-3);
    CHECK(5.0 - down.argmin <= 1e-3);
}

TEST_CASE("golden_section_min - invalid bracket")
{
    auto f = [](double x) { return x * x; };
    CHECK_THROWS_AS(golden_section_min(f, 2.0, 2.0, 0.1), DomainError);
    CHECK_THROWS_AS(golden_section_min(f, 3.0, 2.0, 0.1), DomainError);
    CHECK_THROWS_AS(golden_section_min(f, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("optimal_altitude - flat exponent favours the lowest altitude")
{
    AltitudeSearchSpec spec;
    spec.evaluator = AltitudeEvaluator::Analytic;
    spec.config.air.alpha_zenith = spec.config.air.alpha_ground;
    const AltitudeResult r = optimal_altitude(spec);
    CHECK(r.altitude - spec.h_lo <= spec.tol);
    CHECK(r.local_minima == 1);
}

TEST_CASE("optimal_altitude - default scenario has an interior optimum")
{
    AltitudeSearchSpec spec;
    spec.evaluator = AltitudeEvaluator::Analytic;
    const AltitudeResult r = optimal_altitude(spec);
    CHECK(r.altitude > spec.h_lo + spec.tol);
    CHECK(r.altitude < spec.h_hi - spec.tol);
    CHECK(r.bracket_lo <= r.altitude);
    CHECK(r.altitude <= r.bracket_hi);
    CHECK(r.zsrp < altitude_objective(spec, spec.h_lo));
    CHECK(r.zsrp < altitude_objective(spec, spec.h_hi));
}

TEST_CASE("optimal_altitude - fully and single connected optima coincide")
{
    AltitudeSearchSpec spec;
    spec.mc.trials = 20000;
    spec.mc.seed = 3;
    spec.mc.eve = EveAveraging::Conditional;
    spec.tol = 5.0;
    spec.scheme = SchemeId::FcrRs;
    const AltitudeResult fc = optimal_altitude(spec);
    spec.scheme = SchemeId::ScrRs;
    const AltitudeResult sc = optimal_altitude(spec);
    CHECK(std::abs(fc.altitude - sc.altitude) <= spec.tol);
    CHECK(fc.zsrp < sc.zsrp);
}

TEST_CASE("optimal_altitude - validation")
{
    AltitudeSearchSpec spec;
    spec.h_lo = 500.0;
    spec.h_hi = 100.0;
    CHECK_THROWS_AS(optimal_altitude(spec), DomainError);
    AltitudeSearchSpec sc;
    sc.evaluator = AltitudeEvaluator::Analytic;
    sc.scheme = SchemeId::ScrRs;
    CHECK_THROWS_AS(optimal_altitude(sc), DomainError);
}
