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

#pragma once

#include <functional>
#include <vector>

#include "rissec/scheduling.hpp"
#include "rissec/secrecy.hpp"

namespace rissec {

struct GoldenSectionResult {
    double argmin = 0.0;
    double value = 0.0;
    int evaluations = 0;
    int iterations = 0;
};

// Golden-section search on [lo, hi] for a unimodal f. Stops once the bracket
// is at most tol wide and returns its midpoint. lo >= hi or tol <= 0 throws.
GoldenSectionResult golden_section_min(const std::function<double(double)>& f, double lo, double hi, double tol);

enum class AltitudeEvaluator {
    Analytic,
    MonteCarlo,
};

struct AltitudeSearchSpec {
    double h_lo = 50.0;
    double h_hi = 1000.0;
    double tol = 1.0;
    SchemeId scheme = SchemeId::FcrRs;
    ScenarioConfig config;
    AltitudeEvaluator evaluator = AltitudeEvaluator::MonteCarlo;
    // Same seed at every altitude (common random numbers).
    MonteCarloOptions mc;
    int prescan_points = 16;

    void validate() const;
};

struct AltitudeResult {
    double altitude = 0.0;
    double zsrp = 0.0;
    int evaluations = 0;
    int local_minima = 0; // in the pre-scan; more than one hints at multi-modality
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

// ZSRP of spec.scheme with the UAV-BS at altitude h and r_br held fixed.
double altitude_objective(const AltitudeSearchSpec& spec, double h);

// Coarse pre-scan, then golden-section refinement inside the bracket around
// the best pre-scan point.
AltitudeResult optimal_altitude(const AltitudeSearchSpec& spec);

} // namespace rissec
