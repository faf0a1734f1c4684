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

#include <cstdint>
#include <span>
#include <vector>

#include "rissec/fading.hpp"
#include "rissec/propagation.hpp"
#include "rissec/scheduling.hpp"

namespace rissec {

// Where the eavesdropper sphere is centred when the UAV altitude changes.
enum class EveCenter {
    Bs,    // follows the UAV-BS
    Fixed, // stays at (r_br, 0, eve_center_altitude)
};

struct ScenarioConfig {
    ScenarioGeometry geometry;
    AirGroundParams air;
    FadingParams fading;
    double gamma_b_db = 20.0;
    SchemeId scheme = SchemeId::FcrRs;
    EveCenter eve_center = EveCenter::Bs;
    double eve_center_altitude = 140.0;

    std::size_t num_users() const { return geometry.num_users(); }
    void validate() const;
};

// One realization of all links. Noise is folded into gamma_B.
struct ChannelDraw {
    ChannelVector h_br;
    std::vector<ChannelVector> h_rn;
    double d_be = 0.0;
};

struct ZsrpEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

enum class EveAveraging {
    Sampled,     // one eavesdropper position per trial
    Conditional, // exact Pr(eve wins | main gain) averaged over trials
};

struct MonteCarloOptions {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1; // 0 picks the hardware concurrency
    EveAveraging eve = EveAveraging::Sampled;
};

double db_to_linear(double db);

// log2(1 + gamma_b * gain).
double capacity_main(double gamma_b, double cascaded_gain);
double capacity_eve(double gamma_b, double wiretap_gain);

// Zero secrecy rate event: main_gain < eve_gain (strict).
bool zsr_indicator(double main_gain, double eve_gain);

// Distance from the UAV-BS to an eavesdropper placed relative to the sphere
// centre selected by config.eve_center.
double eve_distance(const ScenarioConfig& config, const EvePlacement& placement);

// Full complex draw with the large-scale gains applied, for inspection and tests.
ChannelDraw sample_channel_draw(Rng& rng, const ScenarioConfig& config);

// Ergodic mean of the co-phased SC-RIS gain with unit large-scale gains:
// L + L (L - 1) mu1^2 mu2^2, mu_k = E|h| for a unit-power Nakagami-m_k entry.
double sc_gain_mean_unit(int m1, int m2, int L);

// Trials are split into fixed blocks with one RNG stream each, so the
// estimate does not depend on the number of worker threads. All schemes in a
// call share the same draws.
std::vector<ZsrpEstimate> run_monte_carlo(const ScenarioConfig& config, std::span<const SchemeId> schemes,
                                          const MonteCarloOptions& options);

// Single-scheme form using config.scheme.
ZsrpEstimate run_monte_carlo(const ScenarioConfig& config, const MonteCarloOptions& options);

// Fixed trial block size of the engine.
inline constexpr std::uint64_t kTrialBlock = 4096;

} // namespace rissec
