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

#include <vector>

#include "rissec/random.hpp"

namespace rissec {

// Cartesian position in meters; the RIS sits at the origin.
struct NodePosition {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance(const NodePosition& a, const NodePosition& b);

// Deterministic deployment. r_br is the horizontal BS-RIS distance, the
// UAV hovers at height h_br above it, and d_rn holds one RIS-user distance
// per user.
struct ScenarioGeometry {
    double r_br = 300.0;
    double h_br = 140.0;
    std::vector<double> d_rn = std::vector<double>(4, 50.0);
    double r_max = 500.0;

    std::size_t num_users() const { return d_rn.size(); }
    // 3D BS-RIS distance used by the large-scale gain.
    double bs_ris_distance() const;
    NodePosition bs_position() const { return {r_br, 0.0, h_br}; }
    void validate() const;
};

// Eve relative to the centre of its sphere (normally the UAV-BS).
struct EvePlacement {
    double d_be = 0.0;
    double lambda_e = 0.0; // azimuth, [0, 2pi)
    double beta_e = 0.0;   // polar angle, [0, pi]
};

// Air-to-ground environment. Elevation-dependent quantities take degrees,
// which is the unit the published (a2, b2) pairs assume.
struct AirGroundParams {
    double a2 = 9.61;
    double b2 = 0.16;
    double alpha_zenith = 2.0; // exponent at 90 degrees elevation
    double alpha_ground = 3.5; // exponent at 0 degrees elevation
    double g0 = 1.0e6;         // lumped reference gain at 1 m, linear
    double alpha_rn = 3.5;     // RIS-user exponent, equals alpha_ground by default
    double alpha_be = 2.0;     // air-to-air exponent of the wiretap link

    void validate() const;
};

struct ExponentCoefficients {
    double a1 = 0.0;
    double b1 = 0.0;
};

// arctan(h / r) in radians.
double elevation_angle(double h, double r);

double radians_to_degrees(double rad);

// Logistic LoS probability for an elevation given in degrees.
double los_probability(double theta_deg, const AirGroundParams& params);

// a1, b1 chosen so that the exponent equals alpha_ground when the LoS
// probability takes its 0-degree value and alpha_zenith when it is 1.
ExponentCoefficients fit_exponent_coefficients(const AirGroundParams& params);

double exponent_from_los(double p_los, const ExponentCoefficients& coeffs);

double pathloss_exponent_air(double theta_deg, const AirGroundParams& params);

// G0 * d^-alpha.
double large_scale_gain(double g0, double d, double alpha);

// BS-RIS per-element gain sigma_2^2 at the configured altitude.
double bs_ris_gain(const ScenarioGeometry& geometry, const AirGroundParams& params);

// RIS-user per-element gain sigma_1^2 for one user distance.
double ris_user_gain(double d_rn, const AirGroundParams& params);

// Distance to a point drawn uniformly in a ball of radius r_max; density
// 3 psi^2 / r_max^3 on [0, r_max].
double sample_eve_distance(Rng& rng, double r_max);

// Full uniform-in-ball placement; only d_be enters the secrecy metrics.
EvePlacement sample_eve_placement(Rng& rng, double r_max);

// Deterministic LoS wiretap gain G0 * d^-alpha_be.
double eve_wiretap_gain(double g0, double d_be, double alpha_be = 2.0);

} // namespace rissec
