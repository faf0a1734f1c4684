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

#include "rissec/propagation.hpp"

#include <cmath>
#include <numbers>

#include "rissec/errors.hpp"

namespace rissec {

double distance(const NodePosition& a, const NodePosition& b)
{
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

double ScenarioGeometry::bs_ris_distance() const
{
    return std::hypot(r_br, h_br);
}

void ScenarioGeometry::validate() const
{
    if (!(r_br > 0.0) || !(h_br > 0.0) || !(r_max > 0.0))
        throw DomainError("geometry: r_br, h_br and r_max must be strictly positive");
    if (d_rn.empty())
        throw DomainError("geometry: at least one user is required");
    for (double d : d_rn) {
        if (!(d > 0.0))
            throw DomainError("geometry: RIS-user distances must be strictly positive");
    }
}

void AirGroundParams::validate() const
{
    if (!(a2 > 0.0) || !(b2 > 0.0))
        throw DomainError("environment: a2 and b2 must be positive");
    if (!(g0 > 0.0))
        throw DomainError("environment: g0 must be positive");
    if (alpha_zenith > alpha_ground)
        throw DomainError("environment: alpha_zenith must not exceed alpha_ground");
    if (!(alpha_be > 0.0))
        throw DomainError("environment: alpha_be must be positive");
}

double elevation_angle(double h, double r)
{
    if (!(r > 0.0))
        throw DomainError("elevation_angle: horizontal distance must be positive");
    if (h < 0.0)
        throw DomainError("elevation_angle: height must be non-negative");
    return std::atan(h / r);
}

double radians_to_degrees(double rad)
{
    return rad * 180.0 / std::numbers::pi;
}

double los_probability(double theta_deg, const AirGroundParams& params)
{
    if (theta_deg < 0.0 || theta_deg > 90.0)
        throw DomainError("los_probability: elevation must lie in [0, 90] degrees");
    return 1.0 / (1.0 + params.a2 * std::exp(-params.b2 * (theta_deg - params.a2)));
}

ExponentCoefficients fit_exponent_coefficients(const AirGroundParams& params)
{
    const double e = params.a2 * std::exp(params.a2 * params.b2);
    ExponentCoefficients c;
    c.a1 = (params.alpha_zenith - params.alpha_ground) * (1.0 + e) / e;
    c.b1 = params.alpha_ground - c.a1 / (1.0 + e);
    return c;
}

double exponent_from_los(double p_los, const ExponentCoefficients& coeffs)
{
    return coeffs.a1 * p_los + coeffs.b1;
}

double pathloss_exponent_air(double theta_deg, const AirGroundParams& params)
{
    return exponent_from_los(los_probability(theta_deg, params), fit_exponent_coefficients(params));
}

double large_scale_gain(double g0, double d, double alpha)
{
    if (!(d > 0.0))
        throw DomainError("large_scale_gain: distance must be positive");
    if (!(g0 > 0.0))
        throw DomainError("large_scale_gain: reference gain must be positive");
    return g0 * std::pow(d, -alpha);
}

double bs_ris_gain(const ScenarioGeometry& geometry, const AirGroundParams& params)
{
    const double theta = radians_to_degrees(elevation_angle(geometry.h_br, geometry.r_br));
    const double alpha = pathloss_exponent_air(theta, params);
    return large_scale_gain(params.g0, geometry.bs_ris_distance(), alpha);
}

double ris_user_gain(double d_rn, const AirGroundParams& params)
{
    return large_scale_gain(params.g0, d_rn, params.alpha_rn);
}

double sample_eve_distance(Rng& rng, double r_max)
{
    if (r_max < 0.0)
        throw DomainError("sample_eve_distance: radius must be non-negative");
    return r_max * std::cbrt(uniform_open0(rng));
}

EvePlacement sample_eve_placement(Rng& rng, double r_max)
{
    EvePlacement e;
    e.d_be = sample_eve_distance(rng, r_max);
    e.lambda_e = 2.0 * std::numbers::pi * std::generate_canonical<double, 53>(rng);
    // cos(beta) uniform on [-1, 1] gives a direction uniform on the sphere.
    e.beta_e = std::acos(1.0 - 2.0 * std::generate_canonical<double, 53>(rng));
    return e;
}

double eve_wiretap_gain(double g0, double d_be, double alpha_be)
{
    if (!(d_be > 0.0))
        throw DomainError("eve_wiretap_gain: distance must be positive");
    return g0 * std::pow(d_be, -alpha_be);
}

} // namespace rissec
