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

#include "rissec/fading.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "rissec/errors.hpp"
#include "rissec/specfun.hpp"

namespace rissec {

void FadingParams::validate() const
{
    if (m1 < 1 || m2 < 1)
        throw DomainError("fading: Nakagami shapes must be integers >= 1");
    if (L < 1)
        throw DomainError("fading: the RIS needs at least one element");
}

double sample_gamma(Rng& rng, double shape, double scale)
{
    if (!(shape > 0.0) || !(scale > 0.0))
        throw DomainError("sample_gamma: shape and scale must be positive");
    std::gamma_distribution<double> dist(shape, scale);
    return dist(rng);
}

ChannelVector sample_channel_vector(Rng& rng, int m, double sigma2, int L)
{
    if (m < 1 || L < 1)
        throw DomainError("sample_channel_vector: need m >= 1 and L >= 1");
    if (!(sigma2 > 0.0))
        throw DomainError("sample_channel_vector: sigma2 must be positive");
    std::gamma_distribution<double> power(static_cast<double>(m), sigma2 / m);
    ChannelVector v(L);
    for (int l = 0; l < L; ++l) {
        const double mag = std::sqrt(power(rng));
        const double phase = 2.0 * std::numbers::pi * std::generate_canonical<double, 53>(rng);
        v[l] = std::polar(mag, phase);
    }
    return v;
}

double cdf_S(double s, int m1, int L)
{
    if (s < 0.0)
        throw DomainError("cdf_S: argument must be non-negative");
    return regularized_lower_gamma(m1 * L, m1 * s);
}

double pdf_W(double w, int m2, int L)
{
    if (w < 0.0)
        throw DomainError("pdf_W: argument must be non-negative");
    const int shape = m2 * L;
    if (w == 0.0)
        return shape == 1 ? static_cast<double>(m2) : 0.0;
    const double log_pdf =
        (shape - 1.0) * std::log(w) + shape * std::log(static_cast<double>(m2)) - m2 * w - ln_gamma(shape);
    return std::exp(log_pdf);
}

double sample_S(Rng& rng, int m1, int L)
{
    return sample_gamma(rng, static_cast<double>(m1) * L, 1.0 / m1);
}

double sample_W(Rng& rng, int m2, int L)
{
    return sample_gamma(rng, static_cast<double>(m2) * L, 1.0 / m2);
}

} // namespace rissec
