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

#include <Eigen/Dense>

#include "rissec/random.hpp"

namespace rissec {

// Nakagami shapes are integers so that the finite-sum CDFs apply.
struct FadingParams {
    int m1 = 2; // RIS-user links
    int m2 = 2; // BS-RIS link
    int L = 16; // RIS elements

    void validate() const;
};

// Per-element complex coefficients; |h_l|^2 ~ sigma^2 Gamma(m, 1/m) with
// independent uniform phases.
using ChannelVector = Eigen::VectorXcd;

double sample_gamma(Rng& rng, double shape, double scale);

ChannelVector sample_channel_vector(Rng& rng, int m, double sigma2, int L);

// CDF of S ~ Gamma(m1 L, 1/m1), the unit-power norm of a RIS-user vector.
double cdf_S(double s, int m1, int L);

// Density of W ~ Gamma(m2 L, 1/m2), the unit-power norm of the BS-RIS vector.
double pdf_W(double w, int m2, int L);

double sample_S(Rng& rng, int m1, int L);
double sample_W(Rng& rng, int m2, int L);

} // namespace rissec
