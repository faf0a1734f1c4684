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

#include <complex>
#include <optional>
#include <vector>

namespace rissec {

/// \name Gamma family
/// @{

/// ln Gamma(x) for x > 0 (Stirling series after an upward shift).
double ln_gamma(double x);

/// Principal-branch-free complex log-gamma: exp(ln_gamma(z)) == Gamma(z).
/// The imaginary part is only determined modulo 2 pi.
std::complex<double> ln_gamma(std::complex<double> z);

/// Gamma(a, x) / Gamma(a) for integer a >= 1, via the finite sum
/// e^{-x} sum_{t<a} x^t / t!, accumulated in log space.
double regularized_upper_gamma(int a, double x);

/// 1 - Gamma(a, x) / Gamma(a), summed directly for x < a + 1 so that small
/// probabilities keep their relative accuracy.
double regularized_lower_gamma(int a, double x);

/// @}

/// \name Modified Bessel function of the second kind, integer order
/// K_0 and K_1 come from the power series (x <= 2) or Steed's continued
/// fraction (x > 2); higher orders use the upward recurrence
/// K_{n+1} = K_{n-1} + (2n / x) K_n, which is stable for K.
/// @{

struct BesselKResult {
    double value = 0.0;
    bool underflow = false;
    bool overflow = false;
};

/// K_nu(x). Underflow returns 0 with the flag set, overflow returns +inf.
BesselKResult bessel_k_checked(int nu, double x);

double bessel_k(int nu, double x);

/// e^x K_nu(x); finite for all x > 0 unless the order is huge and x tiny.
double bessel_k_scaled(int nu, double x);

/// ln K_nu(x), never underflows.
double log_bessel_k(int nu, double x);

/// @}

/// \name Meijer G-function G^{m,0}_{p,m}
///
/// (1 / 2 pi i) * integral of prod_j Gamma(b_j + s) / prod_k Gamma(a_k + s) * x^{-s} ds
/// along the vertical line Re s = c, evaluated with the trapezoidal rule.
/// Requires m > p so that the integrand decays like exp(-(m - p) pi |Im s| / 2).
/// @{

struct MeijerGm0Params {
    std::vector<double> upper; // a_k, denominators 1 / Gamma(a_k + s)
    std::vector<double> lower; // b_j, numerators Gamma(b_j + s)
    double x = 0.0;
};

/// G^{3,0}_{1,3}(x | a1; b1, b2, b3).
MeijerGm0Params meijer_g30_params(double a1, double b1, double b2, double b3, double x);

struct MeijerGOptions {
    double initial_step = 0.05;
    double rel_tol = 1e-10;
    int max_halvings = 10;
    // Vertical line abscissa; chosen automatically (saddle point of the
    // real-axis integrand, at least 0.5 right of the last pole) when unset.
    std::optional<double> abscissa;
    // Added to the log of the integrand; returns exp(log_prefactor) * G and
    // lets callers fold huge constant factors into the contour sum.
    double log_prefactor = 0.0;
};

struct MeijerGResult {
    double value = 0.0;
    double abscissa = 0.0;
    double step = 0.0;
    double error_estimate = 0.0;
    double abs_integral = 0.0; // integral of |integrand|, a cancellation gauge
    int evaluations = 0;
};

MeijerGResult meijer_g_m0_eval(const MeijerGm0Params& params, const MeijerGOptions& options = {});

double meijer_g_m0(const MeijerGm0Params& params, double log_prefactor = 0.0);

/// @}

} // namespace rissec
