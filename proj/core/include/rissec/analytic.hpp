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
#include <optional>
#include <string>
#include <vector>

#include "rissec/scheduling.hpp"
#include "rissec/secrecy.hpp"

namespace rissec {

// Reduced parameter set of the closed-form analysis. Requires a common
// RIS-user distance and a BS-centred eavesdropper sphere with alpha_be = 2.
struct ClosedFormParams {
    double sigma1_sq = 1.0; // per-element RIS-user large-scale gain
    double sigma2_sq = 1.0; // per-element BS-RIS large-scale gain
    int m1 = 2;
    int m2 = 2;
    int L = 16;
    int N = 4;
    double G0 = 1.0; // reference gain of the wiretap link
    double R = 500.0;

    void validate() const;
};

// Non-empty user subset J crossed with a weak composition (n_1..n_A) of |J|
// into A = m1 L parts.
struct SubsetTerm {
    std::uint32_t subset = 0; // bit mask of the users in J
    int cardinality = 0;
    std::vector<int> composition;
    int b1 = 0;            // sum_p n_p (p - 1)
    double log_a1 = 0.0;   // log of prod_k Gamma(k)^-n_k / (Gamma(B1 + 1) prod_p n_p!)
    double log_weight = 0.0; // log of |J|! prod_p Gamma(p)^-n_p / prod_p n_p!
};

inline constexpr int kMaxSeriesUsers = 12;
inline constexpr std::size_t kMaxSubsetTerms = 2000000;

// Throws CapacityError when N exceeds kMaxSeriesUsers or the expansion would
// exceed kMaxSubsetTerms terms.
std::vector<SubsetTerm> enumerate_subset_terms(int N, int m1L);

// Number of terms enumerate_subset_terms would produce (saturating).
std::size_t count_subset_terms(int N, int m1L);

// F_S(s)^N rebuilt from the subset expansion:
// 1 + sum (-1)^|J| exp(-|J| m1 s) weight (m1 s)^B1.
double cdf_S_order_series(double s, int m1, const std::vector<SubsetTerm>& terms);

// Grouped coefficients of (sum_{t<A} x^t / t!)^j, returned in the scaled form
// d_j(k) = c_j(k) k! / j^k, which lies in [0, 1]. Index [j][k], j = 0..N.
std::vector<std::vector<double>> scaled_power_coefficients(int N, int A);

// CDF of Z = sigma1^2 sigma2^2 S W (product of independent gammas), as a
// finite Bessel-K series evaluated in log space.
double cdf_Z_single(double z, const ClosedFormParams& p);

// E_W[F_S(z / (sigma1^2 sigma2^2 W))^k] by adaptive Gauss-Legendre, k = N
// when pfs is set and 1 otherwise.
double cdf_Z_quadrature(double z, const ClosedFormParams& p, bool pfs, double abs_tol = 1e-12);

// Order-statistic counterpart of cdf_Z_single from the grouped subset expansion.
double cdf_Z_order_series(double z, const ClosedFormParams& p);

struct AnalyticOptions {
    bool closed_form = false; // Meijer-G series derived from the same integrals
    bool printed = false;     // published parameterisation, kept for comparison
    double abs_tol = 1e-12;
    double warn_rel_gap = 1e-6;
};

struct ZsrpResult {
    double value = 0.0; // quadrature, the reference value
    double error_estimate = 0.0;
    std::optional<double> closed_form;
    std::optional<double> printed;
    double closed_form_gap = 0.0; // relative to value
    double printed_gap = 0.0;
    std::vector<std::string> warnings;
};

// Random-scheduling ZSRP, integral over the eavesdropper distance of
// cdf_Z_single(G0 / psi^2).
ZsrpResult zsrp_rs(const ClosedFormParams& p, const AnalyticOptions& options = {});

// Proportional-fair ZSRP with the order-statistic CDF. The closed-form path
// needs N <= kMaxSeriesUsers and is dropped with a warning otherwise.
ZsrpResult zsrp_pfs(const ClosedFormParams& p, const AnalyticOptions& options = {});

// Empty when the analytic path covers (scheme, config); otherwise the reason.
std::string analytic_unavailable_reason(SchemeId scheme, const ScenarioConfig& config);

ClosedFormParams reduce_config(const ScenarioConfig& config);

// nullopt for SC-RIS schemes and for configurations outside the closed form.
std::optional<ZsrpResult> zsrp_for_scheme(SchemeId scheme, const ScenarioConfig& config,
                                          const AnalyticOptions& options = {});

} // namespace rissec
