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

#include "rissec/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "rissec/analytic.hpp"
#include "rissec/errors.hpp"

namespace rissec {

GoldenSectionResult golden_section_min(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    if (!(lo < hi))
        throw DomainError("golden_section_min: need lo < hi");
    if (!(tol > 0.0))
        throw DomainError("golden_section_min: tol must be positive");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    GoldenSectionResult res;
    double a = lo;
    double b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    res.evaluations = 2;
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
        ++res.evaluations;
        ++res.iterations;
    }
    res.argmin = 0.5 * (a + b);
    res.value = f(res.argmin);
    ++res.evaluations;
    return res;
}

void AltitudeSearchSpec::validate() const
{
    if (!(h_lo > 0.0) || !(h_lo < h_hi))
        throw DomainError("altitude search: need 0 < h_lo < h_hi");
    if (!(tol > 0.0))
        throw DomainError("altitude search: tol must be positive");
    if (prescan_points < 3)
        throw DomainError("altitude search: pre-scan needs at least 3 points");
    if (evaluator == AltitudeEvaluator::Analytic) {
        const std::string why = analytic_unavailable_reason(scheme, config);
        if (!why.empty())
            throw DomainError("altitude search: analytic evaluator unavailable, " + why);
    }
}

double altitude_objective(const AltitudeSearchSpec& spec, double h)
{
    ScenarioConfig cfg = spec.config;
    cfg.geometry.h_br = h;
    if (spec.evaluator == AltitudeEvaluator::Analytic) {
        const auto r = zsrp_for_scheme(spec.scheme, cfg);
        if (!r)
            throw DomainError("altitude_objective: analytic evaluator unavailable");
        return r->value;
    }
    cfg.scheme = spec.scheme;
    return run_monte_carlo(cfg, spec.mc).p_hat;
}

AltitudeResult optimal_altitude(const AltitudeSearchSpec& spec)
{
    spec.validate();
    AltitudeResult res;
    const int n = spec.prescan_points;
    std::vector<double> hs(n);
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
        hs[i] = spec.h_lo + (spec.h_hi - spec.h_lo) * i / (n - 1.0);
        vals[i] = altitude_objective(spec, hs[i]);
    }
    res.evaluations = n;
    for (int i = 0; i < n; ++i) {
        const bool left = i == 0 || vals[i] < vals[i - 1];
        const bool right = i == n - 1 || vals[i] <= vals[i + 1];
        if (left && right)
            ++res.local_minima;
    }
    const int best = static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    res.bracket_lo = hs[std::max(0, best - 1)];
    res.bracket_hi = hs[std::min(n - 1, best + 1)];

    const GoldenSectionResult g = golden_section_min([&](double h) { return altitude_objective(spec, h); },
                                                     res.bracket_lo, res.bracket_hi, spec.tol);
    res.evaluations += g.evaluations;
    res.altitude = g.argmin;
    res.zsrp = g.value;
    return res;
}

} // namespace rissec
