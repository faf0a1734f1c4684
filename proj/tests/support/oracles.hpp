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

// Independent reference implementations built on Boost.Math, used only by
// the tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace rissec::oracle {

inline double bessel_k(double nu, double x)
{
    return boost::math::cyl_bessel_k(nu, x);
}

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt
inline double bessel_k_integral(double nu, double x)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [&](double t) {
        const double e = x * std::cosh(t) - std::abs(nu) * t;
        return e > 745.0 ? 0.0 : 0.5 * (std::exp(-e) + std::exp(-x * std::cosh(t) - std::abs(nu) * t));
    };
    return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-15);
}

// Gamma(k, 1/m) pdf.
inline double gamma_pdf(double v, double k, double m)
{
    if (v <= 0.0)
        return (k == 1.0) ? m : 0.0;
    return std::exp(k * std::log(m) + (k - 1.0) * std::log(v) - m * v - std::lgamma(k));
}

// CDF of sum of L unit-mean Gamma(m) powers, Gamma(mL, 1/m).
inline double cdf_gamma_sum(double s, int m, int L)
{
    if (s <= 0.0)
        return 0.0;
    return boost::math::gamma_p(static_cast<double>(m) * L, m * s);
}

// Adaptive Gauss-Kronrod over consecutive panels [edges[k], edges[k + 1]].
template <class F>
double integrate_panels(F&& f, const std::vector<double>& edges, double rel_tol)
{
    double v = 0.0;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        if (edges[k + 1] > edges[k])
            v += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, edges[k], edges[k + 1], 8, rel_tol);
    return v;
}

// Edges from 0 through the mode, then doubling steps of one standard
// deviation, clipped at upper.
inline std::vector<double> gamma_edges(double mode, double sd, double upper)
{
    std::vector<double> edges = {0.0};
    if (mode > 0.0)
        edges.push_back(std::min(mode, upper));
    for (double step = sd; mode + step < upper; step *= 2.0)
        edges.push_back(mode + step);
    edges.push_back(upper);
    return edges;
}

// Pr(c S W <= z) as a genuine double integral: the inner CDF of S is itself
// integrated from its density with Gauss-Kronrod.
inline double cdf_product_2d(double z, int m1, int m2, int L, double c)
{
    const double A = static_cast<double>(m1) * L;
    const double B = static_cast<double>(m2) * L;
    // Beyond cap the Gamma(A, 1/m1) tail holds less than 1e-16 of the mass.
    const double cap = (A + 30.0 * std::sqrt(A) + 40.0) / m1;
    const double mode_s = std::max(0.0, (A - 1.0) / m1);
    const double sd_s = std::sqrt(A) / m1;
    auto inner = [&](double upper) {
        upper = std::min(upper, cap);
        if (upper <= 0.0)
            return 0.0;
        const double v = integrate_panels([&](double s) { return gamma_pdf(s, A, m1); },
                                          gamma_edges(mode_s, sd_s, upper), 1e-12);
        return std::min(v, 1.0);
    };
    auto outer = [&](double w) {
        if (w <= 0.0)
            return 0.0;
        return inner(z / (c * w)) * gamma_pdf(w, B, m2);
    };
    // The outer integrand has a kink where the inner limit reaches cap and
    // varies on the scale of w itself below the mean of W.
    const double mean = L;
    const double sd = std::sqrt(static_cast<double>(L) / m2);
    std::vector<double> edges = {0.0};
    for (double e = std::min(z / (c * cap), mean); e < mean; e *= 2.0)
        edges.push_back(e);
    edges.push_back(mean);
    edges.push_back(mean + 15.0 * sd + 20.0);
    return integrate_panels(outer, edges, 1e-10);
}

// Two-sample-free KS statistic of sorted samples against a CDF.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf)
{
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, std::abs(f - i / n), std::abs((i + 1) / n - f)});
    }
    return d;
}

} // namespace rissec::oracle
