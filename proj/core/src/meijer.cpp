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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rissec/errors.hpp"
#include "rissec/specfun.hpp"

namespace rissec {

namespace {

using Complex = std::complex<double>;

// Real log of the integrand on the real axis; its minimiser is the saddle
// point the contour should pass through to limit cancellation.
double real_log_integrand(const MeijerGm0Params& p, double c)
{
    double v = -c * std::log(p.x);
    for (double b : p.lower)
        v += ln_gamma(b + c);
    for (double a : p.upper) {
        const double arg = a + c;
        if (arg > 0.0)
            v -= ln_gamma(arg);
        else
            v -= std::real(ln_gamma(Complex(arg, 0.0)));
    }
    return v;
}

double saddle_abscissa(const MeijerGm0Params& p, double c_floor)
{
    auto phi = [&](double c) { return real_log_integrand(p, c); };
    double lo = c_floor;
    double step = 1.0;
    double hi = lo + step;
    // Expand until the real-axis integrand grows again.
    while (phi(hi + step) < phi(hi) && hi < 1e6) {
        lo = hi;
        step *= 2.0;
        hi += step;
    }
    hi += step;
    constexpr double kInvPhi = 0.6180339887498949;
    double c1 = hi - kInvPhi * (hi - lo);
    double c2 = lo + kInvPhi * (hi - lo);
    double f1 = phi(c1);
    double f2 = phi(c2);
    for (int it = 0; it < 200 && hi - lo > 1e-6 * (1.0 + std::abs(hi)); ++it) {
        if (f1 < f2) {
            hi = c2;
            c2 = c1;
            f2 = f1;
            c1 = hi - kInvPhi * (hi - lo);
            f1 = phi(c1);
        } else {
            lo = c1;
            c1 = c2;
            f1 = f2;
            c2 = lo + kInvPhi * (hi - lo);
            f2 = phi(c2);
        }
    }
    return std::max(c_floor, 0.5 * (lo + hi));
}

Complex log_integrand(const MeijerGm0Params& p, Complex s, double log_x)
{
    Complex v = -s * log_x;
    for (double b : p.lower)
        v += ln_gamma(b + s);
    for (double a : p.upper)
        v -= ln_gamma(a + s);
    return v;
}

} // namespace

MeijerGm0Params meijer_g30_params(double a1, double b1, double b2, double b3, double x)
{
    return MeijerGm0Params{{a1}, {b1, b2, b3}, x};
}

MeijerGResult meijer_g_m0_eval(const MeijerGm0Params& params, const MeijerGOptions& options)
{
    if (!(params.x > 0.0))
        throw DomainError("meijer_g: argument must be positive");
    if (params.lower.empty() || params.lower.size() <= params.upper.size())
        throw DomainError("meijer_g: need more lower than upper parameters for a convergent contour");
    if (!(options.initial_step > 0.0))
        throw DomainError("meijer_g: step must be positive");

    const double b_min = *std::min_element(params.lower.begin(), params.lower.end());
    const double c_pole = -b_min; // rightmost pole of prod Gamma(b_j + s)
    double c = 0.0;
    if (options.abscissa) {
        c = *options.abscissa;
        if (!(c > c_pole)) {
            std::ostringstream msg;
            msg << "meijer_g: contour Re s = " << c << " does not separate the poles at Re s <= " << c_pole;
            throw DomainError(msg.str());
        }
    } else {
        c = saddle_abscissa(params, c_pole + 0.5);
    }

    const double log_x = std::log(params.x);
    MeijerGResult result;
    result.abscissa = c;

    // Re f(c + iy) scaled by exp(log_prefactor - log_peak) so huge gamma
    // products never overflow; log_peak is the log-magnitude at y = 0.
    const double log_peak = std::real(log_integrand(params, Complex(c, 0.0), log_x)) + options.log_prefactor;
    auto sample = [&](double y, double& magnitude) {
        const Complex lf = log_integrand(params, Complex(c, y), log_x) + options.log_prefactor - log_peak;
        ++result.evaluations;
        const Complex f = std::exp(lf);
        magnitude = std::abs(f);
        return f.real();
    };

    // Far enough that the integrand sits below 1e-16 of its peak.
    constexpr double kTruncation = 1e-16;
    double h = options.initial_step;
    double mag = 0.0;
    double sum = 0.5 * sample(0.0, mag);
    double abs_sum = 0.5 * mag;
    double peak = mag;
    double y_max = 0.0;
    {
        int below = 0;
        for (int k = 1;; ++k) {
            const double y = k * h;
            sum += sample(y, mag);
            abs_sum += mag;
            peak = std::max(peak, mag);
            below = mag < kTruncation * peak ? below + 1 : 0;
            if (below >= 8) {
                y_max = y;
                break;
            }
            if (y > 1e4) {
                std::ostringstream msg;
                msg << "meijer_g: integrand has not decayed by Im s = " << y << " (|f|/peak = " << mag / peak
                    << ", abscissa " << c << ")";
                throw AccuracyError(msg.str());
            }
        }
    }

    double estimate = sum * h;
    double error = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int level = 0; level < options.max_halvings; ++level) {
        const int n_new = static_cast<int>(std::ceil(y_max / h));
        double added = 0.0;
        for (int k = 0; k < n_new; ++k) {
            const double y = (k + 0.5) * h;
            added += sample(y, mag);
            abs_sum += mag;
        }
        sum += added;
        h *= 0.5;
        const double refined = sum * h;
        error = std::abs(refined - estimate);
        estimate = refined;
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * abs_sum * h;
        if (level >= 1 && (error <= options.rel_tol * std::abs(estimate) || error <= floor)) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "meijer_g: trapezoid did not self-converge (last change " << error << ", value " << estimate
            << ", abscissa " << c << ", step " << h << ")";
        throw AccuracyError(msg.str());
    }

    const double scale = std::exp(log_peak) / std::numbers::pi;
    result.value = estimate * scale;
    result.error_estimate = error * scale;
    result.abs_integral = abs_sum * h * scale;
    result.step = h;
    return result;
}

double meijer_g_m0(const MeijerGm0Params& params, double log_prefactor)
{
    MeijerGOptions opts;
    opts.log_prefactor = log_prefactor;
    return meijer_g_m0_eval(params, opts).value;
}

} // namespace rissec
