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

#include "rissec/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rissec/errors.hpp"

namespace rissec::quad {

namespace {

constexpr int kOrder = 20;

struct Rule {
    std::array<double, kOrder> nodes{};
    std::array<double, kOrder> weights{};
};

// Legendre roots by Newton iteration from the Chebyshev-like initial guess.
Rule make_rule()
{
    Rule r;
    for (int i = 0; i < kOrder; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int n = 2; n <= kOrder; ++n) {
                const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        r.nodes[static_cast<std::size_t>(i)] = x;
        r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const Rule& rule()
{
    static const Rule r = make_rule();
    return r;
}

double panel(const Integrand& f, double a, double b, int& evaluations)
{
    const Rule& r = rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i)
        sum += r.weights[static_cast<std::size_t>(i)] * f(mid + half * r.nodes[static_cast<std::size_t>(i)]);
    evaluations += kOrder;
    return sum * half;
}

struct Adaptive {
    const Integrand& f;
    double total_width;
    double abs_tol;
    double rel_tol;
    int max_depth;
    int evaluations = 0;
    double error = 0.0;

    double run(double a, double b, double whole, int depth)
    {
        const double m = 0.5 * (a + b);
        const double left = panel(f, a, m, evaluations);
        const double right = panel(f, m, b, evaluations);
        const double refined = left + right;
        const double diff = std::abs(refined - whole);
        const double local_tol = std::max(abs_tol * (b - a) / total_width, rel_tol * std::abs(refined));
        if (diff <= local_tol || diff <= 1e-15 * std::abs(refined)) {
            error += diff;
            return refined;
        }
        if (depth >= max_depth) {
            std::ostringstream msg;
            msg << "quadrature: no convergence on [" << a << ", " << b << "] (difference " << diff << ")";
            throw AccuracyError(msg.str());
        }
        return run(a, m, left, depth + 1) + run(m, b, right, depth + 1);
    }
};

} // namespace

Result integrate(const Integrand& f, double a, double b, double abs_tol, double rel_tol, int max_depth)
{
    Result res;
    if (a == b)
        return res;
    if (b < a) {
        res = integrate(f, b, a, abs_tol, rel_tol, max_depth);
        res.value = -res.value;
        return res;
    }
    Adaptive ad{f, b - a, abs_tol, rel_tol, max_depth};
    const double whole = panel(f, a, b, ad.evaluations);
    res.value = ad.run(a, b, whole, 0);
    res.error = ad.error;
    res.evaluations = ad.evaluations;
    return res;
}

Result integrate_to_infinity(const Integrand& f, double a, double width, double abs_tol, double rel_tol)
{
    if (!(width > 0.0))
        throw DomainError("quadrature: panel width must be positive");
    Result total;
    double lo = a;
    double w = width;
    for (int k = 0; k < 200; ++k) {
        const Result part = integrate(f, lo, lo + w, 0.25 * abs_tol, rel_tol);
        total.value += part.value;
        total.error += part.error;
        total.evaluations += part.evaluations;
        if (k > 0 && std::abs(part.value) < 0.25 * abs_tol)
            return total;
        lo += w;
        w *= 2.0;
    }
    throw AccuracyError("quadrature: semi-infinite integral did not settle");
}

} // namespace rissec::quad
