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

#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>

#include "rissec/analytic.hpp"
#include "rissec/bdris.hpp"
#include "rissec/quadrature.hpp"
#include "rissec/secrecy.hpp"
#include "rissec/specfun.hpp"

namespace rissec::cli {

namespace {

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt
double bessel_k_integral(int nu, double x)
{
    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
    return quad::integrate(f, 0.0, 10.0, 1e-15).value;
}

} // namespace

int run_selftest(std::ostream& out, unsigned threads)
{
    int failures = 0;
    auto check = [&](const std::string& name, bool ok, double measured, double bound) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-44s %s  (%.3g, bound %.3g)", name.c_str(), ok ? "PASS" : "FAIL", measured,
                      bound);
        out << buf << '\n';
        failures += ok ? 0 : 1;
    };
    auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };

    for (int nu : {0, 1}) {
        const double r = rel(bessel_k(nu, 1.0), bessel_k_integral(nu, 1.0));
        check("bessel K" + std::to_string(nu) + "(1) vs integral", r < 1e-10, r, 1e-10);
    }
    {
        double worst = 0.0;
        for (int nu : {0, 1, 3})
            for (double z : {0.25, 1.0, 4.0}) {
                const double g = meijer_g_m0(MeijerGm0Params{{}, {nu / 2.0, -nu / 2.0}, z});
                worst = std::max(worst, rel(g, 2.0 * bessel_k(nu, 2.0 * std::sqrt(z))));
            }
        check("meijer G20,02 vs 2 K_nu(2 sqrt z)", worst < 1e-6, worst, 1e-6);
    }
    ClosedFormParams p;
    {
        double worst = 0.0;
        for (int k = -2; k <= 2; ++k) {
            const double z = std::pow(10.0, k) * p.L * p.L;
            worst = std::max(worst, std::abs(cdf_Z_single(z, p) - cdf_Z_quadrature(z, p, false)));
        }
        check("product CDF series vs quadrature", worst < 1e-8, worst, 1e-8);
    }
    {
        const auto terms = enumerate_subset_terms(3, 4);
        double worst = 0.0;
        for (double s : {1.0, 2.0, 4.0}) {
            const double direct = std::pow(cdf_S(s, 2, 2), 3);
            worst = std::max(worst, rel(cdf_S_order_series(s, 2, terms), direct));
        }
        check("subset expansion vs F_S^N", worst < 1e-9, worst, 1e-9);
    }
    {
        Rng rng = make_stream(7, 0);
        double worst_u = 0.0;
        double worst_g = 0.0;
        for (int i = 0; i < 100; ++i) {
            const ChannelVector hb = sample_channel_vector(rng, 2, 1.0, 8);
            const ChannelVector hr = sample_channel_vector(rng, 2, 1.0, 8);
            const ScatteringMatrix th = optimal_scattering_matrix(hb, hr);
            worst_u = std::max({worst_u, unitarity_residual(th), symmetry_residual(th)});
            worst_g = std::max(worst_g, rel(cascaded_gain(hb, th, hr), fc_cascaded_gain(hb, hr)));
        }
        check("fully-connected response residual", worst_u < 1e-10, worst_u, 1e-10);
        check("fully-connected gain equality", worst_g < 1e-9, worst_g, 1e-9);
    }
    {
        ScenarioConfig cfg;
        MonteCarloOptions mc;
        mc.trials = 50000;
        mc.seed = 2026;
        mc.threads = threads;
        const SchemeId ids[] = {SchemeId::FcrRs, SchemeId::FcrGcsiPfs};
        const auto est = run_monte_carlo(cfg, ids, mc);
        const ClosedFormParams cp = reduce_config(cfg);
        const double rs = zsrp_rs(cp).value;
        const double pfs = zsrp_pfs(cp).value;
        check("monte-carlo vs quadrature, fcr-rs", std::abs(est[0].p_hat - rs) <= 3.0 * est[0].std_err,
              std::abs(est[0].p_hat - rs), 3.0 * est[0].std_err);
        check("monte-carlo vs quadrature, fcr-gcsi-pfs", std::abs(est[1].p_hat - pfs) <= 3.0 * est[1].std_err,
              std::abs(est[1].p_hat - pfs), 3.0 * est[1].std_err);
    }
    out << (failures == 0 ? "selftest: all checks passed\n" : "selftest: " + std::to_string(failures) + " failed\n");
    return failures;
}

} // namespace rissec::cli
