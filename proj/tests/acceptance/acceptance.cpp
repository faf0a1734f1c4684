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

// Acceptance suite: one PASS/FAIL line per criterion, exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "oracles.hpp"
#include "rissec/analytic.hpp"
#include "rissec/bdris.hpp"
#include "rissec/experiment.hpp"
#include "rissec/fading.hpp"
#include "rissec/optimize.hpp"
#include "rissec/random.hpp"
#include "rissec/scheduling.hpp"
#include "rissec/secrecy.hpp"
#include "rissec/specfun.hpp"

using namespace rissec;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Report {
  public:
    void fail(const std::string& what)
    {
        if (out_.pass)
            out_.detail = what;
        out_.pass = false;
    }
    void note(const std::string& what)
    {
        if (out_.pass)
            out_.detail += (out_.detail.empty() ? "" : "; ") + what;
    }
    bool require(bool ok, const std::string& what)
    {
        if (!ok)
            fail(what);
        return ok;
    }
    Outcome outcome() const { return out_; }

  private:
    Outcome out_;
};

std::string fmt(const char* f, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

unsigned hardware_threads()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

// Monte-Carlo ZSRP against quadrature at the default scenario.
Outcome oracle_chain()
{
    Report r;
    const ScenarioConfig cfg;
    MonteCarloOptions mc;
    mc.trials = 1000000;
    mc.seed = 2026;
    mc.threads = hardware_threads();
    const std::vector<SchemeId> schemes = {SchemeId::FcrRs, SchemeId::FcrGcsiPfs};
    const auto t0 = std::chrono::steady_clock::now();
    const auto est = run_monte_carlo(cfg, schemes, mc);
    const double per_point = seconds_since(t0);
    const ClosedFormParams p = reduce_config(cfg);
    const double ref[2] = {zsrp_rs(p).value, zsrp_pfs(p).value};
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        const double z = std::abs(est[i].p_hat - ref[i]) / est[i].std_err;
        r.require(z <= 3.0, fmt("%s: mc %.6f vs quadrature %.6f is %.2f std-err apart",
                                std::string(to_string(schemes[i])).c_str(), est[i].p_hat, ref[i], z));
        r.note(fmt("%s mc %.6f quad %.6f (%.2f se)", std::string(to_string(schemes[i])).c_str(), est[i].p_hat,
                   ref[i], z));
    }
    r.require(per_point < 60.0, fmt("runtime %.1f s per point exceeds 60 s", per_point));
    r.note(fmt("%.1f s per point on %u thread(s)", per_point, mc.threads));
    return r.outcome();
}

// Series CDF of the cascaded gain against a two-dimensional quadrature oracle.
Outcome closed_form_fidelity()
{
    Report r;
    const ClosedFormParams base = reduce_config(ScenarioConfig{});
    const double c = base.sigma1_sq * base.sigma2_sq;
    double worst = 0.0;
    for (auto [m1, m2, L] : {std::tuple{1, 1, 1}, std::tuple{2, 2, 2}, std::tuple{2, 2, 16}}) {
        ClosedFormParams p = base;
        p.m1 = m1;
        p.m2 = m2;
        p.L = L;
        const double mean = c * L * L;
        for (int i = 0; i < 20; ++i) {
            const double z = mean * std::pow(10.0, -3.0 + 4.0 * i / 19.0);
            const double err = std::abs(cdf_Z_single(z, p) - oracle::cdf_product_2d(z, m1, m2, L, c));
            worst = std::max(worst, err);
            r.require(err < 1e-8, fmt("(m1, m2, L) = (%d, %d, %d), z = %.4g: error %.3g", m1, m2, L, z, err));
        }
    }
    r.note(fmt("max abs error %.2g", worst));
    return r.outcome();
}

// Subset series of the CDF of the largest of N Gamma sums against F^N.
Outcome multinomial_identity()
{
    Report r;
    double worst = 0.0;
    for (int N : {2, 3, 4})
        for (auto [m1, L] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}, std::pair{1, 4}}) {
            const auto terms = enumerate_subset_terms(N, m1 * L);
            // Quantiles of the maximum, so the target is never vanishingly small.
            for (double q : {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.9999}) {
                const double s = boost::math::gamma_p_inv(static_cast<double>(m1 * L), std::pow(q, 1.0 / N)) / m1;
                const double ref = std::pow(oracle::cdf_gamma_sum(s, m1, L), N);
                const double rel = std::abs(cdf_S_order_series(s, m1, terms) - ref) / ref;
                worst = std::max(worst, rel);
                r.require(rel < 1e-9, fmt("N = %d, m1 L = %d, s = %.4g: relative error %.3g", N, m1 * L, s, rel));
            }
        }
    r.note(fmt("max rel error %.2g", worst));
    return r.outcome();
}

Outcome special_functions()
{
    Report r;
    for (int nu : {0, 1}) {
        const double ref = oracle::bessel_k_integral(nu, 1.0);
        const double rel = std::abs(bessel_k(nu, 1.0) - ref) / ref;
        r.require(rel < 1e-10, fmt("K%d(1): relative error %.3g", nu, rel));
        r.note(fmt("K%d(1) rel %.1g", nu, rel));
    }
    double worst = 0.0;
    for (int nu : {0, 1, 3})
        for (double z : {0.25, 1.0, 4.0}) {
            const double g = meijer_g_m0(MeijerGm0Params{{}, {nu / 2.0, -nu / 2.0}, z});
            const double ref = 2.0 * oracle::bessel_k(nu, 2.0 * std::sqrt(z));
            const double rel = std::abs(g - ref) / ref;
            worst = std::max(worst, rel);
            r.require(rel < 1e-6, fmt("G20,02 at z = %.2f, nu = %d: relative error %.3g", z, nu, rel));
        }
    r.note(fmt("Meijer max rel %.1g", worst));
    return r.outcome();
}

Outcome bdris_contract()
{
    Report r;
    Rng rng = make_stream(17, 0);
    double worst_u = 0.0, worst_s = 0.0, worst_g = 0.0;
    for (int L : {2, 4, 8, 16})
        for (int k = 0; k < 1000; ++k) {
            const ChannelVector h_br = sample_channel_vector(rng, 2, 1.0, L);
            const ChannelVector h_rn = sample_channel_vector(rng, 2, 1.0, L);
            const ScatteringMatrix theta = optimal_scattering_matrix(h_br, h_rn);
            const double u = unitarity_residual(theta);
            const double s = symmetry_residual(theta);
            const double target = h_br.squaredNorm() * h_rn.squaredNorm();
            const double g = std::abs(cascaded_gain(h_br, theta, h_rn) - target) / target;
            worst_u = std::max(worst_u, u);
            worst_s = std::max(worst_s, s);
            worst_g = std::max(worst_g, g);
            r.require(u < 1e-10, fmt("L = %d draw %d: unitarity residual %.3g", L, k, u));
            r.require(s < 1e-10, fmt("L = %d draw %d: symmetry residual %.3g", L, k, s));
            r.require(g < 1e-9, fmt("L = %d draw %d: gain relative error %.3g", L, k, g));
            r.require(sc_cascaded_gain(h_br, h_rn) <= fc_cascaded_gain(h_br, h_rn),
                      fmt("L = %d draw %d: single-connected gain exceeds fully connected", L, k));
        }
    r.note(fmt("max residuals %.1g / %.1g, gain %.1g", worst_u, worst_s, worst_g));
    return r.outcome();
}

bool separated(const ZsrpEstimate& hi, const ZsrpEstimate& lo)
{
    return hi.p_hat - lo.p_hat > 3.0 * std::hypot(hi.std_err, lo.std_err);
}

Outcome trends()
{
    Report r;
    MonteCarloOptions mc;
    mc.trials = 100000;
    mc.seed = 31;
    mc.threads = hardware_threads();
    const std::vector<SchemeId> schemes(kAllSchemes.begin(), kAllSchemes.end());

    std::vector<std::vector<ZsrpEstimate>> by_r;
    for (double R : {100.0, 200.0, 300.0, 400.0, 500.0}) {
        ScenarioConfig cfg;
        cfg.geometry.r_max = R;
        by_r.push_back(run_monte_carlo(cfg, schemes, mc));
    }
    for (std::size_t i = 1; i < by_r.size(); ++i)
        for (std::size_t s = 0; s < schemes.size(); ++s)
            r.require(separated(by_r[i - 1][s], by_r[i][s]),
                      fmt("%s not decreasing in R at step %zu", std::string(to_string(schemes[s])).c_str(), i));

    std::vector<std::vector<ZsrpEstimate>> by_l;
    for (int L : {4, 8, 16, 32}) {
        ScenarioConfig cfg;
        cfg.fading.L = L;
        by_l.push_back(run_monte_carlo(cfg, schemes, mc));
        const auto& e = by_l.back();
        // Scheme order: fcr-rs, fcr-gcsi-pfs, scr-rs, scr-gcsi-pfs, scr-fcsi-pfs.
        r.require(separated(e[2], e[0]), fmt("L = %d: fcr-rs not below scr-rs", L));
        r.require(separated(e[3], e[1]), fmt("L = %d: fcr-gcsi-pfs not below scr-gcsi-pfs", L));
        r.require(separated(e[4], e[1]), fmt("L = %d: fcr-gcsi-pfs not below scr-fcsi-pfs", L));
    }
    for (std::size_t i = 1; i < by_l.size(); ++i)
        for (std::size_t s = 0; s < schemes.size(); ++s)
            r.require(separated(by_l[i - 1][s], by_l[i][s]),
                      fmt("%s not decreasing in L at step %zu", std::string(to_string(schemes[s])).c_str(), i));

    AltitudeSearchSpec spec;
    spec.mc = mc;
    spec.mc.eve = EveAveraging::Conditional;
    AltitudeResult opt[2];
    const SchemeId alt_schemes[2] = {SchemeId::FcrRs, SchemeId::ScrRs};
    for (int k = 0; k < 2; ++k) {
        spec.scheme = alt_schemes[k];
        opt[k] = optimal_altitude(spec);
        ScenarioConfig cfg = spec.config;
        cfg.scheme = spec.scheme;
        auto at = [&](double h) {
            cfg.geometry.h_br = h;
            return run_monte_carlo(cfg, spec.mc);
        };
        const ZsrpEstimate lo = at(spec.h_lo), mid = at(opt[k].altitude), hi = at(spec.h_hi);
        const std::string name(to_string(spec.scheme));
        r.require(opt[k].altitude > spec.h_lo + spec.tol && opt[k].altitude < spec.h_hi - spec.tol,
                  fmt("%s: optimum %.1f m on the search boundary", name.c_str(), opt[k].altitude));
        r.require(separated(lo, mid) && separated(hi, mid),
                  fmt("%s: altitude curve not U-shaped (%.4g, %.4g, %.4g)", name.c_str(), lo.p_hat, mid.p_hat,
                      hi.p_hat));
    }
    r.require(std::abs(opt[0].altitude - opt[1].altitude) <= spec.tol,
              fmt("optimal altitudes differ: %.2f vs %.2f m", opt[0].altitude, opt[1].altitude));
    r.note(fmt("h* fc %.2f m, sc %.2f m", opt[0].altitude, opt[1].altitude));
    return r.outcome();
}

// GCSI-PFS against full-CSI PFS normalised by its mean, with the explicit
// scattering matrix on every draw.
Outcome scheme_equivalence()
{
    Report r;
    const ScenarioConfig cfg;
    const double sigma1_sq = ris_user_gain(cfg.geometry.d_rn.front(), cfg.air);
    const double sigma2_sq = bs_ris_gain(cfg.geometry, cfg.air);
    const int L = cfg.fading.L;
    const std::size_t N = cfg.num_users();
    const double mean_gain = sigma1_sq * sigma2_sq * L * L;
    Rng rng = make_stream(77, 0);
    std::vector<double> s_norm(N), fc_norm(N);
    int mismatches = 0;
    for (int k = 0; k < 100000; ++k) {
        const ChannelDraw d = sample_channel_draw(rng, cfg);
        for (std::size_t n = 0; n < N; ++n) {
            s_norm[n] = d.h_rn[n].squaredNorm() / (sigma1_sq * L);
            fc_norm[n] = cascaded_gain(d.h_br, optimal_scattering_matrix(d.h_br, d.h_rn[n]), d.h_rn[n]) / mean_gain;
        }
        if (select_gcsi_pfs(s_norm) != select_fcsi_pfs(fc_norm))
            ++mismatches;
    }
    r.require(mismatches == 0, fmt("%d of 100000 selections differ", mismatches));
    r.note(fmt("%d mismatches in 100000 draws", mismatches));
    return r.outcome();
}

std::string single_point_csv(double gamma_b_db)
{
    LoadedConfig cfg;
    cfg.scenario.gamma_b_db = gamma_b_db;
    cfg.experiment.trials = 100000;
    cfg.experiment.seed = 8;
    RunOptions opt;
    opt.threads = hardware_threads();
    std::ostringstream out;
    write_csv(out, run_experiment(cfg, opt).rows);
    return out.str();
}

Outcome power_invariance()
{
    Report r;
    const std::string ref = single_point_csv(20.0);
    for (double g : {0.0, 40.0})
        r.require(single_point_csv(g) == ref, fmt("output at %.0f dB differs from 20 dB", g));
    r.note("CSV bytes identical at 0, 20, 40 dB");
    return r.outcome();
}

// Per-user selection frequencies of both PFS rules with unequal distances.
Outcome fairness()
{
    Report r;
    const std::uint64_t trials = 1000000;
    double worst = 0.0;
    for (int N : {2, 4, 8}) {
        ScenarioConfig cfg;
        cfg.geometry.d_rn.clear();
        for (int n = 0; n < N; ++n)
            cfg.geometry.d_rn.push_back(30.0 + 70.0 * n / std::max(1, N - 1));
        const int L = cfg.fading.L;
        const double sigma2_sq = bs_ris_gain(cfg.geometry, cfg.air);
        const double sc_mean = sc_gain_mean_unit(cfg.fading.m1, cfg.fading.m2, L);
        std::vector<double> sigma1_sq(N);
        for (int n = 0; n < N; ++n)
            sigma1_sq[n] = ris_user_gain(cfg.geometry.d_rn[n], cfg.air);

        std::vector<std::uint64_t> gcsi(N, 0), fcsi(N, 0);
        Rng rng = make_stream(99, N);
        std::gamma_distribution<double> g1(cfg.fading.m1, 1.0 / cfg.fading.m1);
        std::gamma_distribution<double> g2(cfg.fading.m2, 1.0 / cfg.fading.m2);
        Eigen::VectorXd mag_br(L), mag_rn(L);
        std::vector<double> s_norm(N), sc_rel(N);
        for (std::uint64_t k = 0; k < trials; ++k) {
            for (int l = 0; l < L; ++l)
                mag_br[l] = std::sqrt(sigma2_sq * g2(rng));
            for (int n = 0; n < N; ++n) {
                for (int l = 0; l < L; ++l)
                    mag_rn[l] = std::sqrt(sigma1_sq[n] * g1(rng));
                s_norm[n] = mag_rn.squaredNorm() / (sigma1_sq[n] * L);
                sc_rel[n] = sc_cascaded_gain(mag_br, mag_rn) / (sigma1_sq[n] * sigma2_sq * sc_mean);
            }
            ++gcsi[select_gcsi_pfs(s_norm)];
            ++fcsi[select_fcsi_pfs(sc_rel)];
        }
        const double p = 1.0 / N;
        const double se = std::sqrt(p * (1.0 - p) / trials);
        for (int n = 0; n < N; ++n)
            for (auto [name, counts] : {std::pair{"gcsi-pfs", &gcsi}, std::pair{"fcsi-pfs", &fcsi}}) {
                const double z = std::abs((*counts)[n] / static_cast<double>(trials) - p) / se;
                worst = std::max(worst, z);
                r.require(z <= 3.0, fmt("%s, N = %d, user %d: frequency %.2f std-err from 1/N", name, N, n, z));
            }
    }
    r.note(fmt("largest deviation %.2f std-err", worst));
    return r.outcome();
}

Outcome determinism()
{
    Report r;
    LoadedConfig cfg;
    cfg.experiment.kind = ExperimentKind::Fig2;
    cfg.experiment.trials = 50000;
    cfg.experiment.seed = 4;
    std::string ref;
    for (unsigned threads : {1u, 4u, 8u}) {
        RunOptions opt;
        opt.threads = threads;
        std::ostringstream out;
        write_csv(out, run_experiment(cfg, opt).rows);
        if (threads == 1)
            ref = out.str();
        else
            r.require(out.str() == ref, fmt("CSV with %u threads differs from 1 thread", threads));
    }
    r.note(fmt("%zu CSV bytes identical for 1, 4, 8 threads", ref.size()));
    return r.outcome();
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"monte-carlo vs quadrature", oracle_chain},
        {"series cdf vs 2-d quadrature", closed_form_fidelity},
        {"multinomial identity", multinomial_identity},
        {"special functions", special_functions},
        {"bd-ris contract", bdris_contract},
        {"trends in R, L and altitude", trends},
        {"gcsi vs fcsi selection", scheme_equivalence},
        {"power invariance", power_invariance},
        {"pfs fairness", fairness},
        {"determinism across threads", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("criterion %2zu %-30s %s  [%.1f s] %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                    seconds_since(t0), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
