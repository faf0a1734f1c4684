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

#include "rissec/analytic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>

#include "rissec/errors.hpp"
#include "rissec/fading.hpp"
#include "rissec/quadrature.hpp"
#include "rissec/specfun.hpp"

namespace rissec {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double ln_choose(int n, int k)
{
    return ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0);
}

// Breakpoints for integrals over u = (psi / R)^3 in (0, 1]. The CDF argument
// G0 / (R^2 u^(2/3)) spans many decades near u = 0.
const std::vector<double>& u_breakpoints()
{
    static const std::vector<double> pts = {0.0, 1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.1, 1.0};
    return pts;
}

template <class F>
quad::Result integrate_over_u(F&& cdf_at_z, const ClosedFormParams& p, double abs_tol)
{
    const auto& pts = u_breakpoints();
    const double scale = p.G0 / (p.R * p.R);
    auto f = [&](double u) {
        if (!(u > 0.0))
            return 1.0;
        return cdf_at_z(scale / std::cbrt(u * u));
    };
    quad::Result total;
    const double panel_tol = abs_tol / static_cast<double>(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const quad::Result r = quad::integrate(f, pts[i], pts[i + 1], panel_tol);
        total.value += r.value;
        total.error += r.error;
        total.evaluations += r.evaluations;
    }
    return total;
}

double relative_gap(double a, double ref)
{
    return std::abs(a - ref) / std::max(std::abs(ref), std::numeric_limits<double>::min());
}

// G^{3,0}_{1,3}(x | a; b1, b2, b3) scaled by exp(log_prefactor).
double meijer_term(double a, double b1, double b2, double b3, double x, double log_prefactor)
{
    MeijerGOptions opts;
    opts.rel_tol = 1e-13;
    opts.log_prefactor = log_prefactor;
    return meijer_g_m0_eval(meijer_g30_params(a, b1, b2, b3, x), opts).value;
}

// Printed parameterisation of the FCR-RS closed form, with the argument
// rescaled so that theta^2 / 4 = m1 m2 G0 / (sigma1^2 sigma2^2 R^2).
double printed_rs(const ClosedFormParams& p)
{
    const int A = p.m1 * p.L;
    const int B = p.m2 * p.L;
    const double theta = 2.0 * std::sqrt(p.m1 * p.m2 * p.G0 / (p.sigma1_sq * p.sigma2_sq)) / p.R;
    const double lt = std::log(theta);
    double sum = 0.0;
    for (int t = 0; t < A; ++t) {
        const double mu = B + t - 4.0;
        const double rho = B - t;
        const double lp = std::log(3.0) - ln_gamma(t + 1.0) - std::log(p.R) - ln_gamma(B) +
                          (B + t) * (lt - kLn2) + mu * 2.0 * kLn2 - 2.0 * mu * lt;
        sum += meijer_term(0.0, -1.0, rho / 2.0 + mu, -rho / 2.0 + mu, theta * theta / 4.0, lp);
    }
    return 1.0 - sum;
}

double printed_pfs(const ClosedFormParams& p, const std::vector<std::vector<double>>& d)
{
    const int B = p.m2 * p.L;
    const double theta = 2.0 * std::sqrt(p.m1 * p.m2 * p.G0 / (p.sigma1_sq * p.sigma2_sq)) / p.R;
    const double lt = std::log(theta);
    double sum = 0.0;
    for (int j = 1; j <= p.N; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t k = 0; k < d[j].size(); ++k) {
            if (d[j][k] <= 0.0)
                continue;
            const double b1 = static_cast<double>(k);
            const double rho = B + b1 - 4.0;
            const double half = (B - b1) / 2.0;
            // sum of A1 over compositions with this B1 is c_j(B1) / (j! B1!).
            const double log_c = std::log(d[j][k]) + b1 * std::log(j) - ln_gamma(b1 + 1.0);
            const double log_sum_a1 = log_c - ln_gamma(j + 1.0) - ln_gamma(b1 + 1.0);
            const double lp = ln_choose(p.N, j) + std::log(j) + log_sum_a1 + std::log(3.0) +
                              0.5 * (B + b1) * std::log(j * p.sigma2_sq) - ln_gamma(b1 + 1.0) - std::log(p.R) +
                              (B + b1) * (lt - kLn2) + rho * 2.0 * kLn2 - 2.0 * rho * lt - ln_gamma(B);
            sum += sign * meijer_term(0.0, -1.0, half + rho, -half + rho, theta * theta / 4.0, lp);
        }
    }
    return 1.0 - sum;
}

void compare(ZsrpResult& res, const AnalyticOptions& options, const char* what, double candidate, double& gap)
{
    gap = relative_gap(candidate, res.value);
    if (gap > options.warn_rel_gap)
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, " differs from quadrature by %.3g relative (%.10g vs %.10g)", gap, candidate,
                      res.value);
        res.warnings.push_back(what + std::string(buf));
    }
}

} // namespace

void ClosedFormParams::validate() const
{
    if (!(sigma1_sq > 0.0) || !(sigma2_sq > 0.0) || !(G0 > 0.0) || !(R > 0.0))
        throw DomainError("closed form: sigma1^2, sigma2^2, G0 and R must be positive");
    if (m1 < 1 || m2 < 1 || L < 1 || N < 1)
        throw DomainError("closed form: m1, m2, L and N must be integers >= 1");
}

std::size_t count_subset_terms(int N, int m1L)
{
    if (N < 1 || m1L < 1)
        return 0;
    const double cap = static_cast<double>(std::numeric_limits<std::size_t>::max() / 2);
    double total = 0.0;
    for (int j = 1; j <= N; ++j)
        total += std::exp(ln_choose(N, j) + ln_choose(j + m1L - 1, m1L - 1));
    return total >= cap ? static_cast<std::size_t>(cap) : static_cast<std::size_t>(std::llround(total));
}

std::vector<SubsetTerm> enumerate_subset_terms(int N, int m1L)
{
    if (N < 1 || m1L < 1)
        throw DomainError("enumerate_subset_terms: N and m1 L must be at least 1");
    if (N > kMaxSeriesUsers)
        throw CapacityError("enumerate_subset_terms: N = " + std::to_string(N) + " exceeds " +
                            std::to_string(kMaxSeriesUsers) + "; use the quadrature path");
    const std::size_t count = count_subset_terms(N, m1L);
    if (count > kMaxSubsetTerms)
        throw CapacityError("enumerate_subset_terms: " + std::to_string(count) +
                            " terms exceed the enumeration cap; use the quadrature path");

    // Weak compositions of each cardinality, shared by all subsets of that size.
    std::vector<std::vector<std::vector<int>>> comps(N + 1);
    for (int j = 1; j <= N; ++j) {
        std::vector<int> cur(m1L, 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == m1L - 1) {
                cur[pos] = left;
                comps[j].push_back(cur);
                return;
            }
            for (int v = left; v >= 0; --v) {
                cur[pos] = v;
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, j);
    }

    std::vector<SubsetTerm> terms;
    terms.reserve(count);
    for (std::uint32_t mask = 1; mask < (1u << N); ++mask) {
        const int j = std::popcount(mask);
        for (const auto& c : comps[j]) {
            SubsetTerm term;
            term.subset = mask;
            term.cardinality = j;
            term.composition = c;
            double log_prod = 0.0;
            double log_nfact = 0.0;
            for (int p = 1; p <= m1L; ++p) {
                const int n = c[p - 1];
                term.b1 += n * (p - 1);
                log_prod -= n * ln_gamma(static_cast<double>(p));
                log_nfact += ln_gamma(n + 1.0);
            }
            term.log_a1 = log_prod - ln_gamma(term.b1 + 1.0) - log_nfact;
            term.log_weight = ln_gamma(j + 1.0) + log_prod - log_nfact;
            terms.push_back(std::move(term));
        }
    }
    return terms;
}

double cdf_S_order_series(double s, int m1, const std::vector<SubsetTerm>& terms)
{
    if (!(s > 0.0))
        return 0.0;
    const double ms = m1 * s;
    const double lms = std::log(ms);
    double sum = 1.0;
    for (const SubsetTerm& t : terms) {
        const double v = std::exp(t.log_weight + t.b1 * lms - t.cardinality * ms);
        sum += (t.cardinality % 2 == 0) ? v : -v;
    }
    return sum;
}

std::vector<std::vector<double>> scaled_power_coefficients(int N, int A)
{
    if (N < 0 || A < 1)
        throw DomainError("scaled_power_coefficients: need N >= 0 and A >= 1");
    // d_j(k) is the probability that k balls thrown uniformly into j cells
    // leave every cell with fewer than A balls; it follows a binomial split
    // of the last cell against the other j - 1.
    std::vector<std::vector<double>> d(N + 1);
    d[0] = {1.0};
    for (int j = 1; j <= N; ++j) {
        const int kmax = j * (A - 1);
        d[j].assign(kmax + 1, 0.0);
        const double lq = j > 1 ? std::log((j - 1.0) / j) : 0.0;
        const double lr = -std::log(static_cast<double>(j));
        for (int k = 0; k <= kmax; ++k) {
            double acc = 0.0;
            for (int t = 0; t <= std::min(A - 1, k); ++t) {
                const int rest = k - t;
                if (rest >= static_cast<int>(d[j - 1].size()))
                    continue;
                if (j == 1) {
                    if (rest == 0)
                        acc += d[0][0];
                    continue;
                }
                acc += std::exp(ln_choose(k, t) + rest * lq + t * lr) * d[j - 1][rest];
            }
            d[j][k] = std::min(acc, 1.0);
        }
    }
    return d;
}

double cdf_Z_single(double z, const ClosedFormParams& p)
{
    if (!(z > 0.0))
        return 0.0;
    if (std::isinf(z))
        return 1.0;
    const int A = p.m1 * p.L;
    const int B = p.m2 * p.L;
    const double x = p.m1 * p.m2 * z / (p.sigma1_sq * p.sigma2_sq);
    const double lx = std::log(x);
    const double arg = 2.0 * std::sqrt(x);
    const double base = kLn2 - ln_gamma(B);
    double sum = 0.0;
    for (int t = 0; t < A; ++t)
        sum += std::exp(base - ln_gamma(t + 1.0) + 0.5 * (B + t) * lx + log_bessel_k(std::abs(B - t), arg));
    return std::clamp(1.0 - sum, 0.0, 1.0);
}

double cdf_Z_quadrature(double z, const ClosedFormParams& p, bool pfs, double abs_tol)
{
    if (!(z > 0.0))
        return 0.0;
    if (std::isinf(z))
        return 1.0;
    const int power = pfs ? p.N : 1;
    const double a = z / (p.sigma1_sq * p.sigma2_sq);
    auto f = [&](double w) {
        const double fw = pdf_W(w, p.m2, p.L);
        if (fw == 0.0)
            return 0.0;
        const double fs = w > 0.0 ? cdf_S(a / w, p.m1, p.L) : 1.0;
        return (power == 1 ? fs : std::pow(fs, power)) * fw;
    };
    const double mean = p.L;
    const double sd = std::sqrt(static_cast<double>(p.L) / p.m2);
    const double mid = std::max(0.0, mean - 6.0 * sd);
    const double upper = mean + 12.0 * sd;
    double v = 0.0;
    if (mid > 0.0)
        v += quad::integrate(f, 0.0, mid, abs_tol / 4.0).value;
    v += quad::integrate(f, mid, mean, abs_tol / 4.0).value;
    v += quad::integrate(f, mean, upper, abs_tol / 4.0).value;
    v += quad::integrate_to_infinity(f, upper, 4.0 * sd, abs_tol / 4.0).value;
    return std::clamp(v, 0.0, 1.0);
}

double cdf_Z_order_series(double z, const ClosedFormParams& p)
{
    if (!(z > 0.0))
        return 0.0;
    if (std::isinf(z))
        return 1.0;
    if (p.N > kMaxSeriesUsers)
        throw CapacityError("cdf_Z_order_series: N exceeds the series guard");
    const int A = p.m1 * p.L;
    const int B = p.m2 * p.L;
    const auto d = scaled_power_coefficients(p.N, A);
    const double x = p.m1 * p.m2 * z / (p.sigma1_sq * p.sigma2_sq);
    double sum = 1.0;
    for (int j = 1; j <= p.N; ++j) {
        const double y = j * x;
        const double ly = std::log(y);
        const double arg = 2.0 * std::sqrt(y);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t k = 0; k < d[j].size(); ++k) {
            if (d[j][k] <= 0.0)
                continue;
            const int b1 = static_cast<int>(k);
            sum += sign * std::exp(ln_choose(p.N, j) + std::log(d[j][k]) - ln_gamma(b1 + 1.0) + kLn2 - ln_gamma(B) +
                                   0.5 * (B + b1) * ly + log_bessel_k(std::abs(B - b1), arg));
        }
    }
    return std::clamp(sum, 0.0, 1.0);
}

ZsrpResult zsrp_rs(const ClosedFormParams& p, const AnalyticOptions& options)
{
    p.validate();
    ZsrpResult res;
    const quad::Result q = integrate_over_u([&](double z) { return cdf_Z_single(z, p); }, p, options.abs_tol);
    res.value = std::clamp(q.value, 0.0, 1.0);
    res.error_estimate = q.error;

    if (options.closed_form) {
        try {
            const int A = p.m1 * p.L;
            const int B = p.m2 * p.L;
            const double X = p.m1 * p.m2 * p.G0 / (p.sigma1_sq * p.sigma2_sq * p.R * p.R);
            double sum = 0.0;
            for (int t = 0; t < A; ++t)
                sum += meijer_term(2.5, 1.5, B, t, X, kLn2 - ln_gamma(B) - ln_gamma(t + 1.0) + std::log(0.75));
            res.closed_form = 1.0 - sum;
            compare(res, options, "closed-form series", *res.closed_form, res.closed_form_gap);
        } catch (const AccuracyError& e) {
            res.warnings.push_back(std::string("closed-form series unavailable: ") + e.what());
        }
    }
    if (options.printed) {
        try {
            res.printed = printed_rs(p);
            compare(res, options, "printed closed form", *res.printed, res.printed_gap);
        } catch (const std::exception& e) {
            res.warnings.push_back(std::string("printed closed form unavailable: ") + e.what());
        }
    }
    return res;
}

ZsrpResult zsrp_pfs(const ClosedFormParams& p, const AnalyticOptions& options)
{
    p.validate();
    if (p.N == 1)
        return zsrp_rs(p, options);
    ZsrpResult res;
    const quad::Result q =
        integrate_over_u([&](double z) { return cdf_Z_quadrature(z, p, true, 0.1 * options.abs_tol); }, p,
                         options.abs_tol);
    res.value = std::clamp(q.value, 0.0, 1.0);
    res.error_estimate = q.error;

    if (!options.closed_form && !options.printed)
        return res;
    if (p.N > kMaxSeriesUsers) {
        res.warnings.push_back("closed-form series omitted: N = " + std::to_string(p.N) + " exceeds " +
                               std::to_string(kMaxSeriesUsers));
        return res;
    }
    const int A = p.m1 * p.L;
    const int B = p.m2 * p.L;
    const auto d = scaled_power_coefficients(p.N, A);
    if (options.closed_form) {
        try {
            const double X = p.m1 * p.m2 * p.G0 / (p.sigma1_sq * p.sigma2_sq * p.R * p.R);
            double sum = 1.0;
            for (int j = 1; j <= p.N; ++j) {
                const double sign = (j % 2 == 0) ? 1.0 : -1.0;
                for (std::size_t k = 0; k < d[j].size(); ++k) {
                    if (d[j][k] <= 0.0)
                        continue;
                    const double b1 = static_cast<double>(k);
                    const double lp = ln_choose(p.N, j) + std::log(d[j][k]) - ln_gamma(b1 + 1.0) + kLn2 -
                                      ln_gamma(B) + std::log(0.75);
                    sum += sign * meijer_term(2.5, 1.5, B, b1, j * X, lp);
                }
            }
            res.closed_form = sum;
            compare(res, options, "closed-form series", sum, res.closed_form_gap);
        } catch (const AccuracyError& e) {
            res.warnings.push_back(std::string("closed-form series unavailable: ") + e.what());
        }
    }
    if (options.printed) {
        try {
            res.printed = printed_pfs(p, d);
            compare(res, options, "printed closed form", *res.printed, res.printed_gap);
        } catch (const std::exception& e) {
            res.warnings.push_back(std::string("printed closed form unavailable: ") + e.what());
        }
    }
    return res;
}

std::string analytic_unavailable_reason(SchemeId scheme, const ScenarioConfig& config)
{
    if (!is_fully_connected(scheme))
        return std::string(to_string(scheme)) + ": no closed form for the single-connected RIS";
    const auto& d = config.geometry.d_rn;
    if (std::any_of(d.begin(), d.end(), [&](double v) { return v != d.front(); }))
        return "closed form needs a common RIS-user distance";
    if (config.air.alpha_be != 2.0)
        return "closed form needs alpha_be = 2";
    if (config.eve_center == EveCenter::Fixed && config.eve_center_altitude != config.geometry.h_br)
        return "closed form needs the eavesdropper sphere centred on the UAV-BS";
    return {};
}

ClosedFormParams reduce_config(const ScenarioConfig& config)
{
    config.validate();
    const std::string why = analytic_unavailable_reason(SchemeId::FcrRs, config);
    if (!why.empty())
        throw DomainError("reduce_config: " + why);
    ClosedFormParams p;
    p.sigma1_sq = ris_user_gain(config.geometry.d_rn.front(), config.air);
    p.sigma2_sq = bs_ris_gain(config.geometry, config.air);
    p.m1 = config.fading.m1;
    p.m2 = config.fading.m2;
    p.L = config.fading.L;
    p.N = static_cast<int>(config.num_users());
    p.G0 = config.air.g0;
    p.R = config.geometry.r_max;
    return p;
}

std::optional<ZsrpResult> zsrp_for_scheme(SchemeId scheme, const ScenarioConfig& config,
                                          const AnalyticOptions& options)
{
    if (!analytic_unavailable_reason(scheme, config).empty())
        return std::nullopt;
    const ClosedFormParams p = reduce_config(config);
    return scheme == SchemeId::FcrRs ? zsrp_rs(p, options) : zsrp_pfs(p, options);
}

} // namespace rissec
