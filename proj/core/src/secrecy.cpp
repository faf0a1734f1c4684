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

#include "rissec/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rissec/errors.hpp"
#include "rissec/parallel.hpp"
#include "rissec/specfun.hpp"

namespace rissec {

void ScenarioConfig::validate() const
{
    geometry.validate();
    air.validate();
    fading.validate();
    if (!std::isfinite(gamma_b_db))
        throw DomainError("gamma_b must be finite");
    if (eve_center == EveCenter::Fixed && !(eve_center_altitude >= 0.0))
        throw DomainError("eve_center_altitude must be non-negative");
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double capacity_main(double gamma_b, double cascaded_gain)
{
    if (cascaded_gain < 0.0)
        throw DomainError("capacity_main: gain must be non-negative");
    return std::log2(1.0 + gamma_b * cascaded_gain);
}

double capacity_eve(double gamma_b, double wiretap_gain)
{
    if (wiretap_gain < 0.0)
        throw DomainError("capacity_eve: gain must be non-negative");
    return std::log2(1.0 + gamma_b * wiretap_gain);
}

bool zsr_indicator(double main_gain, double eve_gain)
{
    return main_gain < eve_gain;
}

double eve_distance(const ScenarioConfig& config, const EvePlacement& placement)
{
    if (config.eve_center == EveCenter::Bs)
        return placement.d_be;
    const double s = std::sin(placement.beta_e);
    const double ex = placement.d_be * s * std::cos(placement.lambda_e);
    const double ey = placement.d_be * s * std::sin(placement.lambda_e);
    const double ez = placement.d_be * std::cos(placement.beta_e);
    const double dz = config.geometry.h_br - config.eve_center_altitude - ez;
    return std::sqrt(ex * ex + ey * ey + dz * dz);
}

ChannelDraw sample_channel_draw(Rng& rng, const ScenarioConfig& config)
{
    ChannelDraw draw;
    const int L = config.fading.L;
    draw.h_br = sample_channel_vector(rng, config.fading.m2, bs_ris_gain(config.geometry, config.air), L);
    for (double d : config.geometry.d_rn)
        draw.h_rn.push_back(sample_channel_vector(rng, config.fading.m1, ris_user_gain(d, config.air), L));
    draw.d_be = eve_distance(config, sample_eve_placement(rng, config.geometry.r_max));
    return draw;
}

double sc_gain_mean_unit(int m1, int m2, int L)
{
    auto mean_mag = [](int m) { return std::exp(ln_gamma(m + 0.5) - ln_gamma(m)) / std::sqrt(m); };
    const double mu1 = mean_mag(m1);
    const double mu2 = mean_mag(m2);
    return L + static_cast<double>(L) * (L - 1) * mu1 * mu1 * mu2 * mu2;
}

namespace {

struct Engine {
    const ScenarioConfig& config;
    std::span<const SchemeId> schemes;
    EveAveraging eve;
    double sigma2_sq = 0.0;
    std::vector<double> sigma1_sq;
    std::vector<double> sc_norm; // ergodic SC gain per user
    bool need_sc = false;

    Engine(const ScenarioConfig& cfg, std::span<const SchemeId> ids, EveAveraging averaging)
        : config(cfg), schemes(ids), eve(averaging)
    {
        sigma2_sq = bs_ris_gain(cfg.geometry, cfg.air);
        const double unit = sc_gain_mean_unit(cfg.fading.m1, cfg.fading.m2, cfg.fading.L);
        for (double d : cfg.geometry.d_rn) {
            sigma1_sq.push_back(ris_user_gain(d, cfg.air));
            sc_norm.push_back(sigma1_sq.back() * sigma2_sq * unit);
        }
        for (SchemeId id : ids)
            need_sc = need_sc || !is_fully_connected(id);
    }

    // Probability-weighted zero-secrecy event for one main gain.
    double event(double main_gain, double d_be, double cond_scale) const
    {
        if (eve == EveAveraging::Sampled)
            return zsr_indicator(main_gain, eve_wiretap_gain(config.air.g0, d_be, config.air.alpha_be)) ? 1.0 : 0.0;
        if (!(main_gain > 0.0))
            return 1.0;
        // Pr(d_be < (G0 / main)^(1/alpha)) for d_be with CDF (d / R)^3.
        const double t = std::pow(main_gain, -1.0 / config.air.alpha_be) * cond_scale;
        return t >= 1.0 ? 1.0 : t * t * t;
    }

    void run_block(std::uint64_t seed, std::uint64_t block, std::uint64_t count, double* sums) const
    {
        Rng rng = make_stream(seed, block);
        const int L = config.fading.L;
        const std::size_t N = sigma1_sq.size();
        std::gamma_distribution<double> g2(config.fading.m2, 1.0 / config.fading.m2);
        std::gamma_distribution<double> g1(config.fading.m1, 1.0 / config.fading.m1);
        const double cond_scale =
            std::pow(config.air.g0, 1.0 / config.air.alpha_be) / config.geometry.r_max;

        Eigen::VectorXd mag_br(L);
        Eigen::VectorXd mag_rn(L);
        std::vector<double> s_norm(N), fc(N), sc(N), sc_rel(N);
        std::vector<double> ev_fc(N), ev_sc(N);

        for (std::uint64_t k = 0; k < count; ++k) {
            for (int l = 0; l < L; ++l)
                mag_br[l] = std::sqrt(g2(rng));
            const double w = mag_br.squaredNorm();
            for (std::size_t n = 0; n < N; ++n) {
                for (int l = 0; l < L; ++l)
                    mag_rn[l] = std::sqrt(g1(rng));
                const double s = mag_rn.squaredNorm();
                const double scale = sigma1_sq[n] * sigma2_sq;
                s_norm[n] = s / L;
                fc[n] = scale * s * w;
                if (need_sc) {
                    const double c = mag_br.dot(mag_rn);
                    sc[n] = scale * c * c;
                    sc_rel[n] = sc[n] / sc_norm[n];
                }
            }
            const EvePlacement placement = sample_eve_placement(rng, config.geometry.r_max);
            const double d_be = eve_distance(config, placement);

            for (std::size_t n = 0; n < N; ++n) {
                ev_fc[n] = event(fc[n], d_be, cond_scale);
                if (need_sc)
                    ev_sc[n] = event(sc[n], d_be, cond_scale);
            }
            const std::size_t o_gcsi = select_gcsi_pfs(s_norm);
            for (std::size_t i = 0; i < schemes.size(); ++i) {
                double v = 0.0;
                switch (schemes[i]) {
                case SchemeId::FcrRs:
                    for (double e : ev_fc)
                        v += e;
                    v /= static_cast<double>(N);
                    break;
                case SchemeId::ScrRs:
                    for (double e : ev_sc)
                        v += e;
                    v /= static_cast<double>(N);
                    break;
                case SchemeId::FcrGcsiPfs:
                    v = ev_fc[o_gcsi];
                    break;
                case SchemeId::ScrGcsiPfs:
                    v = ev_sc[o_gcsi];
                    break;
                case SchemeId::ScrFcsiPfs:
                    v = ev_sc[select_fcsi_pfs(sc_rel)];
                    break;
                }
                sums[i] += v;
            }
        }
    }
};

} // namespace

std::vector<ZsrpEstimate> run_monte_carlo(const ScenarioConfig& config, std::span<const SchemeId> schemes,
                                          const MonteCarloOptions& options)
{
    if (options.trials == 0)
        throw DomainError("run_monte_carlo: trials must be at least 1");
    if (schemes.empty())
        throw DomainError("run_monte_carlo: no scheme requested");
    config.validate();
    if (options.eve == EveAveraging::Conditional && config.eve_center != EveCenter::Bs)
        throw DomainError("run_monte_carlo: conditional eavesdropper averaging needs a BS-centred sphere");

    const Engine engine(config, schemes, options.eve);
    const std::uint64_t blocks = (options.trials + kTrialBlock - 1) / kTrialBlock;
    const std::size_t S = schemes.size();
    std::vector<double> block_sums(blocks * S, 0.0);
    parallel_for(static_cast<std::size_t>(blocks), options.threads, [&](std::size_t b) {
        const std::uint64_t first = b * kTrialBlock;
        const std::uint64_t count = std::min(kTrialBlock, options.trials - first);
        engine.run_block(options.seed, b, count, &block_sums[b * S]);
    });

    std::vector<ZsrpEstimate> out(S);
    const double n = static_cast<double>(options.trials);
    for (std::size_t i = 0; i < S; ++i) {
        double total = 0.0;
        for (std::uint64_t b = 0; b < blocks; ++b)
            total += block_sums[b * S + i];
        const double p = std::clamp(total / n, 0.0, 1.0);
        out[i] = {p, std::sqrt(p * (1.0 - p) / n), options.trials, options.seed};
    }
    return out;
}

ZsrpEstimate run_monte_carlo(const ScenarioConfig& config, const MonteCarloOptions& options)
{
    const SchemeId id = config.scheme;
    return run_monte_carlo(config, std::span<const SchemeId>(&id, 1), options).front();
}

} // namespace rissec
