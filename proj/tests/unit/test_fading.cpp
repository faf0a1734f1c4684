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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oracles.hpp"
#include "rissec/errors.hpp"
#include "rissec/fading.hpp"

using namespace rissec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("sample_gamma - moments")
{
    Rng rng = make_stream(1, 0);
    const int n = 1000000;
    for (auto [shape, scale] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
        double s1 = 0.0;
        double s2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double v = sample_gamma(rng, shape, scale);
            s1 += v;
            s2 += v * v;
        }
        const double mean = s1 / n;
        const double var = s2 / n - mean * mean;
        const double se = std::sqrt(shape * scale * scale / n);
        CHECK(std::abs(mean - shape * scale) < 3.0 * se);
        CHECK_THAT(var, WithinRel(shape * scale * scale, 0.01));
    }
    CHECK_THROWS_AS(sample_gamma(rng, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(sample_gamma(rng, 1.0, -1.0), DomainError);
}

TEST_CASE("sample_channel_vector - power and phase statistics")
{
    Rng rng = make_stream(2, 0);
    const int n = 100000;
    double total = 0.0;
    std::complex<double> phase_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const ChannelVector v = sample_channel_vector(rng, 2, 1.0, 16);
        REQUIRE(v.size() == 16);
        total += v.squaredNorm();
        phase_sum += v[0] / std::abs(v[0]);
    }
    CHECK_THAT(total / n, WithinAbs(16.0, 0.05));
    CHECK(std::abs(phase_sum) / n < 0.01);

    // m = 64 concentrates per-entry power near sigma^2.
    double s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double p = std::norm(sample_channel_vector(rng, 64, 2.0, 1)[0]);
        s2 += (p - 2.0) * (p - 2.0);
    }
    CHECK_THAT(s2 / n, WithinRel(4.0 / 64.0, 0.02));
}

TEST_CASE("sample_channel_vector - squared norm follows the S law")
{
    Rng rng = make_stream(3, 0);
    std::vector<double> s(100000);
    for (double& v : s)
        v = sample_channel_vector(rng, 2, 1.0, 16).squaredNorm();
    CHECK(oracle::ks_statistic(s, [](double x) { return oracle::cdf_gamma_sum(x, 2, 16); }) < 0.005);
}

TEST_CASE("cdf_S - closed values and limits")
{
    CHECK(cdf_S(0.0, 2, 16) == 0.0);
    CHECK_THAT(cdf_S(1.0, 1, 1), WithinAbs(1.0 - std::exp(-1.0), 1e-15));
    CHECK_THAT(cdf_S(1.0, 2, 2), WithinAbs(1.0 - std::exp(-2.0) * (1.0 + 2.0 + 2.0 + 4.0 / 3.0), 1e-15));
    CHECK_THAT(cdf_S(1.0, 2, 2), WithinAbs(0.142877, 1e-6));
    CHECK_THAT(cdf_S(1e6, 2, 16), WithinAbs(1.0, 1e-15));
    CHECK_THROWS_AS(cdf_S(-1.0, 2, 2), DomainError);
    for (int m : {1, 2, 3})
        for (int L : {1, 4, 16, 32}) {
            double prev = 0.0;
            for (int i = 1; i <= 400; ++i) {
                const double s = 0.25 * i;
                const double f = cdf_S(s, m, L);
                REQUIRE(f >= prev);
                REQUIRE_THAT(f, WithinAbs(oracle::cdf_gamma_sum(s, m, L), 1e-13));
                prev = f;
            }
        }
}

TEST_CASE("pdf_W - density properties")
{
    using boost::math::quadrature::gauss_kronrod;
    CHECK(pdf_W(0.0, 1, 1) == 1.0);
    for (auto [m, L] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{2, 16}, std::pair{3, 32}}) {
        const double mass =
            gauss_kronrod<double, 61>::integrate([&](double w) { return pdf_W(w, m, L); }, 0.0, 400.0, 20, 1e-14);
        CHECK_THAT(mass, WithinAbs(1.0, 1e-10));
        const double mode = (m * L - 1.0) / m;
        if (m * L > 1) {
            CHECK(pdf_W(mode, m, L) > pdf_W(mode * 1.01, m, L));
            CHECK(pdf_W(mode, m, L) > pdf_W(mode * 0.99, m, L));
        }
        CHECK_THAT(pdf_W(3.7, m, L), WithinRel(oracle::gamma_pdf(3.7, m * L, m), 1e-12));
    }
    CHECK_THROWS_AS(pdf_W(-0.5, 2, 2), DomainError);
}

TEST_CASE("sample_S and sample_W - match their laws")
{
    Rng rng = make_stream(4, 0);
    std::vector<double> s(100000);
    std::vector<double> w(100000);
    double ms = 0.0;
    double mw = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        s[i] = sample_S(rng, 2, 16);
        w[i] = sample_W(rng, 3, 16);
        ms += s[i];
        mw += w[i];
    }
    CHECK(oracle::ks_statistic(s, [](double x) { return cdf_S(x, 2, 16); }) < 0.005);
    CHECK(oracle::ks_statistic(w, [](double x) { return oracle::cdf_gamma_sum(x, 3, 16); }) < 0.005);
    CHECK_THAT(ms / s.size(), WithinAbs(16.0, 0.05));
    CHECK_THAT(mw / w.size(), WithinAbs(16.0, 0.05));
}

TEST_CASE("unitary invariance of the squared norm")
{
    Rng rng = make_stream(5, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const ChannelVector v = sample_channel_vector(rng, 2, 1.0, 16);
        Eigen::MatrixXcd M(16, 16);
        for (int i = 0; i < 16; ++i)
            M.col(i) = sample_channel_vector(rng, 1, 1.0, 16);
        const Eigen::MatrixXcd U = Eigen::HouseholderQR<Eigen::MatrixXcd>(M).householderQ();
        REQUIRE_THAT((U * v).squaredNorm(), WithinRel(v.squaredNorm(), 1e-12));
    }
}

TEST_CASE("FadingParams - validation")
{
    FadingParams p;
    CHECK_NOTHROW(p.validate());
    p.L = 0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.L = 4;
    p.m1 = 0;
    CHECK_THROWS_AS(p.validate(), DomainError);
}
