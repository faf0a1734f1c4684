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

#include "rissec/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "rissec/errors.hpp"

namespace rissec {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// B_{2k} / (2k (2k - 1)) for k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,          1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,     1.0 / 156.0,          -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0,
};

constexpr double kStirlingThreshold = 17.0;

template <typename T>
T stirling_tail(T z)
{
    const T inv = T(1.0) / z;
    const T inv2 = inv * inv;
    T sum = T(0.0);
    T pow = inv;
    for (double c : kStirling) {
        sum += c * pow;
        pow *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + sum;
}

} // namespace

double ln_gamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("ln_gamma: argument must be positive");
    if (!std::isfinite(x))
        return x;
    double shift = 0.0;
    while (x < kStirlingThreshold) {
        shift += std::log(x);
        x += 1.0;
    }
    return stirling_tail(x) - shift;
}

std::complex<double> ln_gamma(std::complex<double> z)
{
    using C = std::complex<double>;
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
        const C s = std::sin(std::numbers::pi * z);
        if (s == C(0.0, 0.0))
            throw DomainError("ln_gamma: pole of the gamma function");
        return std::log(std::numbers::pi) - std::log(s) - ln_gamma(C(1.0) - z);
    }
    C shift(0.0, 0.0);
    while (std::abs(z) < kStirlingThreshold) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling_tail(z) - shift;
}

double regularized_upper_gamma(int a, double x)
{
    if (a < 1)
        throw DomainError("regularized_upper_gamma: shape must be a positive integer");
    if (x < 0.0)
        throw DomainError("regularized_upper_gamma: argument must be non-negative");
    if (x == 0.0)
        return 1.0;
    if (std::isinf(x))
        return 0.0;
    // log of the t-th term, then log-sum-exp around the largest one.
    const double lx = std::log(x);
    double log_term = -x;
    double log_max = log_term;
    std::vector<double> logs(static_cast<std::size_t>(a));
    for (int t = 0; t < a; ++t) {
        if (t > 0)
            log_term += lx - std::log(static_cast<double>(t));
        logs[static_cast<std::size_t>(t)] = log_term;
        log_max = std::max(log_max, log_term);
    }
    double sum = 0.0;
    for (double l : logs)
        sum += std::exp(l - log_max);
    const double q = std::exp(log_max + std::log(sum));
    return std::min(q, 1.0);
}

double regularized_lower_gamma(int a, double x)
{
    if (a < 1)
        throw DomainError("regularized_lower_gamma: shape must be a positive integer");
    if (x < 0.0)
        throw DomainError("regularized_lower_gamma: argument must be non-negative");
    if (x == 0.0)
        return 0.0;
    if (x >= a + 1.0)
        return 1.0 - regularized_upper_gamma(a, x);
    // e^{-x} x^a / a! * sum_{k>=0} x^k / ((a+1)...(a+k)).
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    const double log_lead = -x + a * std::log(x) - ln_gamma(a + 1.0);
    return std::exp(log_lead + std::log(sum));
}

namespace {

// K_0 and K_1 scaled by e^x.
struct KPair {
    double k0 = 0.0;
    double k1 = 0.0;
};

KPair bessel_k01_series(double x)
{
    const double q = 0.25 * x * x;
    const double lnx2 = std::log(0.5 * x);

    // I_0, I_1 and the digamma-weighted sums.
    double term0 = 1.0; // q^k / (k!)^2
    double term1 = 1.0; // q^k / (k! (k+1)!)
    double harmonic = 0.0;
    double i0 = 0.0, i1 = 0.0, s0 = 0.0, s1 = 0.0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            term0 *= q / (static_cast<double>(k) * k);
            term1 *= q / (static_cast<double>(k) * (k + 1));
            harmonic += 1.0 / k;
        }
        const double psi1 = -kEulerGamma + harmonic;          // psi(k + 1)
        const double psi2 = psi1 + 1.0 / (k + 1.0);           // psi(k + 2)
        i0 += term0;
        i1 += term1;
        s0 += psi1 * term0;
        s1 += (psi1 + psi2) * term1;
        if (term0 < 1e-18 * i0 && term1 < 1e-18 * i1)
            break;
    }
    i1 *= 0.5 * x;
    KPair k;
    k.k0 = -lnx2 * i0 + s0;
    k.k1 = 1.0 / x + lnx2 * i1 - 0.25 * x * s1;
    const double ex = std::exp(x);
    k.k0 *= ex;
    k.k1 *= ex;
    return k;
}

// Steed's method for the CF2 continued fraction (order 0), valid for x >= 2.
KPair bessel_k01_cf2(double x)
{
    constexpr double kEps = 1e-17;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps)
            break;
    }
    h = a1 * h;
    KPair k;
    k.k0 = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    k.k1 = k.k0 * (x + 0.5 - h) / x;
    return k;
}

KPair bessel_k01_scaled(double x)
{
    return x <= 2.0 ? bessel_k01_series(x) : bessel_k01_cf2(x);
}

// Scaled K_nu as mantissa * exp(log_scale).
struct ScaledK {
    double mantissa = 0.0;
    double log_scale = 0.0;
};

ScaledK bessel_k_scaled_split(int nu, double x)
{
    if (nu < 0)
        throw DomainError("bessel_k: order must be non-negative");
    if (!(x > 0.0))
        throw DomainError("bessel_k: argument must be positive");
    const KPair k01 = bessel_k01_scaled(x);
    if (nu == 0)
        return {k01.k0, 0.0};
    double prev = k01.k0;
    double cur = k01.k1;
    double log_scale = 0.0;
    for (int n = 1; n < nu; ++n) {
        const double next = prev + (2.0 * n / x) * cur;
        prev = cur;
        cur = next;
        if (cur > 1e250) {
            log_scale += std::log(cur);
            prev /= cur;
            cur = 1.0;
        }
    }
    return {cur, log_scale};
}

} // namespace

double log_bessel_k(int nu, double x)
{
    const ScaledK k = bessel_k_scaled_split(nu, x);
    return std::log(k.mantissa) + k.log_scale - x;
}

double bessel_k_scaled(int nu, double x)
{
    const ScaledK k = bessel_k_scaled_split(nu, x);
    return k.mantissa * std::exp(k.log_scale);
}

BesselKResult bessel_k_checked(int nu, double x)
{
    const double lk = log_bessel_k(nu, x);
    BesselKResult r;
    if (lk < std::log(std::numeric_limits<double>::denorm_min())) {
        r.underflow = true;
        return r;
    }
    if (lk > std::log(std::numeric_limits<double>::max())) {
        r.overflow = true;
        r.value = std::numeric_limits<double>::infinity();
        return r;
    }
    if (x <= 700.0 && nu < 2) {
        // Avoid the exp/log round trip where a direct product is exact enough.
        const KPair k01 = bessel_k01_scaled(x);
        r.value = (nu == 0 ? k01.k0 : k01.k1) * std::exp(-x);
        return r;
    }
    r.value = std::exp(lk);
    r.underflow = r.value == 0.0;
    return r;
}

double bessel_k(int nu, double x)
{
    return bessel_k_checked(nu, x).value;
}

} // namespace rissec
