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

#include "rissec/bdris.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "rissec/errors.hpp"

namespace rissec {

namespace {

using Complex = std::complex<double>;

// Full unitary whose leading columns are the orthonormal columns of `cols`.
Eigen::MatrixXcd complete_basis(const Eigen::MatrixXcd& cols)
{
    const Eigen::Index n = cols.rows();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(cols);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    q.leftCols(cols.cols()) = cols;
    return q;
}

// Flat-magnitude unit vector y with <1/sqrt(L), y> = gamma, |gamma| <= 1.
Eigen::VectorXcd flat_partner(Eigen::Index L, Complex gamma)
{
    const double r = std::min(1.0, std::abs(gamma));
    const double base = std::arg(gamma);
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(L));
    Eigen::VectorXcd y(L);
    Eigen::Index start = 0;
    double delta = 0.0;
    if (L % 2 == 1) {
        // One element on the mean direction, the remaining pairs at +-delta.
        y[0] = std::polar(inv_sqrt, base);
        start = 1;
        delta = L > 1 ? std::acos(std::clamp((L * r - 1.0) / (L - 1.0), -1.0, 1.0)) : 0.0;
    } else {
        delta = std::acos(r);
    }
    for (Eigen::Index l = start; l < L; ++l) {
        const double sign = ((l - start) % 2 == 0) ? 1.0 : -1.0;
        y[l] = std::polar(inv_sqrt, base + sign * delta);
    }
    return y;
}

} // namespace

Eigen::MatrixXcd construct_aligning_unitary(const ChannelVector& h_br, const ChannelVector& h_rn)
{
    const Eigen::Index L = h_br.size();
    if (L == 0 || h_rn.size() != L)
        throw DomainError("construct_aligning_unitary: vectors must be non-empty and of equal length");
    const double n_br = h_br.norm();
    const double n_rn = h_rn.norm();
    if (!(n_br > 0.0) || !(n_rn > 0.0))
        throw DomainError("construct_aligning_unitary: zero-norm channel vector");
    if (L == 1)
        return Eigen::MatrixXcd::Identity(1, 1);

    const Eigen::VectorXcd a = h_rn.conjugate() / n_rn;
    const Eigen::VectorXcd b = h_br / n_br;
    const Complex gamma = a.dot(b); // a^H b
    const Eigen::VectorXcd x = Eigen::VectorXcd::Constant(L, 1.0 / std::sqrt(static_cast<double>(L)));
    const Eigen::VectorXcd y = flat_partner(L, gamma);

    Eigen::MatrixXcd src;
    Eigen::MatrixXcd dst;
    const Eigen::VectorXcd b_perp = b - gamma * a;
    const Eigen::VectorXcd y_perp = y - gamma * x;
    if (b_perp.norm() < 1e-12) {
        src = a;
        dst = x;
    } else {
        src.resize(L, 2);
        dst.resize(L, 2);
        src << a, b_perp.normalized();
        dst << x, y_perp.normalized();
    }
    // U maps a -> x and b -> y; V = U^T.
    const Eigen::MatrixXcd U = complete_basis(dst) * complete_basis(src).adjoint();
    return U.transpose();
}

Eigen::VectorXd optimal_phases(const Eigen::MatrixXcd& V, const ChannelVector& h_br, const ChannelVector& h_rn)
{
    const Eigen::VectorXcd p = V.transpose() * h_rn.conjugate();
    const Eigen::VectorXcd q = V.transpose() * h_br;
    Eigen::VectorXd phi(p.size());
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    for (Eigen::Index l = 0; l < p.size(); ++l) {
        if (p[l] == Complex(0.0) || q[l] == Complex(0.0)) {
            phi[l] = 0.0;
            continue;
        }
        double v = std::fmod(std::arg(p[l]) + std::arg(q[l]), kTwoPi);
        if (v < 0.0)
            v += kTwoPi;
        phi[l] = v;
    }
    return phi;
}

ScatteringMatrix assemble_theta(const PhaseDecomposition& decomp)
{
    const Eigen::VectorXcd d = (Complex(0.0, -1.0) * decomp.phi.cast<Complex>()).array().exp();
    return decomp.V * d.asDiagonal() * decomp.V.transpose();
}

ScatteringMatrix optimal_scattering_matrix(const ChannelVector& h_br, const ChannelVector& h_rn)
{
    PhaseDecomposition decomp;
    decomp.V = construct_aligning_unitary(h_br, h_rn);
    decomp.phi = optimal_phases(decomp.V, h_br, h_rn);
    return assemble_theta(decomp);
}

double cascaded_gain(const ChannelVector& h_br, const ScatteringMatrix& theta, const ChannelVector& h_rn)
{
    return std::norm(h_rn.dot(theta * h_br));
}

double fc_cascaded_gain(const ChannelVector& h_br, const ChannelVector& h_rn)
{
    return h_br.squaredNorm() * h_rn.squaredNorm();
}

double fc_cascaded_gain_matrix(const ChannelVector& h_br, const ChannelVector& h_rn)
{
    return cascaded_gain(h_br, optimal_scattering_matrix(h_br, h_rn), h_rn);
}

double sc_cascaded_gain(const ChannelVector& h_br, const ChannelVector& h_rn)
{
    const double s = (h_br.cwiseAbs().array() * h_rn.cwiseAbs().array()).sum();
    return s * s;
}

double fc_cascaded_gain(const Eigen::VectorXd& mag_br, const Eigen::VectorXd& mag_rn)
{
    return mag_br.squaredNorm() * mag_rn.squaredNorm();
}

double sc_cascaded_gain(const Eigen::VectorXd& mag_br, const Eigen::VectorXd& mag_rn)
{
    const double s = mag_br.dot(mag_rn);
    return s * s;
}

double unitarity_residual(const ScatteringMatrix& theta)
{
    const Eigen::Index n = theta.rows();
    return (theta.adjoint() * theta - Eigen::MatrixXcd::Identity(n, n)).norm();
}

double symmetry_residual(const ScatteringMatrix& theta)
{
    return (theta - theta.transpose()).norm();
}

} // namespace rissec
