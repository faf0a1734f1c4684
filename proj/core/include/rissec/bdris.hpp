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

#pragma once

#include <Eigen/Dense>

#include "rissec/fading.hpp"

namespace rissec {

// L x L complex symmetric unitary response of a fully-connected RIS.
using ScatteringMatrix = Eigen::MatrixXcd;

// Theta = V diag(exp(-j phi)) V^T.
struct PhaseDecomposition {
    Eigen::MatrixXcd V;
    Eigen::VectorXd phi;
};

/// Unitary V such that V^T conj(h_rn) and V^T h_br both have flat magnitude
/// profiles, which makes the Cauchy-Schwarz bound on the cascaded gain tight.
///
/// V^T sends a = conj(h_rn)/|h_rn| to the flat vector 1/sqrt(L) and
/// b = h_br/|h_br| to a flat vector y whose phases are split into two groups
/// (+delta, -delta around arg<a,b>) so that <1/sqrt(L), y> = <a, b>. Matching
/// Gram matrices lets the two-vector map extend to a unitary, completed
/// with Householder bases of the two planes.
Eigen::MatrixXcd construct_aligning_unitary(const ChannelVector& h_br, const ChannelVector& h_rn);

/// phi_l = arg([V^T conj(h_rn)]_l) + arg([V^T h_br]_l) mod 2 pi, so every
/// summand of h_rn^H Theta h_br is real and non-negative. Zero entries get 0.
Eigen::VectorXd optimal_phases(const Eigen::MatrixXcd& V, const ChannelVector& h_br,
                               const ChannelVector& h_rn);

ScatteringMatrix assemble_theta(const PhaseDecomposition& decomp);

// Aligning unitary, optimal phases and the assembled Theta in one call.
ScatteringMatrix optimal_scattering_matrix(const ChannelVector& h_br, const ChannelVector& h_rn);

// |h_rn^H Theta h_br|^2 for an arbitrary response.
double cascaded_gain(const ChannelVector& h_br, const ScatteringMatrix& theta, const ChannelVector& h_rn);

// Optimal FC-RIS gain |h_br|^2 |h_rn|^2 (closed form of the aligned response).
double fc_cascaded_gain(const ChannelVector& h_br, const ChannelVector& h_rn);

// Same quantity through the explicit optimal Theta.
double fc_cascaded_gain_matrix(const ChannelVector& h_br, const ChannelVector& h_rn);

// Co-phased diagonal RIS optimum (sum_l |h_br,l| |h_rn,l|)^2.
double sc_cascaded_gain(const ChannelVector& h_br, const ChannelVector& h_rn);

// Magnitude-only variants used by the simulation hot loop.
double fc_cascaded_gain(const Eigen::VectorXd& mag_br, const Eigen::VectorXd& mag_rn);
double sc_cascaded_gain(const Eigen::VectorXd& mag_br, const Eigen::VectorXd& mag_rn);

// ||Theta^H Theta - I||_F and ||Theta - Theta^T||_F.
double unitarity_residual(const ScatteringMatrix& theta);
double symmetry_residual(const ScatteringMatrix& theta);

} // namespace rissec
