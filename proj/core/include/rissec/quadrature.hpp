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

#include <functional>

namespace rissec::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Legendre: a 20-point panel is accepted once it agrees with
// the sum of its two halves to within the panel's share of abs_tol (or
// rel_tol of the running value). Throws AccuracyError past max_depth.
Result integrate(const Integrand& f, double a, double b, double abs_tol, double rel_tol = 0.0,
                 int max_depth = 40);

// Integral over [a, inf) by consecutive panels [a + (2^k - 1) w, a + (2^{k+1} - 1) w]
// until a panel contributes less than abs_tol / 4.
Result integrate_to_infinity(const Integrand& f, double a, double width, double abs_tol,
                             double rel_tol = 0.0);

} // namespace rissec::quad
