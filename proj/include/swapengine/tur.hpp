// Copyright 2026 The swapengine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWAPENGINE_TUR_HPP
#define SWAPENGINE_TUR_HPP

#include <vector>

#include "swapengine/engine.hpp"

namespace swapengine::tur {

/// x * tanh(x) for x >= 0; strictly increasing, so invertible.
/// Throws std::domain_error for x < 0 or NaN.
double x_tanh_x(double x);

/**
 * Inverse of x*tanh(x) on [0, inf).  Bracketed bisection on
 * [sqrt(y)*(1-1e-3), y+1] (the function is >= x^2 near 0 and ~x at
 * infinity, so the bracket always holds) down to width 1e-6, then Newton
 * polish; never more than 200 iterations total.  Guarantees
 * |x_tanh_x(g_inverse(y)) - y| <= 1e-12 * max(1, y).
 */
double g_inverse(double y);

/// Looser mean-entropy bound on var/mean^2: 2/sigma.  +inf at sigma = 0.
double tur1_bound(double sigma);

/**
 * Tight exchange-type bound on var/mean^2: 1/sinh^2(g_inverse(sigma/2)).
 * For sigma < 1e-6 the series 2/sigma - 2/3 is used (next correction is
 * +2*sigma/45, so the switch is seamless at double precision).  +inf at
 * sigma = 0.  Always <= tur1_bound(sigma).
 */
double tur2_bound(double sigma);

/**
 * Both bounds evaluated against the exact q2 statistics of one parameter
 * point.  lhs = Var(q2)/<q2>^2; bounds are functions of <Sigma> alone.
 * A bound counts as violated when lhs < rhs - 1e-9*max(lhs, rhs).  At the
 * crossover the mean vanishes, lhs is degenerate (NaN) and both flags are
 * forced false.
 */
struct TurEvaluation {
    double sigma_avg = 0;
    double lhs = 0;
    double tur1_rhs = 0;
    double tur2_rhs = 0;
    bool tur1_violated = false;
    bool tur2_violated = false;
    bool degenerate = false;
};

TurEvaluation evaluate(const engine::EngineParams& p);

enum class Bound { Tur1, Tur2 };

/**
 * beta2_h values in (beta2_lo, beta2_hi) where lhs - rhs changes sign for
 * the given bound, holding qubit 1 and eps2 fixed.  Scans scan_points
 * uniform samples, then bisects every bracketed sign change to 1e-10
 * relative width; roots are returned in ascending order.  The crossover
 * beta2 = beta1*eps1/eps2 is excluded by splitting the scan into the
 * sub-intervals on each side of it (the margin is degenerate exactly
 * there).  Empty range or beta2_lo >= beta2_hi throws std::domain_error.
 * The tighter bound holds everywhere, so Bound::Tur2 yields an empty
 * vector over any valid range.
 */
std::vector<double> violation_boundary(const engine::QubitSpec& qubit1, double epsilon2,
                                       double beta2_lo, double beta2_hi, Bound which,
                                       int scan_points = 2000);

}  // namespace swapengine::tur

#endif
