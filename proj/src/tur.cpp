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

#include "swapengine/tur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swapengine::tur {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

double x_tanh_x(double x) {
    if (std::isnan(x) || x < 0) {
        throw std::domain_error("x_tanh_x: x must be >= 0");
    }
    return x * std::tanh(x);
}

double g_inverse(double y) {
    if (std::isnan(y) || y < 0) {
        throw std::domain_error("g_inverse: y must be >= 0");
    }
    if (y == 0) {
        return 0;
    }
    if (std::isinf(y)) {
        return kInf;
    }
    // x tanh x <= x^2 gives g_inverse(y) >= sqrt(y); x tanh x < x gives
    // g_inverse(y) > y, and x tanh x >= x - 1 gives g_inverse(y) <= y + 1.
    double lo = std::max(std::sqrt(y), y) * (1 - 1e-3);
    double hi = y + 1;
    // Bisect on log(x) so the bracket collapses at the same rate at every
    // scale of y, from denormals up to the overflow edge.
    double ulo = std::log(lo);
    double uhi = std::log(hi);
    for (int i = 0; i < 120 && uhi - ulo > 1e-8; ++i) {
        double umid = 0.5 * (ulo + uhi);
        if (x_tanh_x(std::exp(umid)) < y) {
            ulo = umid;
        } else {
            uhi = umid;
        }
    }
    // Newton polish. The residual target is relative to y so the bounds
    // derived from the root keep full precision at every scale; the float
    // noise floor of x*tanh(x) - y is about 1e-16 * y, well below it.
    double x = std::exp(0.5 * (ulo + uhi));
    double target = 1e-13 * y;
    for (int i = 0; i < 100; ++i) {
        double t = std::tanh(x);
        double c = std::cosh(x);
        double sech2 = std::isinf(c) ? 0.0 : 1 / (c * c);
        double f = x * t - y;
        if (std::abs(f) <= target) {
            break;
        }
        double df = t + x * sech2;
        double next = x - f / df;
        if (!(next > 0) || std::isnan(next)) {
            next = std::exp(0.5 * (ulo + uhi));  // fell out, restart center
        }
        x = next;
    }
    return x;
}

double tur1_bound(double sigma) {
    if (std::isnan(sigma) || sigma < 0) {
        throw std::domain_error("tur1_bound: sigma must be >= 0");
    }
    if (sigma == 0) {
        return kInf;
    }
    return 2 / sigma;
}

double tur2_bound(double sigma) {
    if (std::isnan(sigma) || sigma < 0) {
        throw std::domain_error("tur2_bound: sigma must be >= 0");
    }
    if (sigma == 0) {
        return kInf;
    }
    if (sigma < 1e-6) {
        // Small-sigma expansion of csch^2(g_inverse(sigma/2)); the
        // truncated tail is 2*sigma/45 + O(sigma^2), far below double
        // resolution of the leading 2/sigma term at this size.
        return 2 / sigma - 2.0 / 3.0;
    }
    double s = std::sinh(g_inverse(sigma / 2));
    if (std::isinf(s)) {
        return 0;
    }
    return 1 / (s * s);
}

TurEvaluation evaluate(const engine::EngineParams& p) {
    TurEvaluation ev;
    ev.sigma_avg = engine::avg_entropy(p);
    ev.tur1_rhs = tur1_bound(ev.sigma_avg);
    ev.tur2_rhs = tur2_bound(ev.sigma_avg);
    auto lhs = engine::inverse_snr(engine::avg_heat_q2(p), engine::variance_heat_oracle(p));
    if (!lhs) {
        ev.lhs = kNaN;
        ev.degenerate = true;
        return ev;
    }
    ev.lhs = *lhs;
    auto violated = [&](double rhs) { return ev.lhs < rhs - 1e-9 * std::max(ev.lhs, rhs); };
    ev.tur1_violated = violated(ev.tur1_rhs);
    ev.tur2_violated = violated(ev.tur2_rhs);
    return ev;
}

namespace {

// lhs - rhs for the selected bound; NaN marks degenerate points so the
// scan skips them.
double margin(const engine::QubitSpec& qubit1, double epsilon2, double beta2, Bound which) {
    engine::EngineParams p{qubit1, {epsilon2, beta2}};
    TurEvaluation ev = evaluate(p);
    if (ev.degenerate) {
        return kNaN;
    }
    return ev.lhs - (which == Bound::Tur1 ? ev.tur1_rhs : ev.tur2_rhs);
}

void scan_segment(const engine::QubitSpec& qubit1, double epsilon2, double lo, double hi,
                  Bound which, int scan_points, std::vector<double>* roots) {
    if (!(lo < hi)) {
        return;
    }
    int n = std::max(scan_points, 2);
    double prev_b = lo;
    double prev_m = margin(qubit1, epsilon2, lo, which);
    for (int i = 1; i < n; ++i) {
        double b = lo + (hi - lo) * i / (n - 1);
        double m = margin(qubit1, epsilon2, b, which);
        if (!std::isnan(prev_m) && !std::isnan(m) &&
            ((prev_m < 0 && m >= 0) || (prev_m >= 0 && m < 0))) {
            double a = prev_b;
            double c = b;
            double ma = prev_m;
            while (c - a > 1e-10 * c) {
                double mid = 0.5 * (a + c);
                double mm = margin(qubit1, epsilon2, mid, which);
                if (std::isnan(mm)) {
                    break;  // degenerate interior point, stop refining
                }
                if ((ma < 0) == (mm < 0)) {
                    a = mid;
                    ma = mm;
                } else {
                    c = mid;
                }
            }
            roots->push_back(0.5 * (a + c));
        }
        prev_b = b;
        prev_m = m;
    }
}

}  // namespace

std::vector<double> violation_boundary(const engine::QubitSpec& qubit1, double epsilon2,
                                       double beta2_lo, double beta2_hi, Bound which,
                                       int scan_points) {
    engine::validate(qubit1);
    if (!std::isfinite(epsilon2) || epsilon2 <= 0) {
        throw std::domain_error("violation_boundary: epsilon2 must be finite and > 0");
    }
    if (!std::isfinite(beta2_lo) || !std::isfinite(beta2_hi) || beta2_lo < 0 ||
        !(beta2_lo < beta2_hi)) {
        throw std::domain_error("violation_boundary: need 0 <= beta2_lo < beta2_hi, finite");
    }
    if (scan_points < 2) {
        throw std::domain_error("violation_boundary: scan_points must be >= 2");
    }
    std::vector<double> roots;
    // The mean changes sign at the crossover beta2* = beta1*eps1/eps2 and
    // the margin is degenerate there. Approaching it, the margin shrinks
    // like the square of the gap x1 - x2 while both sides of lhs - rhs
    // grow like 1/sigma, so within a finite window the computed margin is
    // pure rounding noise and its sign is arbitrary. Guard a window wide
    // enough that the gap at the edge keeps the true margin above noise:
    // relative margin ~ (x1 - x2)^2 / 40, so a gap of 3e-6 clears the
    // ~1e-15 relative noise floor with two orders to spare.
    double crossing = qubit1.beta_h * qubit1.epsilon / epsilon2;
    if (std::isfinite(crossing)) {
        double guard = std::max(1e-4 * crossing, 3e-6 / epsilon2);
        scan_segment(qubit1, epsilon2, beta2_lo, std::min(beta2_hi, crossing - guard), which,
                     scan_points, &roots);
        scan_segment(qubit1, epsilon2, std::max(beta2_lo, crossing + guard), beta2_hi, which,
                     scan_points, &roots);
    } else {
        scan_segment(qubit1, epsilon2, beta2_lo, beta2_hi, which, scan_points, &roots);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace swapengine::tur
