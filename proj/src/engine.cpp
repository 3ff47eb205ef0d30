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

#include "swapengine/engine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swapengine::engine {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// beta*eps as a single exponent; beta_h = +inf gives +inf (eps > 0 finite).
double exponent(const QubitSpec& q) {
    return q.beta_h * q.epsilon;
}

// x1 - x2 as an entropy-per-swap scale; 0 when both qubits sit at zero
// temperature (inf - inf would otherwise poison averages that are exactly 0).
double entropy_scale(const EngineParams& p) {
    double x1 = exponent(p.qubit1);
    double x2 = exponent(p.qubit2);
    if (std::isinf(x1) && std::isinf(x2)) {
        return 0;
    }
    return x1 - x2;
}

double population_from_exponent(double x) {
    double t = std::exp(-x);
    return t / (1 + t);
}

}  // namespace

void validate(const QubitSpec& q) {
    if (!std::isfinite(q.epsilon) || q.epsilon <= 0) {
        throw std::domain_error("QubitSpec: epsilon must be finite and > 0");
    }
    if (std::isnan(q.beta_h) || q.beta_h < 0) {
        throw std::domain_error("QubitSpec: beta_h must be >= 0 (may be +inf)");
    }
}

void validate(const EngineParams& p) {
    validate(p.qubit1);
    validate(p.qubit2);
}

double excited_population(const QubitSpec& q) {
    validate(q);
    return population_from_exponent(exponent(q));
}

double partition_function(const QubitSpec& q) {
    validate(q);
    return 1 + std::exp(-exponent(q));
}

double population_difference(const EngineParams& p) {
    validate(p);
    double x1 = exponent(p.qubit1);
    double x2 = exponent(p.qubit2);
    double p1 = population_from_exponent(x1);
    double p2 = population_from_exponent(x2);
    // p2 - p1 = expm1(x1 - x2) * (1 - p2) * p1 exactly; use it while both
    // factors stay in range, fall back to the plain difference when an
    // exponent is huge (the difference is then dominated by one term).
    if (x1 < 690 && x2 < 690) {
        return std::expm1(x1 - x2) * (1 - p2) * p1;
    }
    return p2 - p1;
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::HeatEngine:
            return "HeatEngine";
        case Regime::Refrigerator:
            return "Refrigerator";
        case Regime::Crossover:
            return "Crossover";
        case Regime::Other:
            return "Other";
    }
    return "Other";
}

Regime classify_regime(const EngineParams& p) {
    validate(p);
    double x1 = exponent(p.qubit1);
    double x2 = exponent(p.qubit2);
    if (std::isinf(x1) && std::isinf(x2)) {
        return Regime::Crossover;
    }
    if (std::abs(x1 - x2) <= 1e-12 * std::max(x1, x2)) {
        return Regime::Crossover;
    }
    if (p.qubit1.epsilon >= p.qubit2.epsilon) {
        return Regime::Other;
    }
    return x1 > x2 ? Regime::HeatEngine : Regime::Refrigerator;
}

TPMDistribution enumerate_tpm(const EngineParams& p) {
    validate(p);
    double p1 = excited_population(p.qubit1);
    double p2 = excited_population(p.qubit2);
    double s = entropy_scale(p);
    double e1 = p.qubit1.epsilon;
    double e2 = p.qubit2.epsilon;
    TPMDistribution d;
    int k = 0;
    for (int n1 = 0; n1 <= 1; ++n1) {
        for (int n2 = 0; n2 <= 1; ++n2) {
            TPMOutcome& o = d.outcomes[k++];
            o.n1 = n1;
            o.n2 = n2;
            o.prob = (n1 ? p1 : 1 - p1) * (n2 ? p2 : 1 - p2);
            int delta = n2 - n1;
            o.q1 = -e1 * delta;
            o.q2 = e2 * delta;
            o.w_ext = o.q1 + o.q2;
            o.sigma = delta == 0 ? 0.0 : delta * s;
        }
    }
    return d;
}

double avg_heat_q1(const EngineParams& p) {
    return -p.qubit1.epsilon * population_difference(p);
}

double avg_heat_q2(const EngineParams& p) {
    return p.qubit2.epsilon * population_difference(p);
}

double avg_work_extracted(const EngineParams& p) {
    return (p.qubit2.epsilon - p.qubit1.epsilon) * population_difference(p);
}

double avg_work_input(const EngineParams& p) {
    return -avg_work_extracted(p);
}

double avg_entropy(const EngineParams& p) {
    double dp = population_difference(p);
    if (dp == 0) {
        return 0;
    }
    return entropy_scale(p) * dp;
}

std::optional<double> efficiency(const EngineParams& p) {
    if (classify_regime(p) != Regime::HeatEngine) {
        return std::nullopt;
    }
    return 1 - p.qubit1.epsilon / p.qubit2.epsilon;
}

namespace {

// p1(1-p1) + p2(1-p2), the shared population-variance factor.
double bernoulli_variance_sum(const EngineParams& p) {
    double p1 = excited_population(p.qubit1);
    double p2 = excited_population(p.qubit2);
    return p1 * (1 - p1) + p2 * (1 - p2);
}

}  // namespace

double variance_heat_oracle(const EngineParams& p) {
    validate(p);
    double e2 = p.qubit2.epsilon;
    return e2 * e2 * bernoulli_variance_sum(p);
}

double variance_work_oracle(const EngineParams& p) {
    validate(p);
    double de = p.qubit2.epsilon - p.qubit1.epsilon;
    return de * de * bernoulli_variance_sum(p);
}

double printed_variance_heat(const EngineParams& p) {
    validate(p);
    // Verbatim formula, written with e^x/(1+e^x) = 1-p and 1/(1+e^x) = p
    // so that large exponents cannot overflow:
    //   Var(Q)/2 = 2 e1^2 (1-p2) p1 + e1 Q2 p1 + e1 Q2 (1-p2).
    double e1 = p.qubit1.epsilon;
    double p1 = excited_population(p.qubit1);
    double p2 = excited_population(p.qubit2);
    double q2 = avg_heat_q2(p);
    return 2 * (2 * e1 * e1 * (1 - p2) * p1 + e1 * q2 * p1 + e1 * q2 * (1 - p2));
}

double printed_variance_work(const EngineParams& p) {
    validate(p);
    // Verbatim formula in the same population form.  With
    //   B1 = (e1 e^x1 + e2)/(1+e^x1) = e1 (1-p1) + e2 p1
    //   B2 = (e2 e^x2 + e1)/(1+e^x2) = e2 (1-p2) + e1 p2
    //   C1 = (e1^2 e^x1 + e2^2)/(1+e^x1) = e1^2 (1-p1) + e2^2 p1
    //   C2 = (e2^2 e^x2 + e1^2)/(1+e^x2) = e2^2 (1-p2) + e1^2 p2
    // the expression reads
    //   Var(W)/2 = 2 B1 B2 - B1 W - B2 W + C1 + C2 - (e1+e2)(B1 + B2).
    double e1 = p.qubit1.epsilon;
    double e2 = p.qubit2.epsilon;
    double p1 = excited_population(p.qubit1);
    double p2 = excited_population(p.qubit2);
    double w = avg_work_extracted(p);
    double b1 = e1 * (1 - p1) + e2 * p1;
    double b2 = e2 * (1 - p2) + e1 * p2;
    double c1 = e1 * e1 * (1 - p1) + e2 * e2 * p1;
    double c2 = e2 * e2 * (1 - p2) + e1 * e1 * p2;
    return 2 * (2 * b1 * b2 - b1 * w - b2 * w + c1 + c2 - (e1 + e2) * (b1 + b2));
}

VarianceDiscrepancyReport variance_discrepancy_report(const EngineParams& p) {
    VarianceDiscrepancyReport r;
    r.oracle_heat = variance_heat_oracle(p);
    r.oracle_work = variance_work_oracle(p);
    r.printed_heat = printed_variance_heat(p);
    r.printed_work = printed_variance_work(p);
    r.ratio_heat = r.oracle_heat == 0 ? kNaN : r.printed_heat / r.oracle_heat;
    r.ratio_work = r.oracle_work == 0 ? kNaN : r.printed_work / r.oracle_work;
    r.printed_heat_negative = r.printed_heat < 0;
    r.printed_work_negative = r.printed_work < 0;
    return r;
}

std::optional<double> inverse_snr(double mean, double var) {
    if (std::isnan(var) || var < 0) {
        throw std::domain_error("inverse_snr: variance must be >= 0");
    }
    if (std::abs(mean) <= 1e-13 * std::sqrt(var)) {
        return std::nullopt;  // degenerate: mean indistinguishable from 0
    }
    return var / (mean * mean);
}

double xft_check(const TPMDistribution& d) {
    // Nonzero support is carried by the (0,1) and (1,0) outcomes.
    const TPMOutcome& up = d.outcomes[1];
    const TPMOutcome& down = d.outcomes[2];
    if (up.sigma == 0 && down.sigma == 0) {
        return 0;  // support is {0}
    }
    if ((up.prob == 0) != (down.prob == 0)) {
        throw std::domain_error("xft_check: one-sided entropy support");
    }
    if (up.prob == 0) {
        return 0;
    }
    return std::abs(std::log(up.prob / down.prob) - up.sigma);
}

CycleReport cycle_report(const EngineParams& p) {
    CycleReport r;
    r.q1 = avg_heat_q1(p);
    r.q2 = avg_heat_q2(p);
    r.w_ext = avg_work_extracted(p);
    r.sigma = avg_entropy(p);
    r.var_q2 = variance_heat_oracle(p);
    r.var_w = variance_work_oracle(p);
    r.efficiency = efficiency(p);
    r.regime = classify_regime(p);
    return r;
}

}  // namespace swapengine::engine
