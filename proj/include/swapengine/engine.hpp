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

#ifndef SWAPENGINE_ENGINE_HPP
#define SWAPENGINE_ENGINE_HPP

#include <array>
#include <optional>
#include <string_view>

namespace swapengine::engine {

/**
 * One thermal qubit: energy gap epsilon in h*kHz and inverse bath
 * temperature as beta*h in kHz^-1.  beta_h may be +infinity (the
 * zero-temperature limit); epsilon must be finite and > 0.
 */
struct QubitSpec {
    double epsilon = 1;
    double beta_h = 1;
};

/**
 * A full cycle: qubit 1 thermalized against bath 1, qubit 2 against
 * bath 2, then a single swap exchanges the two populations.  Work is
 * counted positive when extracted; Q_i is the heat the engine draws
 * from bath i per cycle, so -Q_1 is the heat dumped to bath 1.
 */
struct EngineParams {
    QubitSpec qubit1;
    QubitSpec qubit2;
};

/// Throws std::domain_error when a field is outside its documented range.
void validate(const QubitSpec& q);
void validate(const EngineParams& p);

/// Gibbs excited-state population 1/(1 + e^(beta*eps)), in [0, 1/2].
/// Evaluated as t/(1+t) with t = e^(-beta*eps) so it never overflows.
double excited_population(const QubitSpec& q);

/// Two-level partition function 1 + e^(-beta*eps), in [1, 2].
double partition_function(const QubitSpec& q);

/**
 * p2 - p1, the excited-population difference that drives every cycle
 * average.  Uses expm1(x1 - x2)*(1 - p2)*p1 (an exact identity) so the
 * result keeps full relative accuracy when x1 = beta1*eps1 and
 * x2 = beta2*eps2 agree to many digits, e.g. on nanokelvin-scale
 * parameter sets where direct subtraction would lose everything.
 */
double population_difference(const EngineParams& p);

/**
 * Operating regime of the cycle.  With x_i = beta_i*eps_i:
 *   Crossover    |x1 - x2| <= 1e-12 * max(x1, x2): all averages vanish.
 *   HeatEngine   eps1 < eps2 and x1 > x2: work is extracted (W_ext >= 0).
 *   Refrigerator eps1 < eps2 and x2 > x1: work drives heat out of bath 1.
 *   Other        eps1 >= eps2: no useful operation mode.
 * Products only, no divisions, so beta_h = +infinity classifies cleanly.
 */
enum class Regime { HeatEngine, Refrigerator, Crossover, Other };

std::string_view to_string(Regime r);

Regime classify_regime(const EngineParams& p);

/**
 * One outcome of the two-point measurement scheme: both qubits measured
 * before and after the swap.  n1, n2 are the pre-swap excited-state
 * indicators; the swap makes the post-swap record (n2, n1), so each
 * outcome's heats, work and entropy production are functions of (n1, n2).
 * Energies in h*kHz, sigma dimensionless.
 */
struct TPMOutcome {
    int n1 = 0;
    int n2 = 0;
    double prob = 0;
    double q1 = 0;
    double q2 = 0;
    double w_ext = 0;
    double sigma = 0;
};

/// The four outcomes in fixed order (n1,n2) = (0,0),(0,1),(1,0),(1,1).
struct TPMDistribution {
    std::array<TPMOutcome, 4> outcomes;
};

/// Exact trajectory statistics: prob = m1(n1)*m2(n2) with the Gibbs
/// marginals, q1 = -eps1*(n2-n1), q2 = eps2*(n2-n1), w_ext = q1 + q2,
/// sigma = (beta1*eps1 - beta2*eps2)*(n2-n1).
TPMDistribution enumerate_tpm(const EngineParams& p);

/// Cycle averages in closed form (all proportional to p2 - p1).
double avg_heat_q1(const EngineParams& p);
double avg_heat_q2(const EngineParams& p);
double avg_work_extracted(const EngineParams& p);
/// Work that must be supplied, -avg_work_extracted; positive when the
/// cycle consumes work (refrigerator side).
double avg_work_input(const EngineParams& p);
/// Mean entropy production (beta1*eps1 - beta2*eps2)*(p2 - p1) >= 0.
double avg_entropy(const EngineParams& p);

/// Thermal efficiency W_ext/Q2 = 1 - eps1/eps2.  Only meaningful when
/// work is being extracted; empty outside the HeatEngine regime.
std::optional<double> efficiency(const EngineParams& p);

/// Exact variances of the trajectory heat q2 and work w_ext:
/// Var(q2) = eps2^2 * v and Var(w) = (eps2-eps1)^2 * v with
/// v = p1(1-p1) + p2(1-p2).  These are the reference second moments
/// every bound evaluation uses.
double variance_heat_oracle(const EngineParams& p);
double variance_work_oracle(const EngineParams& p);

/**
 * Literal transcriptions of a published pair of closed-form variance
 * expressions for the heat and the work of this cycle, kept verbatim for
 * comparison (evaluated in population form, e^x/(1+e^x) = 1-p, which is
 * the same algebra without overflow).  They do not reduce to the exact
 * enumeration variances; printed_variance_work can even go negative.
 * Report-only: nothing downstream consumes these.
 */
double printed_variance_heat(const EngineParams& p);
double printed_variance_work(const EngineParams& p);

/// Side-by-side comparison of the exact variances and the printed
/// expressions, with printed/exact ratios and negativity flags.
struct VarianceDiscrepancyReport {
    double oracle_heat = 0;
    double oracle_work = 0;
    double printed_heat = 0;
    double printed_work = 0;
    double ratio_heat = 0;  // printed/oracle, NaN when the oracle is 0
    double ratio_work = 0;
    bool printed_heat_negative = false;
    bool printed_work_negative = false;
};

VarianceDiscrepancyReport variance_discrepancy_report(const EngineParams& p);

/**
 * var/mean^2, the inverse squared signal-to-noise ratio that appears on
 * the left of both uncertainty bounds.  Returns empty when the mean is
 * degenerate, |mean| <= 1e-13 * sqrt(var), instead of an exploding
 * quotient.  Throws std::domain_error for var < 0.
 */
std::optional<double> inverse_snr(double mean, double var);

/**
 * Largest deviation |ln(P(+s)/P(-s)) - s| over the nonzero support of
 * the entropy-production distribution.  The swap cycle satisfies the
 * detailed fluctuation relation exactly, so this is a pure roundoff
 * measure (<= 1e-10 over the supported parameter domain).  Returns 0
 * when the support is {0}.  Throws std::domain_error if exactly one of
 * P(+s), P(-s) vanishes (one-sided support cannot satisfy the relation).
 */
double xft_check(const TPMDistribution& d);

/// Everything a sweep row or a simulation comparison needs from one
/// parameter point.
struct CycleReport {
    double q1 = 0;
    double q2 = 0;
    double w_ext = 0;
    double sigma = 0;
    double var_q2 = 0;
    double var_w = 0;
    std::optional<double> efficiency;
    Regime regime = Regime::Other;
};

/// Closed-form route to a full CycleReport.
CycleReport cycle_report(const EngineParams& p);

}  // namespace swapengine::engine

#endif
