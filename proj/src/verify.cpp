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

#include "swapengine/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "swapengine/density.hpp"
#include "swapengine/engine.hpp"
#include "swapengine/format.hpp"
#include "swapengine/sampler.hpp"
#include "swapengine/sweep.hpp"
#include "swapengine/tur.hpp"
#include "swapengine/units.hpp"

namespace swapengine::verify {

namespace {

using engine::EngineParams;
using engine::QubitSpec;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fixed stream of random engine parameters: epsilons in [0.5, 20] kHz,
// betas in [0, 2] kHz^-1, every draw reproducible from its index.
EngineParams random_params(std::uint64_t index) {
    std::uint64_t base = 4 * index;
    const std::uint64_t seed = 0x5eed5eed;
    double e1 = 0.5 + 19.5 * mc::uniform01(seed, base);
    double e2 = 0.5 + 19.5 * mc::uniform01(seed, base + 1);
    double b1 = 2.0 * mc::uniform01(seed, base + 2);
    double b2 = 2.0 * mc::uniform01(seed, base + 3);
    return EngineParams{{e1, b1}, {e2, b2}};
}

std::vector<EngineParams> preset_grid_params() {
    std::vector<EngineParams> out;
    for (const std::string& name : sweep::preset_names()) {
        sweep::SweepConfig c = sweep::preset(name);
        for (double b2 : sweep::grid(c)) {
            out.push_back(EngineParams{{c.epsilon1, c.beta1_h}, {c.epsilon2, b2}});
        }
    }
    return out;
}

// Enumeration-mean route, independent of the closed forms: plain
// probability-weighted sums over the four outcomes.
struct EnumerationMoments {
    double q1 = 0, q2 = 0, w = 0, sigma = 0;
    double var_q2 = 0, var_w = 0;
    double prob_sum = 0;
    // Natural magnitude of each sum, for conditioning-aware comparison.
    double scale_q1 = 0, scale_q2 = 0, scale_w = 0, scale_sigma = 0;
};

EnumerationMoments enumeration_moments(const EngineParams& p) {
    engine::TPMDistribution d = engine::enumerate_tpm(p);
    EnumerationMoments m;
    for (const auto& o : d.outcomes) {
        m.prob_sum += o.prob;
        m.q1 += o.prob * o.q1;
        m.q2 += o.prob * o.q2;
        m.w += o.prob * o.w_ext;
        m.sigma += o.prob * o.sigma;
        m.scale_q1 += o.prob * std::abs(o.q1);
        m.scale_q2 += o.prob * std::abs(o.q2);
        m.scale_w += o.prob * std::abs(o.w_ext);
        m.scale_sigma += o.prob * std::abs(o.sigma);
    }
    for (const auto& o : d.outcomes) {
        m.var_q2 += o.prob * (o.q2 - m.q2) * (o.q2 - m.q2);
        m.var_w += o.prob * (o.w_ext - m.w) * (o.w_ext - m.w);
    }
    return m;
}

// |a - b| relative to max(|a|, |b|, scale); `scale` guards points where
// the quantities themselves nearly cancel.
double rel_err(double a, double b, double scale = 0) {
    double denom = std::max({std::abs(a), std::abs(b), scale});
    if (denom == 0) {
        return std::abs(a - b);
    }
    return std::abs(a - b) / denom;
}

struct Suite {
    Options options;
    std::vector<PropertyResult> results;
    std::vector<EngineParams> presets = preset_grid_params();

    void report_max(const std::string& name, double worst, double tol,
                    const std::string& detail) {
        results.push_back({name, worst <= tol, false, worst, tol, detail});
    }

    void report_min(const std::string& name, double worst, double floor,
                    const std::string& detail) {
        results.push_back({name, worst >= floor, false, worst, floor, detail});
    }

    void report_info(const std::string& name, double value, const std::string& detail) {
        results.push_back({name, true, true, value, 0, detail});
    }
};

void check_units(Suite& s) {
    double worst = 0;
    for (int i = 0; i <= 120; ++i) {
        double kelvin = std::pow(10.0, -8 + 0.1 * i);  // 1e-8 .. 1e4 K
        double beta = units::kelvin_to_beta_h(kelvin);
        double back = units::beta_h_to_kelvin(beta).value();
        worst = std::max(worst, rel_err(kelvin, back));
    }
    s.report_max("units-round-trip", worst, 1e-12,
                 "max relative error of kelvin -> beta_h -> kelvin over 1e-8..1e4 K");

    double worst_scale = 0;
    double worst_pop = 0;
    for (int i = 1; i <= 40; ++i) {
        double theta = (std::numbers::pi / 2) * i / 40.0;
        double ref = units::flip_angle_to_beta_h(theta, 1.0).value_or(kInf);
        for (double nu : {0.3, 4.78559, 11.81291, 250.0}) {
            double b = units::flip_angle_to_beta_h(theta, nu).value_or(kInf);
            worst_scale = std::max(worst_scale, rel_err(b * nu, ref));
            // Populations implied by the returned spin temperature must
            // reproduce sin^2(theta/2), normalized and ordered.
            double p1 = engine::excited_population({nu, b});
            double target = std::sin(theta / 2) * std::sin(theta / 2);
            worst_pop = std::max(worst_pop, std::abs(p1 - target));
            if (p1 > 0.5) {
                worst_pop = std::max(worst_pop, 1.0);
            }
        }
    }
    s.report_max("units-flip-angle-scale", worst_scale, 1e-12,
                 "beta_h*nu must depend on theta alone; 40 angles x 4 gaps");
    s.report_max("units-flip-angle-population", worst_pop, 1e-12,
                 "excited population at the mapped temperature vs sin^2(theta/2)");
}

void check_enumeration(Suite& s) {
    double worst_norm = 0;
    double worst_energy = 0;
    double worst_mean = 0;
    double worst_var = 0;
    auto feed = [&](const EngineParams& p) {
        EnumerationMoments m = enumeration_moments(p);
        worst_norm = std::max(worst_norm, std::abs(m.prob_sum - 1));
        engine::TPMDistribution d = engine::enumerate_tpm(p);
        for (const auto& o : d.outcomes) {
            worst_energy = std::max(worst_energy, std::abs(o.q1 + o.q2 - o.w_ext));
        }
        worst_mean = std::max(worst_mean, rel_err(engine::avg_heat_q1(p), m.q1, m.scale_q1));
        worst_mean = std::max(worst_mean, rel_err(engine::avg_heat_q2(p), m.q2, m.scale_q2));
        worst_mean =
            std::max(worst_mean, rel_err(engine::avg_work_extracted(p), m.w, m.scale_w));
        worst_mean =
            std::max(worst_mean, rel_err(engine::avg_entropy(p), m.sigma, m.scale_sigma));
        worst_var = std::max(worst_var,
                             rel_err(engine::variance_heat_oracle(p), m.var_q2));
        worst_var = std::max(worst_var, rel_err(engine::variance_work_oracle(p), m.var_w));
    };
    for (std::uint64_t i = 0; i < 10000; ++i) {
        feed(random_params(i));
    }
    for (const EngineParams& p : s.presets) {
        feed(p);
    }
    s.report_max("tpm-normalization", worst_norm, 1e-14,
                 "max |sum of outcome probabilities - 1| over draws and preset grids");
    s.report_max("tpm-energy-conservation", worst_energy, 0,
                 "per-outcome q1 + q2 - w_ext, exact by construction");
    s.report_max("closed-form-vs-enumeration-means", worst_mean, 1e-12,
                 "closed-form averages vs probability-weighted sums, moment-scaled");
    s.report_max("closed-form-vs-enumeration-variances", worst_var, 1e-12,
                 "oracle variances vs enumeration second central moments");
}

void check_second_law_and_regimes(Suite& s) {
    double min_sigma = kInf;
    double worst_crossover = 0;
    double worst_sign = 0;
    double worst_efficiency = 0;
    double worst_carnot = -kInf;
    auto feed = [&](const EngineParams& p) {
        double sigma = engine::avg_entropy(p);
        if (s.options.inject_fault) {
            sigma = -sigma;  // deliberate corruption for the self-test
        }
        min_sigma = std::min(min_sigma, sigma);
        engine::Regime regime = engine::classify_regime(p);
        double w = engine::avg_work_extracted(p);
        double q2 = engine::avg_heat_q2(p);
        double q1 = engine::avg_heat_q1(p);
        switch (regime) {
            case engine::Regime::Crossover:
                worst_crossover = std::max(worst_crossover, std::abs(sigma));
                break;
            case engine::Regime::HeatEngine: {
                worst_sign = std::max({worst_sign, -w, -q2});
                double eta = engine::efficiency(p).value();
                worst_efficiency = std::max(
                    worst_efficiency,
                    std::abs(eta - (1 - p.qubit1.epsilon / p.qubit2.epsilon)));
                worst_carnot =
                    std::max(worst_carnot, eta - (1 - p.qubit2.beta_h / p.qubit1.beta_h));
                break;
            }
            case engine::Regime::Refrigerator:
                worst_sign = std::max({worst_sign, w, -q1});
                break;
            case engine::Regime::Other:
                break;
        }
    };
    for (std::uint64_t i = 0; i < 10000; ++i) {
        feed(random_params(i));
    }
    for (const EngineParams& p : s.presets) {
        feed(p);
    }
    s.report_min("second-law", min_sigma, -1e-15,
                 "min avg_entropy over draws and preset grids");
    s.report_max("crossover-entropy-zero", worst_crossover, 1e-12,
                 "max |avg_entropy| on points classified Crossover");
    s.report_max("regime-sign-coherence", worst_sign, 0,
                 "HeatEngine needs W_ext, Q2 >= 0; Refrigerator needs W_ext <= 0 <= Q1");
    s.report_max("efficiency-closed-form", worst_efficiency, 1e-12,
                 "HeatEngine efficiency vs 1 - eps1/eps2");
    if (worst_carnot == -kInf) {
        worst_carnot = -1;  // no heat-engine point seen (cannot happen with these presets)
    }
    s.report_max("efficiency-below-carnot", worst_carnot, 0,
                 "max of eta - (1 - beta2/beta1) over HeatEngine points, must stay < 0");
}

void check_snr_and_xft(Suite& s) {
    double worst_snr = 0;
    double worst_xft = 0;
    auto feed = [&](const EngineParams& p) {
        auto snr_q2 = engine::inverse_snr(engine::avg_heat_q2(p),
                                          engine::variance_heat_oracle(p));
        auto snr_w = engine::inverse_snr(engine::avg_work_extracted(p),
                                         engine::variance_work_oracle(p));
        double e1 = p.qubit1.epsilon;
        auto snr_q1 = engine::inverse_snr(
            engine::avg_heat_q1(p),
            e1 * e1 / (p.qubit2.epsilon * p.qubit2.epsilon) * engine::variance_heat_oracle(p));
        if (snr_q2 && snr_w && snr_q1) {
            worst_snr = std::max(worst_snr, rel_err(*snr_q2, *snr_w));
            worst_snr = std::max(worst_snr, rel_err(*snr_q2, *snr_q1));
        }
        worst_xft = std::max(worst_xft, engine::xft_check(engine::enumerate_tpm(p)));
    };
    for (std::uint64_t i = 0; i < 10000; ++i) {
        EngineParams p = random_params(i);
        if (p.qubit1.epsilon == p.qubit2.epsilon) {
            continue;  // w identically 0, inverse SNR undefined for w
        }
        feed(p);
    }
    for (const EngineParams& p : s.presets) {
        if (engine::classify_regime(p) != engine::Regime::Crossover) {
            feed(p);
        }
    }
    s.report_max("snr-identity", worst_snr, 1e-12,
                 "inverse SNR of q1, q2, w_ext must coincide when non-degenerate");
    s.report_max("xft-exactness", worst_xft, 1e-10,
                 "max |ln(P(+s)/P(-s)) - s| over draws and preset grids");
}

void check_tur(Suite& s) {
    double worst_round = 0;
    for (int i = 0; i <= 2000; ++i) {
        double y = 1000.0 * i / 2000.0;
        double err = std::abs(tur::x_tanh_x(tur::g_inverse(y)) - y);
        worst_round = std::max(worst_round, err / std::max(1.0, y));
    }
    s.report_max("g-inverse-round-trip", worst_round, 1e-12,
                 "|x_tanh_x(g_inverse(y)) - y| / max(1, y) over y in [0, 1e3]");

    double worst_mono = 0;  // positive when monotonicity fails
    double prev = tur::g_inverse(0);
    for (int i = 1; i <= 2000; ++i) {
        double y = 1000.0 * i / 2000.0;
        double g = tur::g_inverse(y);
        worst_mono = std::max(worst_mono, prev - g);
        prev = g;
    }
    double prev_bound = tur::tur2_bound(1e-9);
    double worst_ordering = 0;
    for (int i = 1; i <= 1300; ++i) {
        double sigma = std::pow(10.0, -9 + 12.0 * i / 1300.0);  // 1e-9 .. 1e3
        double f = tur::tur2_bound(sigma);
        worst_mono = std::max(worst_mono, f - prev_bound);
        prev_bound = f;
        worst_ordering = std::max(worst_ordering, f - tur::tur1_bound(sigma));
    }
    s.report_max("g-inverse-and-bound-monotonicity", worst_mono, 0,
                 "g_inverse must increase and tur2_bound decrease along their grids");
    s.report_max("bound-ordering", worst_ordering, 0,
                 "tur2_bound - tur1_bound must stay < 0 for sigma in [1e-9, 1e3]");

    double worst_limit = 0;
    for (int i = 0; i <= 600; ++i) {
        double sigma = std::pow(10.0, -9 + 5.0 * i / 600.0);  // 1e-9 .. 1e-4
        double diff = tur::tur1_bound(sigma) - tur::tur2_bound(sigma);
        worst_limit = std::max(worst_limit, std::abs(diff - 2.0 / 3.0));
    }
    s.report_max("small-entropy-limit", worst_limit, 1e-3,
                 "tur1_rhs - tur2_rhs vs 2/3 for sigma in [1e-9, 1e-4]");

    double below = tur::tur2_bound(std::nextafter(1e-6, 0.0));
    double above = tur::tur2_bound(1e-6);
    s.report_max("tur2-series-continuity", rel_err(below, above), 1e-8,
                 "relative jump across the sigma = 1e-6 series switch");

    double worst_universal = 0;  // positive when TUR-2 is violated
    long violations = 0;
    auto feed = [&](const EngineParams& p) {
        tur::TurEvaluation ev = tur::evaluate(p);
        if (ev.degenerate) {
            return;
        }
        worst_universal =
            std::max(worst_universal, ev.tur2_rhs - ev.lhs - 1e-9 * std::max(ev.lhs, ev.tur2_rhs));
        if (ev.tur2_violated) {
            ++violations;
        }
    };
    for (std::uint64_t i = 0; i < 10000; ++i) {
        feed(random_params(i));
    }
    for (const EngineParams& p : s.presets) {
        feed(p);
    }
    s.report_max("tur2-universality", worst_universal, 0,
                 "tur2_rhs - lhs - tolerance over draws and preset grids; violations: " +
                     std::to_string(violations));
}

void check_density(Suite& s) {
    using density::DensityMatrix;
    using density::Gate;

    std::vector<Gate> gates = {
        Gate::rot_x(1, 0.7),    Gate::rot_y(2, 1.3),          Gate::rot_z(1, -2.1),
        Gate::cnot(1, 2),       Gate::cnot(2, 1),             Gate::swap(),
        Gate::zz_evolution(std::numbers::pi),                 Gate::rot_x(2, 0.001),
        Gate::rot_y(1, std::numbers::pi / 3),                 Gate::zz_evolution(-0.4),
    };
    double worst_unitary = 0;
    for (const Gate& g : gates) {
        Eigen::Matrix4cd u = density::gate_unitary(g);
        worst_unitary = std::max(
            worst_unitary,
            (u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff());
    }
    s.report_max("gate-unitarity", worst_unitary, 1e-13,
                 "max |U^dagger U - I| entry over a mixed gate set");

    EngineParams pps{{4.78559, 0.177}, {11.81291, 0.02}};
    DensityMatrix state = density::gibbs_product(pps);
    double worst_state = 0;
    for (const Gate& g : gates) {
        state = density::apply_gate(state, g);
        worst_state = std::max({worst_state, density::hermiticity_error(state),
                                density::trace_error(state), -density::min_eigenvalue(state)});
    }
    state = density::apply_gate(state, Gate::dephase_all());
    worst_state = std::max({worst_state, density::hermiticity_error(state),
                            density::trace_error(state), -density::min_eigenvalue(state)});
    s.report_max("state-validity-under-gates", worst_state, 1e-13,
                 "hermiticity, trace and positivity drift along a 11-gate chain");

    DensityMatrix once = density::apply_gate(state, Gate::dephase_all());
    DensityMatrix twice = density::apply_gate(once, Gate::dephase_all());
    s.report_max("dephase-idempotent", (once - twice).cwiseAbs().maxCoeff(), 0,
                 "dephasing twice must equal dephasing once, exactly");

    s.report_max("swap-from-cnots", density::swap_from_cnots_error(), 1e-12,
                 "three alternating CNots vs the swap, max superoperator deviation");

    double worst_cycle = 0;
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            EngineParams p{{4.78559, 0.5 * i / 19.0}, {11.81291, 0.5 * j / 19.0}};
            engine::CycleReport a = density::run_cycle(p);
            engine::CycleReport b = engine::cycle_report(p);
            worst_cycle = std::max({worst_cycle, std::abs(a.q1 - b.q1), std::abs(a.q2 - b.q2),
                                    std::abs(a.w_ext - b.w_ext), std::abs(a.sigma - b.sigma),
                                    std::abs(a.var_q2 - b.var_q2),
                                    std::abs(a.var_w - b.var_w)});
        }
    }
    s.report_max("cycle-route-agreement", worst_cycle, 1e-10,
                 "matrix-route run_cycle vs closed forms on a 20x20 beta grid, h*kHz");

    double worst_prep = 0;
    for (int i = 1; i <= 12; ++i) {
        for (int j = 1; j <= 12; ++j) {
            double t1 = (std::numbers::pi / 2) * i / 12.0;
            double t2 = (std::numbers::pi / 2) * j / 12.0;
            double nu1 = 4.78559;
            double nu2 = 11.81291;
            EngineParams p{{nu1, units::flip_angle_to_beta_h(t1, nu1).value()},
                           {nu2, units::flip_angle_to_beta_h(t2, nu2).value()}};
            DensityMatrix circuit_path = density::thermal_prep(t1, t2);
            DensityMatrix analytic_path = density::gibbs_product(p);
            worst_prep =
                std::max(worst_prep, (circuit_path - analytic_path).cwiseAbs().maxCoeff());
        }
    }
    s.report_max("thermal-prep-equivalence", worst_prep, 1e-12,
                 "rotate-and-crush preparation vs Gibbs product at the mapped temperatures");

    double worst_shift = 0;
    DensityMatrix a = density::gibbs_product(pps);
    DensityMatrix b = density::apply_gate(a, Gate::swap());
    for (int i = 0; i < 50; ++i) {
        Eigen::Vector4d h = density::qubit2_hamiltonian(11.81291);
        double shift = -40 + 80 * mc::uniform01(99, i);
        double base = density::energy_change(a, b, h);
        double shifted = density::energy_change(a, b, h + Eigen::Vector4d::Constant(shift));
        worst_shift = std::max(worst_shift, std::abs(base - shifted));
    }
    s.report_max("energy-reference-invariance", worst_shift, 1e-12,
                 "energy_change under H -> H + c*I for 50 random shifts");

    Eigen::Matrix2cd reduced1 = density::partial_trace(a, 1);
    Eigen::Matrix2cd reduced2 = density::partial_trace(a, 2);
    double p1 = engine::excited_population(pps.qubit1);
    double p2 = engine::excited_population(pps.qubit2);
    double worst_pt = std::max(std::abs(reduced1(1, 1).real() - p1),
                               std::abs(reduced2(1, 1).real() - p2));
    worst_pt = std::max({worst_pt, std::abs(reduced1.trace().real() - 1),
                         std::abs(reduced2.trace().real() - 1)});
    s.report_max("partial-trace-marginals", worst_pt, 1e-14,
                 "reduced states of the Gibbs product vs single-qubit populations");

    double f_self = density::fidelity(a, a);
    double f_orth = density::fidelity(density::ground_state(),
                                      density::apply_gate(density::ground_state(),
                                                          Gate::rot_x(1, std::numbers::pi)));
    double worst_fid = std::max(std::abs(f_self - 1), f_orth);
    s.report_max("fidelity-normalization", worst_fid, 1e-12,
                 "fidelity(rho, rho) = 1 and fidelity of orthogonal pure states = 0");
}

void check_sampler(Suite& s) {
    EngineParams pps{{4.78559, 0.177}, {11.81291, 0.02}};
    std::uint64_t n = s.options.mc_n;
    mc::SampleReport r1 = mc::sample(pps, n, 7);
    mc::SampleReport r2 = mc::sample(pps, n, 7);
    bool identical = r1.counts == r2.counts && r1.mean_q2 == r2.mean_q2 &&
                     r1.var_q2 == r2.var_q2 && r1.mean_w == r2.mean_w &&
                     r1.var_w == r2.var_w;
    s.report_max("mc-determinism", identical ? 0.0 : 1.0, 0,
                 "two runs with the same (params, n, seed) must agree exactly");

    double worst_band = 0;  // in standard-error units
    for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
        mc::SampleReport r = mc::sample(pps, n, seed);
        double exact_q2 = engine::avg_heat_q2(pps);
        double exact_w = engine::avg_work_extracted(pps);
        worst_band = std::max(worst_band, std::abs(r.mean_q2 - exact_q2) / r.se_mean_q2);
        worst_band = std::max(worst_band, std::abs(r.mean_w - exact_w) / r.se_mean_w);
    }
    s.report_max("mc-consistency", worst_band, 5,
                 "empirical means vs enumeration means, in standard errors, 3 seeds");

    mc::XftEmpirical x = mc::xft_empirical(mc::sample(pps, n, 11));
    double measured = x.inconclusive ? kInf : x.statistic / x.se;
    s.report_max("mc-xft-empirical", measured, 4,
                 "|ln(N+/N-) - s| in standard errors at the pps point");
}

void check_sweep_output(Suite& s) {
    sweep::SweepConfig c = sweep::preset("pps-0177");
    std::string csv_a = sweep::to_csv(sweep::run(c));
    std::string csv_b = sweep::to_csv(sweep::run(c));
    double mismatch = csv_a == csv_b ? 0.0 : 1.0;
    if (csv_a.find('\r') != std::string::npos) {
        mismatch = 1.0;
    }
    if (csv_a.rfind(sweep::csv_header, 0) != 0) {
        mismatch = 1.0;
    }
    s.report_max("csv-determinism", mismatch, 0,
                 "identical runs byte-identical, LF endings, fixed header");

    double worst_fmt = 0;
    for (std::uint64_t i = 0; i < 5000; ++i) {
        double mantissa = 2 * mc::uniform01(3, 2 * i) - 1;
        int exponent = static_cast<int>(600 * mc::uniform01(3, 2 * i + 1)) - 300;
        double v = mantissa * std::pow(10.0, exponent);
        if (!std::isfinite(v) || std::abs(v) < 1e-290) {
            continue;  // stay clear of the subnormal range
        }
        double back = format_round_trip(v);
        worst_fmt = std::max(worst_fmt, rel_err(v, back));
    }
    s.report_max("float-format-round-trip", worst_fmt, 1e-11,
                 "formatted doubles must parse back within 12 significant digits");
}

void report_variance_transcription(Suite& s) {
    auto describe = [&](const std::string& label, const EngineParams& p) {
        engine::VarianceDiscrepancyReport r = engine::variance_discrepancy_report(p);
        std::ostringstream detail;
        detail << label << ": printed/oracle heat = " << format_double(r.ratio_heat)
               << ", work = " << format_double(r.ratio_work);
        if (r.printed_heat_negative || r.printed_work_negative) {
            detail << " (printed expression negative)";
        }
        s.report_info("variance-transcription-" + label, r.ratio_heat, detail.str());
    };
    describe("symmetric", EngineParams{{5, 0.3}, {5, 0.3}});
    describe("pps-heat-engine", EngineParams{{4.78559, 0.177}, {11.81291, 0.02}});
    describe("pps-crossover",
             EngineParams{{4.78559, 0.177}, {11.81291, 0.177 * 4.78559 / 11.81291}});
}

}  // namespace

std::vector<PropertyResult> run_all(const Options& options) {
    Suite s;
    s.options = options;
    check_units(s);
    check_enumeration(s);
    check_second_law_and_regimes(s);
    check_snr_and_xft(s);
    check_tur(s);
    check_density(s);
    check_sampler(s);
    check_sweep_output(s);
    report_variance_transcription(s);
    return s.results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    for (const PropertyResult& r : results) {
        if (!r.informational && !r.pass) {
            return false;
        }
    }
    return true;
}

}  // namespace swapengine::verify
