// Copyright 2026 The swapengine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapengine/engine.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace swapengine::engine;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool close_rel(double a, double b, double tol) {
    if (a == b) return true;
    return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

// Working point P1: cold qubit at 4.78559 kHz, hot qubit at 11.81291 kHz,
// beta1_h = 0.177, beta2_h = 0.02. Heat-engine side of the crossover.
EngineParams point_p1() {
    return EngineParams{QubitSpec{4.78559, 0.177}, QubitSpec{11.81291, 0.02}};
}

// Working point P2: same qubits, beta2_h = 0.15. Refrigerator side.
EngineParams point_p2() {
    return EngineParams{QubitSpec{4.78559, 0.177}, QubitSpec{11.81291, 0.15}};
}

// Working point P3: beta1_h = 0.289, beta2_h = 0.02.
EngineParams point_p3() {
    return EngineParams{QubitSpec{4.78559, 0.289}, QubitSpec{11.81291, 0.02}};
}

}  // namespace

TEST_CASE("excited populations at the reference working point") {
    auto p = point_p1();
    CHECK(close_rel(excited_population(p.qubit1), 0.300052172973314818505,
                    1e-14));
    CHECK(close_rel(excited_population(p.qubit2), 0.441208663524311237591,
                    1e-14));
    CHECK(close_rel(population_difference(p), 0.141156490550996419086, 1e-13));
}

TEST_CASE("population limits") {
    CHECK(excited_population(QubitSpec{5.0, 0.0}) == 0.5);
    CHECK(excited_population(QubitSpec{5.0, kInf}) == 0.0);
    // Deep in the exponential tail the stable branch must not underflow to
    // a wrong value: p = e^-x for large x.
    double p = excited_population(QubitSpec{1.0, 700.0});
    CHECK(close_rel(p, std::exp(-700.0), 1e-12));
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate(point_p1()));
    CHECK_NOTHROW(validate(EngineParams{QubitSpec{1.0, kInf}, QubitSpec{2.0, 0.0}}));
    CHECK_THROWS_AS(validate(EngineParams{QubitSpec{0.0, 0.1}, QubitSpec{2.0, 0.1}}),
                    std::domain_error);
    CHECK_THROWS_AS(validate(EngineParams{QubitSpec{-1.0, 0.1}, QubitSpec{2.0, 0.1}}),
                    std::domain_error);
    CHECK_THROWS_AS(validate(EngineParams{QubitSpec{1.0, -0.1}, QubitSpec{2.0, 0.1}}),
                    std::domain_error);
    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate(EngineParams{QubitSpec{1.0, nan}, QubitSpec{2.0, 0.1}}),
                    std::domain_error);
    CHECK_THROWS_AS(validate(EngineParams{QubitSpec{kInf, 0.1}, QubitSpec{2.0, 0.1}}),
                    std::domain_error);
}

TEST_CASE("average energy flows at the reference working point") {
    auto p = point_p1();
    CHECK(close_rel(avg_heat_q1(p), -0.6755170896159429532138, 1e-13));
    CHECK(close_rel(avg_heat_q2(p), 1.667468918794771108985, 1e-13));
    CHECK(close_rel(avg_work_extracted(p), 0.9919518291788281557714, 1e-13));
    CHECK(close_rel(avg_entropy(p), 0.08621714648612648053913, 1e-13));
    // Energy balance: extracted work equals the sum of the heats.
    CHECK(close_rel(avg_work_extracted(p), avg_heat_q1(p) + avg_heat_q2(p),
                    1e-13));
}

TEST_CASE("refrigerator working point") {
    auto p = point_p2();
    CHECK(close_rel(avg_heat_q1(p), 0.7405724522162599905253, 1e-13));
    CHECK(close_rel(avg_heat_q2(p), -1.828053746039669049099, 1e-13));
    CHECK(close_rel(avg_work_extracted(p), -1.087481293823409058573, 1e-13));
    CHECK(close_rel(avg_entropy(p), 0.1431267378636723390418, 1e-13));
    // The refrigerator draws heat out of bath 1 at the cost of input work.
    CHECK(avg_heat_q1(p) > 0.0);
    CHECK(avg_work_extracted(p) < 0.0);
    CHECK(close_rel(avg_work_input(p), 1.087481293823409058573, 1e-13));
}

TEST_CASE("colder working point") {
    auto p = point_p3();
    CHECK(close_rel(avg_heat_q1(p), -1.151828044319925575258, 1e-13));
    CHECK(close_rel(avg_heat_q2(p), 2.843210768792832655372, 1e-13));
    CHECK(close_rel(avg_work_extracted(p), 1.691382724472907080114, 1e-13));
    CHECK(close_rel(avg_entropy(p), 0.2760140894326018381421, 1e-13));
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(point_p1()) == Regime::HeatEngine);
    CHECK(classify_regime(point_p2()) == Regime::Refrigerator);
    CHECK(classify_regime(point_p3()) == Regime::HeatEngine);

    // Exactly matched reduced energies: the crossover point.
    EngineParams cross{QubitSpec{4.78559, 0.177},
                       QubitSpec{11.81291, 0.177 * 4.78559 / 11.81291}};
    CHECK(classify_regime(cross) == Regime::Crossover);

    // Reversed gap ordering is outside the engine operating map.
    EngineParams other{QubitSpec{11.81291, 0.02}, QubitSpec{4.78559, 0.177}};
    CHECK(classify_regime(other) == Regime::Other);
    EngineParams equal_eps{QubitSpec{5.0, 0.3}, QubitSpec{5.0, 0.1}};
    CHECK(classify_regime(equal_eps) == Regime::Other);

    // Both baths at zero temperature: no population difference at all.
    EngineParams frozen{QubitSpec{1.0, kInf}, QubitSpec{2.0, kInf}};
    CHECK(classify_regime(frozen) == Regime::Crossover);

    CHECK(to_string(Regime::HeatEngine) == std::string("HeatEngine"));
    CHECK(to_string(Regime::Refrigerator) == std::string("Refrigerator"));
    CHECK(to_string(Regime::Crossover) == std::string("Crossover"));
    CHECK(to_string(Regime::Other) == std::string("Other"));
}

TEST_CASE("crossover point carries no average flows") {
    EngineParams cross{QubitSpec{4.78559, 0.177},
                       QubitSpec{11.81291, 0.177 * 4.78559 / 11.81291}};
    // beta2_h is rounded, so flows are at rounding level, not exactly zero.
    CHECK(std::fabs(avg_heat_q1(cross)) <= 1e-12);
    CHECK(std::fabs(avg_heat_q2(cross)) <= 1e-12);
    CHECK(std::fabs(avg_work_extracted(cross)) <= 1e-12);
    CHECK(std::fabs(avg_entropy(cross)) <= 1e-12);
    CHECK(avg_entropy(cross) >= 0.0);
}

TEST_CASE("two-point measurement table") {
    auto p = point_p1();
    auto d = enumerate_tpm(p);
    double p1 = excited_population(p.qubit1);
    double p2 = excited_population(p.qubit2);

    REQUIRE(d.outcomes.size() == 4);
    // Fixed outcome order: (0,0), (0,1), (1,0), (1,1).
    CHECK(d.outcomes[0].n1 == 0);
    CHECK(d.outcomes[0].n2 == 0);
    CHECK(d.outcomes[1].n1 == 0);
    CHECK(d.outcomes[1].n2 == 1);
    CHECK(d.outcomes[2].n1 == 1);
    CHECK(d.outcomes[2].n2 == 0);
    CHECK(d.outcomes[3].n1 == 1);
    CHECK(d.outcomes[3].n2 == 1);

    CHECK(close_rel(d.outcomes[0].prob, (1 - p1) * (1 - p2), 1e-15));
    CHECK(close_rel(d.outcomes[1].prob, (1 - p1) * p2, 1e-15));
    CHECK(close_rel(d.outcomes[2].prob, p1 * (1 - p2), 1e-15));
    CHECK(close_rel(d.outcomes[3].prob, p1 * p2, 1e-15));

    double total = 0.0;
    for (const auto &o : d.outcomes) total += o.prob;
    CHECK(std::fabs(total - 1.0) <= 1e-15);

    // Per-outcome bookkeeping: q1 = -eps1 * d, q2 = eps2 * d,
    // w = q1 + q2, sigma = (x1 - x2) * d with d = n2 - n1.
    double x1 = p.qubit1.beta_h * p.qubit1.epsilon;
    double x2 = p.qubit2.beta_h * p.qubit2.epsilon;
    for (const auto &o : d.outcomes) {
        int diff = o.n2 - o.n1;
        CHECK(o.q1 == -p.qubit1.epsilon * diff);
        CHECK(o.q2 == p.qubit2.epsilon * diff);
        CHECK(close_rel(o.w_ext, o.q1 + o.q2, 1e-14));
        if (diff == 0) {
            CHECK(o.sigma == 0.0);
        } else {
            CHECK(close_rel(o.sigma, (x1 - x2) * diff, 1e-15));
        }
    }

    // Means recomputed from the table agree with the closed forms.
    double mean_q2 = 0.0;
    for (const auto &o : d.outcomes) mean_q2 += o.prob * o.q2;
    CHECK(close_rel(mean_q2, avg_heat_q2(p), 1e-12));
}

TEST_CASE("fluctuation variances at the reference working point") {
    auto p = point_p1();
    CHECK(close_rel(variance_heat_oracle(p), 63.71121367645130634263, 1e-13));
    CHECK(close_rel(variance_work_oracle(p), 22.54662535658790919876, 1e-13));
}

TEST_CASE("printed variance expressions and their discrepancy") {
    auto p = point_p1();
    CHECK(close_rel(printed_variance_heat(p), 29.06634933018056594971, 1e-12));
    CHECK(close_rel(printed_variance_work(p), -16.83052530767840588308, 1e-12));

    auto report = variance_discrepancy_report(p);
    CHECK(close_rel(report.ratio_heat, 0.4562203049182212981528, 1e-12));
    CHECK(close_rel(report.ratio_work, -0.7464764700479083748731, 1e-12));
    CHECK_FALSE(report.printed_heat_negative);
    CHECK(report.printed_work_negative);
}

TEST_CASE("printed variance at the crossover is exactly twice the work variance") {
    EngineParams cross{QubitSpec{4.78559, 0.177},
                       QubitSpec{11.81291, 0.177 * 4.78559 / 11.81291}};
    CHECK(close_rel(variance_heat_oracle(cross), 58.61465753639672814235, 1e-12));
    CHECK(close_rel(variance_work_oracle(cross), 20.7430159875656236161, 1e-12));
    CHECK(close_rel(printed_variance_heat(cross), 19.23948370902803686683, 1e-12));
    CHECK(close_rel(printed_variance_work(cross), 41.48603197513124723219, 1e-12));
    auto report = variance_discrepancy_report(cross);
    CHECK(close_rel(report.ratio_work, 2.0, 1e-9));
}

TEST_CASE("printed heat variance doubles for identical qubits") {
    EngineParams sym{QubitSpec{5.0, 0.3}, QubitSpec{5.0, 0.3}};
    CHECK(close_rel(printed_variance_heat(sym), 14.91464520703328565015, 1e-12));
    CHECK(close_rel(variance_heat_oracle(sym), 7.457322603516642825077, 1e-12));
    auto report = variance_discrepancy_report(sym);
    CHECK(close_rel(report.ratio_heat, 2.0, 1e-12));
    // Equal gaps mean zero work per cycle, so the work ratio is undefined.
    CHECK(variance_work_oracle(sym) == 0.0);
    CHECK(std::isnan(report.ratio_work));
}

TEST_CASE("printed heat variance can go negative at extreme parameters") {
    EngineParams extreme{QubitSpec{1.0, 0.0}, QubitSpec{100.0, 1.0}};
    CHECK(close_rel(printed_variance_heat(extreme), -148.0, 1e-12));
    CHECK(close_rel(printed_variance_work(extreme), 34699.5, 1e-12));
    CHECK(close_rel(variance_heat_oracle(extreme), 2500.0, 1e-12));
    CHECK(close_rel(variance_work_oracle(extreme), 2450.25, 1e-12));
    auto report = variance_discrepancy_report(extreme);
    CHECK(report.printed_heat_negative);
}

TEST_CASE("signal-to-noise helper") {
    auto snr = inverse_snr(1.0, 4.0);
    REQUIRE(snr.has_value());
    CHECK(*snr == 4.0);

    // Degenerate: mean indistinguishable from zero at the noise scale.
    CHECK_FALSE(inverse_snr(0.0, 1.0).has_value());
    CHECK_FALSE(inverse_snr(2e-14, 1.0).has_value());
    CHECK(inverse_snr(1.0, 0.0).has_value());
    CHECK(*inverse_snr(1.0, 0.0) == 0.0);

    CHECK_THROWS_AS(inverse_snr(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(inverse_snr(1.0, std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);

    // At the reference point: var(q2) / <q2>^2.
    auto p = point_p1();
    auto lhs = inverse_snr(avg_heat_q2(p), variance_heat_oracle(p));
    REQUIRE(lhs.has_value());
    CHECK(close_rel(*lhs, 22.91397227475192758056, 1e-12));
}

TEST_CASE("exchange symmetry of the outcome distribution") {
    // log(P(0,1) / P(1,0)) equals the entropy production of that outcome,
    // exactly, for any parameters.
    CHECK(xft_check(enumerate_tpm(point_p1())) <= 1e-12);
    CHECK(xft_check(enumerate_tpm(point_p2())) <= 1e-12);
    CHECK(xft_check(enumerate_tpm(point_p3())) <= 1e-12);

    EngineParams sym{QubitSpec{5.0, 0.3}, QubitSpec{5.0, 0.3}};
    CHECK(xft_check(enumerate_tpm(sym)) <= 1e-15);

    // One-sided support (a zero-temperature bath) leaves the ratio undefined.
    EngineParams frozen{QubitSpec{1.0, kInf}, QubitSpec{2.0, 0.1}};
    CHECK_THROWS_AS(xft_check(enumerate_tpm(frozen)), std::domain_error);
}

TEST_CASE("thermoelectric efficiency in the heat-engine regime") {
    auto p = point_p1();
    auto eta = efficiency(p);
    REQUIRE(eta.has_value());
    CHECK(close_rel(*eta, 0.5948847489737922323966, 1e-13));
    // Below the Carnot ratio.
    CHECK(*eta < 1.0 - p.qubit2.beta_h / p.qubit1.beta_h);
    // No efficiency outside the heat-engine regime.
    CHECK_FALSE(efficiency(point_p2()).has_value());
}

TEST_CASE("near-degenerate inverse temperatures keep full relative accuracy") {
    // Microwave-scale gaps at room temperature: beta_h ~ 1e-10. The
    // population difference must come out of the stable expm1 branch.
    EngineParams p{QubitSpec{4.78559, 1.61e-10}, QubitSpec{11.81291, 1.2e-10}};
    CHECK(close_rel(avg_heat_q2(p), -1.910942585375274999412e-9, 1e-11));
    CHECK(close_rel(avg_work_extracted(p), -1.13679060020429999965e-9, 1e-11));
    CHECK(close_rel(avg_entropy(p), 1.046746406325060249678e-19, 1e-11));
    CHECK(avg_entropy(p) >= 0.0);

    EngineParams q{QubitSpec{4.78559, 1.61e-10}, QubitSpec{11.81291, 1.25e-9}};
    CHECK(close_rel(avg_heat_q2(q), -4.133236063911352420776e-8, 1e-11));
    CHECK(close_rel(avg_work_extracted(q), -2.458799098329329952871e-8, 1e-11));
    CHECK(close_rel(avg_entropy(q), 4.896960728430484908638e-17, 1e-11));
}

TEST_CASE("cycle report bundles the closed-form summary") {
    auto p = point_p1();
    auto r = cycle_report(p);
    CHECK(close_rel(r.q1, avg_heat_q1(p), 1e-15));
    CHECK(close_rel(r.q2, avg_heat_q2(p), 1e-15));
    CHECK(close_rel(r.w_ext, avg_work_extracted(p), 1e-15));
    CHECK(close_rel(r.sigma, avg_entropy(p), 1e-15));
    CHECK(close_rel(r.var_q2, variance_heat_oracle(p), 1e-15));
    CHECK(close_rel(r.var_w, variance_work_oracle(p), 1e-15));
    CHECK(r.regime == Regime::HeatEngine);
    REQUIRE(r.efficiency.has_value());
    CHECK(close_rel(*r.efficiency, 0.5948847489737922323966, 1e-13));
}
