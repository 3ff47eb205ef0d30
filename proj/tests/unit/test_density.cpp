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

#include "swapengine/density.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "swapengine/engine.hpp"

using namespace swapengine;
using namespace swapengine::density;
using engine::EngineParams;
using engine::QubitSpec;

namespace {

bool close_rel(double a, double b, double tol) {
    if (a == b) return true;
    return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

EngineParams point_p1() {
    return EngineParams{QubitSpec{4.78559, 0.177}, QubitSpec{11.81291, 0.02}};
}

}  // namespace

TEST_CASE("gate constructors validate their arguments") {
    CHECK_NOTHROW(Gate::rot_x(1, 0.3));
    CHECK_NOTHROW(Gate::rot_y(2, -0.3));
    CHECK_NOTHROW(Gate::rot_z(1, 12.0));
    CHECK_THROWS_AS(Gate::rot_x(0, 0.3), std::domain_error);
    CHECK_THROWS_AS(Gate::rot_x(3, 0.3), std::domain_error);
    CHECK_THROWS_AS(Gate::rot_x(1, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(Gate::cnot(1, 1), std::domain_error);
    CHECK_NOTHROW(Gate::cnot(2, 1));
    CHECK_NOTHROW(Gate::swap());
    CHECK_NOTHROW(Gate::zz_evolution(1.5));
    CHECK_NOTHROW(Gate::dephase_all());
}

TEST_CASE("unitary gates are unitary, dephasing is not a unitary") {
    const Gate gates[] = {Gate::rot_x(1, 0.7),  Gate::rot_y(2, 1.9),
                          Gate::rot_z(1, -2.3), Gate::cnot(1, 2),
                          Gate::cnot(2, 1),     Gate::swap(),
                          Gate::zz_evolution(0.9)};
    for (const Gate &g : gates) {
        Eigen::Matrix4cd u = gate_unitary(g);
        double err =
            (u * u.adjoint() - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
        CHECK(err <= 1e-15);
    }
    CHECK_THROWS_AS(gate_unitary(Gate::dephase_all()), std::domain_error);
}

TEST_CASE("basis convention: |n1 n2> lives at index 2*n1 + n2") {
    // A pi pulse on qubit 1 sends |00> to |10> (index 2).
    DensityMatrix s = apply_gate(ground_state(), Gate::rot_x(1, M_PI));
    CHECK(std::abs(s(2, 2).real() - 1.0) <= 1e-15);
    CHECK(std::abs(s(0, 0)) <= 1e-30);

    // A pi pulse on qubit 2 sends |00> to |01> (index 1).
    DensityMatrix t = apply_gate(ground_state(), Gate::rot_x(2, M_PI));
    CHECK(std::abs(t(1, 1).real() - 1.0) <= 1e-15);
}

TEST_CASE("controlled-not permutes the expected basis states") {
    // Control on qubit 1: |10> <-> |11> (indices 2 and 3).
    Eigen::Matrix4cd u = gate_unitary(Gate::cnot(1, 2));
    CHECK(std::abs(u(0, 0) - 1.0) <= 1e-15);
    CHECK(std::abs(u(1, 1) - 1.0) <= 1e-15);
    CHECK(std::abs(u(3, 2) - 1.0) <= 1e-15);
    CHECK(std::abs(u(2, 3) - 1.0) <= 1e-15);
    // Control on qubit 2: |01> <-> |11> (indices 1 and 3).
    Eigen::Matrix4cd v = gate_unitary(Gate::cnot(2, 1));
    CHECK(std::abs(v(0, 0) - 1.0) <= 1e-15);
    CHECK(std::abs(v(2, 2) - 1.0) <= 1e-15);
    CHECK(std::abs(v(3, 1) - 1.0) <= 1e-15);
    CHECK(std::abs(v(1, 3) - 1.0) <= 1e-15);
}

TEST_CASE("swap exchanges the middle basis states") {
    Eigen::Matrix4cd u = gate_unitary(Gate::swap());
    CHECK(std::abs(u(0, 0) - 1.0) <= 1e-15);
    CHECK(std::abs(u(3, 3) - 1.0) <= 1e-15);
    CHECK(std::abs(u(2, 1) - 1.0) <= 1e-15);
    CHECK(std::abs(u(1, 2) - 1.0) <= 1e-15);
    CHECK(std::abs(u(1, 1)) <= 1e-15);
}

TEST_CASE("swap decomposes into three alternating controlled-nots") {
    CHECK(swap_from_cnots_error() <= 1e-15);
}

TEST_CASE("two-body phase evolution applies parity-dependent phases") {
    double angle = 1.3;
    Eigen::Matrix4cd u = gate_unitary(Gate::zz_evolution(angle));
    std::complex<double> even = std::exp(std::complex<double>(0, -angle / 4));
    std::complex<double> odd = std::exp(std::complex<double>(0, angle / 4));
    CHECK(std::abs(u(0, 0) - even) <= 1e-15);
    CHECK(std::abs(u(3, 3) - even) <= 1e-15);
    CHECK(std::abs(u(1, 1) - odd) <= 1e-15);
    CHECK(std::abs(u(2, 2) - odd) <= 1e-15);

    // Inverse evolution composes to the identity on any state.
    DensityMatrix before = apply_circuit(
        ground_state(), {Gate::rot_y(1, 0.9), Gate::rot_y(2, 0.4)});
    DensityMatrix after = apply_circuit(
        before, {Gate::zz_evolution(angle), Gate::zz_evolution(-angle)});
    CHECK((after - before).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("dephasing keeps the diagonal and kills coherences") {
    DensityMatrix s = apply_circuit(
        ground_state(), {Gate::rot_y(1, 1.0472), Gate::rot_y(2, 0.7854)});
    Eigen::Vector4d diag_before = s.diagonal().real();
    s = apply_gate(s, Gate::dephase_all());
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) CHECK(std::abs(s(i, j)) == 0.0);
        }
    }
    CHECK((s.diagonal().real() - diag_before).cwiseAbs().maxCoeff() <= 1e-15);
    // Idempotent.
    DensityMatrix t = apply_gate(s, Gate::dephase_all());
    CHECK((t - s).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("thermal product state matches the qubit populations") {
    auto p = point_p1();
    DensityMatrix s = gibbs_product(p);
    double p1 = engine::excited_population(p.qubit1);
    double p2 = engine::excited_population(p.qubit2);
    CHECK(close_rel(s(0, 0).real(), (1 - p1) * (1 - p2), 1e-14));
    CHECK(close_rel(s(1, 1).real(), (1 - p1) * p2, 1e-14));
    CHECK(close_rel(s(2, 2).real(), p1 * (1 - p2), 1e-14));
    CHECK(close_rel(s(3, 3).real(), p1 * p2, 1e-14));
    CHECK(hermiticity_error(s) == 0.0);
    CHECK(std::abs(trace_error(s)) <= 1e-15);
    CHECK(min_eigenvalue(s) >= -1e-16);
}

TEST_CASE("pseudopure state and its purity") {
    DensityMatrix s = pps_state(0.5);
    CHECK(close_rel(s(0, 0).real(), 0.625, 1e-15));
    CHECK(close_rel(s(1, 1).real(), 0.125, 1e-15));
    CHECK(close_rel(s(2, 2).real(), 0.125, 1e-15));
    CHECK(close_rel(s(3, 3).real(), 0.125, 1e-15));

    // Typical room-temperature polarization: purity barely above 1/4.
    DensityMatrix tiny = pps_state(1.21e-5);
    double purity = (tiny * tiny).trace().real();
    CHECK(close_rel(purity, 0.2500000001098075, 1e-12));

    CHECK_THROWS_AS(pps_state(-0.1), std::domain_error);
    CHECK_THROWS_AS(pps_state(1.5), std::domain_error);
}

TEST_CASE("rotation plus dephasing prepares the diagonal thermal state") {
    // theta = pi/3 puts sin^2(pi/6) = 1/4 in the excited level of each
    // qubit: a diagonal product state.
    DensityMatrix s = thermal_prep(M_PI / 3, M_PI / 3);
    CHECK(close_rel(s(0, 0).real(), 0.5625, 1e-14));
    CHECK(close_rel(s(1, 1).real(), 0.1875, 1e-14));
    CHECK(close_rel(s(2, 2).real(), 0.1875, 1e-14));
    CHECK(close_rel(s(3, 3).real(), 0.0625, 1e-14));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) CHECK(std::abs(s(i, j)) == 0.0);
        }
    }
    CHECK_THROWS_AS(thermal_prep(-0.1, 0.3), std::domain_error);
    CHECK_THROWS_AS(thermal_prep(0.3, 2.0), std::domain_error);
}

TEST_CASE("full cycle on the matrix route reproduces the closed forms") {
    auto p = point_p1();
    engine::CycleReport r = run_cycle(p);
    CHECK(close_rel(r.q1, -0.6755170896159429532138, 1e-12));
    CHECK(close_rel(r.q2, 1.667468918794771108985, 1e-12));
    CHECK(close_rel(r.w_ext, 0.9919518291788281557714, 1e-12));
    CHECK(close_rel(r.sigma, 0.08621714648612648053913, 1e-12));
    CHECK(close_rel(r.var_q2, 63.71121367645130634263, 1e-12));
    CHECK(close_rel(r.var_w, 22.54662535658790919876, 1e-12));
    CHECK(r.regime == engine::Regime::HeatEngine);
}

TEST_CASE("cycle at the crossover produces no flows to float accuracy") {
    EngineParams cross{QubitSpec{4.78559, 0.177},
                       QubitSpec{11.81291, 0.177 * 4.78559 / 11.81291}};
    engine::CycleReport r = run_cycle(cross);
    CHECK(std::fabs(r.q2) <= 1e-12);
    CHECK(std::fabs(r.w_ext) <= 1e-12);
    CHECK(std::fabs(r.sigma) <= 1e-12);
}

TEST_CASE("energy change is invariant under shifting the zero of energy") {
    auto p = point_p1();
    DensityMatrix a = gibbs_product(p);
    DensityMatrix b = apply_gate(a, Gate::swap());
    Eigen::Vector4d h = qubit2_hamiltonian(p.qubit2.epsilon);
    double q = energy_change(a, b, h);
    Eigen::Vector4d shifted = h.array() + 17.25;
    CHECK(close_rel(energy_change(a, b, shifted), q, 1e-10));
}

TEST_CASE("reduced states of a product state are its factors") {
    auto p = point_p1();
    DensityMatrix s = gibbs_product(p);
    Eigen::Matrix2cd m1 = partial_trace(s, 1);
    Eigen::Matrix2cd m2 = partial_trace(s, 2);
    double p1 = engine::excited_population(p.qubit1);
    double p2 = engine::excited_population(p.qubit2);
    CHECK(close_rel(m1(1, 1).real(), p1, 1e-14));
    CHECK(close_rel(m1(0, 0).real(), 1 - p1, 1e-14));
    CHECK(close_rel(m2(1, 1).real(), p2, 1e-14));
    CHECK(close_rel(m2(0, 0).real(), 1 - p2, 1e-14));
    CHECK_THROWS_AS(partial_trace(s, 0), std::domain_error);

    // After the swap the marginals exchange.
    DensityMatrix t = apply_gate(s, Gate::swap());
    Eigen::Matrix2cd n1 = partial_trace(t, 1);
    CHECK(close_rel(n1(1, 1).real(), p2, 1e-14));
}

TEST_CASE("fidelity between pre- and post-swap thermal states") {
    auto p = point_p1();
    DensityMatrix a = gibbs_product(p);
    DensityMatrix b = apply_gate(a, Gate::swap());
    CHECK(close_rel(fidelity(a, b), 0.9322246659040675433367, 1e-12));
    CHECK(close_rel(fidelity(a, a), 1.0, 1e-14));

    // Orthogonal pure states have zero overlap.
    DensityMatrix g = ground_state();
    DensityMatrix e = apply_gate(g, Gate::rot_x(1, M_PI));
    CHECK(fidelity(g, e) <= 1e-15);
    CHECK_THROWS_AS(fidelity(g, DensityMatrix::Zero()), std::domain_error);
}

TEST_CASE("state health metrics flag deliberate corruption") {
    DensityMatrix s = ground_state();
    s(0, 1) = std::complex<double>(0.3, 0.1);
    CHECK(hermiticity_error(s) > 0.1);
    s(1, 0) = std::conj(s(0, 1));
    CHECK(hermiticity_error(s) <= 1e-16);
    s(1, 1) = 0.5;
    CHECK(std::abs(trace_error(s)) > 0.4);
}

TEST_CASE("hamiltonians use the chosen basis ordering") {
    Eigen::Vector4d h1 = qubit1_hamiltonian(4.78559);
    Eigen::Vector4d h2 = qubit2_hamiltonian(11.81291);
    CHECK(h1(0) == 0.0);
    CHECK(h1(1) == 0.0);
    CHECK(h1(2) == 4.78559);
    CHECK(h1(3) == 4.78559);
    CHECK(h2(0) == 0.0);
    CHECK(h2(1) == 11.81291);
    CHECK(h2(2) == 0.0);
    CHECK(h2(3) == 11.81291);
}
