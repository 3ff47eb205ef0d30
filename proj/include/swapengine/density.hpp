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

#ifndef SWAPENGINE_DENSITY_HPP
#define SWAPENGINE_DENSITY_HPP

#include <Eigen/Dense>
#include <vector>

#include "swapengine/engine.hpp"

namespace swapengine::density {

/**
 * Two-qubit density matrix in the product basis |n1 n2> with index
 * 2*n1 + n2, i.e. |00>, |01>, |10>, |11>.  Qubit 1 is the left factor.
 */
using DensityMatrix = Eigen::Matrix4cd;

/**
 * Circuit element.  Rotations act on one qubit (1 or 2) by angle theta:
 * exp(-i*theta*P/2) for P in {X, Y, Z}.  CNot takes distinct control and
 * target.  Swap exchanges the qubits.  ZZEvolution(angle) is the diagonal
 * coupling exp(-i*(angle/4)*Z(x)Z); angle = pi is the half-period point
 * where three alternating CNots reduce to a swap up to local rotations.
 * DephaseAll zeroes every off-diagonal element (a full crusher), the one
 * non-unitary element.
 */
struct Gate {
    enum class Kind { RotX, RotY, RotZ, CNot, Swap, ZZEvolution, DephaseAll };
    Kind kind = Kind::Swap;
    int qubit = 0;    // rotation target
    int control = 0;  // CNot control; `qubit` is then the target
    double angle = 0;

    static Gate rot_x(int qubit, double angle);
    static Gate rot_y(int qubit, double angle);
    static Gate rot_z(int qubit, double angle);
    static Gate cnot(int control, int target);
    static Gate swap();
    static Gate zz_evolution(double angle);
    static Gate dephase_all();
};

/// 4x4 unitary of a gate.  DephaseAll has none: std::domain_error.
Eigen::Matrix4cd gate_unitary(const Gate& g);

/// U rho U^dagger, or the crusher map for DephaseAll.
DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g);

/// Gates applied left to right (first element acts first).
DensityMatrix apply_circuit(const DensityMatrix& rho, const std::vector<Gate>& gates);

/// |00><00|.
DensityMatrix ground_state();

/// Product of single-qubit Gibbs states at the engine parameters.
DensityMatrix gibbs_product(const engine::EngineParams& p);

/**
 * Pseudopure state (1-eta)/4 * I + eta * |00><00| produced by an
 * eta-polarizing preparation.  eta in [0, 1], else std::domain_error.
 */
DensityMatrix pps_state(double eta);

/**
 * State prepared by rotating each qubit of |00> by RotY(theta_i) and
 * crushing coherences; diagonal with excited populations
 * sin^2(theta_i/2), i.e. exactly gibbs_product at the spin temperatures
 * the flip angles define.  theta_i in [0, pi/2], else std::domain_error.
 */
DensityMatrix thermal_prep(double theta1, double theta2);

/// Diagonals of the local Hamiltonians with the ground state at zero:
/// H1 = diag(0, 0, eps1, eps1), H2 = diag(0, eps2, 0, eps2), in h*kHz.
Eigen::Vector4d qubit1_hamiltonian(double epsilon1);
Eigen::Vector4d qubit2_hamiltonian(double epsilon2);

/// Tr[H*(rho_b - rho_a)] for a diagonal H; invariant under H -> H + c*I
/// because both states have unit trace.
double energy_change(const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                     const Eigen::Vector4d& hamiltonian_diag);

/**
 * One full cycle on the matrix route: thermal product state, one swap,
 * heats from Hamiltonian expectation changes, entropy production from
 * (beta1 - beta2)*Q2 - beta1*W_ext, variances from the pre-swap diagonal.
 * Agrees with the closed-form cycle_report to simulation roundoff.
 */
engine::CycleReport run_cycle(const engine::EngineParams& p);

/// Reduced state of one qubit (keep_qubit is 1 or 2).
Eigen::Matrix2cd partial_trace(const DensityMatrix& rho, int keep_qubit);

/// Normalized overlap |Tr(a b^dagger)| / sqrt(Tr(a a^dagger) Tr(b b^dagger)).
/// std::domain_error when either matrix is numerically zero.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// Largest deviation, over the 16 matrix units, between conjugation by
/// three alternating CNots and conjugation by the swap unitary.
double swap_from_cnots_error();

/// State-validity measures used by the verification suite.
double hermiticity_error(const DensityMatrix& rho);
double trace_error(const DensityMatrix& rho);
double min_eigenvalue(const DensityMatrix& rho);

}  // namespace swapengine::density

#endif
