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

#include "swapengine/density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swapengine::density {

namespace {

using complexd = std::complex<double>;
constexpr complexd kI{0, 1};

void check_qubit_index(int qubit) {
    if (qubit != 1 && qubit != 2) {
        throw std::domain_error("gate: qubit index must be 1 or 2");
    }
}

void check_angle(double angle) {
    if (!std::isfinite(angle)) {
        throw std::domain_error("gate: angle must be finite");
    }
}

// A (x) B on the |n1 n2> ordering (qubit 1 left).
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return m;
}

Eigen::Matrix2cd single_qubit_rotation(Gate::Kind kind, double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Eigen::Matrix2cd u;
    switch (kind) {
        case Gate::Kind::RotX:
            u << c, -kI * s, -kI * s, c;
            break;
        case Gate::Kind::RotY:
            u << c, -s, s, c;
            break;
        default:  // RotZ
            u << std::exp(-kI * (angle / 2)), 0, 0, std::exp(kI * (angle / 2));
            break;
    }
    return u;
}

Eigen::Matrix4cd permutation_unitary(int from_a, int to_a, int from_b, int to_b) {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    u(from_a, from_a) = 0;
    u(to_a, to_a) = 0;
    u(from_b, from_b) = 0;
    u(to_b, to_b) = 0;
    u(to_a, from_a) = 1;
    u(from_a, to_a) = 1;
    u(to_b, from_b) = 1;
    u(from_b, to_b) = 1;
    return u;
}

}  // namespace

Gate Gate::rot_x(int qubit, double angle) {
    check_qubit_index(qubit);
    check_angle(angle);
    return Gate{Kind::RotX, qubit, 0, angle};
}

Gate Gate::rot_y(int qubit, double angle) {
    check_qubit_index(qubit);
    check_angle(angle);
    return Gate{Kind::RotY, qubit, 0, angle};
}

Gate Gate::rot_z(int qubit, double angle) {
    check_qubit_index(qubit);
    check_angle(angle);
    return Gate{Kind::RotZ, qubit, 0, angle};
}

Gate Gate::cnot(int control, int target) {
    check_qubit_index(control);
    check_qubit_index(target);
    if (control == target) {
        throw std::domain_error("gate: CNot control and target must differ");
    }
    return Gate{Kind::CNot, target, control, 0};
}

Gate Gate::swap() {
    return Gate{Kind::Swap, 0, 0, 0};
}

Gate Gate::zz_evolution(double angle) {
    check_angle(angle);
    return Gate{Kind::ZZEvolution, 0, 0, angle};
}

Gate Gate::dephase_all() {
    return Gate{Kind::DephaseAll, 0, 0, 0};
}

Eigen::Matrix4cd gate_unitary(const Gate& g) {
    switch (g.kind) {
        case Gate::Kind::RotX:
        case Gate::Kind::RotY:
        case Gate::Kind::RotZ: {
            Eigen::Matrix2cd u = single_qubit_rotation(g.kind, g.angle);
            Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
            return g.qubit == 1 ? kron2(u, id) : kron2(id, u);
        }
        case Gate::Kind::CNot:
            // Control on qubit 1 flips |10> <-> |11>; control on qubit 2
            // flips |01> <-> |11>.
            if (g.control == 1) {
                return permutation_unitary(2, 3, 2, 3);
            }
            return permutation_unitary(1, 3, 1, 3);
        case Gate::Kind::Swap:
            return permutation_unitary(1, 2, 1, 2);
        case Gate::Kind::ZZEvolution: {
            Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
            complexd even = std::exp(-kI * (g.angle / 4));  // Z(x)Z eigenvalue +1
            complexd odd = std::exp(kI * (g.angle / 4));    // Z(x)Z eigenvalue -1
            u(0, 0) = even;
            u(1, 1) = odd;
            u(2, 2) = odd;
            u(3, 3) = even;
            return u;
        }
        case Gate::Kind::DephaseAll:
            break;
    }
    throw std::domain_error("gate_unitary: DephaseAll is not unitary");
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g) {
    if (g.kind == Gate::Kind::DephaseAll) {
        return rho.diagonal().asDiagonal();
    }
    Eigen::Matrix4cd u = gate_unitary(g);
    return u * rho * u.adjoint();
}

DensityMatrix apply_circuit(const DensityMatrix& rho, const std::vector<Gate>& gates) {
    DensityMatrix state = rho;
    for (const Gate& g : gates) {
        state = apply_gate(state, g);
    }
    return state;
}

DensityMatrix ground_state() {
    DensityMatrix rho = DensityMatrix::Zero();
    rho(0, 0) = 1;
    return rho;
}

DensityMatrix gibbs_product(const engine::EngineParams& p) {
    double p1 = engine::excited_population(p.qubit1);
    double p2 = engine::excited_population(p.qubit2);
    DensityMatrix rho = DensityMatrix::Zero();
    rho(0, 0) = (1 - p1) * (1 - p2);
    rho(1, 1) = (1 - p1) * p2;
    rho(2, 2) = p1 * (1 - p2);
    rho(3, 3) = p1 * p2;
    return rho;
}

DensityMatrix pps_state(double eta) {
    if (!std::isfinite(eta) || eta < 0 || eta > 1) {
        throw std::domain_error("pps_state: eta must lie in [0, 1]");
    }
    DensityMatrix rho = ((1 - eta) / 4) * DensityMatrix::Identity();
    rho(0, 0) += eta;
    return rho;
}

DensityMatrix thermal_prep(double theta1, double theta2) {
    constexpr double half_pi = std::numbers::pi / 2;
    if (!std::isfinite(theta1) || theta1 < 0 || theta1 > half_pi || !std::isfinite(theta2) ||
        theta2 < 0 || theta2 > half_pi) {
        throw std::domain_error("thermal_prep: flip angles must lie in [0, pi/2]");
    }
    return apply_circuit(ground_state(), {Gate::rot_y(1, theta1), Gate::rot_y(2, theta2),
                                          Gate::dephase_all()});
}

Eigen::Vector4d qubit1_hamiltonian(double epsilon1) {
    return Eigen::Vector4d(0, 0, epsilon1, epsilon1);
}

Eigen::Vector4d qubit2_hamiltonian(double epsilon2) {
    return Eigen::Vector4d(0, epsilon2, 0, epsilon2);
}

double energy_change(const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                     const Eigen::Vector4d& hamiltonian_diag) {
    double sum = 0;
    for (int k = 0; k < 4; ++k) {
        sum += hamiltonian_diag(k) * (rho_b(k, k).real() - rho_a(k, k).real());
    }
    return sum;
}

engine::CycleReport run_cycle(const engine::EngineParams& p) {
    DensityMatrix before = gibbs_product(p);
    DensityMatrix after = apply_gate(before, Gate::swap());
    Eigen::Vector4d h1 = qubit1_hamiltonian(p.qubit1.epsilon);
    Eigen::Vector4d h2 = qubit2_hamiltonian(p.qubit2.epsilon);

    engine::CycleReport r;
    // Q_i is the heat bath i supplies to re-thermalize its qubit after
    // the swap, i.e. the energy the swap removed from that qubit:
    // Q_i = -Tr[H_i (rho_after - rho_before)].
    r.q1 = -energy_change(before, after, h1);
    r.q2 = -energy_change(before, after, h2);
    r.w_ext = r.q1 + r.q2;

    double beta1 = p.qubit1.beta_h;
    double beta2 = p.qubit2.beta_h;
    if (r.q2 == 0 && r.w_ext == 0) {
        r.sigma = 0;
    } else {
        r.sigma = (beta1 - beta2) * r.q2 - beta1 * r.w_ext;
    }

    // Trajectory variances from the pre-swap diagonal: outcome (n1, n2)
    // has q2 = eps2*(n2 - n1) and w = (eps2 - eps1)*(n2 - n1).
    double p01 = before(1, 1).real();
    double p10 = before(2, 2).real();
    double e2 = p.qubit2.epsilon;
    double de = p.qubit2.epsilon - p.qubit1.epsilon;
    double mean_d = p01 - p10;
    double second_d = p01 + p10;
    double var_d = second_d - mean_d * mean_d;
    r.var_q2 = e2 * e2 * var_d;
    r.var_w = de * de * var_d;

    r.efficiency = engine::efficiency(p);
    r.regime = engine::classify_regime(p);
    return r;
}

Eigen::Matrix2cd partial_trace(const DensityMatrix& rho, int keep_qubit) {
    check_qubit_index(keep_qubit);
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                if (keep_qubit == 1) {
                    m(a, b) += rho(2 * a + c, 2 * b + c);
                } else {
                    m(a, b) += rho(2 * c + a, 2 * c + b);
                }
            }
        }
    }
    return m;
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    double na = a.squaredNorm();  // Tr(a a^dagger) for any matrix
    double nb = b.squaredNorm();
    if (na == 0 || nb == 0) {
        throw std::domain_error("fidelity: zero matrix");
    }
    complexd overlap = (a * b.adjoint()).trace();
    return std::abs(overlap) / std::sqrt(na * nb);
}

double swap_from_cnots_error() {
    std::vector<Gate> cnots = {Gate::cnot(1, 2), Gate::cnot(2, 1), Gate::cnot(1, 2)};
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            DensityMatrix unit = DensityMatrix::Zero();
            unit(i, j) = 1;
            DensityMatrix via_cnots = apply_circuit(unit, cnots);
            DensityMatrix via_swap = apply_gate(unit, Gate::swap());
            worst = std::max(worst, (via_cnots - via_swap).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double hermiticity_error(const DensityMatrix& rho) {
    return (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff();
}

double trace_error(const DensityMatrix& rho) {
    return std::abs(rho.trace() - complexd{1, 0});
}

double min_eigenvalue(const DensityMatrix& rho) {
    Eigen::Matrix4cd sym = 0.5 * (rho + rho.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(sym);
    return solver.eigenvalues().minCoeff();
}

}  // namespace swapengine::density
