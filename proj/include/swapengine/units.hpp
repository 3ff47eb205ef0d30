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

#ifndef SWAPENGINE_UNITS_HPP
#define SWAPENGINE_UNITS_HPP

#include <optional>

namespace swapengine::units {

// Exact SI defining constants.
inline constexpr double planck_J_s = 6.62607015e-34;
inline constexpr double boltzmann_J_per_K = 1.380649e-23;

/**
 * Inverse temperature in the engine's working unit, beta*h in kHz^-1,
 * from a temperature in kelvin.  beta*h [kHz^-1] = 1000 * h / (k_B * T).
 * Throws std::domain_error unless kelvin is finite and > 0.
 */
double kelvin_to_beta_h(double kelvin);

/**
 * Temperature in kelvin from beta*h in kHz^-1.  beta_h == 0 is the
 * infinite-temperature limit and returns an empty optional instead of a
 * silent infinity.  Throws std::domain_error for negative or non-finite
 * input.
 */
std::optional<double> beta_h_to_kelvin(double beta_h);

/**
 * Inverse spin temperature beta*h in kHz^-1 prepared on a qubit of gap
 * nu (kHz) by rotating the ground state by theta and crushing coherences:
 * populations {cos^2(theta/2), sin^2(theta/2)} match a Gibbs state with
 * beta*h = (2/nu) * ln(cot(theta/2)).
 *
 * theta == 0 is the zero-temperature limit (beta infinite) and returns an
 * empty optional.  Throws std::domain_error unless theta is in [0, pi/2]
 * and nu > 0.
 */
std::optional<double> flip_angle_to_beta_h(double theta, double nu);

}  // namespace swapengine::units

#endif
