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

#include "swapengine/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swapengine::units {

namespace {
// h/k_B in K*s; times 1000 converts beta*h between kelvin and kHz^-1.
constexpr double planck_over_boltzmann = planck_J_s / boltzmann_J_per_K;
}  // namespace

double kelvin_to_beta_h(double kelvin) {
    if (!std::isfinite(kelvin) || kelvin <= 0) {
        throw std::domain_error("kelvin_to_beta_h: temperature must be finite and > 0");
    }
    return 1000.0 * planck_over_boltzmann / kelvin;
}

std::optional<double> beta_h_to_kelvin(double beta_h) {
    if (!std::isfinite(beta_h) || beta_h < 0) {
        throw std::domain_error("beta_h_to_kelvin: beta*h must be finite and >= 0");
    }
    if (beta_h == 0) {
        return std::nullopt;  // infinite-temperature limit
    }
    return 1000.0 * planck_over_boltzmann / beta_h;
}

std::optional<double> flip_angle_to_beta_h(double theta, double nu) {
    if (!std::isfinite(nu) || nu <= 0) {
        throw std::domain_error("flip_angle_to_beta_h: nu must be finite and > 0");
    }
    if (!std::isfinite(theta) || theta < 0 || theta > std::numbers::pi / 2) {
        throw std::domain_error("flip_angle_to_beta_h: theta must lie in [0, pi/2]");
    }
    if (theta == 0) {
        return std::nullopt;  // zero-temperature limit
    }
    // ln(cot(t/2)) = ln(cos(t/2)) - ln(sin(t/2)), well conditioned on (0, pi/2].
    double half = theta / 2;
    return (2.0 / nu) * (std::log(std::cos(half)) - std::log(std::sin(half)));
}

}  // namespace swapengine::units
