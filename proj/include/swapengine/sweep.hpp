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

#ifndef SWAPENGINE_SWEEP_HPP
#define SWAPENGINE_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "swapengine/engine.hpp"

namespace swapengine::sweep {

/**
 * One-dimensional sweep over the cold-side inverse temperature beta2_h
 * with everything else fixed.  Energies in kHz (epsilon in h*kHz),
 * inverse temperatures in kHz^-1.
 */
struct SweepConfig {
    double epsilon1 = 4.78559;
    double epsilon2 = 11.81291;
    double beta1_h = 0.177;
    double beta2_h_start = 0.01;
    double beta2_h_end = 0.35;
    int points = 201;
    // Add the exact zero-crossing beta2 = beta1*eps1/eps2 to the grid
    // when it falls strictly inside the range, so every sweep that
    // straddles the crossover contains the point where all averages
    // vanish identically.
    bool insert_crossover = true;
};

/// Throws std::domain_error unless start < end, points >= 2 and the
/// fixed parameters form a valid engine.
void validate(const SweepConfig& c);

/**
 * Named parameter sets:
 *   "direct-300K"  room-temperature direct regime: beta1_h = 1.61e-10,
 *                  beta2_h in [1.2e-10, 1.25e-9] (all averages are at the
 *                  1e-9 h*kHz scale or below).
 *   "pps-0177"     pseudopure regime, beta1_h = 0.177, beta2_h in
 *                  [0.01, 0.35].
 *   "pps-0289"     same range at beta1_h = 0.289.
 * All three use the gap pair (4.78559, 11.81291) kHz.  Unknown names
 * throw std::domain_error.
 */
SweepConfig preset(std::string_view name);

/// Names accepted by preset(), for help text.
const std::vector<std::string>& preset_names();

/// The beta2_h grid: `points` uniform values plus the optional exact
/// crossover insertion, ascending.
std::vector<double> grid(const SweepConfig& c);

/// One evaluated grid point: cycle averages plus both bound evaluations.
struct SweepRow {
    double beta2_h = 0;
    double q1 = 0;
    double q2 = 0;
    double w_ext = 0;
    double sigma = 0;
    double inv_snr = 0;  // NaN when degenerate
    double tur1_rhs = 0;
    double tur2_rhs = 0;
    engine::Regime regime = engine::Regime::Other;
    bool tur1_violated = false;
    bool tur2_violated = false;
    bool degenerate = false;
};

SweepRow evaluate_row(const SweepConfig& c, double beta2_h);
std::vector<SweepRow> run(const SweepConfig& c);

inline constexpr std::string_view csv_header =
    "beta2_h,q1,q2,w_ext,sigma,inv_snr,tur1_rhs,tur2_rhs,regime,"
    "tur1_violated,tur2_violated,degenerate";

/// CSV with the exact header above, LF line endings, reproducible float
/// formatting.  Booleans are "true"/"false"; non-finite numbers are
/// "inf"/"-inf"/"nan".
std::string to_csv(const std::vector<SweepRow>& rows);

/**
 * Key = value configuration overlay, one pair per line, '#' comments.
 * Keys are the SweepConfig field names (epsilon1, epsilon2, beta1_h,
 * beta2_h_start, beta2_h_end, points, insert_crossover).  Unknown keys
 * or malformed lines throw std::runtime_error naming the line.
 */
SweepConfig parse_config(std::istream& in, SweepConfig base);
SweepConfig parse_config_file(const std::string& path, SweepConfig base);

/// Companion gnuplot script that plots sigma, both bounds and the
/// inverse SNR from a CSV produced by to_csv.
std::string gnuplot_script(const std::string& csv_path);

}  // namespace swapengine::sweep

#endif
