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

#ifndef SWAPENGINE_SAMPLER_HPP
#define SWAPENGINE_SAMPLER_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "swapengine/engine.hpp"

namespace swapengine::mc {

/**
 * Uniform deviate in [0, 1) for draw `index` of stream `seed`, from a
 * 10-round 4x32 counter-based bijection (Philox).  A pure function of
 * (seed, index): draw i is the same number no matter how the draws are
 * batched or ordered, which is what makes every report reproducible
 * byte for byte.
 */
double uniform01(std::uint64_t seed, std::uint64_t index);

/**
 * Outcome tallies and sample statistics of n simulated cycles.  Counts
 * are over the four two-point-measurement outcomes in the fixed order
 * (n1,n2) = (0,0),(0,1),(1,0),(1,1); every derived number is a function
 * of the counts alone.
 */
struct SampleReport {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, 4> counts{};
    // Entropy production of the (0,1) outcome; the trajectory support is
    // {0, +sigma_up, -sigma_up}.  Negative in the refrigerator regime,
    // 0 at the crossover.
    double sigma_up = 0;
    double mean_q2 = 0;
    double mean_w = 0;
    double var_q2 = 0;  // population variance of the sample (divide by n)
    double var_w = 0;
    double se_mean_q2 = 0;  // sqrt(var/n)
    double se_mean_w = 0;

    /// Histogram over the exact entropy support {-s, 0, +s} (single bin
    /// {0: n} at the crossover), ascending by value.
    std::vector<std::pair<double, std::uint64_t>> sigma_histogram() const;
};

/// Draw n cycles by CDF inversion over the exact outcome distribution.
/// n >= 1, else std::domain_error.
SampleReport sample(const engine::EngineParams& p, std::uint64_t n, std::uint64_t seed);

/**
 * Empirical check of the detailed fluctuation relation from the counts:
 * statistic = |ln(N(+s)/N(-s)) - s| over the nonzero support, with
 * standard error sqrt(1/N(+s) + 1/N(-s)).  Inconclusive when either
 * count is zero or the support is {0}.
 */
struct XftEmpirical {
    bool inconclusive = true;
    double statistic = 0;
    double se = 0;
};

XftEmpirical xft_empirical(const SampleReport& r);

}  // namespace swapengine::mc

#endif
