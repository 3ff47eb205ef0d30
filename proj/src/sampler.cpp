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

#include "swapengine/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace swapengine::mc {

namespace {

// Philox 4x32 round and key-schedule constants (Salmon et al. 2011).
constexpr std::uint32_t kWeylA = 0x9E3779B9;
constexpr std::uint32_t kWeylB = 0xBB67AE85;
constexpr std::uint32_t kMultA = 0xD2511F53;
constexpr std::uint32_t kMultB = 0xCD9E8D57;

struct Philox4x32State {
    std::uint32_t c0, c1, c2, c3;
    std::uint32_t k0, k1;
};

void philox_round(Philox4x32State& s) {
    std::uint64_t prod_a = static_cast<std::uint64_t>(kMultA) * s.c0;
    std::uint64_t prod_b = static_cast<std::uint64_t>(kMultB) * s.c2;
    std::uint32_t lo_a = static_cast<std::uint32_t>(prod_a);
    std::uint32_t hi_a = static_cast<std::uint32_t>(prod_a >> 32);
    std::uint32_t lo_b = static_cast<std::uint32_t>(prod_b);
    std::uint32_t hi_b = static_cast<std::uint32_t>(prod_b >> 32);
    std::uint32_t c0 = hi_b ^ s.c1 ^ s.k0;
    std::uint32_t c1 = lo_b;
    std::uint32_t c2 = hi_a ^ s.c3 ^ s.k1;
    std::uint32_t c3 = lo_a;
    s.c0 = c0;
    s.c1 = c1;
    s.c2 = c2;
    s.c3 = c3;
}

}  // namespace

double uniform01(std::uint64_t seed, std::uint64_t index) {
    Philox4x32State s{
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0, 0,
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            s.k0 += kWeylA;
            s.k1 += kWeylB;
        }
        philox_round(s);
    }
    std::uint64_t bits = (static_cast<std::uint64_t>(s.c0) << 32) | s.c1;
    // Top 53 bits scaled by 2^-53: uniform on [0, 1).
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<std::pair<double, std::uint64_t>> SampleReport::sigma_histogram() const {
    if (sigma_up == 0) {
        return {{0.0, n}};
    }
    double s = std::abs(sigma_up);
    std::uint64_t at_plus = sigma_up > 0 ? counts[1] : counts[2];
    std::uint64_t at_minus = sigma_up > 0 ? counts[2] : counts[1];
    return {{-s, at_minus}, {0.0, counts[0] + counts[3]}, {s, at_plus}};
}

SampleReport sample(const engine::EngineParams& p, std::uint64_t n, std::uint64_t seed) {
    if (n < 1) {
        throw std::domain_error("sample: need n >= 1");
    }
    engine::TPMDistribution d = engine::enumerate_tpm(p);
    // CDF thresholds in the fixed outcome order.
    double t0 = d.outcomes[0].prob;
    double t1 = t0 + d.outcomes[1].prob;
    double t2 = t1 + d.outcomes[2].prob;

    SampleReport r;
    r.n = n;
    r.seed = seed;
    r.sigma_up = d.outcomes[1].sigma;
    for (std::uint64_t i = 0; i < n; ++i) {
        double u = uniform01(seed, i);
        int outcome = u < t0 ? 0 : u < t1 ? 1 : u < t2 ? 2 : 3;
        ++r.counts[outcome];
    }

    // All statistics follow from the counts; q2 and w are proportional to
    // n2 - n1, which is +1 on outcome (0,1), -1 on (1,0), 0 otherwise.
    double nd = static_cast<double>(n);
    double f_up = static_cast<double>(r.counts[1]) / nd;
    double f_down = static_cast<double>(r.counts[2]) / nd;
    double mean_d = f_up - f_down;
    double var_d = (f_up + f_down) - mean_d * mean_d;
    double e2 = p.qubit2.epsilon;
    double de = p.qubit2.epsilon - p.qubit1.epsilon;
    r.mean_q2 = e2 * mean_d;
    r.mean_w = de * mean_d;
    r.var_q2 = e2 * e2 * var_d;
    r.var_w = de * de * var_d;
    r.se_mean_q2 = std::sqrt(r.var_q2 / nd);
    r.se_mean_w = std::sqrt(r.var_w / nd);
    return r;
}

XftEmpirical xft_empirical(const SampleReport& r) {
    XftEmpirical x;
    if (r.sigma_up == 0 || r.counts[1] == 0 || r.counts[2] == 0) {
        return x;  // inconclusive
    }
    // |ln(N(+s)/N(-s)) - s| is invariant under relabeling s -> -s, so the
    // signed value works for both regimes.
    double n_up = static_cast<double>(r.counts[1]);
    double n_down = static_cast<double>(r.counts[2]);
    x.inconclusive = false;
    x.statistic = std::abs(std::log(n_up / n_down) - r.sigma_up);
    x.se = std::sqrt(1 / n_up + 1 / n_down);
    return x;
}

}  // namespace swapengine::mc
