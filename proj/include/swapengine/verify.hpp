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

#ifndef SWAPENGINE_VERIFY_HPP
#define SWAPENGINE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace swapengine::verify {

/**
 * One verified property.  `measured` is the worst value the check saw
 * (a maximum error, a minimum margin, ...) and `threshold` what it was
 * held against; `detail` says which comparison that was.  Informational
 * entries (the variance-transcription comparison) report numbers without
 * a pass/fail stake.
 */
struct PropertyResult {
    std::string name;
    bool pass = false;
    bool informational = false;
    double measured = 0;
    double threshold = 0;
    std::string detail;
};

struct Options {
    // Deliberately corrupt one property (the second-law check) so the
    // harness can prove a broken invariant is actually caught.
    bool inject_fault = false;
    // Monte Carlo sample size used by the sampling checks.
    std::uint64_t mc_n = 1000000;
};

/// Run every library invariant; order is fixed and deterministic (all
/// randomness is counter-based with fixed seeds).
std::vector<PropertyResult> run_all(const Options& options = {});

/// True when every non-informational property passed.
bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace swapengine::verify

#endif
