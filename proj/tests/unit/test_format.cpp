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

#include "swapengine/format.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

using swapengine::format_double;
using swapengine::format_round_trip;

TEST_CASE("format_double prints short decimals exactly") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(0.177) == "0.177");
    CHECK(format_double(4.78559) == "4.78559");
    CHECK(format_double(11.81291) == "11.81291");
    CHECK(format_double(1.61e-10) == "1.61e-10");
}

TEST_CASE("format_double caps output at 12 significant digits") {
    std::string third = format_double(1.0 / 3.0);
    // Count significant digits: skip sign, leading zeros, and the point.
    int digits = 0;
    bool leading = true;
    for (char c : third) {
        if (c < '0' || c > '9') continue;
        if (leading && c == '0') continue;
        leading = false;
        ++digits;
    }
    CHECK(digits <= 12);
    CHECK(third.substr(0, 5) == "0.333");
}

TEST_CASE("format_double encodes non-finite values as words") {
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("formatted values parse back within 12-digit accuracy") {
    const double values[] = {3.141592653589793,
                             1.599747691122073749374e-10,
                             6.522355541521945058415e-11,
                             63.71121367645130634263,
                             -22.54662535658790919876,
                             1e300,
                             -1e-300};
    for (double v : values) {
        double back = format_round_trip(v);
        double scale = std::fabs(v);
        CHECK(std::fabs(back - v) <= 1e-11 * scale);
    }
    CHECK(format_round_trip(0.0) == 0.0);
    CHECK(std::isnan(format_round_trip(std::numeric_limits<double>::quiet_NaN())));
    CHECK(format_round_trip(std::numeric_limits<double>::infinity()) ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("short representations survive the round trip bit-exactly") {
    const double values[] = {0.177, 0.289, 4.78559, 11.81291, 1.61e-10, 0.02};
    for (double v : values) {
        CHECK(format_round_trip(v) == v);
    }
}
