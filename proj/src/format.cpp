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

#include "swapengine/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace swapengine {

namespace {

// Significant digits in a to_chars significand ("-0.0012030" -> 5).
int significant_digits(const char* begin, const char* end) {
    int count = 0;
    bool seen_nonzero = false;
    for (const char* p = begin; p != end; ++p) {
        char c = *p;
        if (c == 'e' || c == 'E') {
            break;
        }
        if (c < '0' || c > '9') {
            continue;
        }
        if (c != '0') {
            seen_nonzero = true;
        }
        if (seen_nonzero) {
            ++count;
        }
    }
    return count;
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (significant_digits(buf, res.ptr) <= 12) {
        return std::string(buf, res.ptr);
    }
    res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

double format_round_trip(double value) {
    if (!std::isfinite(value)) {
        return value;
    }
    return std::strtod(format_double(value).c_str(), nullptr);
}

}  // namespace swapengine
