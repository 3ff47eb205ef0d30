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

#ifndef SWAPENGINE_FORMAT_HPP
#define SWAPENGINE_FORMAT_HPP

#include <string>

namespace swapengine {

/**
 * Render a double as the shortest decimal string that parses back to the
 * same value, capped at 12 significant digits.  Non-finite values become
 * "inf", "-inf" or "nan".  Used everywhere numbers leave the library so
 * CSV and JSON outputs are reproducible byte for byte.
 */
std::string format_double(double value);

/// Value that format_double(value) parses back to (identity for <= 12
/// significant digits, otherwise the nearest representable of the rounded
/// string).  JSON encoders emit this so text outputs agree across formats.
double format_round_trip(double value);

}  // namespace swapengine

#endif
