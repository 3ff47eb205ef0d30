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

#ifndef SWAPENGINE_CIRCUIT_HPP
#define SWAPENGINE_CIRCUIT_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "swapengine/density.hpp"

namespace swapengine::density {

/// Parse failure with the 1-based line it happened on.
struct CircuitParseError : std::runtime_error {
    CircuitParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/**
 * Circuit text: one gate per line, '#' starts a comment, blank lines are
 * skipped.
 *
 *   rx <qubit> <angle>     rotation about X by <angle> radians
 *   ry <qubit> <angle>     rotation about Y
 *   rz <qubit> <angle>     rotation about Z
 *   cnot <control> <target>
 *   swap
 *   zz <angle>             diagonal ZZ coupling evolution
 *   dephase                crush all coherences
 *
 * Qubit indices are 1 or 2.  Anything else raises CircuitParseError.
 */
std::vector<Gate> parse_circuit(std::istream& in);
std::vector<Gate> parse_circuit_text(const std::string& text);

/**
 * State text: four rows, each with the four entries of that matrix row
 * as "re im" pairs (8 numbers per row), '#' comments allowed.  Written
 * with the library-wide reproducible float format.
 */
void write_state(std::ostream& out, const DensityMatrix& rho);
DensityMatrix read_state(std::istream& in);

}  // namespace swapengine::density

#endif
