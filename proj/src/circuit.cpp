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

#include "swapengine/circuit.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "swapengine/format.hpp"

namespace swapengine::density {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

int parse_qubit(const std::string& word, int line) {
    if (word == "1") {
        return 1;
    }
    if (word == "2") {
        return 2;
    }
    throw CircuitParseError(line, "qubit index must be 1 or 2, got '" + word + "'");
}

double parse_number(const std::string& word, int line) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(word, &used);
    } catch (const std::exception&) {
        throw CircuitParseError(line, "expected a number, got '" + word + "'");
    }
    if (used != word.size()) {
        throw CircuitParseError(line, "expected a number, got '" + word + "'");
    }
    return value;
}

void expect_arity(const std::vector<std::string>& words, std::size_t arity, int line) {
    if (words.size() != arity + 1) {
        throw CircuitParseError(line, "'" + words[0] + "' takes " + std::to_string(arity) +
                                          " argument(s)");
    }
}

}  // namespace

std::vector<Gate> parse_circuit(std::istream& in) {
    std::vector<Gate> gates;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> words = split_words(strip_comment(line));
        if (words.empty()) {
            continue;
        }
        const std::string& op = words[0];
        try {
            if (op == "rx" || op == "ry" || op == "rz") {
                expect_arity(words, 2, line_no);
                int qubit = parse_qubit(words[1], line_no);
                double angle = parse_number(words[2], line_no);
                gates.push_back(op == "rx"   ? Gate::rot_x(qubit, angle)
                                : op == "ry" ? Gate::rot_y(qubit, angle)
                                             : Gate::rot_z(qubit, angle));
            } else if (op == "cnot") {
                expect_arity(words, 2, line_no);
                gates.push_back(
                    Gate::cnot(parse_qubit(words[1], line_no), parse_qubit(words[2], line_no)));
            } else if (op == "swap") {
                expect_arity(words, 0, line_no);
                gates.push_back(Gate::swap());
            } else if (op == "zz") {
                expect_arity(words, 1, line_no);
                gates.push_back(Gate::zz_evolution(parse_number(words[1], line_no)));
            } else if (op == "dephase") {
                expect_arity(words, 0, line_no);
                gates.push_back(Gate::dephase_all());
            } else {
                throw CircuitParseError(line_no, "unknown gate '" + op + "'");
            }
        } catch (const std::domain_error& e) {
            throw CircuitParseError(line_no, e.what());
        }
    }
    return gates;
}

std::vector<Gate> parse_circuit_text(const std::string& text) {
    std::istringstream in(text);
    return parse_circuit(in);
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (j > 0) {
                out << "  ";
            }
            out << format_double(rho(i, j).real()) << ' ' << format_double(rho(i, j).imag());
        }
        out << '\n';
    }
}

DensityMatrix read_state(std::istream& in) {
    std::vector<double> numbers;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (const std::string& w : split_words(strip_comment(line))) {
            numbers.push_back(parse_number(w, line_no));
        }
    }
    if (numbers.size() != 32) {
        throw CircuitParseError(line_no, "state needs 32 numbers (4x4 re/im pairs), got " +
                                             std::to_string(numbers.size()));
    }
    DensityMatrix rho;
    std::size_t k = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double re = numbers[k++];
            double im = numbers[k++];
            rho(i, j) = std::complex<double>(re, im);
        }
    }
    return rho;
}

}  // namespace swapengine::density
