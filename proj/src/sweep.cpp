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

#include "swapengine/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "swapengine/format.hpp"
#include "swapengine/tur.hpp"

namespace swapengine::sweep {

void validate(const SweepConfig& c) {
    engine::validate(engine::QubitSpec{c.epsilon1, c.beta1_h});
    engine::validate(engine::QubitSpec{c.epsilon2, c.beta2_h_start});
    if (!std::isfinite(c.beta2_h_start) || !std::isfinite(c.beta2_h_end) ||
        !(c.beta2_h_start < c.beta2_h_end)) {
        throw std::domain_error("SweepConfig: need finite beta2_h_start < beta2_h_end");
    }
    if (c.points < 2) {
        throw std::domain_error("SweepConfig: need points >= 2");
    }
}

SweepConfig preset(std::string_view name) {
    SweepConfig c;
    if (name == "direct-300K") {
        c.beta1_h = 1.61e-10;
        c.beta2_h_start = 1.2e-10;
        c.beta2_h_end = 1.25e-9;
        return c;
    }
    if (name == "pps-0177") {
        c.beta1_h = 0.177;
        return c;
    }
    if (name == "pps-0289") {
        c.beta1_h = 0.289;
        return c;
    }
    throw std::domain_error("unknown preset '" + std::string(name) +
                            "' (expected direct-300K, pps-0177 or pps-0289)");
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"direct-300K", "pps-0177", "pps-0289"};
    return names;
}

std::vector<double> grid(const SweepConfig& c) {
    validate(c);
    std::vector<double> values;
    values.reserve(c.points + 1);
    for (int i = 0; i < c.points; ++i) {
        // Pin the last point to the exact endpoint instead of trusting
        // start + span to round back to it.
        values.push_back(i == c.points - 1
                             ? c.beta2_h_end
                             : c.beta2_h_start + (c.beta2_h_end - c.beta2_h_start) * i /
                                                     (c.points - 1));
    }
    if (c.insert_crossover) {
        double crossing = c.beta1_h * c.epsilon1 / c.epsilon2;
        if (crossing > c.beta2_h_start && crossing < c.beta2_h_end &&
            std::find(values.begin(), values.end(), crossing) == values.end()) {
            values.push_back(crossing);
        }
    }
    std::sort(values.begin(), values.end());
    return values;
}

SweepRow evaluate_row(const SweepConfig& c, double beta2_h) {
    engine::EngineParams p{{c.epsilon1, c.beta1_h}, {c.epsilon2, beta2_h}};
    engine::CycleReport cycle = engine::cycle_report(p);
    tur::TurEvaluation ev = tur::evaluate(p);
    SweepRow row;
    row.beta2_h = beta2_h;
    row.q1 = cycle.q1;
    row.q2 = cycle.q2;
    row.w_ext = cycle.w_ext;
    row.sigma = cycle.sigma;
    row.inv_snr = ev.lhs;
    row.tur1_rhs = ev.tur1_rhs;
    row.tur2_rhs = ev.tur2_rhs;
    row.regime = cycle.regime;
    row.tur1_violated = ev.tur1_violated;
    row.tur2_violated = ev.tur2_violated;
    row.degenerate = ev.degenerate;
    return row;
}

std::vector<SweepRow> run(const SweepConfig& c) {
    std::vector<SweepRow> rows;
    for (double b : grid(c)) {
        rows.push_back(evaluate_row(c, b));
    }
    return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out{csv_header};
    out += '\n';
    for (const SweepRow& r : rows) {
        out += format_double(r.beta2_h);
        out += ',';
        out += format_double(r.q1);
        out += ',';
        out += format_double(r.q2);
        out += ',';
        out += format_double(r.w_ext);
        out += ',';
        out += format_double(r.sigma);
        out += ',';
        out += format_double(r.inv_snr);
        out += ',';
        out += format_double(r.tur1_rhs);
        out += ',';
        out += format_double(r.tur2_rhs);
        out += ',';
        out += engine::to_string(r.regime);
        out += ',';
        out += r.tur1_violated ? "true" : "false";
        out += ',';
        out += r.tur2_violated ? "true" : "false";
        out += ',';
        out += r.degenerate ? "true" : "false";
        out += '\n';
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void config_error(int line, const std::string& what) {
    throw std::runtime_error("config line " + std::to_string(line) + ": " + what);
}

double config_number(const std::string& value, int line) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        config_error(line, "expected a number, got '" + value + "'");
    }
    if (used != value.size()) {
        config_error(line, "expected a number, got '" + value + "'");
    }
    return v;
}

bool config_bool(const std::string& value, int line) {
    if (value == "true") {
        return true;
    }
    if (value == "false") {
        return false;
    }
    config_error(line, "expected true or false, got '" + value + "'");
}

}  // namespace

SweepConfig parse_config(std::istream& in, SweepConfig base) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            config_error(line_no, "expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "epsilon1") {
            base.epsilon1 = config_number(value, line_no);
        } else if (key == "epsilon2") {
            base.epsilon2 = config_number(value, line_no);
        } else if (key == "beta1_h") {
            base.beta1_h = config_number(value, line_no);
        } else if (key == "beta2_h_start") {
            base.beta2_h_start = config_number(value, line_no);
        } else if (key == "beta2_h_end") {
            base.beta2_h_end = config_number(value, line_no);
        } else if (key == "points") {
            double v = config_number(value, line_no);
            if (v != std::floor(v) || v < 2 || v > 1e9) {
                config_error(line_no, "points must be an integer >= 2");
            }
            base.points = static_cast<int>(v);
        } else if (key == "insert_crossover") {
            base.insert_crossover = config_bool(value, line_no);
        } else {
            config_error(line_no, "unknown key '" + key + "'");
        }
    }
    return base;
}

SweepConfig parse_config_file(const std::string& path, SweepConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file '" + path + "'");
    }
    return parse_config(in, base);
}

std::string gnuplot_script(const std::string& csv_path) {
    std::ostringstream out;
    out << "# gnuplot companion for a sweep CSV\n"
        << "set datafile separator ','\n"
        << "set key outside\n"
        << "set xlabel 'beta2*h [1/kHz]'\n"
        << "set logscale y\n"
        << "set ylabel 'dimensionless'\n"
        << "plot '" << csv_path << "' using 1:6 every ::1 with lines title 'var/mean^2', \\\n"
        << "     '' using 1:7 every ::1 with lines title '2/sigma', \\\n"
        << "     '' using 1:8 every ::1 with lines title 'csch^2(g(sigma/2))'\n";
    return out.str();
}

}  // namespace swapengine::sweep
