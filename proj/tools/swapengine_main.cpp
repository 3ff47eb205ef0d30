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

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "swapengine/circuit.hpp"
#include "swapengine/density.hpp"
#include "swapengine/engine.hpp"
#include "swapengine/format.hpp"
#include "swapengine/sampler.hpp"
#include "swapengine/sweep.hpp"
#include "swapengine/tur.hpp"
#include "swapengine/units.hpp"
#include "swapengine/verify.hpp"

namespace {

namespace eng = swapengine::engine;
namespace tur = swapengine::tur;
namespace units = swapengine::units;
namespace density = swapengine::density;
namespace mc = swapengine::mc;
namespace sweep = swapengine::sweep;
namespace verify = swapengine::verify;
using nlohmann::json;
using swapengine::format_double;
using swapengine::format_round_trip;

// A usage-level problem (bad flag value, unknown preset, parse error in an
// input file): exit code 2 instead of the generic runtime 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON and CSV must encode identical numbers, so JSON carries the value
// the formatted token parses back to.  Non-finite values have no JSON
// number form and become the same strings the CSV uses.
json json_number(double v) {
    if (!std::isfinite(v)) {
        return json(format_double(v));
    }
    return json(format_round_trip(v));
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    }
    out << text;
    if (!out.good()) {
        throw std::runtime_error("failed writing output file '" + out_path + "'");
    }
}

struct GlobalFlags {
    bool as_json = false;
    std::string out_path;
    std::string config_path;
};

// ---------------------------------------------------------------- point

struct PointArgs {
    double nu1 = 4.78559;
    double nu2 = 11.81291;
    double beta1_h = 0.177;
    double beta2_h = 0.02;
};

json point_to_json(const eng::EngineParams& p) {
    eng::CycleReport cycle = eng::cycle_report(p);
    tur::TurEvaluation ev = tur::evaluate(p);
    json j;
    j["params"] = {{"nu1", json_number(p.qubit1.epsilon)},
                   {"nu2", json_number(p.qubit2.epsilon)},
                   {"beta1_h", json_number(p.qubit1.beta_h)},
                   {"beta2_h", json_number(p.qubit2.beta_h)}};
    j["regime"] = eng::to_string(cycle.regime);
    j["q1"] = json_number(cycle.q1);
    j["q2"] = json_number(cycle.q2);
    j["w_ext"] = json_number(cycle.w_ext);
    j["w_in"] = json_number(-cycle.w_ext);
    j["sigma"] = json_number(cycle.sigma);
    j["var_q2"] = json_number(cycle.var_q2);
    j["var_w"] = json_number(cycle.var_w);
    if (cycle.efficiency) {
        j["efficiency"] = json_number(*cycle.efficiency);
    }
    j["inv_snr"] = json_number(ev.lhs);
    j["tur1_rhs"] = json_number(ev.tur1_rhs);
    j["tur2_rhs"] = json_number(ev.tur2_rhs);
    j["tur1_violated"] = ev.tur1_violated;
    j["tur2_violated"] = ev.tur2_violated;
    j["degenerate"] = ev.degenerate;
    return j;
}

std::string point_to_text(const eng::EngineParams& p) {
    eng::CycleReport cycle = eng::cycle_report(p);
    tur::TurEvaluation ev = tur::evaluate(p);
    std::ostringstream out;
    out << "regime = " << eng::to_string(cycle.regime) << '\n'
        << "q1 = " << format_double(cycle.q1) << " h*kHz\n"
        << "q2 = " << format_double(cycle.q2) << " h*kHz\n"
        << "w_ext = " << format_double(cycle.w_ext) << " h*kHz\n"
        << "w_in = " << format_double(-cycle.w_ext) << " h*kHz\n"
        << "sigma = " << format_double(cycle.sigma) << '\n'
        << "var_q2 = " << format_double(cycle.var_q2) << " (h*kHz)^2\n"
        << "var_w = " << format_double(cycle.var_w) << " (h*kHz)^2\n";
    if (cycle.efficiency) {
        out << "efficiency = " << format_double(*cycle.efficiency) << '\n';
    }
    out << "inv_snr = " << format_double(ev.lhs) << '\n'
        << "tur1_rhs = " << format_double(ev.tur1_rhs) << '\n'
        << "tur2_rhs = " << format_double(ev.tur2_rhs) << '\n'
        << "tur1_violated = " << (ev.tur1_violated ? "true" : "false") << '\n'
        << "tur2_violated = " << (ev.tur2_violated ? "true" : "false") << '\n'
        << "degenerate = " << (ev.degenerate ? "true" : "false") << '\n';
    return out.str();
}

int cmd_point(const GlobalFlags& g, const PointArgs& a) {
    eng::EngineParams p{{a.nu1, a.beta1_h}, {a.nu2, a.beta2_h}};
    try {
        eng::validate(p);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    if (g.as_json) {
        write_output(g.out_path, point_to_json(p).dump(2) + "\n");
    } else {
        write_output(g.out_path, point_to_text(p));
    }
    return 0;
}

// ---------------------------------------------------------------- sweep

json sweep_to_json(const std::vector<sweep::SweepRow>& rows) {
    json arr = json::array();
    for (const sweep::SweepRow& r : rows) {
        json j;
        j["beta2_h"] = json_number(r.beta2_h);
        j["q1"] = json_number(r.q1);
        j["q2"] = json_number(r.q2);
        j["w_ext"] = json_number(r.w_ext);
        j["sigma"] = json_number(r.sigma);
        j["inv_snr"] = json_number(r.inv_snr);
        j["tur1_rhs"] = json_number(r.tur1_rhs);
        j["tur2_rhs"] = json_number(r.tur2_rhs);
        j["regime"] = eng::to_string(r.regime);
        j["tur1_violated"] = r.tur1_violated;
        j["tur2_violated"] = r.tur2_violated;
        j["degenerate"] = r.degenerate;
        arr.push_back(std::move(j));
    }
    return arr;
}

int cmd_sweep(const GlobalFlags& g, const sweep::SweepConfig& config, bool emit_gnuplot,
              const std::string& gnuplot_path) {
    try {
        sweep::validate(config);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    std::vector<sweep::SweepRow> rows = sweep::run(config);
    if (g.as_json) {
        write_output(g.out_path, sweep_to_json(rows).dump(2) + "\n");
    } else {
        write_output(g.out_path, sweep::to_csv(rows));
    }
    if (emit_gnuplot) {
        if (g.out_path.empty()) {
            throw UsageError("--gnuplot needs --out so the script can reference the CSV");
        }
        std::string script_path = gnuplot_path.empty() ? g.out_path + ".gnuplot" : gnuplot_path;
        std::ofstream script(script_path, std::ios::binary);
        if (!script) {
            throw std::runtime_error("cannot open gnuplot script '" + script_path + "'");
        }
        script << sweep::gnuplot_script(g.out_path);
    }
    return 0;
}

// ------------------------------------------------------------- threshold

struct ThresholdArgs {
    double nu1 = 4.78559;
    double nu2 = 11.81291;
    std::optional<double> beta1_h;
    std::optional<double> t1_kelvin;
    double beta2_lo = 1e-3;
    double beta2_hi = 1.0;
    int scan_points = 2000;
    std::string which = "tur1";
};

int cmd_threshold(const GlobalFlags& g, const ThresholdArgs& a) {
    double beta1 = 0;
    if (a.beta1_h && a.t1_kelvin) {
        throw UsageError("give either --beta1h or --t1-kelvin, not both");
    }
    try {
        beta1 = a.beta1_h ? *a.beta1_h : units::kelvin_to_beta_h(a.t1_kelvin.value_or(300.0));
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    tur::Bound which;
    if (a.which == "tur1") {
        which = tur::Bound::Tur1;
    } else if (a.which == "tur2") {
        which = tur::Bound::Tur2;
    } else {
        throw UsageError("--which must be tur1 or tur2");
    }

    eng::QubitSpec qubit1{a.nu1, beta1};
    std::vector<double> boundaries;
    try {
        boundaries =
            tur::violation_boundary(qubit1, a.nu2, a.beta2_lo, a.beta2_hi, which, a.scan_points);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }

    auto kelvin_of = [](double beta2) {
        auto k = units::beta_h_to_kelvin(beta2);
        return k ? *k : std::numeric_limits<double>::infinity();
    };

    // Fixed reference: an onset of 0.266 uK has been reported for this
    // configuration; evaluate the margin there for comparison.
    const double reference_kelvin = 0.266e-6;
    double reference_beta2 = units::kelvin_to_beta_h(reference_kelvin);
    bool reference_in_range = reference_beta2 > a.beta2_lo && reference_beta2 < a.beta2_hi;
    tur::TurEvaluation ev_ref = tur::evaluate({qubit1, {a.nu2, reference_beta2}});
    double ref_rhs = which == tur::Bound::Tur1 ? ev_ref.tur1_rhs : ev_ref.tur2_rhs;
    bool ref_violated = which == tur::Bound::Tur1 ? ev_ref.tur1_violated : ev_ref.tur2_violated;
    double ref_margin = ev_ref.lhs - ref_rhs;

    const std::string caveat =
        "near the small-entropy limit both sides of the bound grow like 1/sigma while their "
        "gap approaches 2/3, so the inferred onset temperature depends strongly on the "
        "violation tolerance and scan range; treat boundaries as indicative, not sharp.";

    if (g.as_json) {
        json j;
        j["bound"] = a.which;
        j["nu1"] = json_number(a.nu1);
        j["nu2"] = json_number(a.nu2);
        j["beta1_h"] = json_number(beta1);
        auto t1 = units::beta_h_to_kelvin(beta1);
        if (t1) {
            j["t1_kelvin"] = json_number(*t1);
        }
        j["scan"] = {{"beta2_h_lo", json_number(a.beta2_lo)},
                     {"beta2_h_hi", json_number(a.beta2_hi)},
                     {"points", a.scan_points}};
        j["boundaries"] = json::array();
        for (double b : boundaries) {
            j["boundaries"].push_back(
                {{"beta2_h", json_number(b)}, {"t2_kelvin", json_number(kelvin_of(b))}});
        }
        j["reference_0266uK"] = {{"t2_kelvin", json_number(reference_kelvin)},
                                 {"beta2_h", json_number(reference_beta2)},
                                 {"in_scan_range", reference_in_range},
                                 {"violated", ref_violated},
                                 {"margin_lhs_minus_rhs", json_number(ref_margin)}};
        j["caveat"] = caveat;
        write_output(g.out_path, j.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "bound = " << (which == tur::Bound::Tur1 ? "TUR-1" : "TUR-2") << '\n';
    out << "beta1_h = " << format_double(beta1) << " 1/kHz";
    if (auto t1 = units::beta_h_to_kelvin(beta1)) {
        out << "  (T1 = " << format_double(*t1) << " K)";
    }
    out << '\n';
    out << "scan: beta2_h in [" << format_double(a.beta2_lo) << ", " << format_double(a.beta2_hi)
        << "] 1/kHz, " << a.scan_points << " points\n";
    out << "boundaries found: " << boundaries.size() << '\n';
    for (double b : boundaries) {
        out << "  beta2_h = " << format_double(b) << " 1/kHz  (T2 = "
            << format_double(kelvin_of(b)) << " K)\n";
    }
    out << "reference: a reported onset of 0.266 uK corresponds to beta2_h = "
        << format_double(reference_beta2) << " 1/kHz";
    if (reference_in_range) {
        out << "; at that point the bound is " << (ref_violated ? "violated" : "not violated")
            << " (lhs - rhs = " << format_double(ref_margin) << ")";
    } else {
        out << " (outside this scan range)";
    }
    out << "\ncaveat: " << caveat << '\n';
    write_output(g.out_path, out.str());
    return 0;
}

// ------------------------------------------------------------------- mc

struct McArgs {
    std::string preset;
    std::optional<double> nu1;
    std::optional<double> nu2;
    std::optional<double> beta1_h;
    std::optional<double> beta2_h;
    std::uint64_t n = 1000000;
    std::uint64_t seed = 1;
};

int cmd_mc(const GlobalFlags& g, const McArgs& a) {
    sweep::SweepConfig base;
    if (!a.preset.empty()) {
        try {
            base = sweep::preset(a.preset);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
    }
    double nu1 = a.nu1.value_or(base.epsilon1);
    double nu2 = a.nu2.value_or(base.epsilon2);
    double beta1 = a.beta1_h.value_or(base.beta1_h);
    if (!a.beta2_h) {
        throw UsageError("mc needs --beta2h (presets fix only the hot side)");
    }
    eng::EngineParams p{{nu1, beta1}, {nu2, *a.beta2_h}};
    mc::SampleReport r;
    try {
        eng::validate(p);
        r = mc::sample(p, a.n, a.seed);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    mc::XftEmpirical x = mc::xft_empirical(r);

    if (g.as_json) {
        json j;
        j["params"] = {{"nu1", json_number(nu1)},
                       {"nu2", json_number(nu2)},
                       {"beta1_h", json_number(beta1)},
                       {"beta2_h", json_number(*a.beta2_h)}};
        j["n"] = r.n;
        j["seed"] = r.seed;
        j["counts"] = r.counts;
        j["mean_q2"] = json_number(r.mean_q2);
        j["se_mean_q2"] = json_number(r.se_mean_q2);
        j["var_q2"] = json_number(r.var_q2);
        j["mean_w"] = json_number(r.mean_w);
        j["se_mean_w"] = json_number(r.se_mean_w);
        j["var_w"] = json_number(r.var_w);
        j["sigma_histogram"] = json::array();
        for (auto [sigma, count] : r.sigma_histogram()) {
            j["sigma_histogram"].push_back({{"sigma", json_number(sigma)}, {"count", count}});
        }
        j["xft"] = {{"inconclusive", x.inconclusive},
                    {"statistic", json_number(x.statistic)},
                    {"se", json_number(x.se)}};
        write_output(g.out_path, j.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "n = " << r.n << '\n' << "seed = " << r.seed << '\n';
    out << "counts = " << r.counts[0] << ' ' << r.counts[1] << ' ' << r.counts[2] << ' '
        << r.counts[3] << "  (outcomes 00 01 10 11)\n";
    out << "mean_q2 = " << format_double(r.mean_q2) << " +- " << format_double(r.se_mean_q2)
        << " h*kHz\n";
    out << "var_q2 = " << format_double(r.var_q2) << " (h*kHz)^2\n";
    out << "mean_w = " << format_double(r.mean_w) << " +- " << format_double(r.se_mean_w)
        << " h*kHz\n";
    out << "var_w = " << format_double(r.var_w) << " (h*kHz)^2\n";
    out << "sigma histogram:\n";
    for (auto [sigma, count] : r.sigma_histogram()) {
        out << "  " << format_double(sigma) << " : " << count << '\n';
    }
    if (x.inconclusive) {
        out << "xft: inconclusive (empty one-sided tally)\n";
    } else {
        out << "xft: |ln(N+/N-) - s| = " << format_double(x.statistic) << "  (se = "
            << format_double(x.se) << ")\n";
    }
    write_output(g.out_path, out.str());
    return 0;
}

// -------------------------------------------------------------- circuit

int cmd_circuit(const GlobalFlags& g, const std::string& circuit_path,
                const std::string& initial_path, const std::string& reference_path) {
    std::ifstream circuit_file(circuit_path);
    if (!circuit_file) {
        throw UsageError("cannot open circuit file '" + circuit_path + "'");
    }
    std::vector<density::Gate> gates;
    density::DensityMatrix initial = density::ground_state();
    density::DensityMatrix reference;
    bool have_reference = false;
    try {
        gates = density::parse_circuit(circuit_file);
        if (!initial_path.empty()) {
            std::ifstream in(initial_path);
            if (!in) {
                throw UsageError("cannot open state file '" + initial_path + "'");
            }
            initial = density::read_state(in);
        }
        if (!reference_path.empty()) {
            std::ifstream in(reference_path);
            if (!in) {
                throw UsageError("cannot open state file '" + reference_path + "'");
            }
            reference = density::read_state(in);
            have_reference = true;
        }
    } catch (const density::CircuitParseError& e) {
        throw UsageError(std::string(e.what()));
    }
    density::DensityMatrix final_state = density::apply_circuit(initial, gates);

    if (g.as_json) {
        json j;
        json matrix = json::array();
        for (int i = 0; i < 4; ++i) {
            json row = json::array();
            for (int k = 0; k < 4; ++k) {
                row.push_back({json_number(final_state(i, k).real()),
                               json_number(final_state(i, k).imag())});
            }
            matrix.push_back(std::move(row));
        }
        j["state"] = std::move(matrix);
        j["gates"] = gates.size();
        if (have_reference) {
            j["fidelity"] = json_number(density::fidelity(final_state, reference));
        }
        write_output(g.out_path, j.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "# state after " << gates.size() << " gate(s), rows of re im pairs\n";
    density::write_state(out, final_state);
    if (have_reference) {
        out << "fidelity = " << format_double(density::fidelity(final_state, reference)) << '\n';
    }
    write_output(g.out_path, out.str());
    return 0;
}

// --------------------------------------------------------------- verify

int cmd_verify(const GlobalFlags& g, bool inject_fault) {
    verify::Options options;
    options.inject_fault = inject_fault;
    std::vector<verify::PropertyResult> results = verify::run_all(options);
    bool ok = verify::all_passed(results);

    if (g.as_json) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"informational", r.informational},
                           {"measured", json_number(r.measured)},
                           {"threshold", json_number(r.threshold)},
                           {"detail", r.detail}});
        }
        json j;
        j["properties"] = std::move(arr);
        j["all_passed"] = ok;
        write_output(g.out_path, j.dump(2) + "\n");
        return ok ? 0 : 1;
    }

    std::ostringstream out;
    for (const auto& r : results) {
        const char* status = r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL");
        out << status << ' ' << r.name << ": measured = " << format_double(r.measured);
        if (!r.informational) {
            out << " (allowed " << (r.threshold >= r.measured ? "<= " : "bound ")
                << format_double(r.threshold) << ")";
        }
        out << " ; " << r.detail << '\n';
    }
    out << (ok ? "verify: all properties passed\n" : "verify: FAILURES present\n");
    write_output(g.out_path, out.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qubit swap-engine simulator and uncertainty-bound evaluator"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_flag("--json", g.as_json, "structured JSON output instead of text/CSV");
    app.add_option("--out", g.out_path, "write output to this file instead of stdout");
    app.add_option("--config", g.config_path,
                   "sweep config file (key = value lines; sweep subcommand only)");

    PointArgs point_args;
    CLI::App* point = app.add_subcommand("point", "evaluate one parameter point");
    point->add_option("--nu1", point_args.nu1, "qubit 1 gap in kHz")->capture_default_str();
    point->add_option("--nu2", point_args.nu2, "qubit 2 gap in kHz")->capture_default_str();
    point->add_option("--beta1h", point_args.beta1_h, "bath 1 beta*h in 1/kHz")
        ->capture_default_str();
    point->add_option("--beta2h", point_args.beta2_h, "bath 2 beta*h in 1/kHz")
        ->capture_default_str();

    std::string sweep_preset;
    sweep::SweepConfig sweep_config;
    bool no_crossover = false;
    bool emit_gnuplot = false;
    std::string gnuplot_path;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep beta2_h and emit CSV/JSON rows");
    CLI::Option* opt_preset =
        sweep_cmd->add_option("--preset", sweep_preset, "direct-300K, pps-0177 or pps-0289");
    CLI::Option* opt_nu1 = sweep_cmd->add_option("--nu1", sweep_config.epsilon1, "qubit 1 gap, kHz");
    CLI::Option* opt_nu2 = sweep_cmd->add_option("--nu2", sweep_config.epsilon2, "qubit 2 gap, kHz");
    CLI::Option* opt_b1 =
        sweep_cmd->add_option("--beta1h", sweep_config.beta1_h, "bath 1 beta*h, 1/kHz");
    CLI::Option* opt_lo =
        sweep_cmd->add_option("--beta2-start", sweep_config.beta2_h_start, "sweep start, 1/kHz");
    CLI::Option* opt_hi =
        sweep_cmd->add_option("--beta2-end", sweep_config.beta2_h_end, "sweep end, 1/kHz");
    CLI::Option* opt_points =
        sweep_cmd->add_option("--points", sweep_config.points, "uniform grid points (>= 2)");
    sweep_cmd->add_flag("--no-crossover-insert", no_crossover,
                        "do not add the exact crossover point to the grid");
    sweep_cmd->add_flag("--gnuplot", emit_gnuplot, "also write a gnuplot script next to --out");
    sweep_cmd->add_option("--gnuplot-path", gnuplot_path, "override the gnuplot script path");

    ThresholdArgs th;
    CLI::App* threshold =
        app.add_subcommand("threshold", "scan beta2_h for bound-violation boundaries");
    threshold->add_option("--nu1", th.nu1, "qubit 1 gap, kHz")->capture_default_str();
    threshold->add_option("--nu2", th.nu2, "qubit 2 gap, kHz")->capture_default_str();
    double th_beta1 = 0, th_kelvin = 0;
    CLI::Option* th_b1 = threshold->add_option("--beta1h", th_beta1, "bath 1 beta*h, 1/kHz");
    CLI::Option* th_t1 =
        threshold->add_option("--t1-kelvin", th_kelvin, "bath 1 temperature in K (default 300)");
    threshold->add_option("--beta2-start", th.beta2_lo, "scan start, 1/kHz")
        ->capture_default_str();
    threshold->add_option("--beta2-end", th.beta2_hi, "scan end, 1/kHz")->capture_default_str();
    threshold->add_option("--points", th.scan_points, "scan points")->capture_default_str();
    threshold->add_option("--which", th.which, "tur1 or tur2")->capture_default_str();

    McArgs mc_args;
    double mc_nu1 = 0, mc_nu2 = 0, mc_b1 = 0, mc_b2 = 0;
    CLI::App* mc_cmd = app.add_subcommand("mc", "sample cycles with a deterministic stream");
    CLI::Option* mc_opt_preset =
        mc_cmd->add_option("--preset", mc_args.preset, "parameter preset for the fixed side");
    CLI::Option* mc_opt_nu1 = mc_cmd->add_option("--nu1", mc_nu1, "qubit 1 gap, kHz");
    CLI::Option* mc_opt_nu2 = mc_cmd->add_option("--nu2", mc_nu2, "qubit 2 gap, kHz");
    CLI::Option* mc_opt_b1 = mc_cmd->add_option("--beta1h", mc_b1, "bath 1 beta*h, 1/kHz");
    CLI::Option* mc_opt_b2 = mc_cmd->add_option("--beta2h", mc_b2, "bath 2 beta*h, 1/kHz");
    mc_cmd->add_option("--n", mc_args.n, "number of cycles")->capture_default_str();
    mc_cmd->add_option("--seed", mc_args.seed, "stream seed")->capture_default_str();

    std::string circuit_path, initial_path, reference_path;
    CLI::App* circuit = app.add_subcommand("circuit", "run a gate-list file on a state");
    circuit->add_option("file", circuit_path, "circuit text file")->required();
    circuit->add_option("--initial", initial_path, "initial state file (default |00><00|)");
    circuit->add_option("--reference", reference_path,
                        "reference state file; prints the fidelity against it");

    bool inject_fault = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full property suite");
    verify_cmd->add_flag("--inject-fault", inject_fault,
                         "deliberately corrupt one property (self-test; must fail)");

    // Accept the global flags after the subcommand too: unmatched options
    // fall through to the app, so "sweep --json" works like "--json sweep".
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (!g.config_path.empty() && !sweep_cmd->parsed()) {
            throw UsageError("--config applies to the sweep subcommand only");
        }
        if (point->parsed()) {
            return cmd_point(g, point_args);
        }
        if (sweep_cmd->parsed()) {
            sweep::SweepConfig c;
            if (*opt_preset) {
                try {
                    c = sweep::preset(sweep_preset);
                } catch (const std::domain_error& e) {
                    throw UsageError(e.what());
                }
            }
            if (!g.config_path.empty()) {
                try {
                    c = sweep::parse_config_file(g.config_path, c);
                } catch (const std::runtime_error& e) {
                    throw UsageError(e.what());
                }
            }
            // Explicit flags override both the preset and the file.
            if (*opt_nu1) {
                c.epsilon1 = sweep_config.epsilon1;
            }
            if (*opt_nu2) {
                c.epsilon2 = sweep_config.epsilon2;
            }
            if (*opt_b1) {
                c.beta1_h = sweep_config.beta1_h;
            }
            if (*opt_lo) {
                c.beta2_h_start = sweep_config.beta2_h_start;
            }
            if (*opt_hi) {
                c.beta2_h_end = sweep_config.beta2_h_end;
            }
            if (*opt_points) {
                c.points = sweep_config.points;
            }
            if (no_crossover) {
                c.insert_crossover = false;
            }
            return cmd_sweep(g, c, emit_gnuplot, gnuplot_path);
        }
        if (threshold->parsed()) {
            if (*th_b1) {
                th.beta1_h = th_beta1;
            }
            if (*th_t1) {
                th.t1_kelvin = th_kelvin;
            }
            return cmd_threshold(g, th);
        }
        if (mc_cmd->parsed()) {
            if (*mc_opt_nu1) {
                mc_args.nu1 = mc_nu1;
            }
            if (*mc_opt_nu2) {
                mc_args.nu2 = mc_nu2;
            }
            if (*mc_opt_b1) {
                mc_args.beta1_h = mc_b1;
            }
            if (*mc_opt_b2) {
                mc_args.beta2_h = mc_b2;
            }
            if (mc_args.preset.empty() && !*mc_opt_preset &&
                !(*mc_opt_nu1 && *mc_opt_nu2 && *mc_opt_b1)) {
                throw UsageError("mc needs --preset or explicit --nu1/--nu2/--beta1h");
            }
            return cmd_mc(g, mc_args);
        }
        if (circuit->parsed()) {
            return cmd_circuit(g, circuit_path, initial_path, reference_path);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(g, inject_fault);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}
