// Copyright 2026 The qtele Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtele/analysis.h"
#include "qtele/fault_audit.h"
#include "qtele/protocols.h"
#include "qtele/run_config.h"
#include "qtele/shot_log.h"

using nlohmann::json;
using namespace qtele;

namespace {

/// Failure carrying a JSON error record and an exit code.
struct CliError {
    int code;
    json record;
};

[[noreturn]] void fail(const std::string &kind, const std::string &message, const std::string &field = "") {
    json rec{{"error", {{"kind", kind}, {"message", message}}}};
    if (!field.empty()) {
        rec["error"]["field"] = field;
    }
    throw CliError{kind == "io" ? 3 : 2, rec};
}

json read_json_file(const std::string &path, const std::string &field) {
    std::ifstream in(path);
    if (!in) {
        fail("io", "cannot open " + path, field);
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        fail("config", path + ": " + e.what(), field);
    }
}

NoiseParams parse_noise_preset(const std::string &text) {
    if (text == "none") return NoiseParams::noiseless();
    if (text == "hardware") return NoiseParams::hardware();
    const std::string prefix = "uniform:";
    if (text.rfind(prefix, 0) == 0) {
        try {
            return NoiseParams::uniform(std::stod(text.substr(prefix.size())));
        } catch (const std::exception &e) {
            fail("config", "bad uniform noise '" + text + "': " + e.what(), "noise");
        }
    }
    fail("config", "unknown noise preset '" + text + "' (none, hardware, uniform:<p>)", "noise");
}

std::vector<InputLabel> parse_inputs(const std::string &text) {
    std::vector<InputLabel> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(input_from_name(item));
        } catch (const std::invalid_argument &e) {
            fail("config", e.what(), "inputs");
        }
    }
    return out;
}

std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception &) {
            fail("config", "bad grid value '" + item + "'", "grid");
        }
    }
    return out;
}

/// Options shared by run and sweep.
struct CommonFlags {
    std::string config_path;
    std::string variant;
    std::optional<size_t> shots;
    std::string noise_file;
    std::string noise_preset;
    std::optional<uint64_t> seed;
    std::optional<size_t> jobs;
    std::optional<size_t> threads;
    std::string inputs;
    std::string out;

    void attach(CLI::App *cmd) {
        cmd->add_option("--config", config_path, "JSON run configuration");
        cmd->add_option("--variant", variant, "physical, transversal_0qec, transversal_1qec, lattice_mxx_mzz, lattice_mzz");
        cmd->add_option("--shots", shots, "Shots per input state");
        cmd->add_option("--noise-file", noise_file, "JSON noise parameters");
        cmd->add_option("--noise", noise_preset, "Noise preset: none, hardware, uniform:<p>");
        cmd->add_option("--seed", seed, "Master seed");
        cmd->add_option("--jobs", jobs, "Job groups for jackknife errors");
        cmd->add_option("--threads", threads, "Worker threads");
        cmd->add_option("--inputs", inputs, "Comma-separated input states (0,1,+,-,+i,-i)");
        cmd->add_option("--out", out, "Output directory or file");
    }

    RunConfig build() const {
        RunConfig c;
        try {
            if (!config_path.empty()) {
                c = RunConfig::from_json(read_json_file(config_path, "config"));
            } else if (variant.empty()) {
                fail("config", "--variant or --config is required", "variant");
            }
            if (!variant.empty()) c.variant = variant_from_name(variant);
            if (shots) c.shots = *shots;
            if (!noise_file.empty()) c.noise = noise_from_json(read_json_file(noise_file, "noise"));
            if (!noise_preset.empty()) c.noise = parse_noise_preset(noise_preset);
            if (seed) c.seed = *seed;
            if (jobs) c.job_groups = *jobs;
            if (threads) c.threads = *threads;
            if (!inputs.empty()) c.inputs = parse_inputs(inputs);
            if (!out.empty()) c.output_path = out;
            c.validate();
        } catch (const ConfigError &e) {
            fail("config", e.what(), e.field());
        } catch (const std::invalid_argument &e) {
            fail("config", e.what(), "variant");
        }
        return c;
    }
};

std::string estimate_text(const std::optional<FidelityEstimate> &e) {
    return e ? format_estimate(*e) : std::string("NA");
}

void print_table(const RunConfig &c, const VariantSummary &s) {
    std::printf("variant %s, %zu shots per input\n", std::string(variant_name(c.variant)).c_str(), c.shots);
    std::printf("%-6s %-20s %-20s %s\n", "state", "F_s (QEC)", "F_s (QED)", "discard");
    for (InputLabel in : c.inputs) {
        auto qec = s.qec.count(in) ? std::optional(s.qec.at(in)) : std::nullopt;
        auto qed = s.qed.count(in) ? std::optional(s.qed.at(in)) : std::nullopt;
        std::printf("%-6s %-20s %-20s %.4f\n", std::string(input_state(in).name).c_str(),
                    c.qec_report ? estimate_text(qec).c_str() : "-", c.qed_report ? estimate_text(qed).c_str() : "-",
                    qec ? qec->discard_fraction : 1.0);
    }
    if (c.qec_report) {
        std::printf("F_a %s\nF_p %s\n", estimate_text(s.f_a).c_str(), estimate_text(s.f_p).c_str());
    }
    if (c.qed_report) {
        std::printf("F_a,QED %s\nF_p,QED %s\n", estimate_text(s.f_a_qed).c_str(), estimate_text(s.f_p_qed).c_str());
    }
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path);
    if (!out || !(out << text)) {
        fail("io", "cannot write " + path.string(), "output");
    }
}

int cmd_run(const CommonFlags &flags, bool qed_only, bool qec_only) {
    RunConfig c = flags.build();
    if (qed_only) c.qec_report = false;
    if (qec_only) c.qed_report = false;
    std::optional<std::ofstream> log;
    std::filesystem::path dir = c.output_path;
    if (!c.output_path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        log.emplace(dir / "shots.jsonl");
        if (ec || !*log) {
            fail("io", "cannot write to " + dir.string(), "output");
        }
    }
    ShotSink sink;
    if (log) {
        sink = [&](size_t, size_t shot_index, const ShotOutcome &shot) {
            *log << shot_to_json(shot, shot_index).dump() << '\n';
        };
    }
    RunResult r = run_experiment(c, sink);
    json summary = summary_to_json(r.summary, c.qec_report, c.qed_report);
    summary["config"] = c.to_json();
    if (log) {
        log->close();
        if (!*log) fail("io", "failed writing the shot log", "output");
        write_text(dir / "summary.json", summary.dump(2) + "\n");
        write_text(dir / "config.json", c.to_json().dump(2) + "\n");
    }
    print_table(c, r.summary);
    return 0;
}

int cmd_ftcheck(const std::string &variant, size_t seeds, size_t budget, const std::string &inputs, bool idle,
                bool literal, const std::string &out) {
    Variant v;
    try {
        v = variant_from_name(variant);
    } catch (const std::invalid_argument &e) {
        fail("config", e.what(), "variant");
    }
    AuditOptions o;
    o.seeds = seeds;
    o.budget = budget;
    o.include_idle = idle;
    if (!inputs.empty()) o.inputs = parse_inputs(inputs);
    if (literal) {
        o.protocol.confirm_joint_parity = false;
        o.protocol.flag_aware_decoding = false;
        o.protocol.verify_input_rotation = false;
    }
    AuditReport r = fault_audit(v, o);
    json failures = json::array();
    for (const AuditFailure &f : r.failures) {
        failures.push_back({{"input", std::string(input_state(f.input).name)},
                            {"location", f.location.location_index},
                            {"op", std::string(op_kind_name(f.location.op_kind))},
                            {"fault", f.fault},
                            {"seed", f.seed},
                            {"stream", f.stream_id}});
    }
    json rep{{"variant", std::string(variant_name(v))},
             {"seeds", seeds},
             {"locations", r.locations},
             {"faults", r.faults},
             {"runs", r.runs},
             {"vacuous", r.vacuous},
             {"accepted_wrong", r.accepted_wrong},
             {"discarded", r.discarded},
             {"complete", r.complete},
             {"failures", failures}};
    std::string text = rep.dump(2) + "\n";
    if (!out.empty()) write_text(out, text);
    std::fputs(text.c_str(), stdout);
    return 0;
}

int cmd_sweep(const CommonFlags &flags, const std::string &axis_name, const std::string &grid_text, double lo,
              double hi) {
    RunConfig c = flags.build();
    NoiseAxis axis;
    try {
        axis = noise_axis_from_name(axis_name);
    } catch (const std::invalid_argument &e) {
        fail("config", e.what(), "axis");
    }
    std::vector<double> grid = parse_grid(grid_text);
    size_t in_window = 0;
    for (double p : grid) in_window += (p >= lo && p <= hi);
    if (in_window < 3) {
        fail("config", "the slope fit needs at least three grid points in [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]",
             "grid");
    }
    std::vector<SweepPoint> pts;
    try {
        pts = run_sweep(c, axis, grid);
    } catch (const ConfigError &e) {
        fail("config", e.what(), e.field());
    }
    std::ostringstream csv;
    csv << "p,F_p,F_p_err_lo,F_p_err_hi,F_a,discard_fraction\n";
    char line[256];
    for (const SweepPoint &pt : pts) {
        std::snprintf(line, sizeof(line), "%.6g,%.8f,%.8f,%.8f,%.8f,%.6f\n", pt.p, pt.f_p.value, pt.f_p.err_lo,
                      pt.f_p.err_hi, pt.f_a.value, pt.discard_fraction);
        csv << line;
    }
    json fit_rec;
    try {
        SlopeFit fit = sweep_slope(pts, lo, hi);
        fit_rec = {{"slope", fit.slope}, {"slope_err", fit.slope_err}, {"intercept", fit.intercept},
                   {"points", fit.points}};
    } catch (const std::invalid_argument &e) {
        fit_rec = {{"error", e.what()}};
    }
    if (!c.output_path.empty()) {
        write_text(c.output_path, csv.str());
    }
    std::fputs(csv.str().c_str(), stdout);
    std::printf("%s\n", json{{"fit_window", {lo, hi}}, {"fit", fit_rec}}.dump().c_str());
    return fit_rec.contains("error") ? 4 : 0;
}

int cmd_identity(const std::string &variant) {
    std::vector<Variant> vs;
    if (variant.empty() || variant == "all") {
        for (Variant v : all_variants()) vs.push_back(v);
    } else {
        try {
            vs.push_back(variant_from_name(variant));
        } catch (const std::invalid_argument &e) {
            fail("config", e.what(), "variant");
        }
    }
    bool ok = true;
    for (Variant v : vs) {
        IdentityReport r = verify_noiseless_identity(v);
        ok = ok && r.passed();
        std::printf("%s\n", json{{"variant", std::string(variant_name(v))},
                                 {"leaves", r.leaves},
                                 {"failures", r.failures},
                                 {"failure_probability", r.failure_probability},
                                 {"budget_exceeded", r.budget_exceeded},
                                 {"passed", r.passed()}}
                                .dump()
                                .c_str());
    }
    return ok ? 0 : 1;
}

int cmd_summarize(const std::string &log_path, size_t jobs) {
    std::ifstream in(log_path);
    if (!in) fail("io", "cannot open " + log_path, "log");
    std::vector<ExperimentRecord> records;
    try {
        records = records_from_shot_log(in, jobs);
    } catch (const std::invalid_argument &e) {
        fail("log", e.what(), "log");
    }
    if (records.empty()) fail("log", "shot log is empty", "log");
    VariantSummary s = summarize(records.front().variant, records);
    std::printf("%s\n", summary_to_json(s).dump(2).c_str());
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Stabilizer simulation and analysis of logical teleportation on the Steane code"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    bool qed_only = false, qec_only = false;
    auto *run = app.add_subcommand("run", "Monte Carlo run; writes shots.jsonl and summary.json under --out");
    run_flags.attach(run);
    run->add_flag("--qed", qed_only, "Report only the post-selected (QED) fidelities");
    run->add_flag("--qec", qec_only, "Report only the QEC fidelities");

    std::string ft_variant, ft_inputs, ft_out;
    size_t ft_seeds = 100, ft_budget = 0;
    bool ft_idle = false, ft_literal = false;
    auto *ft = app.add_subcommand("ftcheck", "Exhaustive single-fault audit");
    ft->add_option("--variant", ft_variant, "Protocol variant")->required();
    ft->add_option("--seeds", ft_seeds, "Seeds per fault");
    ft->add_option("--budget", ft_budget, "Maximum runs (0 = unlimited)");
    ft->add_option("--inputs", ft_inputs, "Comma-separated input states");
    ft->add_option("--out", ft_out, "Write the JSON report here");
    ft->add_flag("--idle", ft_idle, "Include idle locations");
    ft->add_flag("--literal", ft_literal,
                 "Disable parity confirmation, flag-aware decoding and input rotation checks");

    CommonFlags sweep_flags;
    std::string axis = "uniform", grid = "1e-4,2e-4,5e-4,1e-3,2e-3";
    double lo = 2e-4, hi = 2e-3;
    auto *sweep = app.add_subcommand("sweep", "Fidelity curve over a noise grid, with a log-log slope fit");
    sweep_flags.attach(sweep);
    sweep->add_option("--axis", axis, "Noise axis: uniform or p2");
    sweep->add_option("--grid", grid, "Comma-separated, strictly increasing noise values");
    sweep->add_option("--fit-lo", lo, "Lower end of the fit window");
    sweep->add_option("--fit-hi", hi, "Upper end of the fit window");

    std::string id_variant;
    auto *identity = app.add_subcommand("identity", "Noiseless identity check over every measurement branch");
    identity->add_option("--variant", id_variant, "Variant or 'all'");

    std::string log_path;
    size_t sum_jobs = 10;
    auto *summ = app.add_subcommand("summarize", "Recompute a summary from a shot log");
    summ->add_option("--log", log_path, "shots.jsonl")->required();
    summ->add_option("--jobs", sum_jobs, "Job groups");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }

    try {
        if (*run) return cmd_run(run_flags, qed_only, qec_only);
        if (*ft) return cmd_ftcheck(ft_variant, ft_seeds, ft_budget, ft_inputs, ft_idle, ft_literal, ft_out);
        if (*sweep) return cmd_sweep(sweep_flags, axis, grid, lo, hi);
        if (*identity) return cmd_identity(id_variant);
        if (*summ) return cmd_summarize(log_path, sum_jobs);
    } catch (const CliError &e) {
        std::cerr << e.record.dump() << "\n";
        return e.code;
    } catch (const std::exception &e) {
        std::cerr << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}
