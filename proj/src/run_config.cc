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

#include "qtele/run_config.h"

#include <algorithm>
#include <set>
#include <thread>

namespace qtele {

namespace {

using nlohmann::json;

void reject_unknown(const json &j, const std::string &where, std::initializer_list<const char *> allowed) {
    if (!j.is_object()) {
        throw ConfigError(where.empty() ? "config" : where, "expected an object");
    }
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto &item : j.items()) {
        if (!ok.count(item.key())) {
            throw ConfigError(where.empty() ? item.key() : where + "." + item.key(), "unknown field");
        }
    }
}

template <typename T>
T field(const json &j, const std::string &name, const std::string &path) {
    try {
        return j.at(name).get<T>();
    } catch (const json::exception &e) {
        throw ConfigError(path, std::string("bad value: ") + e.what());
    }
}

double probability(const json &j, const char *name, double fallback, const std::string &prefix) {
    if (!j.contains(name)) {
        return fallback;
    }
    const json &v = j.at(name);
    if (!v.is_number()) {
        throw ConfigError(prefix + name, "expected a number");
    }
    return v.get<double>();
}

}  // namespace

NoiseParams noise_from_json(const json &j) {
    reject_unknown(j, "noise", {"p1", "p2", "p_meas", "p_init", "p_mem", "bias_eta"});
    NoiseParams n;
    n.p1 = probability(j, "p1", 0, "noise.");
    n.p2 = probability(j, "p2", 0, "noise.");
    n.p_meas = probability(j, "p_meas", 0, "noise.");
    n.p_init = probability(j, "p_init", 0, "noise.");
    n.p_mem = probability(j, "p_mem", 0, "noise.");
    n.bias_eta = probability(j, "bias_eta", 1.0, "noise.");
    try {
        n.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError("noise", e.what());
    }
    return n;
}

json noise_to_json(const NoiseParams &n) {
    return json{{"p1", n.p1},         {"p2", n.p2},         {"p_meas", n.p_meas},
                {"p_init", n.p_init}, {"p_mem", n.p_mem}, {"bias_eta", n.bias_eta}};
}

void RunConfig::validate() const {
    if (shots == 0) {
        throw ConfigError("shots", "must be at least 1");
    }
    if (inputs.empty()) {
        throw ConfigError("inputs", "at least one input state is required");
    }
    std::set<InputLabel> seen;
    for (InputLabel in : inputs) {
        if (!seen.insert(in).second) {
            throw ConfigError("inputs", "duplicate input state");
        }
    }
    if (job_groups < 2) {
        throw ConfigError("job_groups", "must be at least 2 for jackknife errors");
    }
    if (threads == 0) {
        throw ConfigError("threads", "must be at least 1");
    }
    if (protocol.rus_max_attempts == 0) {
        throw ConfigError("protocol.rus_max_attempts", "must be at least 1");
    }
    try {
        noise.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError("noise", e.what());
    }
}

json RunConfig::to_json() const {
    json in = json::array();
    for (InputLabel l : inputs) {
        in.push_back(std::string(input_state(l).name));
    }
    return json{
        {"variant", std::string(variant_name(variant))},
        {"inputs", in},
        {"shots", shots},
        {"noise", noise_to_json(noise)},
        {"seed", seed},
        {"job_groups", job_groups},
        {"output", output_path},
        {"report", {{"qec", qec_report}, {"qed", qed_report}}},
        {"threads", threads},
        {"protocol",
         {{"rus_max_attempts", protocol.rus_max_attempts},
          {"confirm_joint_parity", protocol.confirm_joint_parity},
          {"flag_aware_decoding", protocol.flag_aware_decoding},
          {"verify_input_rotation", protocol.verify_input_rotation}}},
    };
}

RunConfig RunConfig::from_json(const json &j) {
    reject_unknown(j, "", {"variant", "inputs", "shots", "noise", "seed", "job_groups", "output", "report", "threads",
                           "protocol"});
    RunConfig c;
    if (!j.contains("variant")) {
        throw ConfigError("variant", "required");
    }
    try {
        c.variant = variant_from_name(field<std::string>(j, "variant", "variant"));
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError("variant", e.what());
    }
    if (j.contains("inputs")) {
        auto names = field<std::vector<std::string>>(j, "inputs", "inputs");
        c.inputs.clear();
        for (const auto &n : names) {
            try {
                c.inputs.push_back(input_from_name(n));
            } catch (const std::invalid_argument &e) {
                throw ConfigError("inputs", e.what());
            }
        }
    }
    auto count = [&](const char *name, size_t fallback) -> size_t {
        if (!j.contains(name)) return fallback;
        const json &v = j.at(name);
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw ConfigError(name, "expected a nonnegative integer");
        }
        return v.get<size_t>();
    };
    c.shots = count("shots", c.shots);
    c.job_groups = count("job_groups", c.job_groups);
    c.threads = count("threads", c.threads);
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !(j.at("seed").is_number_integer())) {
            throw ConfigError("seed", "expected an integer");
        }
        c.seed = j.at("seed").get<uint64_t>();
    }
    if (j.contains("noise")) {
        c.noise = noise_from_json(j.at("noise"));
    }
    if (j.contains("output")) {
        c.output_path = field<std::string>(j, "output", "output");
    }
    if (j.contains("report")) {
        const json &r = j.at("report");
        reject_unknown(r, "report", {"qec", "qed"});
        if (r.contains("qec")) c.qec_report = field<bool>(r, "qec", "report.qec");
        if (r.contains("qed")) c.qed_report = field<bool>(r, "qed", "report.qed");
    }
    if (j.contains("protocol")) {
        const json &p = j.at("protocol");
        reject_unknown(p, "protocol",
                       {"rus_max_attempts", "confirm_joint_parity", "flag_aware_decoding", "verify_input_rotation"});
        if (p.contains("rus_max_attempts")) {
            c.protocol.rus_max_attempts = field<size_t>(p, "rus_max_attempts", "protocol.rus_max_attempts");
        }
        if (p.contains("confirm_joint_parity")) {
            c.protocol.confirm_joint_parity = field<bool>(p, "confirm_joint_parity", "protocol.confirm_joint_parity");
        }
        if (p.contains("flag_aware_decoding")) {
            c.protocol.flag_aware_decoding = field<bool>(p, "flag_aware_decoding", "protocol.flag_aware_decoding");
        }
        if (p.contains("verify_input_rotation")) {
            c.protocol.verify_input_rotation =
                field<bool>(p, "verify_input_rotation", "protocol.verify_input_rotation");
        }
    }
    c.validate();
    return c;
}

bool RunConfig::operator==(const RunConfig &o) const {
    return variant == o.variant && inputs == o.inputs && shots == o.shots && noise == o.noise && seed == o.seed &&
           job_groups == o.job_groups && output_path == o.output_path && qec_report == o.qec_report &&
           qed_report == o.qed_report && threads == o.threads &&
           protocol.rus_max_attempts == o.protocol.rus_max_attempts &&
           protocol.confirm_joint_parity == o.protocol.confirm_joint_parity &&
           protocol.flag_aware_decoding == o.protocol.flag_aware_decoding &&
           protocol.verify_input_rotation == o.protocol.verify_input_rotation;
}

RunResult run_experiment(const RunConfig &config, const ShotSink &sink) {
    config.validate();
    RunResult result;
    constexpr size_t kBatch = 4096;
    size_t threads = std::max<size_t>(1, config.threads);
    for (size_t pos = 0; pos < config.inputs.size(); pos++) {
        InputLabel input = config.inputs[pos];
        uint64_t input_idx = input_index(input);
        ExperimentRecord record(config.variant, input, config.job_groups);
        for (size_t start = 0; start < config.shots; start += kBatch) {
            size_t count = std::min(kBatch, config.shots - start);
            std::vector<ShotOutcome> batch(count);
            auto work = [&](size_t t) {
                for (size_t k = t; k < count; k += threads) {
                    batch[k] = run_shot(config.variant, input, config.noise, config.seed,
                                        RandomSource::shot_stream(input_idx, start + k), config.protocol);
                }
            };
            if (threads == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                for (size_t t = 0; t < threads; t++) {
                    pool.emplace_back(work, t);
                }
                for (auto &th : pool) {
                    th.join();
                }
            }
            for (size_t k = 0; k < count; k++) {
                record.add(batch[k], start + k);
                if (sink) {
                    sink(pos, start + k, batch[k]);
                }
            }
        }
        result.records.push_back(std::move(record));
    }
    result.summary = summarize(config.variant, result.records);
    return result;
}

std::string_view noise_axis_name(NoiseAxis a) {
    return a == NoiseAxis::Uniform ? "uniform" : "p2";
}

NoiseAxis noise_axis_from_name(std::string_view name) {
    if (name == "uniform") return NoiseAxis::Uniform;
    if (name == "p2") return NoiseAxis::TwoQubit;
    throw std::invalid_argument("unknown noise axis '" + std::string(name) + "' (expected uniform or p2)");
}

NoiseParams noise_at(const NoiseParams &base, NoiseAxis axis, double p) {
    NoiseParams n = base;
    if (axis == NoiseAxis::Uniform) {
        n.p1 = n.p2 = n.p_meas = n.p_init = p;
    } else {
        n.p2 = p;
    }
    n.validate();
    return n;
}

std::vector<SweepPoint> run_sweep(const RunConfig &base, NoiseAxis axis, std::span<const double> grid) {
    if (grid.empty()) {
        throw ConfigError("grid", "empty");
    }
    for (size_t i = 0; i < grid.size(); i++) {
        if (!(grid[i] >= 0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
            throw ConfigError("grid", "must be nonnegative and strictly increasing");
        }
    }
    if (base.inputs.size() != 6) {
        throw ConfigError("inputs", "a sweep needs all six input states");
    }
    std::vector<SweepPoint> out;
    for (double p : grid) {
        RunConfig c = base;
        c.noise = noise_at(base.noise, axis, p);
        RunResult r = run_experiment(c);
        if (!r.summary.f_p) {
            throw EmptyEstimateError("no accepted shots at p = " + std::to_string(p));
        }
        out.push_back({p, *r.summary.f_p, *r.summary.f_a, r.summary.discard_fraction});
    }
    return out;
}

SlopeFit sweep_slope(std::span<const SweepPoint> points, double lo, double hi) {
    std::vector<double> x, y, e;
    for (const SweepPoint &pt : points) {
        if (pt.p < lo || pt.p > hi) continue;
        x.push_back(pt.p);
        y.push_back(1.0 - pt.f_p.value);
        e.push_back(std::max(pt.f_p.err_lo, pt.f_p.err_hi));
    }
    return fit_loglog_slope(x, y, e);
}

}  // namespace qtele
