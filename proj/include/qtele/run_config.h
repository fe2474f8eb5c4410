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

#ifndef QTELE_RUN_CONFIG_H
#define QTELE_RUN_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtele/analysis.h"
#include "qtele/noise_model.h"
#include "qtele/protocols.h"

namespace qtele {

/// Invalid configuration; `field` names the offending entry.
class ConfigError : public std::invalid_argument {
   public:
    ConfigError(std::string field, const std::string &message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

struct RunConfig {
    Variant variant = Variant::Physical;
    std::vector<InputLabel> inputs = {InputLabel::Zero, InputLabel::One, InputLabel::Plus,
                                      InputLabel::Minus, InputLabel::PlusI, InputLabel::MinusI};
    size_t shots = 1000;
    NoiseParams noise;
    uint64_t seed = 1;
    size_t job_groups = 10;
    std::string output_path;
    bool qec_report = true;
    bool qed_report = true;
    size_t threads = 1;
    ProtocolOptions protocol;

    /// Throws ConfigError.
    void validate() const;
    nlohmann::json to_json() const;
    /// Unknown keys and wrongly typed values are rejected with ConfigError.
    static RunConfig from_json(const nlohmann::json &j);

    bool operator==(const RunConfig &o) const;
};

NoiseParams noise_from_json(const nlohmann::json &j);
nlohmann::json noise_to_json(const NoiseParams &n);

/// Called once per shot, in (input, shot index) order.
using ShotSink = std::function<void(size_t input_position, size_t shot_index, const ShotOutcome &shot)>;

struct RunResult {
    std::vector<ExperimentRecord> records;
    VariantSummary summary;
};

/// Runs config.shots shots for each configured input. Shot k of input i uses
/// stream RandomSource::shot_stream(i, k) under config.seed, so results do not
/// depend on the thread count.
RunResult run_experiment(const RunConfig &config, const ShotSink &sink = {});

/// Which noise parameters a sweep varies.
enum class NoiseAxis : uint8_t {
    /// p1 = p2 = p_meas = p_init = p.
    Uniform,
    /// Only p2; other rates come from the base config.
    TwoQubit,
};
std::string_view noise_axis_name(NoiseAxis a);
NoiseAxis noise_axis_from_name(std::string_view name);
NoiseParams noise_at(const NoiseParams &base, NoiseAxis axis, double p);

struct SweepPoint {
    double p = 0;
    FidelityEstimate f_p;
    FidelityEstimate f_a;
    double discard_fraction = 0;
};

/// Runs `base` once per grid value. The grid must be strictly increasing and
/// nonnegative; every point needs all six inputs.
std::vector<SweepPoint> run_sweep(const RunConfig &base, NoiseAxis axis, std::span<const double> grid);

/// Log-log fit of 1 - F_p against p over points with lo <= p <= hi.
SlopeFit sweep_slope(std::span<const SweepPoint> points, double lo = 2e-4, double hi = 2e-3);

}  // namespace qtele

#endif
