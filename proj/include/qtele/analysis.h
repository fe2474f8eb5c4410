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

#ifndef QTELE_ANALYSIS_H
#define QTELE_ANALYSIS_H

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtele/protocols.h"

namespace qtele {

enum class FidelityMode { QEC, QED };

/// Thrown when an estimate has no shots to average over.
class EmptyEstimateError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Shot counts for one job group.
struct GroupTally {
    size_t total = 0;
    size_t accepted = 0;
    size_t correct = 0;
    size_t qed_clean = 0;
    size_t qed_correct = 0;

    void add(const ShotOutcome &shot);
    GroupTally &operator+=(const GroupTally &o);
    bool operator==(const GroupTally &) const = default;
};

/// All shots of one variant on one input, folded into job groups.
struct ExperimentRecord {
    Variant variant = Variant::Physical;
    InputLabel input = InputLabel::Zero;
    std::vector<GroupTally> groups;

    ExperimentRecord() = default;
    ExperimentRecord(Variant v, InputLabel in, size_t job_groups);

    /// Shot k goes to group k mod job_groups.
    void add(const ShotOutcome &shot, size_t shot_index);
    GroupTally totals() const;
};

struct FidelityEstimate {
    double value = 0;
    double err_lo = 0;
    double err_hi = 0;
    size_t n_accepted = 0;
    size_t n_total = 0;
    double discard_fraction = 0;
};

/// Leave-one-out jackknife standard error from the leave-one-out estimates.
double jackknife_standard_error(std::span<const double> leave_one_out);

/// Jackknife error of a statistic of pooled tallies, leaving one group out at a
/// time. Needs at least two groups. Returns (err_lo, err_hi), symmetric.
std::pair<double, double> jackknife_error(
    const ExperimentRecord &record, const std::function<double(const GroupTally &)> &statistic);

/// Jackknife error of the mean of per-group values.
double jackknife_error_of_mean(std::span<const double> group_values);

/// ln(1 / (1 - 0.6827)) / n: one-sided one-sigma bound with zero failures.
double one_sigma_zero_failure_bound(size_t n_shots);

/// Fraction correct among accepted (QEC) or QED-clean (QED) shots.
FidelityEstimate state_fidelity(const ExperimentRecord &record, FidelityMode mode);

/// Unweighted mean over the six input states. Throws std::invalid_argument if any is missing.
FidelityEstimate average_state_fidelity(const std::map<InputLabel, FidelityEstimate> &per_state);
double average_state_fidelity(std::span<const double> six_values);

/// (3 F_a - 1) / 2 with errors scaled by 3/2.
FidelityEstimate process_fidelity(const FidelityEstimate &f_a);
double process_fidelity(double f_a);

/// "0.9895(+3/-3)": value to `decimals` places, errors in units of the last place.
std::string format_estimate(const FidelityEstimate &e, int decimals = 4);

struct VariantSummary {
    Variant variant = Variant::Physical;
    std::map<InputLabel, FidelityEstimate> qec;
    std::map<InputLabel, FidelityEstimate> qed;
    std::optional<FidelityEstimate> f_a;
    std::optional<FidelityEstimate> f_p;
    std::optional<FidelityEstimate> f_a_qed;
    std::optional<FidelityEstimate> f_p_qed;
    size_t total_shots = 0;
    size_t accepted_shots = 0;
    double discard_fraction = 0;
};

/// Per-state and averaged fidelities; averages are present only when all six
/// inputs have an estimate.
VariantSummary summarize(Variant v, std::span<const ExperimentRecord> records);

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    double slope_err = 0;
    size_t points = 0;
};

/// Weighted least squares of log(y) against log(x). Points with y <= 0 are
/// skipped; fewer than three usable points throws std::invalid_argument.
SlopeFit fit_loglog_slope(std::span<const double> x, std::span<const double> y, std::span<const double> y_err);

}  // namespace qtele

#endif
