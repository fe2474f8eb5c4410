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

#include "qtele/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qtele {

void GroupTally::add(const ShotOutcome &shot) {
    total++;
    if (shot.accepted) {
        accepted++;
        correct += shot.correct ? 1 : 0;
    }
    if (shot.qed_clean) {
        qed_clean++;
        qed_correct += shot.correct ? 1 : 0;
    }
}

GroupTally &GroupTally::operator+=(const GroupTally &o) {
    total += o.total;
    accepted += o.accepted;
    correct += o.correct;
    qed_clean += o.qed_clean;
    qed_correct += o.qed_correct;
    return *this;
}

ExperimentRecord::ExperimentRecord(Variant v, InputLabel in, size_t job_groups)
    : variant(v), input(in), groups(job_groups) {
    if (job_groups == 0) {
        throw std::invalid_argument("job_groups must be positive");
    }
}

void ExperimentRecord::add(const ShotOutcome &shot, size_t shot_index) {
    groups.at(shot_index % groups.size()).add(shot);
}

GroupTally ExperimentRecord::totals() const {
    GroupTally t;
    for (const GroupTally &g : groups) {
        t += g;
    }
    return t;
}

double jackknife_standard_error(std::span<const double> leave_one_out) {
    size_t g = leave_one_out.size();
    if (g < 2) {
        throw std::invalid_argument("jackknife needs at least two groups");
    }
    double mean = 0;
    for (double v : leave_one_out) {
        mean += v;
    }
    mean /= static_cast<double>(g);
    double ss = 0;
    for (double v : leave_one_out) {
        ss += (v - mean) * (v - mean);
    }
    return std::sqrt(static_cast<double>(g - 1) / static_cast<double>(g) * ss);
}

std::pair<double, double> jackknife_error(
    const ExperimentRecord &record, const std::function<double(const GroupTally &)> &statistic) {
    size_t g = record.groups.size();
    if (g < 2) {
        throw std::invalid_argument("jackknife needs at least two groups");
    }
    GroupTally all = record.totals();
    std::vector<double> loo;
    loo.reserve(g);
    for (const GroupTally &grp : record.groups) {
        GroupTally rest = all;
        rest.total -= grp.total;
        rest.accepted -= grp.accepted;
        rest.correct -= grp.correct;
        rest.qed_clean -= grp.qed_clean;
        rest.qed_correct -= grp.qed_correct;
        loo.push_back(statistic(rest));
    }
    double se = jackknife_standard_error(loo);
    return {se, se};
}

double jackknife_error_of_mean(std::span<const double> group_values) {
    size_t g = group_values.size();
    if (g < 2) {
        throw std::invalid_argument("jackknife needs at least two groups");
    }
    double sum = 0;
    for (double v : group_values) {
        sum += v;
    }
    std::vector<double> loo;
    loo.reserve(g);
    for (double v : group_values) {
        loo.push_back((sum - v) / static_cast<double>(g - 1));
    }
    return jackknife_standard_error(loo);
}

double one_sigma_zero_failure_bound(size_t n_shots) {
    if (n_shots == 0) {
        throw std::invalid_argument("zero-failure bound needs at least one shot");
    }
    return std::log(1.0 / (1.0 - 0.6827)) / static_cast<double>(n_shots);
}

FidelityEstimate state_fidelity(const ExperimentRecord &record, FidelityMode mode) {
    GroupTally t = record.totals();
    bool qed = mode == FidelityMode::QED;
    size_t n = qed ? t.qed_clean : t.accepted;
    size_t ok = qed ? t.qed_correct : t.correct;
    if (n == 0) {
        throw EmptyEstimateError("no " + std::string(qed ? "QED-clean" : "accepted") + " shots for " +
                                 std::string(variant_name(record.variant)) + " input " +
                                 std::string(input_state(record.input).name));
    }
    FidelityEstimate e;
    e.value = static_cast<double>(ok) / static_cast<double>(n);
    e.n_accepted = n;
    e.n_total = t.total;
    e.discard_fraction = 1.0 - static_cast<double>(n) / static_cast<double>(t.total);
    if (ok == n) {
        e.err_lo = std::min(one_sigma_zero_failure_bound(n), e.value);
        e.err_hi = 0;
        return e;
    }
    auto stat = [qed, fallback = e.value](const GroupTally &g) {
        size_t gn = qed ? g.qed_clean : g.accepted;
        size_t gk = qed ? g.qed_correct : g.correct;
        return gn == 0 ? fallback : static_cast<double>(gk) / static_cast<double>(gn);
    };
    auto [lo, hi] = jackknife_error(record, stat);
    e.err_lo = std::min(lo, e.value);
    e.err_hi = std::min(hi, 1.0 - e.value);
    return e;
}

FidelityEstimate average_state_fidelity(const std::map<InputLabel, FidelityEstimate> &per_state) {
    FidelityEstimate out;
    double sum = 0, lo2 = 0, hi2 = 0;
    size_t accepted = 0, total = 0;
    for (const InputState &s : input_states()) {
        auto it = per_state.find(s.label);
        if (it == per_state.end()) {
            throw std::invalid_argument("missing input state " + std::string(s.name) + " for the average");
        }
        const FidelityEstimate &e = it->second;
        sum += e.value;
        lo2 += e.err_lo * e.err_lo;
        hi2 += e.err_hi * e.err_hi;
        accepted += e.n_accepted;
        total += e.n_total;
    }
    out.value = sum / 6.0;
    out.err_lo = std::sqrt(lo2) / 6.0;
    out.err_hi = std::sqrt(hi2) / 6.0;
    out.n_accepted = accepted;
    out.n_total = total;
    out.discard_fraction = total == 0 ? 0.0 : 1.0 - static_cast<double>(accepted) / static_cast<double>(total);
    return out;
}

double average_state_fidelity(std::span<const double> six_values) {
    if (six_values.size() != 6) {
        throw std::invalid_argument("average state fidelity needs exactly six values");
    }
    double s = 0;
    for (double v : six_values) {
        s += v;
    }
    return s / 6.0;
}

double process_fidelity(double f_a) {
    if (!(f_a >= 0 && f_a <= 1)) {
        throw std::invalid_argument("average fidelity must lie in [0, 1]");
    }
    return (3.0 * f_a - 1.0) / 2.0;
}

FidelityEstimate process_fidelity(const FidelityEstimate &f_a) {
    FidelityEstimate out = f_a;
    out.value = process_fidelity(f_a.value);
    out.err_lo = 1.5 * f_a.err_lo;
    out.err_hi = 1.5 * f_a.err_hi;
    return out;
}

std::string format_estimate(const FidelityEstimate &e, int decimals) {
    double unit = std::pow(10.0, -decimals);
    auto digits = [unit](double err) { return static_cast<long long>(std::ceil(err / unit - 1e-9)); };
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.*f(+%lld/-%lld)", decimals, e.value, digits(e.err_hi), digits(e.err_lo));
    return buf;
}

VariantSummary summarize(Variant v, std::span<const ExperimentRecord> records) {
    VariantSummary s;
    s.variant = v;
    for (const ExperimentRecord &r : records) {
        if (r.variant != v) {
            throw std::invalid_argument("record of another variant passed to summarize");
        }
        GroupTally t = r.totals();
        s.total_shots += t.total;
        s.accepted_shots += t.accepted;
        try {
            s.qec[r.input] = state_fidelity(r, FidelityMode::QEC);
        } catch (const EmptyEstimateError &) {
        }
        try {
            s.qed[r.input] = state_fidelity(r, FidelityMode::QED);
        } catch (const EmptyEstimateError &) {
        }
    }
    s.discard_fraction =
        s.total_shots == 0 ? 0.0 : 1.0 - static_cast<double>(s.accepted_shots) / static_cast<double>(s.total_shots);
    if (s.qec.size() == 6) {
        s.f_a = average_state_fidelity(s.qec);
        s.f_p = process_fidelity(*s.f_a);
    }
    if (s.qed.size() == 6) {
        s.f_a_qed = average_state_fidelity(s.qed);
        s.f_p_qed = process_fidelity(*s.f_a_qed);
    }
    return s;
}

SlopeFit fit_loglog_slope(std::span<const double> x, std::span<const double> y, std::span<const double> y_err) {
    if (x.size() != y.size() || y.size() != y_err.size()) {
        throw std::invalid_argument("slope fit inputs differ in length");
    }
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t used = 0;
    for (size_t i = 0; i < x.size(); i++) {
        if (!(y[i] > 0) || !(x[i] > 0)) {
            continue;
        }
        double lx = std::log(x[i]);
        double ly = std::log(y[i]);
        double rel = y_err[i] > 0 ? y_err[i] / y[i] : 1.0;
        double w = 1.0 / (rel * rel);
        sw += w;
        sx += w * lx;
        sy += w * ly;
        sxx += w * lx * lx;
        sxy += w * lx * ly;
        used++;
    }
    if (used < 3) {
        throw std::invalid_argument("slope fit needs at least three points with nonzero infidelity");
    }
    double det = sw * sxx - sx * sx;
    SlopeFit fit;
    fit.slope = (sw * sxy - sx * sy) / det;
    fit.intercept = (sxx * sy - sx * sxy) / det;
    fit.slope_err = std::sqrt(sw / det);
    fit.points = used;
    return fit;
}

}  // namespace qtele
