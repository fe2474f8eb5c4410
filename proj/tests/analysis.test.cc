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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "qtele/random_source.h"

using namespace qtele;

namespace {

ShotOutcome synthetic(bool accepted, bool correct, bool clean) {
    ShotOutcome s;
    s.accepted = accepted;
    s.correct = correct;
    s.qed_clean = clean && accepted;
    return s;
}

/// Oracle: sqrt((n-1)/n * sum (theta_i - mean)^2).
double jackknife_oracle(const std::vector<double> &loo) {
    double n = static_cast<double>(loo.size());
    double mean = std::accumulate(loo.begin(), loo.end(), 0.0) / n;
    double ss = 0;
    for (double t : loo) ss += (t - mean) * (t - mean);
    return std::sqrt((n - 1) / n * ss);
}

std::map<InputLabel, FidelityEstimate> six(std::array<double, 6> values) {
    std::map<InputLabel, FidelityEstimate> out;
    for (size_t i = 0; i < 6; i++) {
        FidelityEstimate e;
        e.value = values[i];
        out[input_states()[i].label] = e;
    }
    return out;
}

}  // namespace

TEST(analysis, counts_example) {
    // 950 correct of 1000 accepted of 1600 total.
    ExperimentRecord r(Variant::Transversal0, InputLabel::Zero, 10);
    for (size_t k = 0; k < 1600; k++) r.add(synthetic(k < 1000, k < 950, k < 1000), k);
    FidelityEstimate e = state_fidelity(r, FidelityMode::QEC);
    EXPECT_DOUBLE_EQ(e.value, 0.95);
    EXPECT_DOUBLE_EQ(e.discard_fraction, 0.375);
    EXPECT_EQ(e.n_accepted, 1000u);
    EXPECT_EQ(e.n_total, 1600u);
    // Round-robin grouping makes all ten groups identical here.
    EXPECT_DOUBLE_EQ(e.err_lo, 0.0);
    EXPECT_DOUBLE_EQ(e.err_hi, 0.0);
}

TEST(analysis, all_correct_uses_zero_failure_bound) {
    ExperimentRecord r(Variant::Physical, InputLabel::Plus, 4);
    for (size_t k = 0; k < 500; k++) r.add(synthetic(true, true, true), k);
    FidelityEstimate e = state_fidelity(r, FidelityMode::QEC);
    EXPECT_DOUBLE_EQ(e.value, 1.0);
    EXPECT_DOUBLE_EQ(e.err_hi, 0.0);
    EXPECT_NEAR(e.err_lo, -std::log(1 - 0.6827) / 500, 1e-15);
}

TEST(analysis, empty_estimate_throws) {
    ExperimentRecord r(Variant::Transversal0, InputLabel::Zero, 2);
    for (size_t k = 0; k < 10; k++) r.add(synthetic(false, false, false), k);
    EXPECT_THROW(state_fidelity(r, FidelityMode::QEC), EmptyEstimateError);
    EXPECT_THROW(state_fidelity(r, FidelityMode::QED), EmptyEstimateError);
}

TEST(analysis, groups_are_round_robin) {
    ExperimentRecord r(Variant::Physical, InputLabel::Zero, 3);
    for (size_t k = 0; k < 10; k++) r.add(synthetic(true, k % 2 == 0, true), k);
    ASSERT_EQ(r.groups.size(), 3u);
    EXPECT_EQ(r.groups[0].total, 4u);
    EXPECT_EQ(r.groups[1].total, 3u);
    EXPECT_EQ(r.groups[2].total, 3u);
    EXPECT_EQ(r.totals().correct, 5u);
}

TEST(analysis, jackknife_two_groups) {
    std::vector<double> loo = {1.0, 0.9};  // leaving out 0.9 leaves 1.0 and vice versa
    EXPECT_NEAR(jackknife_standard_error(loo), 0.05, 1e-15);
    EXPECT_NEAR(jackknife_standard_error(loo), jackknife_oracle(loo), 1e-15);
    std::vector<double> groups = {0.9, 1.0};
    EXPECT_NEAR(jackknife_error_of_mean(groups), 0.05, 1e-15);
}

TEST(analysis, jackknife_matches_oracle_on_records) {
    RandomSource rng(11, 0);
    ExperimentRecord r(Variant::Physical, InputLabel::Zero, 7);
    for (size_t k = 0; k < 700; k++) r.add(synthetic(true, rng.bernoulli(0.8), true), k);
    auto frac = [](const GroupTally &g) { return static_cast<double>(g.correct) / static_cast<double>(g.accepted); };
    std::vector<double> loo;
    for (size_t i = 0; i < r.groups.size(); i++) {
        GroupTally t;
        for (size_t j = 0; j < r.groups.size(); j++) {
            if (j != i) t += r.groups[j];
        }
        loo.push_back(frac(t));
    }
    auto [lo, hi] = jackknife_error(r, frac);
    EXPECT_NEAR(lo, jackknife_oracle(loo), 1e-14);
    EXPECT_DOUBLE_EQ(lo, hi);
}

TEST(analysis, jackknife_edge_cases) {
    std::vector<double> same = {0.7, 0.7, 0.7};
    EXPECT_DOUBLE_EQ(jackknife_error_of_mean(same), 0.0);
    std::vector<double> one = {0.5};
    EXPECT_THROW(jackknife_error_of_mean(one), std::invalid_argument);
    ExperimentRecord r(Variant::Physical, InputLabel::Zero, 1);
    r.add(synthetic(true, true, true), 0);
    EXPECT_THROW(jackknife_error(r, [](const GroupTally &) { return 1.0; }), std::invalid_argument);
}

TEST(analysis, jackknife_shrinks_with_group_count) {
    // Fixed group size: four times the groups halves the error on average.
    RandomSource rng(12, 0);
    auto mean_error = [&](size_t groups) {
        double sum = 0;
        for (int rep = 0; rep < 200; rep++) {
            std::vector<double> g(groups);
            for (double &x : g) {
                size_t ok = 0;
                for (int k = 0; k < 100; k++) ok += rng.bernoulli(0.9);
                x = ok / 100.0;
            }
            sum += jackknife_error_of_mean(g);
        }
        return sum / 200;
    };
    double ratio = mean_error(10) / mean_error(40);
    EXPECT_NEAR(ratio, 2.0, 0.2);
}

TEST(analysis, zero_failure_bound) {
    EXPECT_NEAR(one_sigma_zero_failure_bound(1148), 1.0e-3, 1.0e-5);
    EXPECT_NEAR(one_sigma_zero_failure_bound(1), std::log(1 / (1 - 0.6827)), 1e-15);
    EXPECT_LT(one_sigma_zero_failure_bound(100000000), 1e-7);
    EXPECT_THROW(one_sigma_zero_failure_bound(0), std::invalid_argument);
}

TEST(analysis, averages_and_process_fidelity) {
    EXPECT_EQ(average_state_fidelity(six({1, 1, 1, 1, 1, 1})).value, 1.0);
    EXPECT_DOUBLE_EQ(process_fidelity(1.0), 1.0);
    double fa = average_state_fidelity(six({0.9949, 0.9932, 0.9941, 0.9928, 0.9923, 0.9907})).value;
    EXPECT_NEAR(fa, 0.9930, 5e-5);
    EXPECT_NEAR(process_fidelity(0.9930), 0.9895, 1e-12);
    double mzz = average_state_fidelity(six({0.957, 0.953, 0.925, 0.93, 0.90, 0.88})).value;
    EXPECT_NEAR(mzz, 0.925, 1e-3);
    EXPECT_NEAR(process_fidelity(0.925), 0.8875, 1e-12);
    auto missing = six({1, 1, 1, 1, 1, 1});
    missing.erase(InputLabel::MinusI);
    EXPECT_THROW(average_state_fidelity(missing), std::invalid_argument);
}

TEST(analysis, process_error_scales_by_three_halves) {
    FidelityEstimate fa;
    fa.value = 0.98;
    fa.err_lo = 0.002;
    fa.err_hi = 0.001;
    FidelityEstimate fp = process_fidelity(fa);
    EXPECT_NEAR(fp.value, 0.97, 1e-12);
    EXPECT_NEAR(fp.err_lo, 0.003, 1e-12);
    EXPECT_NEAR(fp.err_hi, 0.0015, 1e-12);
}

TEST(analysis, process_below_average_property) {
    RandomSource rng(13, 0);
    for (int i = 0; i < 1000; i++) {
        double fa = rng.uniform();
        if (fa >= 1) continue;
        EXPECT_LT(process_fidelity(fa), fa);
    }
}

TEST(analysis, estimator_is_unbiased) {
    const double p = 0.93;
    const int reps = 1000;
    const size_t n = 1000;
    RandomSource rng(14, 0);
    double sum = 0;
    for (int rep = 0; rep < reps; rep++) {
        ExperimentRecord r(Variant::Physical, InputLabel::Zero, 10);
        for (size_t k = 0; k < n; k++) r.add(synthetic(true, rng.bernoulli(p), true), k);
        sum += state_fidelity(r, FidelityMode::QEC).value;
    }
    double sigma = std::sqrt(p * (1 - p) / (n * reps));
    EXPECT_LT(std::abs(sum / reps - p), 3 * sigma);
}

TEST(analysis, qed_not_below_qec_on_synthetic_data) {
    // Errors are flagged by some check with probability 0.8; QED drops flagged shots.
    for (double q : {0.001, 0.01, 0.1}) {
        RandomSource rng(15, static_cast<uint64_t>(q * 1e4));
        ExperimentRecord r(Variant::Transversal1, InputLabel::Zero, 10);
        for (size_t k = 0; k < 100000; k++) {
            bool err = rng.bernoulli(q);
            bool flagged = err ? rng.bernoulli(0.8) : rng.bernoulli(0.01);
            r.add(synthetic(true, !err, !flagged), k);
        }
        FidelityEstimate qec = state_fidelity(r, FidelityMode::QEC), qed = state_fidelity(r, FidelityMode::QED);
        double sigma = std::hypot(qec.err_hi, qed.err_lo);
        EXPECT_GE(qed.value + 2 * sigma, qec.value) << q;
    }
}

TEST(analysis, format_estimate_uses_last_place_units) {
    FidelityEstimate e;
    e.value = 0.98951;
    e.err_hi = 0.0003;
    e.err_lo = 0.00025;
    EXPECT_EQ(format_estimate(e), "0.9895(+3/-3)");
    e.value = 1.0;
    e.err_hi = 0;
    e.err_lo = 0.0008;
    EXPECT_EQ(format_estimate(e), "1.0000(+0/-8)");
}

TEST(analysis, summarize_needs_all_inputs_for_averages) {
    std::vector<ExperimentRecord> recs;
    for (const InputState &in : input_states()) {
        ExperimentRecord r(Variant::LatticeZZ, in.label, 2);
        for (size_t k = 0; k < 10; k++) r.add(synthetic(true, k != 0, k > 1), k);
        recs.push_back(r);
    }
    VariantSummary s = summarize(Variant::LatticeZZ, recs);
    ASSERT_TRUE(s.f_a && s.f_p && s.f_a_qed && s.f_p_qed);
    EXPECT_NEAR(s.f_a->value, 0.9, 1e-12);
    EXPECT_NEAR(s.f_p->value, 0.85, 1e-12);
    EXPECT_NEAR(s.f_a_qed->value, 1.0, 1e-12);
    EXPECT_EQ(s.total_shots, 60u);
    recs.pop_back();
    VariantSummary partial = summarize(Variant::LatticeZZ, recs);
    EXPECT_FALSE(partial.f_a.has_value());
    EXPECT_EQ(partial.qec.size(), 5u);
    EXPECT_THROW(summarize(Variant::Physical, recs), std::invalid_argument);
}

TEST(analysis, slope_fit_recovers_power_law) {
    std::vector<double> x = {1e-4, 2e-4, 5e-4, 1e-3, 2e-3}, y, e;
    for (double v : x) {
        y.push_back(3.0 * v * v);
        e.push_back(0.1 * 3.0 * v * v);
    }
    SlopeFit f = fit_loglog_slope(x, y, e);
    EXPECT_NEAR(f.slope, 2.0, 1e-9);
    EXPECT_NEAR(f.intercept, std::log(3.0), 1e-9);
    EXPECT_EQ(f.points, 5u);
    std::vector<double> x2 = {1e-3, 2e-3}, y2 = {1e-3, 2e-3}, e2 = {1e-4, 1e-4};
    EXPECT_THROW(fit_loglog_slope(x2, y2, e2), std::invalid_argument);
}
