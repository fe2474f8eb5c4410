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

#include "qtele/stabilizer_state.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qtele/random_source.h"
#include "statevector.h"

using namespace qtele;
using qtele::testing::StateVector;

namespace {

struct Op {
    Gate g;
    size_t a, b;
};

std::vector<Op> random_circuit(size_t n, size_t depth, RandomSource &rng) {
    const Gate gates[] = {Gate::H, Gate::S, Gate::S_DAG, Gate::X, Gate::Y, Gate::Z, Gate::CX, Gate::CZ};
    std::vector<Op> ops;
    for (size_t i = 0; i < depth; i++) {
        Gate g = gates[rng.below(8)];
        size_t a = rng.below(n), b = rng.below(n - 1);
        if (b >= a) b++;
        ops.push_back({g, a, b});
    }
    return ops;
}

PauliString random_pauli(size_t n, RandomSource &rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) p.set(q, "_XYZ"[rng.below(4)]);
    if (rng.coin()) p.set_negative(true);
    return p;
}

double expectation_value(Expectation e) {
    return static_cast<double>(static_cast<int>(e));
}

}  // namespace

TEST(stabilizer_state, zero_state_stabilizers) {
    StabilizerState s(3);
    for (size_t q = 0; q < 3; q++) {
        EXPECT_EQ(s.expectation(PauliString::single(3, q, 'Z')), Expectation::Plus);
        EXPECT_EQ(s.expectation(PauliString::single(3, q, 'X')), Expectation::Indeterminate);
    }
    EXPECT_TRUE(s.check_invariants());
}

TEST(stabilizer_state, bell_state_example) {
    StabilizerState s(2);
    s.apply_gate(Gate::H, 0);
    s.apply_gate(Gate::CX, 0, 1);
    EXPECT_EQ(s.expectation(PauliString::from_text("XX")), Expectation::Plus);
    EXPECT_EQ(s.expectation(PauliString::from_text("ZZ")), Expectation::Plus);
    EXPECT_EQ(s.expectation(PauliString::from_text("YY")), Expectation::Minus);
    EXPECT_EQ(s.expectation(PauliString::from_text("Z_")), Expectation::Indeterminate);
}

TEST(stabilizer_state, random_circuits_match_statevector) {
    RandomSource rng(7, 0);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 2 + rng.below(5);
        StabilizerState tab(n);
        StateVector sv(n);
        for (const Op &op : random_circuit(n, 40, rng)) {
            tab.apply_gate(op.g, op.a, op.b);
            sv.apply(op.g, op.a, op.b);
        }
        ASSERT_TRUE(tab.check_invariants());
        for (size_t i = 0; i < n; i++) {
            EXPECT_NEAR(sv.expectation(tab.stabilizer(i)), 1.0, 1e-9);
        }
        for (int k = 0; k < 30; k++) {
            PauliString p = random_pauli(n, rng);
            EXPECT_NEAR(sv.expectation(p), expectation_value(tab.expectation(p)), 1e-9) << p.str();
        }
    }
}

TEST(stabilizer_state, measurement_matches_statevector_branches) {
    RandomSource circuit_rng(11, 0);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 3 + circuit_rng.below(3);
        auto ops = random_circuit(n, 30, circuit_rng);
        for (uint8_t forced : {0, 1}) {
            StabilizerState tab(n);
            StateVector sv(n);
            for (const Op &op : ops) {
                tab.apply_gate(op.g, op.a, op.b);
                sv.apply(op.g, op.a, op.b);
            }
            size_t q = trial % n;
            double p1 = sv.probability_one(q);
            RandomSource coin(0, 0);
            uint8_t script[1] = {forced};
            coin.force_coins(script);
            MeasureResult m = tab.measure_z(q, coin);
            if (m.was_random) {
                EXPECT_NEAR(p1, 0.5, 1e-9);
                EXPECT_EQ(m.bit, forced != 0);
            } else {
                EXPECT_NEAR(p1, m.bit ? 1.0 : 0.0, 1e-9);
            }
            sv.project(q, m.bit);
            for (size_t i = 0; i < n; i++) {
                EXPECT_NEAR(sv.expectation(tab.stabilizer(i)), 1.0, 1e-9);
            }
        }
    }
}

TEST(stabilizer_state, repeated_measurement_is_idempotent) {
    RandomSource rng(3, 0);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 4;
        StabilizerState s(n);
        for (const Op &op : random_circuit(n, 25, rng)) s.apply_gate(op.g, op.a, op.b);
        PauliString p = random_pauli(n, rng);
        if (p.is_identity()) continue;
        MeasureResult first = s.measure_pauli(p, rng);
        MeasureResult second = s.measure_pauli(p, rng);
        EXPECT_FALSE(second.was_random);
        EXPECT_EQ(first.bit, second.bit);
        EXPECT_EQ(s.expectation(p), first.bit ? Expectation::Minus : Expectation::Plus);
    }
}

TEST(stabilizer_state, commuting_generators_invariant) {
    RandomSource rng(5, 0);
    StabilizerState s(8);
    for (const Op &op : random_circuit(8, 200, rng)) {
        s.apply_gate(op.g, op.a, op.b);
        if (rng.below(10) == 0) s.measure_z(rng.below(8), rng);
    }
    for (size_t i = 0; i < 8; i++) {
        for (size_t j = 0; j < 8; j++) {
            EXPECT_TRUE(s.stabilizer(i).commutes(s.stabilizer(j)));
            EXPECT_EQ(s.stabilizer(i).commutes(s.destabilizer(j)), i != j);
        }
    }
    EXPECT_TRUE(s.check_invariants());
}

TEST(stabilizer_state, same_seed_same_outcomes) {
    auto run = [](uint64_t seed) {
        RandomSource rng(seed, 9);
        StabilizerState s(6);
        std::vector<uint8_t> bits;
        for (size_t q = 0; q < 6; q++) s.apply_gate(Gate::H, q);
        for (size_t q = 0; q + 1 < 6; q++) s.apply_gate(Gate::CZ, q, q + 1);
        for (size_t q = 0; q < 6; q++) bits.push_back(s.measure_z(q, rng).bit);
        return bits;
    };
    EXPECT_EQ(run(42), run(42));
}

TEST(stabilizer_state, ghz_outcome_frequencies) {
    // 000 and 111 with probability 1/2 each; chi-squared with one dof below 10.83 (p = 0.001).
    size_t counts[2] = {0, 0};
    const size_t shots = 4000;
    for (size_t k = 0; k < shots; k++) {
        RandomSource rng(1, k);
        StabilizerState s(3);
        s.apply_gate(Gate::H, 0);
        s.apply_gate(Gate::CX, 0, 1);
        s.apply_gate(Gate::CX, 1, 2);
        bool b0 = s.measure_z(0, rng).bit;
        EXPECT_EQ(s.measure_z(1, rng).bit, b0);
        EXPECT_EQ(s.measure_z(2, rng).bit, b0);
        counts[b0]++;
    }
    double e = shots / 2.0;
    double chi2 = (counts[0] - e) * (counts[0] - e) / e + (counts[1] - e) * (counts[1] - e) / e;
    EXPECT_LT(chi2, 10.83);
}

TEST(stabilizer_state, reset_returns_zero) {
    RandomSource rng(2, 0);
    StabilizerState s(2);
    s.apply_gate(Gate::H, 0);
    s.apply_gate(Gate::CX, 0, 1);
    s.reset(0, rng);
    EXPECT_EQ(s.expectation(PauliString::from_text("Z_")), Expectation::Plus);
}

TEST(stabilizer_state, bit_register_keys) {
    BitRegister r;
    EXPECT_EQ(r.append("syn", {1, 0}), 0u);
    EXPECT_EQ(r.append("syn", {0, 1}), 1u);
    EXPECT_EQ(r.instances("syn"), 2u);
    EXPECT_EQ(r.get("syn", 1), (std::vector<uint8_t>{0, 1}));
    EXPECT_FALSE(r.contains("flag", 0));
}

TEST(stabilizer_state, out_of_range_qubit_throws) {
    StabilizerState s(2);
    EXPECT_THROW(s.apply_gate(Gate::H, 2), std::out_of_range);
}

TEST(stabilizer_state, branch_cache_replays_prefix) {
    // Record a run, then rerun with the last coin flipped: the cached rerun
    // must end in the same state as a full rerun.
    auto circuit = [](StabilizerState &st, RandomSource &rng, std::vector<uint8_t> &bits) {
        st.apply_gate(Gate::H, 0);
        st.apply_gate(Gate::CX, 0, 1);
        bits.push_back(st.measure_z(1, rng).bit);
        st.apply_gate(Gate::H, 2);
        st.apply_gate(Gate::CZ, 2, 0);
        bits.push_back(st.measure_z(0, rng).bit);
        st.apply_gate(Gate::H, 1);
        bits.push_back(st.measure_z(1, rng).bit);
        st.apply_gate(Gate::S, 2);
        bits.push_back(st.measure_z(2, rng).bit);
    };
    BranchCache cache;
    std::vector<uint8_t> script;
    {
        StabilizerState st(3);
        RandomSource rng;
        rng.force_coins(script);
        st.attach_cache(&cache);
        std::vector<uint8_t> bits;
        circuit(st, rng, bits);
        script.assign(rng.coins_drawn(), 0);
    }
    ASSERT_GE(script.size(), 2u);
    for (size_t flip = 0; flip < script.size(); flip++) {
        std::vector<uint8_t> s(script.begin(), script.begin() + static_cast<std::ptrdiff_t>(flip) + 1);
        s.back() = 1;
        StabilizerState a(3), b(3);
        RandomSource ra, rb;
        ra.force_coins(s);
        rb.force_coins(s);
        BranchCache c = cache;
        c.resume_at = flip;
        a.attach_cache(&c);
        std::vector<uint8_t> ba, bb;
        circuit(a, ra, ba);
        circuit(b, rb, bb);
        EXPECT_EQ(ba, bb);
        EXPECT_EQ(a.canonical_stabilizers(), b.canonical_stabilizers());
    }
}

TEST(stabilizer_state, reading_during_replay_throws) {
    BranchCache cache;
    {
        StabilizerState st(1);
        RandomSource rng;
        st.attach_cache(&cache);
        st.apply_gate(Gate::H, 0);
        st.measure_z(0, rng);
    }
    cache.resume_at = 0;
    StabilizerState st(1);
    st.attach_cache(&cache);
    EXPECT_THROW(st.expectation(PauliString::from_text("Z")), std::logic_error);
}
