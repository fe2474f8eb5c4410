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

#include "qtele/surgery.h"

#include <gtest/gtest.h>

#include "qtele/protocols.h"
#include "steane_oracle.h"

using namespace qtele;
using namespace qtele::testing;

namespace {

constexpr size_t kTwoBlocks = 2 * kBlockQubits;

PauliString logical_pair(JointType t) {
    const auto &c = code_definition();
    const PauliString &l = t == JointType::XX ? c.logical_x : c.logical_z;
    return embed_block_pauli(l, Block{0}, kTwoBlocks) * embed_block_pauli(l, Block{1}, kTwoBlocks);
}

/// Prepares blocks 0 and 1 in the given eigenstates.
Executor two_blocks(const InputState &a, const InputState &b, uint64_t seed) {
    Executor exec(kTwoBlocks, NoiseParams::noiseless(), RandomSource(seed, 0));
    prepare_rotated(exec, Block{0}, a.logical_prep, 1, std::nullopt);
    prepare_rotated(exec, Block{1}, b.logical_prep, 1, std::nullopt);
    return exec;
}

/// Membership in the group of both blocks' stabilizers times the joint logical.
bool harmless(Masks a, Masks b, Masks joint) {
    static const auto grp = group(code_generators());
    return (in_group(a, grp) && in_group(b, grp)) || (in_group(a * joint, grp) && in_group(b * joint, grp));
}

}  // namespace

TEST(surgery, parity_of_eigenstates) {
    // Joint parity of product eigenstates is the XOR of their readout bits.
    for (JointType t : {JointType::XX, JointType::ZZ}) {
        Basis want = t == JointType::XX ? Basis::X : Basis::Z;
        for (const InputState &a : input_states()) {
            if (a.readout_basis != want) continue;
            for (const InputState &b : input_states()) {
                if (b.readout_basis != want) continue;
                for (uint64_t s = 0; s < 3; s++) {
                    Executor exec = two_blocks(a, b, s);
                    auto out = measure_joint(exec, t, Block{0}, Block{1});
                    EXPECT_EQ(out.parity_bit, a.expected_bit ^ b.expected_bit);
                    EXPECT_EQ(out.flag_bit, 0);
                }
            }
        }
    }
}

TEST(surgery, measurement_projects_onto_reported_parity) {
    for (uint64_t s = 0; s < 16; s++) {
        // |+>|+> has a random ZZ parity; |0>|0> a random XX parity.
        for (JointType t : {JointType::ZZ, JointType::XX}) {
            InputLabel in = t == JointType::ZZ ? InputLabel::Plus : InputLabel::Zero;
            Executor exec = two_blocks(input_state(in), input_state(in), s);
            auto out = measure_joint(exec, t, Block{0}, Block{1});
            Expectation e = exec.state().expectation(logical_pair(t));
            EXPECT_EQ(e, out.parity_bit ? Expectation::Minus : Expectation::Plus);
            auto again = measure_joint(exec, t, Block{0}, Block{1});
            EXPECT_EQ(again.parity_bit, out.parity_bit);
        }
    }
}

TEST(surgery, rejects_same_block) {
    Executor exec(kTwoBlocks, NoiseParams::noiseless(), RandomSource());
    EXPECT_THROW(measure_joint(exec, JointType::ZZ, Block{1}, Block{1}), std::invalid_argument);
}

TEST(surgery, single_faults_are_correctable) {
    // Unflagged faults: each block's residual is fixed by lookup decoding.
    // Flagged faults: the joint flag table fixes both blocks together.
    std::vector<size_t> pa = {0, 1, 2, 3, 4, 5, 6}, pb = {7, 8, 9, 10, 11, 12, 13};
    for (JointType t : {JointType::XX, JointType::ZZ}) {
        Masks joint = t == JointType::XX ? Masks{kOracleLogical, 0} : Masks{0, kOracleLogical};
        const auto &dec = JointFlagDecoder::instance(t);
        size_t flagged = 0, plain = 0;
        for (const auto &f : enumerate_single_faults(joint_schedule(t))) {
            ASSERT_EQ(f.flips.size(), 2u);
            Masks a = masks_of(f.residual.restricted(pa)), b = masks_of(f.residual.restricted(pb));
            if (!f.flips[1]) {
                plain++;
                EXPECT_TRUE(harmless(css_corrected(a), css_corrected(b), joint)) << "op " << f.op_index;
                continue;
            }
            flagged++;
            uint8_t sa = oracle_syndrome(a), sb = oracle_syndrome(b);
            std::array<uint8_t, 6> ba{}, bb{};
            for (size_t i = 0; i < 6; i++) {
                ba[i] = (sa >> i) & 1;
                bb[i] = (sb >> i) & 1;
            }
            auto [ca, cb] = dec.correction(ba, bb);
            EXPECT_TRUE(harmless(a * masks_of(ca), b * masks_of(cb), joint)) << "op " << f.op_index << " " << f.injected;
        }
        EXPECT_GT(flagged, 0u);
        EXPECT_GT(plain, 0u);
    }
}

TEST(surgery, some_faults_flip_parity_without_flag) {
    // Such faults are only caught by repeating the measurement.
    for (JointType t : {JointType::XX, JointType::ZZ}) {
        size_t parity_flips = 0;
        for (const auto &f : enumerate_single_faults(joint_schedule(t))) {
            if (f.flips[0] && !f.flips[1]) parity_flips++;
        }
        EXPECT_GT(parity_flips, 0u);
    }
}
