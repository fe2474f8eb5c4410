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

#include "qtele/decoder.h"

#include <gtest/gtest.h>

#include <set>

#include "steane_oracle.h"

using namespace qtele;
using namespace qtele::testing;

namespace {

std::array<uint8_t, 6> bits6(uint8_t s) {
    std::array<uint8_t, 6> out{};
    for (size_t i = 0; i < 6; i++) out[i] = (s >> i) & 1;
    return out;
}

}  // namespace

TEST(decoder, lookup_matches_oracle) {
    const auto &t = default_lookup();
    EXPECT_FALSE(decode(t, 0).has_value());
    for (uint8_t s = 1; s < 8; s++) {
        auto q = decode(t, s);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(static_cast<int>(*q), oracle_qubit(s));
    }
    EXPECT_THROW(decode(t, 8), std::out_of_range);
}

TEST(decoder, lookup_rejects_degenerate_code) {
    CodeDefinition broken = code_definition();
    broken.z_stabilizers[2] = broken.z_stabilizers[1];
    broken.x_stabilizers[2] = broken.x_stabilizers[1];
    EXPECT_THROW(build_lookup(broken), std::logic_error);
}

TEST(decoder, corrects_all_single_qubit_errors) {
    size_t n = 0;
    for (size_t q = 0; q < 7; q++) {
        for (char c : {'X', 'Y', 'Z'}) {
            PauliString e = PauliString::single(7, q, c);
            auto syn = error_syndrome(e);
            Masks residual = masks_of(e) * masks_of(lookup_correction(default_lookup(), syn));
            EXPECT_EQ(residual.weight(), 0) << e;
            n++;
        }
    }
    EXPECT_EQ(n, 21u);
}

TEST(decoder, syndromes_are_a_bijection) {
    std::set<uint8_t> seen;
    for (size_t q = 0; q < 7; q++) {
        for (char c : {'X', 'Y', 'Z'}) {
            seen.insert(pack_syndrome(error_syndrome(PauliString::single(7, q, c))));
        }
    }
    EXPECT_EQ(seen.size(), 21u);
    EXPECT_EQ(seen.count(0), 0u);
}

TEST(decoder, two_bit_flips_become_logical) {
    // Lookup decoding maps every weight-2 X error onto a weight-3 logical.
    for (size_t a = 0; a < 7; a++) {
        for (size_t b = a + 1; b < 7; b++) {
            Masks e{static_cast<uint8_t>((1u << a) | (1u << b)), 0};
            Masks r = css_corrected(e);
            EXPECT_EQ(oracle_syndrome(r), 0);
            EXPECT_EQ(r.weight(), 3);
            PauliString rp = PauliString::from_masks(7, r.x, r.z);
            EXPECT_TRUE(logical_action(rp).x);
            Masks lib = e * masks_of(lookup_correction(default_lookup(), bits6(oracle_syndrome(e))));
            EXPECT_EQ(lib.x, r.x);
        }
    }
}

TEST(decoder, syndrome_table_rejects_inequivalent_errors) {
    SyndromeTable t;
    auto same_syndrome = [](const PauliString &a, const PauliString &b) {
        return oracle_syndrome(masks_of(a) * masks_of(b)) == 0 && logical_action(a) == logical_action(b);
    };
    t.add(5, PauliString::single(7, 0, 'X'), same_syndrome);
    EXPECT_NO_THROW(t.add(5, PauliString::single(7, 0, 'X'), same_syndrome));
    EXPECT_THROW(t.add(5, PauliString::single(7, 1, 'X'), same_syndrome), std::logic_error);
    EXPECT_EQ(t.size(), 1u);
    ASSERT_NE(t.find(5), nullptr);
    EXPECT_EQ(t.find(6), nullptr);
}

TEST(decoder, flag_tables_are_nonempty) {
    for (size_t c = 0; c < 6; c++) {
        EXPECT_GT(FlagDecoder::instance().table(c).size(), 0u) << c;
    }
}

TEST(decoder, flag_decoder_falls_back_to_lookup) {
    // Keys no flagged fault produces decode like plain lookup.
    const auto &dec = FlagDecoder::instance();
    for (size_t c = 0; c < 6; c++) {
        for (uint8_t s = 0; s < 64; s++) {
            if (dec.table(c).find(s) != nullptr) continue;
            auto syn = bits6(s);
            EXPECT_EQ(dec.correction(c, syn), lookup_correction(default_lookup(), syn));
        }
    }
}

TEST(decoder, frame_readout_matches_anticommutation) {
    // Frame X^x Z^z flips a readout iff it anticommutes with the measured logical.
    Masks lx{kOracleLogical, 0}, lz{0, kOracleLogical}, ly{kOracleLogical, kOracleLogical};
    for (uint8_t fx = 0; fx < 2; fx++) {
        for (uint8_t fz = 0; fz < 2; fz++) {
            PauliFrame f;
            frame_update(f, 1, 'X', fx);
            frame_update(f, 1, 'Z', fz);
            Masks frame{static_cast<uint8_t>(fx ? kOracleLogical : 0), static_cast<uint8_t>(fz ? kOracleLogical : 0)};
            for (auto [basis, op] : {std::pair{Basis::Z, lz}, std::pair{Basis::X, lx}, std::pair{Basis::Y, ly}}) {
                for (bool bit : {false, true}) {
                    EXPECT_EQ(frame_adjust_readout(f, 1, basis, bit), bit ^ !frame.commutes(op));
                }
            }
            EXPECT_EQ(frame_adjust_readout(f, 0, Basis::Z, false), false);
        }
    }
}

TEST(decoder, frame_rejects_bad_arguments) {
    PauliFrame f;
    EXPECT_THROW(frame_update(f, 3, 'X', true), std::out_of_range);
    EXPECT_THROW(frame_update(f, 0, 'Y', true), std::invalid_argument);
    frame_update(f, 2, 'X', true);
    frame_update(f, 2, 'X', true);
    EXPECT_EQ(f, PauliFrame{});
}
