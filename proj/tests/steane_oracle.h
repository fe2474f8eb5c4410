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

#ifndef QTELE_TESTS_STEANE_ORACLE_H
#define QTELE_TESTS_STEANE_ORACLE_H

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "qtele/pauli_string.h"

namespace qtele::testing {

/// Hand-written description of the [[7,1,3]] code, independent of the library tables.
inline constexpr std::array<uint8_t, 3> kOracleChecks = {0b1010101, 0b1100110, 0b0001111};
inline constexpr uint8_t kOracleLogical = 0b1110000;

/// A Pauli on 7 qubits as two bit masks (phase ignored).
struct Masks {
    uint8_t x = 0;
    uint8_t z = 0;
    Masks operator*(Masks o) const {
        return {static_cast<uint8_t>(x ^ o.x), static_cast<uint8_t>(z ^ o.z)};
    }
    int weight() const {
        return std::popcount(static_cast<unsigned>(x | z));
    }
    bool commutes(Masks o) const {
        return ((std::popcount(static_cast<unsigned>(x & o.z)) + std::popcount(static_cast<unsigned>(z & o.x))) & 1) ==
               0;
    }
};

inline Masks masks_of(const PauliString &p) {
    return {static_cast<uint8_t>(p.x_mask() & 0x7F), static_cast<uint8_t>(p.z_mask() & 0x7F)};
}

/// All products of the given generators.
inline std::vector<Masks> group(const std::vector<Masks> &gens) {
    std::vector<Masks> out;
    for (uint32_t m = 0; m < (1u << gens.size()); m++) {
        Masks acc;
        for (size_t i = 0; i < gens.size(); i++) {
            if ((m >> i) & 1) acc = acc * gens[i];
        }
        out.push_back(acc);
    }
    return out;
}

inline std::vector<Masks> code_generators() {
    std::vector<Masks> g;
    for (uint8_t c : kOracleChecks) g.push_back({c, 0});
    for (uint8_t c : kOracleChecks) g.push_back({0, c});
    return g;
}

inline int min_weight(Masks e, const std::vector<Masks> &grp) {
    int best = 8;
    for (Masks s : grp) best = std::min(best, (e * s).weight());
    return best;
}

/// Syndrome from the oracle checks: bits 0..2 from Z checks, 3..5 from X checks.
inline uint8_t oracle_syndrome(Masks e) {
    uint8_t s = 0;
    for (size_t i = 0; i < 3; i++) {
        s |= static_cast<uint8_t>((std::popcount(static_cast<unsigned>(e.x & kOracleChecks[i])) & 1) << i);
        s |= static_cast<uint8_t>((std::popcount(static_cast<unsigned>(e.z & kOracleChecks[i])) & 1) << (i + 3));
    }
    return s;
}

/// Qubit whose check pattern equals `s3`, or -1 for s3 = 0.
inline int oracle_qubit(uint8_t s3) {
    for (int q = 0; q < 7; q++) {
        uint8_t pat = 0;
        for (size_t i = 0; i < 3; i++) pat |= static_cast<uint8_t>(((kOracleChecks[i] >> q) & 1) << i);
        if (pat == s3) return q;
    }
    return -1;
}

/// Error left after independent X and Z lookup decoding.
inline Masks css_corrected(Masks e) {
    uint8_t s = oracle_syndrome(e);
    int qx = oracle_qubit(s & 7), qz = oracle_qubit(s >> 3);
    if (qx >= 0) e.x ^= static_cast<uint8_t>(1u << qx);
    if (qz >= 0) e.z ^= static_cast<uint8_t>(1u << qz);
    return e;
}

inline bool in_group(Masks e, const std::vector<Masks> &grp) {
    for (Masks s : grp) {
        if (s.x == e.x && s.z == e.z) return true;
    }
    return false;
}

}  // namespace qtele::testing

#endif
