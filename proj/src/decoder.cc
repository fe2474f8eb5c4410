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

#include <stdexcept>

#include "qtele/schedule.h"

namespace qtele {

LookupTable build_lookup(const CodeDefinition &code) {
    LookupTable t;
    t.entries.fill(-2);
    t.entries[0] = -1;
    for (size_t q = 0; q < kDataQubits; q++) {
        uint8_t s = 0;
        for (size_t i = 0; i < 3; i++) {
            if (code.z_stabilizers[i].z(q)) {
                s |= static_cast<uint8_t>(1u << i);
            }
        }
        if (s == 0 || t.entries[s] != -2) {
            throw std::logic_error("qubit syndrome patterns are not a bijection onto nonzero syndromes");
        }
        t.entries[s] = static_cast<int8_t>(q);
    }
    return t;
}

const LookupTable &default_lookup() {
    static const LookupTable t = build_lookup(code_definition());
    return t;
}

std::optional<size_t> decode(const LookupTable &table, uint8_t syndrome3) {
    if (syndrome3 >= 8) {
        throw std::out_of_range("syndrome must have three bits");
    }
    int8_t e = table.entries[syndrome3];
    if (e < 0) {
        return std::nullopt;
    }
    return static_cast<size_t>(e);
}

PauliString lookup_correction(const LookupTable &table, std::span<const uint8_t> syndrome6) {
    uint8_t packed = pack_syndrome(syndrome6);
    PauliString c(kDataQubits);
    if (auto q = decode(table, packed & 7)) {
        c.set(*q, 'X');
    }
    if (auto q = decode(table, packed >> 3)) {
        c.set(*q, c.at(*q) == 'X' ? 'Y' : 'Z');
    }
    return c;
}

void SyndromeTable::add(uint32_t key, const PauliString &error, const Equivalence &equivalent) {
    PauliString e = error;
    e.set_negative(false);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, e);
        return;
    }
    if (!equivalent(it->second, e)) {
        throw std::logic_error("two inequivalent errors share syndrome key " + std::to_string(key) + ": " +
                               it->second.str() + " vs " + e.str());
    }
    if (e.weight() < it->second.weight()) {
        it->second = e;
    }
}

const PauliString *SyndromeTable::find(uint32_t key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

FlagDecoder::FlagDecoder() {
    auto same_class = [](const PauliString &a, const PauliString &b) {
        return is_stabilizer(PauliString::from_masks(kDataQubits, a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask()));
    };
    std::array<size_t, kDataQubits> data = {0, 1, 2, 3, 4, 5, 6};
    for (size_t c = 0; c < 6; c++) {
        Schedule s = check_schedule(c, true);
        for (const PropagatedFault &f : enumerate_single_faults(s)) {
            if (!f.flips[1]) {
                continue;
            }
            PauliString e = f.residual.restricted(data);
            tables_[c].add(pack_syndrome(error_syndrome(e)), e, same_class);
        }
    }
}

const FlagDecoder &FlagDecoder::instance() {
    static const FlagDecoder d;
    return d;
}

PauliString FlagDecoder::correction(size_t flagged_check, std::span<const uint8_t> syndrome6) const {
    if (const PauliString *e = tables_.at(flagged_check).find(pack_syndrome(syndrome6))) {
        return *e;
    }
    return lookup_correction(default_lookup(), syndrome6);
}

void frame_update(PauliFrame &frame, size_t block, char kind, bool condition) {
    if (block >= 3) {
        throw std::out_of_range("frame block index");
    }
    if (kind == 'X') {
        frame.x[block] ^= condition ? 1 : 0;
    } else if (kind == 'Z') {
        frame.z[block] ^= condition ? 1 : 0;
    } else {
        throw std::invalid_argument("frame kind must be X or Z");
    }
}

bool frame_adjust_readout(const PauliFrame &frame, size_t block, Basis basis, bool logical_bit) {
    if (block >= 3) {
        throw std::out_of_range("frame block index");
    }
    bool flip = false;
    switch (basis) {
        case Basis::Z:
            flip = frame.x[block];
            break;
        case Basis::X:
            flip = frame.z[block];
            break;
        case Basis::Y:
            flip = (frame.x[block] ^ frame.z[block]) != 0;
            break;
    }
    return logical_bit != flip;
}

}  // namespace qtele
