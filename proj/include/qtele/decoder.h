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

#ifndef QTELE_DECODER_H
#define QTELE_DECODER_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>

#include "qtele/pauli_string.h"
#include "qtele/steane_code.h"

namespace qtele {

/// Maps each 3-bit syndrome to a data qubit (0..6), or -1 for no correction.
struct LookupTable {
    std::array<int8_t, 8> entries{};
};

/// Derives the table from the code's check supports. Throws std::logic_error if
/// the nonzero syndromes are not in bijection with the qubits.
LookupTable build_lookup(const CodeDefinition &code);
const LookupTable &default_lookup();

std::optional<size_t> decode(const LookupTable &table, uint8_t syndrome3);

/// Correction for a six-bit syndrome: X on the qubit named by the Z-check bits
/// and Z on the qubit named by the X-check bits.
PauliString lookup_correction(const LookupTable &table, std::span<const uint8_t> syndrome6);

/// Syndrome-keyed correction table built from enumerated errors.
///
/// Errors sharing a key must be equivalent under `equivalent`; add() throws
/// std::logic_error otherwise, since the table could not then be correct.
class SyndromeTable {
   public:
    using Equivalence = std::function<bool(const PauliString &, const PauliString &)>;

    void add(uint32_t key, const PauliString &error, const Equivalence &equivalent);
    const PauliString *find(uint32_t key) const;
    size_t size() const {
        return entries_.size();
    }
    const std::map<uint32_t, PauliString> &entries() const {
        return entries_;
    }

   private:
    std::map<uint32_t, PauliString> entries_;
};

/// Hook-aware decoding used when a check of the flagged round raises its flag.
/// Table c is built by propagating every fault of check c that flips the flag.
class FlagDecoder {
   public:
    static const FlagDecoder &instance();

    const SyndromeTable &table(size_t check) const {
        return tables_.at(check);
    }
    /// Falls back to lookup decoding for syndromes no flagged fault produces.
    PauliString correction(size_t flagged_check, std::span<const uint8_t> syndrome6) const;

   private:
    FlagDecoder();
    std::array<SyndromeTable, 6> tables_;
};

/// Pending logical Pauli corrections for up to three logical blocks.
struct PauliFrame {
    std::array<uint8_t, 3> x{};
    std::array<uint8_t, 3> z{};
    bool operator==(const PauliFrame &) const = default;
};

/// XORs `condition` into the X (kind 'X') or Z (kind 'Z') bit of a block.
void frame_update(PauliFrame &frame, size_t block, char kind, bool condition);

/// Flips a logical readout by the frame component that anticommutes with the
/// measured logical operator.
bool frame_adjust_readout(const PauliFrame &frame, size_t block, Basis basis, bool logical_bit);

}  // namespace qtele

#endif
