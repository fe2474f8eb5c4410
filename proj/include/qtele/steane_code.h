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

#ifndef QTELE_STEANE_CODE_H
#define QTELE_STEANE_CODE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtele/executor.h"
#include "qtele/pauli_string.h"
#include "qtele/schedule.h"

namespace qtele {

constexpr size_t kDataQubits = 7;
/// Register qubits per block: 7 data, one syndrome ancilla, one flag.
constexpr size_t kBlockQubits = 9;

/// Logical block b occupies register qubits 9b .. 9b+8.
struct Block {
    size_t index = 0;

    size_t base() const {
        return kBlockQubits * index;
    }
    /// Data qubit i in 0..6 (label i+1).
    size_t data(size_t i) const {
        return base() + i;
    }
    size_t ancilla() const {
        return base() + 7;
    }
    size_t flag() const {
        return base() + 8;
    }
    std::array<size_t, kBlockQubits> qubits() const;
    std::array<size_t, kDataQubits> data_qubits() const;
};

enum class Basis : uint8_t { Z, X, Y };

char basis_char(Basis b);
Basis basis_from_char(char c);

/// Stabilizer supports (0-indexed) for labels {1,3,5,7}, {2,3,6,7}, {1,2,3,4}.
constexpr std::array<std::array<size_t, 4>, 3> kCheckSupports = {{{0, 2, 4, 6}, {1, 2, 5, 6}, {0, 1, 2, 3}}};
/// Support of X-bar and Z-bar: labels {5,6,7}.
constexpr std::array<size_t, 3> kLogicalSupport = {4, 5, 6};

struct CodeDefinition {
    std::array<PauliString, 3> x_stabilizers;
    std::array<PauliString, 3> z_stabilizers;
    PauliString logical_x;
    PauliString logical_z;
};

const CodeDefinition &code_definition();

/// 3-bit syndrome (bit i = parity over support i) of a 7-bit error pattern.
uint8_t pattern_syndrome(uint8_t mask7);
/// Parity of a 7-bit pattern over the logical support.
bool logical_parity(uint8_t mask7);

/// Six syndrome bits of a data error: Z-checks (seeing X errors) then X-checks.
std::array<uint8_t, 6> error_syndrome(const PauliString &e7);
/// Packs a six-bit syndrome as Z-check bits 0..2 and X-check bits 3..5.
uint8_t pack_syndrome(std::span<const uint8_t> bits6);

/// Logical content of a data error: `x` if it flips Z-bar, `z` if it flips X-bar.
struct LogicalAction {
    bool x = false;
    bool z = false;
    bool operator==(const LogicalAction &) const = default;
};
LogicalAction logical_action(const PauliString &e7);
/// True when e7 is a stabilizer up to sign.
bool is_stabilizer(const PauliString &e7);
/// Smallest weight of e7 times a stabilizer.
size_t min_weight_mod_stabilizers(const PauliString &e7);

/// Classical bits produced by one gadget.
struct GadgetRecord {
    std::string label;
    std::vector<uint8_t> syndrome_bits;
    std::vector<uint8_t> flag_bits;
    std::vector<uint8_t> verification_bits;
    size_t attempts = 0;

    bool trivial() const;
    bool operator==(const GadgetRecord &) const = default;
};

/// Encoding of |0>_L on local qubits 0..6 with verification ancilla 7.
const Schedule &encoding_schedule();
/// One stabilizer check on local qubits 0..6 (data), 7 (ancilla), 8 (flag).
/// check 0..2 are Z-type on supports 0..2, 3..5 are X-type.
Schedule check_schedule(size_t check, bool flagged);
/// All six checks in order: Z-type then X-type.
const Schedule &syndrome_round_schedule(bool flagged);

/// Verified preparation of |0>_L with repeat-until-success.
GadgetRecord prepare_zero(Executor &exec, Block block, size_t max_attempts);

/// Two weight-3 supports of logical Y representatives. Together they detect
/// every encoder fault whose error becomes undecodable after a transversal S.
constexpr std::array<std::array<size_t, 3>, 2> kInputYCheckLines = {{{0, 2, 5}, {1, 3, 5}}};

/// Flagged measurement of Y on each of kInputYCheckLines in turn, each
/// coupling a controlled-Y built as S_DAG, CX, S on the data qubit. Local
/// qubits as in check_schedule; outputs are (ancilla, flag) per line.
const Schedule &logical_y_check_schedule();

/// |0>_L encoding plus a transversal rotation, repeated until success. When
/// `expected_y` is set, every attempt also runs logical_y_check_schedule and
/// only counts as verified if both ancillas read `expected_y` and both flags
/// are quiet. Each attempt appends its bits to verification_bits: the encoder
/// bit, then (with the Y checks) ancilla mismatch and flag per line.
GadgetRecord prepare_rotated(Executor &exec,
                             Block block,
                             std::span<const Gate> rotation,
                             size_t max_attempts,
                             std::optional<uint8_t> expected_y);

void transversal_gate(Executor &exec, Gate g, Block block);
void transversal_cx(Executor &exec, Block control, Block target);

/// One flagged round of all six checks on each block, run in parallel.
std::vector<GadgetRecord> syn_round_flagged(Executor &exec, std::span<const Block> blocks);
GadgetRecord syn_round_flagged(Executor &exec, Block block);

struct QecOptions {
    /// Run round two even when round one is trivial.
    bool force_second_round = false;
    /// Use the flag raised in round one to pick a hook-aware decoding table.
    bool flag_aware = true;
    /// Compute but do not apply the correction.
    bool defer_correction = false;
};

struct QecResult {
    GadgetRecord record;
    bool ran_second_round = false;
    std::array<uint8_t, 6> round1_syndrome{};
    std::array<uint8_t, 6> round1_flags{};
    std::array<uint8_t, 6> round2_syndrome{};
    /// Correction on the block's 7 data qubits.
    PauliString correction{kDataQubits};
};

/// Flagged round; if anything fires, an unflagged round whose syndrome is
/// decoded and corrected physically.
QecResult qec_gadget_adaptive(Executor &exec, Block block, const QecOptions &options = {});

/// Embeds a 7-qubit data Pauli of `block` into the register.
PauliString embed_block_pauli(const PauliString &e7, Block block, size_t num_qubits);

struct ReadoutResult {
    std::array<uint8_t, 7> raw_bits{};
    std::array<uint8_t, 3> syndrome{};
    std::optional<size_t> decoded_qubit;
    uint8_t logical_bit = 0;
};

/// Decodes seven raw Z-basis bits of a block.
ReadoutResult decode_readout(std::span<const uint8_t> raw7);

/// Rotates the block so the requested logical Pauli becomes Z-bar, measures all
/// data qubits in Z and decodes.
ReadoutResult destructive_measure(Executor &exec, Block block, Basis basis);

/// Transversal single-qubit layers realizing a logical rotation on a block.
void transversal_sequence(Executor &exec, Block block, std::span<const Gate> gates);

}  // namespace qtele

#endif
