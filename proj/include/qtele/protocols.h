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

#ifndef QTELE_PROTOCOLS_H
#define QTELE_PROTOCOLS_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtele/decoder.h"
#include "qtele/executor.h"
#include "qtele/steane_code.h"
#include "qtele/surgery.h"

namespace qtele {

enum class Variant : uint8_t { Physical, Transversal0, Transversal1, LatticeXXZZ, LatticeZZ };

std::string_view variant_name(Variant v);
/// Accepts canonical names plus the short aliases "0qec", "1qec", "mxx_mzz", "mzz".
Variant variant_from_name(std::string_view name);
const std::array<Variant, 5> &all_variants();
/// Register size used by the variant.
size_t variant_num_qubits(Variant v);
/// Whether the variant post-selects its Bell resource.
bool variant_post_selects(Variant v);

enum class InputLabel : uint8_t { Zero, One, Plus, Minus, PlusI, MinusI };

struct InputState {
    InputLabel label;
    std::string_view name;
    /// Transversal single-qubit layers taking |0>_L to the state.
    std::vector<Gate> logical_prep;
    /// Physical gates taking |0> to the state.
    std::vector<Gate> physical_prep;
    Basis readout_basis;
    uint8_t expected_bit;
};

const std::array<InputState, 6> &input_states();
const InputState &input_state(InputLabel label);
/// "0", "1", "+", "-", "+i", "-i".
InputLabel input_from_name(std::string_view name);
size_t input_index(InputLabel label);

enum class DiscardReason : uint8_t { BellVerification, BellSyndrome, BellFlag, BellParity };

std::string_view discard_reason_name(DiscardReason r);
DiscardReason discard_reason_from_name(std::string_view name);

struct ReadoutRecord {
    std::string label;
    size_t block = 0;
    Basis basis = Basis::Z;
    std::array<uint8_t, 7> raw_bits{};
    std::array<uint8_t, 3> syndrome{};
    uint8_t logical_bit = 0;
    bool operator==(const ReadoutRecord &) const = default;
};

struct ShotOutcome {
    Variant variant = Variant::Physical;
    InputLabel input = InputLabel::Zero;
    uint64_t seed = 0;
    uint64_t stream_id = 0;
    bool accepted = true;
    std::optional<DiscardReason> discard_reason;
    std::vector<GadgetRecord> gadget_records;
    std::vector<JointMeasurementOutcome> joint_outcomes;
    std::vector<ReadoutRecord> readouts;
    /// False when two back-to-back joint measurements disagreed.
    bool parity_confirmed = true;
    /// The conditional repeat of the ZZ measurement ran.
    bool repeat_round = false;
    PauliFrame frame;
    uint8_t final_bit = 0;
    bool correct = false;
    bool qed_clean = false;

    bool operator==(const ShotOutcome &) const = default;
};

struct ProtocolOptions {
    size_t rus_max_attempts = 3;
    /// Measure each joint operator twice and act on disagreement.
    bool confirm_joint_parity = true;
    /// Hook-aware decoding after a raised flag (per-block and joint).
    bool flag_aware_decoding = true;
    /// Verify +-i input blocks with flagged logical-Y checks after the rotation.
    bool verify_input_rotation = true;
    /// Apply teleportation byproducts as noiseless physical logical Paulis instead of the frame.
    bool physical_byproducts = false;
    /// Mutation used by oracle tests: ignore every byproduct correction.
    bool drop_byproducts = false;
};

ShotOutcome run_physical_teleport(const InputState &input, Executor &exec, const ProtocolOptions &options = {});
ShotOutcome run_transversal(
    const InputState &input, int qec_gadgets, Executor &exec, const ProtocolOptions &options = {});
ShotOutcome run_lattice_mxx_mzz(const InputState &input, Executor &exec, const ProtocolOptions &options = {});
ShotOutcome run_lattice_mzz(const InputState &input, Executor &exec, const ProtocolOptions &options = {});
ShotOutcome run_variant(Variant v, const InputState &input, Executor &exec, const ProtocolOptions &options = {});

/// Builds a fresh executor for one shot and runs it.
ShotOutcome run_shot(
    Variant v,
    InputLabel input,
    const NoiseParams &noise,
    uint64_t seed,
    uint64_t stream_id,
    const ProtocolOptions &options = {},
    FaultInjector *injector = nullptr);

/// True when every check bit in the shot is trivial (see ShotOutcome).
bool compute_qed_clean(const ShotOutcome &shot);

struct IdentityReport {
    Variant variant = Variant::Physical;
    size_t leaves = 0;
    size_t failures = 0;
    /// Probability mass of failing leaves (each leaf weighs 2^-coins).
    double failure_probability = 0;
    bool budget_exceeded = false;
    bool passed() const {
        return failures == 0 && !budget_exceeded;
    }
};

/// Runs the variant noiselessly on all six inputs along every branch of every
/// random measurement outcome. With `share_prefixes`, sibling branches reuse
/// the simulation of their common prefix (see BranchCache).
IdentityReport verify_noiseless_identity(Variant v,
                                         const ProtocolOptions &options = {},
                                         size_t leaf_budget = size_t{1} << 20,
                                         bool share_prefixes = true);

}  // namespace qtele

#endif
