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

#ifndef QTELE_SURGERY_H
#define QTELE_SURGERY_H

#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "qtele/decoder.h"
#include "qtele/executor.h"
#include "qtele/schedule.h"
#include "qtele/steane_code.h"

namespace qtele {

enum class JointType : uint8_t { XX, ZZ };

struct JointMeasurementOutcome {
    std::string label;
    uint8_t parity_bit = 0;
    uint8_t flag_bit = 0;
    uint8_t ancilla_raw = 0;
    uint8_t flag_raw = 0;
    bool operator==(const JointMeasurementOutcome &) const = default;
};

/// Flagged weight-6 joint measurement on local qubits 0..6 (block a data),
/// 7..13 (block b data), 14 (ancilla) and 15 (flag). Couplings run in the order
/// 5a, flag, 5b, 6a, 6b, 7a, flag, 7b.
const Schedule &joint_schedule(JointType type);

/// Measures X-bar_a X-bar_b using block a's ancilla and flag.
JointMeasurementOutcome measure_xx_joint(Executor &exec, Block a, Block b);
/// Measures Z-bar_a Z-bar_b using block a's ancilla and flag.
JointMeasurementOutcome measure_zz_joint(Executor &exec, Block a, Block b);
JointMeasurementOutcome measure_joint(Executor &exec, JointType type, Block a, Block b);

/// Two-block decoding after a joint measurement raised its flag.
///
/// Keys are (six syndrome bits of block a) | (six bits of block b) << 6 and the
/// table is built by propagating every flag-raising fault of the joint circuit.
/// Entries only need to agree up to both blocks' stabilizers and the measured
/// joint logical operator.
class JointFlagDecoder {
   public:
    static const JointFlagDecoder &instance(JointType type);

    const SyndromeTable &table() const {
        return table_;
    }
    /// Corrections for blocks a and b. Unknown keys fall back to per-block lookup.
    std::pair<PauliString, PauliString> correction(
        std::span<const uint8_t> syndrome_a6, std::span<const uint8_t> syndrome_b6) const;

   private:
    explicit JointFlagDecoder(JointType type);
    SyndromeTable table_;
};

}  // namespace qtele

#endif
