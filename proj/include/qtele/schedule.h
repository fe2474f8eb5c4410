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

#ifndef QTELE_SCHEDULE_H
#define QTELE_SCHEDULE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qtele/executor.h"
#include "qtele/gate.h"
#include "qtele/noise_model.h"
#include "qtele/pauli_string.h"

namespace qtele {

enum class OpType : uint8_t { Reset, Gate1, Gate2, Measure };

/// One layer of a gadget circuit on local qubit indices.
struct ScheduleOp {
    static constexpr size_t kMaxSlots = 16;

    OpType type = OpType::Reset;
    Gate gate = Gate::H;
    uint8_t count = 0;
    std::array<uint8_t, kMaxSlots> qubits{};

    std::span<const uint8_t> targets() const {
        return {qubits.data(), count};
    }
};

/// A fixed gadget circuit over `num_qubits` local qubits. Local qubits are bound
/// to register qubits by a map when the schedule runs.
class Schedule {
   public:
    explicit Schedule(size_t num_qubits = 0) : num_qubits_(num_qubits) {
    }

    Schedule &reset(std::initializer_list<uint8_t> qubits);
    Schedule &gate1(Gate g, std::initializer_list<uint8_t> qubits);
    /// Pairs listed flat: {c0, t0, c1, t1, ...}.
    Schedule &gate2(Gate g, std::initializer_list<uint8_t> pairs);
    Schedule &measure(std::initializer_list<uint8_t> qubits);
    Schedule &append(const Schedule &other);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<ScheduleOp> &ops() const {
        return ops_;
    }
    size_t num_measurements() const {
        return num_measurements_;
    }

   private:
    Schedule &push(OpType type, Gate g, std::initializer_list<uint8_t> qubits);

    size_t num_qubits_;
    std::vector<ScheduleOp> ops_;
    size_t num_measurements_ = 0;
};

/// Runs the schedule once per map, with op k of every map issued as one layer.
/// Measurement bits are written map-major into `out` (maps.size() * num_measurements).
void run_schedule(
    Executor &exec, const Schedule &schedule, std::span<const std::span<const size_t>> maps, uint8_t *out);

/// Single-map convenience wrapper.
std::vector<uint8_t> run_schedule(Executor &exec, const Schedule &schedule, std::span<const size_t> map);

/// A single fault propagated to the end of a schedule.
struct PropagatedFault {
    size_t op_index = 0;
    OpKind kind = OpKind::Gate;
    /// Injected Pauli on local qubits (identity for a pure bit flip).
    PauliString injected;
    /// Pauli on all local qubits at the end of the schedule.
    PauliString residual;
    /// Flipped measurement results, in schedule measurement order.
    std::vector<uint8_t> flips;
};

/// Propagates `error`, present right after op `op_index`, to the end of the
/// schedule. `flip_measurement` optionally flips one recorded measurement.
PropagatedFault propagate_fault(
    const Schedule &schedule, size_t op_index, const PauliString &error, int flip_measurement = -1);

/// Every single fault of the schedule (gate Paulis, init and measurement flips)
/// propagated to the end.
std::vector<PropagatedFault> enumerate_single_faults(const Schedule &schedule);

}  // namespace qtele

#endif
