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

#ifndef QTELE_EXECUTOR_H
#define QTELE_EXECUTOR_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qtele/noise_model.h"
#include "qtele/stabilizer_state.h"

namespace qtele {

/// Fault-injection harness attached to an Executor.
struct FaultInjector {
    std::optional<FaultSpec> spec;
    /// Count idle steps as locations even when p_mem is zero.
    bool include_idle = false;
    bool record_trace = false;
    std::vector<FaultLocation> trace;
    bool reached = false;
};

/// Runs circuits layer by layer on a StabilizerState with circuit-level noise.
///
/// Each public operation is one layer. A qubit becomes live when it is reset and
/// stops being live when it is measured; live qubits that a layer does not touch
/// accrue one idle step.
class Executor {
   public:
    Executor(size_t num_qubits, NoiseParams noise, RandomSource rng, FaultInjector *injector = nullptr);

    StabilizerState &state() {
        return state_;
    }
    const StabilizerState &state() const {
        return state_;
    }
    RandomSource &rng() {
        return rng_;
    }
    const NoiseParams &noise() const {
        return noise_;
    }
    FaultInjector *injector() const {
        return injector_;
    }
    size_t num_qubits() const {
        return state_.num_qubits();
    }
    /// Number of locations issued so far.
    size_t locations() const {
        return next_location_;
    }
    uint64_t live_mask() const {
        return live_;
    }

    /// Same single-qubit gate on every listed qubit.
    void gate1(Gate g, std::span<const size_t> qubits);
    /// Two-qubit gate on consecutive pairs (qubits[0], qubits[1]), (qubits[2], qubits[3]), ...
    void gate2(Gate g, std::span<const size_t> pairs);
    void reset(std::span<const size_t> qubits);
    /// Z-basis measurement; returns the recorded (possibly noise-flipped) bits.
    std::vector<uint8_t> measure(std::span<const size_t> qubits);
    void measure_into(std::span<const size_t> qubits, uint8_t *out);
    /// Applies a correction as one layer of single-qubit Pauli gates (noisy like any gate).
    void apply_correction(const PauliString &p);

    void gate1(Gate g, size_t q) {
        gate1(g, std::span<const size_t>(&q, 1));
    }
    void gate2(Gate g, size_t a, size_t b) {
        size_t pair[2] = {a, b};
        gate2(g, pair);
    }

   private:
    void check_distinct(std::span<const size_t> qubits);
    void end_layer();
    /// Registers a location and returns the spec to inject there, if any.
    const FaultSpec *issue(OpKind kind, size_t a, size_t b, size_t arity);
    void apply_local_pauli(const PauliString &p, size_t a, size_t b);

    StabilizerState state_;
    NoiseParams noise_;
    RandomSource rng_;
    FaultInjector *injector_;
    bool track_idle_;
    size_t next_location_ = 0;
    uint64_t live_ = 0;
    uint64_t touched_ = 0;
};

}  // namespace qtele

#endif
