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

#ifndef QTELE_NOISE_MODEL_H
#define QTELE_NOISE_MODEL_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qtele/pauli_string.h"
#include "qtele/random_source.h"

namespace qtele {

/// Circuit-level Pauli noise rates.
///
/// Idle qubits suffer Z with probability p_mem * bias_eta and X, Y each with
/// probability p_mem * (1 - bias_eta) / 2, so bias_eta is the Z fraction of the
/// memory error and must lie in [0, 1].
struct NoiseParams {
    double p1 = 0;
    double p2 = 0;
    double p_meas = 0;
    double p_init = 0;
    double p_mem = 0;
    double bias_eta = 1.0;

    static NoiseParams noiseless() {
        return {};
    }
    /// Trapped-ion characterization: p1 = 3e-5, p2 = 1.4e-3, SPAM = 2e-3.
    static NoiseParams hardware(double p_mem = 0);
    /// p1 = p2 = p_meas = p_init = p, no memory error.
    static NoiseParams uniform(double p);

    /// Throws std::invalid_argument naming the first bad field.
    void validate() const;
    bool is_noiseless() const;

    bool operator==(const NoiseParams &) const = default;
};

enum class OpKind : uint8_t { Gate, Measure, Init, Idle };

std::string_view op_kind_name(OpKind kind);
OpKind op_kind_from_name(std::string_view name);

/// A noisy site of an execution. Indices count gates, measurements, inits and
/// (when tracked) idle steps in execution order.
struct FaultLocation {
    size_t location_index = 0;
    OpKind op_kind = OpKind::Gate;
    std::vector<size_t> support;

    bool operator==(const FaultLocation &) const = default;
};

/// A single deterministic fault injected right after location `target`.
/// Gate and idle locations take a non-identity Pauli on their support (qubit i
/// of `pauli` acts on support[i]); measure and init locations take a bit flip.
struct FaultSpec {
    size_t target = 0;
    std::optional<PauliString> pauli;
    bool bit_flip = false;

    static FaultSpec pauli_fault(size_t target, PauliString p);
    static FaultSpec flip_fault(size_t target);

    /// Throws std::invalid_argument when the spec cannot apply to `location`.
    void validate_against(const FaultLocation &location) const;
};

/// Every single fault considered at a location: 3 Paulis per qubit-1 gate or
/// idle step, 15 per two-qubit gate, one flip per measurement or init.
std::vector<FaultSpec> faults_at(const FaultLocation &location);

/// With probability p1 (support 1) or p2 (support 2), a uniformly random
/// non-identity Pauli on the support.
std::optional<PauliString> sample_gate_noise(const NoiseParams &params, size_t support_size, RandomSource &rng);

/// Memory error for one qubit for one layer: 'I', 'X', 'Y' or 'Z'.
char sample_idle_pauli(const NoiseParams &params, RandomSource &rng);

/// Memory errors for a layer on an n-qubit register: one single-qubit Pauli per
/// idle qubit that was hit.
std::vector<PauliString> sample_idle_noise(
    const NoiseParams &params, size_t num_qubits, std::span<const size_t> idle_qubits, RandomSource &rng);

/// bit XOR Bernoulli(p_meas) for measurements, Bernoulli(p_init) for inits.
bool flip_bit(const NoiseParams &params, OpKind kind, bool bit, RandomSource &rng);

}  // namespace qtele

#endif
