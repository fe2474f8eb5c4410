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

#include "qtele/executor.h"

#include <bit>
#include <stdexcept>

namespace qtele {

Executor::Executor(size_t num_qubits, NoiseParams noise, RandomSource rng, FaultInjector *injector)
    : state_(num_qubits),
      noise_(noise),
      rng_(std::move(rng)),
      injector_(injector),
      track_idle_(noise.p_mem > 0 || (injector != nullptr && injector->include_idle)) {
    noise_.validate();
}

void Executor::check_distinct(std::span<const size_t> qubits) {
    uint64_t seen = 0;
    for (size_t q : qubits) {
        if (q >= state_.num_qubits()) {
            throw std::out_of_range("qubit index out of range");
        }
        uint64_t m = uint64_t{1} << q;
        if (seen & m) {
            throw std::invalid_argument("a layer touches the same qubit twice");
        }
        seen |= m;
    }
    touched_ = seen;
}

const FaultSpec *Executor::issue(OpKind kind, size_t a, size_t b, size_t arity) {
    size_t index = next_location_++;
    if (injector_ == nullptr) {
        return nullptr;
    }
    if (injector_->record_trace) {
        FaultLocation loc{index, kind, {a}};
        if (arity == 2) {
            loc.support.push_back(b);
        }
        injector_->trace.push_back(std::move(loc));
    }
    if (!injector_->spec.has_value() || injector_->spec->target != index) {
        return nullptr;
    }
    FaultLocation loc{index, kind, {a}};
    if (arity == 2) {
        loc.support.push_back(b);
    }
    injector_->spec->validate_against(loc);
    injector_->reached = true;
    return &*injector_->spec;
}

void Executor::apply_local_pauli(const PauliString &p, size_t a, size_t b) {
    uint64_t xs = 0, zs = 0;
    if (p.x(0)) xs |= uint64_t{1} << a;
    if (p.z(0)) zs |= uint64_t{1} << a;
    if (p.num_qubits() == 2) {
        if (p.x(1)) xs |= uint64_t{1} << b;
        if (p.z(1)) zs |= uint64_t{1} << b;
    }
    state_.apply_pauli_masks(xs, zs);
}

void Executor::end_layer() {
    if (track_idle_) {
        uint64_t idle = live_ & ~touched_;
        while (idle) {
            size_t q = static_cast<size_t>(std::countr_zero(idle));
            idle &= idle - 1;
            char c = sample_idle_pauli(noise_, rng_);
            if (c != 'I') {
                state_.apply_pauli(PauliString::single(state_.num_qubits(), q, c));
            }
            if (const FaultSpec *f = issue(OpKind::Idle, q, 0, 1)) {
                apply_local_pauli(*f->pauli, q, 0);
            }
        }
    }
    touched_ = 0;
}

void Executor::gate1(Gate g, std::span<const size_t> qubits) {
    if (gate_arity(g) != 1) {
        throw std::invalid_argument("gate1 needs a single-qubit gate");
    }
    check_distinct(qubits);
    for (size_t q : qubits) {
        state_.apply_gate(g, q);
        if (noise_.p1 > 0) {
            if (auto e = sample_gate_noise(noise_, 1, rng_)) {
                apply_local_pauli(*e, q, 0);
            }
        }
        if (const FaultSpec *f = issue(OpKind::Gate, q, 0, 1)) {
            apply_local_pauli(*f->pauli, q, 0);
        }
    }
    end_layer();
}

void Executor::gate2(Gate g, std::span<const size_t> pairs) {
    if (gate_arity(g) != 2 || pairs.size() % 2 != 0) {
        throw std::invalid_argument("gate2 needs a two-qubit gate and an even qubit list");
    }
    check_distinct(pairs);
    for (size_t i = 0; i < pairs.size(); i += 2) {
        size_t a = pairs[i], b = pairs[i + 1];
        state_.apply_gate(g, a, b);
        if (noise_.p2 > 0) {
            if (auto e = sample_gate_noise(noise_, 2, rng_)) {
                apply_local_pauli(*e, a, b);
            }
        }
        if (const FaultSpec *f = issue(OpKind::Gate, a, b, 2)) {
            apply_local_pauli(*f->pauli, a, b);
        }
    }
    end_layer();
}

void Executor::reset(std::span<const size_t> qubits) {
    check_distinct(qubits);
    for (size_t q : qubits) {
        state_.reset(q, rng_);
        bool flip = flip_bit(noise_, OpKind::Init, false, rng_);
        if (const FaultSpec *f = issue(OpKind::Init, q, 0, 1)) {
            flip ^= f->bit_flip;
        }
        if (flip) {
            state_.apply_gate(Gate::X, q);
        }
        live_ |= uint64_t{1} << q;
    }
    end_layer();
}

void Executor::measure_into(std::span<const size_t> qubits, uint8_t *out) {
    check_distinct(qubits);
    for (size_t i = 0; i < qubits.size(); i++) {
        size_t q = qubits[i];
        bool bit = state_.measure_z(q, rng_).bit;
        bit = flip_bit(noise_, OpKind::Measure, bit, rng_);
        if (const FaultSpec *f = issue(OpKind::Measure, q, 0, 1)) {
            bit ^= f->bit_flip;
        }
        out[i] = bit ? 1 : 0;
        live_ &= ~(uint64_t{1} << q);
    }
    end_layer();
}

std::vector<uint8_t> Executor::measure(std::span<const size_t> qubits) {
    std::vector<uint8_t> out(qubits.size());
    measure_into(qubits, out.data());
    return out;
}

void Executor::apply_correction(const PauliString &p) {
    if (p.num_qubits() != state_.num_qubits()) {
        throw std::invalid_argument("correction size mismatch");
    }
    if (p.is_identity()) {
        return;
    }
    uint64_t support = p.x_mask() | p.z_mask();
    touched_ = support;
    while (support) {
        size_t q = static_cast<size_t>(std::countr_zero(support));
        support &= support - 1;
        char c = p.at(q);
        Gate g = c == 'X' ? Gate::X : c == 'Y' ? Gate::Y : Gate::Z;
        state_.apply_gate(g, q);
        if (noise_.p1 > 0) {
            if (auto e = sample_gate_noise(noise_, 1, rng_)) {
                apply_local_pauli(*e, q, 0);
            }
        }
        if (const FaultSpec *f = issue(OpKind::Gate, q, 0, 1)) {
            apply_local_pauli(*f->pauli, q, 0);
        }
    }
    end_layer();
}

}  // namespace qtele
