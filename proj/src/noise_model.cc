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

#include "qtele/noise_model.h"

#include <stdexcept>
#include <string>

namespace qtele {

NoiseParams NoiseParams::hardware(double p_mem) {
    NoiseParams p;
    p.p1 = 3e-5;
    p.p2 = 1.4e-3;
    p.p_meas = 2e-3;
    p.p_init = 2e-3;
    p.p_mem = p_mem;
    return p;
}

NoiseParams NoiseParams::uniform(double p) {
    NoiseParams params;
    params.p1 = p;
    params.p2 = p;
    params.p_meas = p;
    params.p_init = p;
    return params;
}

void NoiseParams::validate() const {
    auto check = [](double v, const char *name) {
        if (!(v >= 0 && v <= 1)) {
            throw std::invalid_argument(std::string("noise field ") + name + " must lie in [0, 1]");
        }
    };
    check(p1, "p1");
    check(p2, "p2");
    check(p_meas, "p_meas");
    check(p_init, "p_init");
    check(p_mem, "p_mem");
    check(bias_eta, "bias_eta");
}

bool NoiseParams::is_noiseless() const {
    return p1 == 0 && p2 == 0 && p_meas == 0 && p_init == 0 && p_mem == 0;
}

std::string_view op_kind_name(OpKind kind) {
    switch (kind) {
        case OpKind::Gate:
            return "gate";
        case OpKind::Measure:
            return "measure";
        case OpKind::Init:
            return "init";
        case OpKind::Idle:
            return "idle";
    }
    return "?";
}

OpKind op_kind_from_name(std::string_view name) {
    if (name == "gate") return OpKind::Gate;
    if (name == "measure") return OpKind::Measure;
    if (name == "init") return OpKind::Init;
    if (name == "idle") return OpKind::Idle;
    throw std::invalid_argument("unknown op kind: " + std::string(name));
}

FaultSpec FaultSpec::pauli_fault(size_t target, PauliString p) {
    FaultSpec spec;
    spec.target = target;
    spec.pauli = std::move(p);
    return spec;
}

FaultSpec FaultSpec::flip_fault(size_t target) {
    FaultSpec spec;
    spec.target = target;
    spec.bit_flip = true;
    return spec;
}

void FaultSpec::validate_against(const FaultLocation &location) const {
    if (location.location_index != target) {
        throw std::invalid_argument("fault spec applied at the wrong location");
    }
    bool classical = location.op_kind == OpKind::Measure || location.op_kind == OpKind::Init;
    if (classical) {
        if (!bit_flip || pauli.has_value()) {
            throw std::invalid_argument("measure/init locations take a bit-flip fault");
        }
        return;
    }
    if (bit_flip || !pauli.has_value()) {
        throw std::invalid_argument("gate/idle locations take a Pauli fault");
    }
    if (pauli->num_qubits() != location.support.size()) {
        throw std::invalid_argument("fault Pauli does not match the location support");
    }
    if (pauli->is_identity()) {
        throw std::invalid_argument("identity fault Pauli");
    }
}

std::vector<FaultSpec> faults_at(const FaultLocation &location) {
    std::vector<FaultSpec> out;
    if (location.op_kind == OpKind::Measure || location.op_kind == OpKind::Init) {
        out.push_back(FaultSpec::flip_fault(location.location_index));
        return out;
    }
    size_t k = location.support.size();
    uint64_t combos = uint64_t{1} << (2 * k);
    for (uint64_t c = 1; c < combos; c++) {
        uint64_t xs = 0, zs = 0;
        for (size_t q = 0; q < k; q++) {
            xs |= ((c >> (2 * q)) & 1) << q;
            zs |= ((c >> (2 * q + 1)) & 1) << q;
        }
        out.push_back(FaultSpec::pauli_fault(location.location_index, PauliString::from_masks(k, xs, zs)));
    }
    return out;
}

std::optional<PauliString> sample_gate_noise(const NoiseParams &params, size_t support_size, RandomSource &rng) {
    if (support_size != 1 && support_size != 2) {
        throw std::invalid_argument("gate noise needs a support of one or two qubits");
    }
    double p = support_size == 1 ? params.p1 : params.p2;
    if (!rng.bernoulli(p)) {
        return std::nullopt;
    }
    uint64_t c = 1 + rng.below(support_size == 1 ? 3 : 15);
    uint64_t xs = (c & 1) | (((c >> 2) & 1) << 1);
    uint64_t zs = ((c >> 1) & 1) | (((c >> 3) & 1) << 1);
    return PauliString::from_masks(support_size, xs, zs);
}

char sample_idle_pauli(const NoiseParams &params, RandomSource &rng) {
    if (params.p_mem <= 0) {
        return 'I';
    }
    double u = rng.uniform();
    double pz = params.p_mem * params.bias_eta;
    double pxy = params.p_mem * (1 - params.bias_eta) / 2;
    if (u < pz) return 'Z';
    if (u < pz + pxy) return 'X';
    if (u < pz + 2 * pxy) return 'Y';
    return 'I';
}

std::vector<PauliString> sample_idle_noise(
    const NoiseParams &params, size_t num_qubits, std::span<const size_t> idle_qubits, RandomSource &rng) {
    std::vector<PauliString> out;
    for (size_t q : idle_qubits) {
        char c = sample_idle_pauli(params, rng);
        if (c != 'I') {
            out.push_back(PauliString::single(num_qubits, q, c));
        }
    }
    return out;
}

bool flip_bit(const NoiseParams &params, OpKind kind, bool bit, RandomSource &rng) {
    double p = kind == OpKind::Measure ? params.p_meas : kind == OpKind::Init ? params.p_init : 0.0;
    return bit != rng.bernoulli(p);
}

}  // namespace qtele
