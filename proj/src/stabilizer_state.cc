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

#include "qtele/stabilizer_state.h"

#include <bit>
#include <stdexcept>

namespace qtele {

size_t BitRegister::append(const std::string &label, std::vector<uint8_t> bits) {
    size_t instance = next_instance_[label]++;
    bits_[{label, instance}] = std::move(bits);
    return instance;
}

void BitRegister::set(const std::string &label, size_t instance, std::vector<uint8_t> bits) {
    bits_[{label, instance}] = std::move(bits);
    size_t &next = next_instance_[label];
    if (next <= instance) {
        next = instance + 1;
    }
}

bool BitRegister::contains(const std::string &label, size_t instance) const {
    return bits_.count({label, instance}) != 0;
}

const std::vector<uint8_t> &BitRegister::get(const std::string &label, size_t instance) const {
    auto it = bits_.find({label, instance});
    if (it == bits_.end()) {
        throw std::out_of_range("no bits recorded for " + label + "#" + std::to_string(instance));
    }
    return it->second;
}

size_t BitRegister::instances(const std::string &label) const {
    auto it = next_instance_.find(label);
    return it == next_instance_.end() ? 0 : it->second;
}

void BitRegister::clear() {
    bits_.clear();
    next_instance_.clear();
}

StabilizerState::StabilizerState(size_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("StabilizerState needs between 1 and 64 qubits");
    }
    x_.resize(2 * n_);
    z_.resize(2 * n_);
    r_.resize(2 * n_);
    reset_all();
}

void StabilizerState::reset_all() {
    for (size_t i = 0; i < n_; i++) {
        x_[i] = uint64_t{1} << i;
        z_[i] = 0;
        r_[i] = 0;
        x_[n_ + i] = 0;
        z_[n_ + i] = uint64_t{1} << i;
        r_[n_ + i] = 0;
    }
    bits_.clear();
}

void StabilizerState::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
    }
}

void StabilizerState::check_size(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match state size");
    }
}

void StabilizerState::apply_gate(Gate g, size_t a, size_t b) {
    check_qubit(a);
    if (replaying_) {
        return;
    }
    unsigned ua = static_cast<unsigned>(a);
    unsigned ub = static_cast<unsigned>(b);
    switch (g) {
        case Gate::H:
            for_each_row([ua](uint64_t &x, uint64_t &z, uint64_t &r) { kernel::h(x, z, r, ua); });
            return;
        case Gate::S:
            for_each_row([ua](uint64_t &x, uint64_t &z, uint64_t &r) { kernel::s(x, z, r, ua); });
            return;
        case Gate::S_DAG:
            for_each_row([ua](uint64_t &x, uint64_t &z, uint64_t &r) { kernel::s_dag(x, z, r, ua); });
            return;
        case Gate::X:
            for_each_row([ua](uint64_t &x, uint64_t &z, uint64_t &r) { kernel::pauli_x(x, z, r, ua); });
            return;
        case Gate::Y:
            for_each_row([ua](uint64_t &x, uint64_t &z, uint64_t &r) { kernel::pauli_y(x, z, r, ua); });
            return;
        case Gate::Z:
            for_each_row([ua](uint64_t &x, uint64_t &z, uint64_t &r) { kernel::pauli_z(x, z, r, ua); });
            return;
        case Gate::CX:
        case Gate::CZ:
            break;
    }
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("two-qubit gate on a repeated qubit");
    }
    if (g == Gate::CX) {
        for_each_row([ua, ub](uint64_t &x, uint64_t &z, uint64_t &r) { kernel::cx(x, z, r, ua, ub); });
    } else {
        for_each_row([ua, ub](uint64_t &x, uint64_t &z, uint64_t &r) { kernel::cz(x, z, r, ua, ub); });
    }
}

void StabilizerState::apply_gate(Gate g, std::span<const size_t> qubits) {
    if (qubits.size() != gate_arity(g)) {
        throw std::invalid_argument("gate " + std::string(gate_name(g)) + " given the wrong number of qubits");
    }
    apply_gate(g, qubits[0], qubits.size() == 2 ? qubits[1] : 0);
}

void StabilizerState::apply_pauli(const PauliString &p) {
    check_size(p);
    apply_pauli_masks(p.x_mask(), p.z_mask());
}

void StabilizerState::apply_pauli_masks(uint64_t xs, uint64_t zs) {
    if (replaying_) {
        return;
    }
    size_t rows = 2 * n_;
    for (size_t i = 0; i < rows; i++) {
        r_[i] ^= static_cast<uint8_t>(std::popcount((x_[i] & zs) ^ (z_[i] & xs)) & 1);
    }
}

void StabilizerState::row_mul(size_t dst, size_t src, bool track_sign) {
    if (track_sign) {
        unsigned e = product_phase_exponent(x_[dst], z_[dst], x_[src], z_[src]) + 2u * r_[dst] + 2u * r_[src];
        if (e & 1u) {
            throw std::logic_error("tableau row product acquired an imaginary phase");
        }
        r_[dst] = static_cast<uint8_t>((e >> 1) & 1u);
    }
    x_[dst] ^= x_[src];
    z_[dst] ^= z_[src];
}

bool StabilizerState::group_sign(uint64_t xs, uint64_t zs, bool &found) const {
    uint64_t ax = 0, az = 0;
    unsigned e = 0;
    for (size_t i = 0; i < n_; i++) {
        if (std::popcount((x_[i] & zs) ^ (z_[i] & xs)) & 1) {
            size_t s = n_ + i;
            e += product_phase_exponent(ax, az, x_[s], z_[s]) + 2u * r_[s];
            ax ^= x_[s];
            az ^= z_[s];
        }
    }
    if (e & 1u) {
        throw std::logic_error("stabilizer product acquired an imaginary phase");
    }
    found = ax == xs && az == zs;
    return (e & 3u) == 2u;
}

void StabilizerState::attach_cache(BranchCache *cache) {
    cache_ = cache;
    measured_ = 0;
    random_seen_ = 0;
    replaying_ = cache != nullptr && cache->resume_at < cache->snapshots.size();
}

void StabilizerState::require_live() const {
    if (replaying_) {
        throw std::logic_error("tableau read while replaying a cached branch prefix");
    }
}

MeasureResult StabilizerState::measure_pauli(const PauliString &p, RandomSource &rng) {
    check_size(p);
    if (replaying_) {
        const MeasureResult &rec = cache_->outcomes.at(measured_);
        if (!rec.was_random || random_seen_ != cache_->resume_at) {
            if (rec.was_random) {
                if (rng.coin() != rec.bit) {
                    throw std::logic_error("branch replay diverged before its resume point");
                }
                random_seen_++;
            }
            measured_++;
            return rec;
        }
        const BranchCache::Snapshot &snap = cache_->snapshots[random_seen_];
        x_ = snap.x;
        z_ = snap.z;
        r_ = snap.r;
        replaying_ = false;
    }
    MeasureResult m = measure_now(p, rng);
    if (cache_ != nullptr) {
        cache_->outcomes.resize(measured_);
        cache_->outcomes.push_back(m);
        measured_++;
    }
    return m;
}

MeasureResult StabilizerState::measure_now(const PauliString &p, RandomSource &rng) {
    if (p.is_identity()) {
        return {p.negative(), false};
    }
    uint64_t px = p.x_mask();
    uint64_t pz = p.z_mask();
    auto anticommutes = [&](size_t i) { return (std::popcount((x_[i] & pz) ^ (z_[i] & px)) & 1) != 0; };
    size_t rows = 2 * n_;
    size_t pivot = rows;
    for (size_t i = n_; i < rows; i++) {
        if (anticommutes(i)) {
            pivot = i;
            break;
        }
    }
    if (pivot == rows) {
        bool found = false;
        bool neg = group_sign(px, pz, found);
        if (!found) {
            throw std::logic_error("commuting Pauli missing from a full-rank stabilizer group");
        }
        return {neg != p.negative(), false};
    }
    if (cache_ != nullptr) {
        cache_->snapshots.resize(random_seen_);
        cache_->snapshots.push_back({x_, z_, r_});
        random_seen_++;
    }
    for (size_t i = 0; i < rows; i++) {
        if (i != pivot && anticommutes(i)) {
            row_mul(i, pivot, i >= n_);
        }
    }
    size_t d = pivot - n_;
    x_[d] = x_[pivot];
    z_[d] = z_[pivot];
    r_[d] = r_[pivot];
    bool bit = rng.coin();
    x_[pivot] = px;
    z_[pivot] = pz;
    r_[pivot] = static_cast<uint8_t>(bit != p.negative());
    return {bit, true};
}

MeasureResult StabilizerState::measure_z(size_t q, RandomSource &rng) {
    check_qubit(q);
    return measure_pauli(PauliString::from_masks(n_, 0, uint64_t{1} << q), rng);
}

MeasureResult StabilizerState::reset(size_t q, RandomSource &rng) {
    MeasureResult m = measure_z(q, rng);
    if (m.bit) {
        apply_gate(Gate::X, q);
    }
    return m;
}

Expectation StabilizerState::expectation(const PauliString &p) const {
    require_live();
    check_size(p);
    uint64_t px = p.x_mask();
    uint64_t pz = p.z_mask();
    for (size_t i = n_; i < 2 * n_; i++) {
        if (std::popcount((x_[i] & pz) ^ (z_[i] & px)) & 1) {
            return Expectation::Indeterminate;
        }
    }
    bool found = false;
    bool neg = group_sign(px, pz, found);
    if (!found) {
        return Expectation::Indeterminate;
    }
    return (neg != p.negative()) ? Expectation::Minus : Expectation::Plus;
}

PauliString StabilizerState::stabilizer(size_t i) const {
    require_live();
    if (i >= n_) {
        throw std::out_of_range("stabilizer index");
    }
    return PauliString::from_masks(n_, x_[n_ + i], z_[n_ + i], r_[n_ + i] != 0);
}

PauliString StabilizerState::destabilizer(size_t i) const {
    require_live();
    if (i >= n_) {
        throw std::out_of_range("destabilizer index");
    }
    return PauliString::from_masks(n_, x_[i], z_[i], r_[i] != 0);
}

std::vector<PauliString> StabilizerState::canonical_stabilizers() const {
    std::vector<PauliString> rows;
    rows.reserve(n_);
    for (size_t i = 0; i < n_; i++) {
        rows.push_back(stabilizer(i));
    }
    size_t next = 0;
    for (size_t col = 0; col < 2 * n_ && next < rows.size(); col++) {
        bool x_col = col < n_;
        size_t q = x_col ? col : col - n_;
        auto has = [&](const PauliString &p) { return x_col ? p.x(q) : p.z(q); };
        size_t pivot = next;
        while (pivot < rows.size() && !has(rows[pivot])) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[pivot]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != next && has(rows[i])) {
                rows[i] *= rows[next];
            }
        }
        next++;
    }
    return rows;
}

bool StabilizerState::check_invariants() const {
    size_t rows = 2 * n_;
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = i + 1; j < rows; j++) {
            bool anti = (std::popcount((x_[i] & z_[j]) ^ (z_[i] & x_[j])) & 1) != 0;
            bool expect_anti = i < n_ && j == i + n_;
            if (anti != expect_anti) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qtele
