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

#include "qtele/pauli_string.h"

#include <stdexcept>

namespace qtele {

std::string_view gate_name(Gate g) {
    switch (g) {
        case Gate::H:
            return "H";
        case Gate::S:
            return "S";
        case Gate::S_DAG:
            return "S_DAG";
        case Gate::X:
            return "X";
        case Gate::Y:
            return "Y";
        case Gate::Z:
            return "Z";
        case Gate::CX:
            return "CX";
        case Gate::CZ:
            return "CZ";
    }
    return "?";
}

Gate gate_from_name(std::string_view name) {
    if (name == "H") return Gate::H;
    if (name == "S") return Gate::S;
    if (name == "S_DAG") return Gate::S_DAG;
    if (name == "X") return Gate::X;
    if (name == "Y") return Gate::Y;
    if (name == "Z") return Gate::Z;
    if (name == "CX" || name == "CNOT") return Gate::CX;
    if (name == "CZ") return Gate::CZ;
    throw std::invalid_argument("unknown gate name: " + std::string(name));
}

PauliString::PauliString(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("PauliString supports at most 64 qubits");
    }
}

PauliString PauliString::from_text(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        result.set(q, text[q]);
    }
    result.negative_ = negative;
    return result;
}

PauliString PauliString::from_masks(size_t num_qubits, uint64_t xs, uint64_t zs, bool negative) {
    PauliString result(num_qubits);
    uint64_t valid = num_qubits == 64 ? ~uint64_t{0} : ((uint64_t{1} << num_qubits) - 1);
    if ((xs | zs) & ~valid) {
        throw std::invalid_argument("Pauli mask has bits beyond num_qubits");
    }
    result.xs_ = xs;
    result.zs_ = zs;
    result.negative_ = negative;
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char p) {
    PauliString result(num_qubits);
    result.set(q, p);
    return result;
}

PauliString PauliString::on_support(size_t num_qubits, std::span<const size_t> qubits, char p) {
    PauliString result(num_qubits);
    for (size_t q : qubits) {
        result.set(q, p);
    }
    return result;
}

char PauliString::at(size_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    return kChars[x(q) | (z(q) << 1)];
}

void PauliString::set(size_t q, char p) {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    uint64_t m = uint64_t{1} << q;
    xs_ &= ~m;
    zs_ &= ~m;
    switch (p) {
        case 'I':
        case '_':
            break;
        case 'X':
            xs_ |= m;
            break;
        case 'Z':
            zs_ |= m;
            break;
        case 'Y':
            xs_ |= m;
            zs_ |= m;
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli character: ") + p);
    }
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    return (std::popcount((xs_ & other.zs_) ^ (zs_ & other.xs_)) & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    unsigned e = product_phase_exponent(xs_, zs_, rhs.xs_, rhs.zs_);
    e += 2u * (negative_ ? 1u : 0u) + 2u * (rhs.negative_ ? 1u : 0u);
    if (e & 1u) {
        throw std::logic_error("product of anticommuting Paulis is not Hermitian");
    }
    negative_ = (e & 3u) == 2u;
    xs_ ^= rhs.xs_;
    zs_ ^= rhs.zs_;
    return *this;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString result = *this;
    result *= rhs;
    return result;
}

void PauliString::conjugate(Gate g, size_t a, size_t b) {
    if (a >= num_qubits_ || (gate_arity(g) == 2 && (b >= num_qubits_ || a == b))) {
        throw std::out_of_range("bad gate target for Pauli conjugation");
    }
    uint64_t r = negative_ ? 1 : 0;
    kernel::apply(g, xs_, zs_, r, static_cast<unsigned>(a), static_cast<unsigned>(b));
    negative_ = r & 1;
}

PauliString PauliString::embedded(size_t num_qubits, std::span<const size_t> positions) const {
    if (positions.size() != num_qubits_) {
        throw std::invalid_argument("embedding needs one position per qubit");
    }
    PauliString result(num_qubits);
    for (size_t i = 0; i < num_qubits_; i++) {
        result.set(positions[i], at(i));
    }
    result.negative_ = negative_;
    return result;
}

PauliString PauliString::restricted(std::span<const size_t> positions) const {
    PauliString result(positions.size());
    for (size_t i = 0; i < positions.size(); i++) {
        result.set(i, at(positions[i]));
    }
    result.negative_ = negative_;
    return result;
}

PauliString PauliString::x_part() const {
    return from_masks(num_qubits_, xs_, 0);
}

PauliString PauliString::z_part() const {
    return from_masks(num_qubits_, 0, zs_);
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(num_qubits_ + 1);
    out.push_back(negative_ ? '-' : '+');
    for (size_t q = 0; q < num_qubits_; q++) {
        char c = at(q);
        out.push_back(c == 'I' ? '_' : c);
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

}  // namespace qtele
