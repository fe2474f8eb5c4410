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

#ifndef QTELE_PAULI_STRING_H
#define QTELE_PAULI_STRING_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "qtele/gate.h"

namespace qtele {

/// Largest register a PauliString (and therefore a tableau row) can describe.
constexpr size_t kMaxQubits = 64;

/// Exponent k (mod 4) such that P1 * P2 = i^k (P1 xor P2), for unsigned packed
/// Paulis where (x, z) = (1, 1) denotes Y.
inline unsigned product_phase_exponent(uint64_t x1, uint64_t z1, uint64_t x2, uint64_t z2) {
    uint64_t y1 = x1 & z1, xo1 = x1 & ~z1, zo1 = ~x1 & z1;
    uint64_t y2 = x2 & z2, xo2 = x2 & ~z2, zo2 = ~x2 & z2;
    uint64_t plus = (y1 & zo2) | (xo1 & y2) | (zo1 & xo2);
    uint64_t minus = (y1 & xo2) | (xo1 & zo2) | (zo1 & y2);
    return static_cast<unsigned>(std::popcount(plus) - std::popcount(minus)) & 3u;
}

/// A Hermitian n-qubit Pauli operator with a +1/-1 sign.
class PauliString {
   public:
    explicit PauliString(size_t num_qubits = 0);

    /// Parses text like "+XZ_Y", "-XIZ" or "XXI". '_' and 'I' both mean identity.
    static PauliString from_text(std::string_view text);
    static PauliString from_masks(size_t num_qubits, uint64_t xs, uint64_t zs, bool negative = false);
    /// Single non-identity factor `p` (one of 'X', 'Y', 'Z') on qubit q.
    static PauliString single(size_t num_qubits, size_t q, char p);
    /// Product of `p` over the listed qubits, e.g. a stabilizer on a support.
    static PauliString on_support(size_t num_qubits, std::span<const size_t> qubits, char p);

    size_t num_qubits() const {
        return num_qubits_;
    }
    uint64_t x_mask() const {
        return xs_;
    }
    uint64_t z_mask() const {
        return zs_;
    }
    bool negative() const {
        return negative_;
    }
    int sign() const {
        return negative_ ? -1 : +1;
    }
    void set_negative(bool negative) {
        negative_ = negative;
    }

    bool x(size_t q) const {
        return (xs_ >> q) & 1;
    }
    bool z(size_t q) const {
        return (zs_ >> q) & 1;
    }
    /// 'I', 'X', 'Y' or 'Z'.
    char at(size_t q) const;
    void set(size_t q, char p);

    size_t weight() const {
        return static_cast<size_t>(std::popcount(xs_ | zs_));
    }
    bool is_identity() const {
        return (xs_ | zs_) == 0;
    }
    bool commutes(const PauliString &other) const;

    /// In-place product. The result must be Hermitian; an imaginary phase means
    /// the operands anticommute, which is a caller bug and throws std::logic_error.
    PauliString &operator*=(const PauliString &rhs);
    PauliString operator*(const PauliString &rhs) const;

    /// Conjugates by a Clifford gate: P -> U P U^dagger.
    void conjugate(Gate g, size_t a, size_t b = 0);

    /// Copies this operator into a larger register, sending local qubit i to positions[i].
    PauliString embedded(size_t num_qubits, std::span<const size_t> positions) const;
    /// Inverse of embedded(): local qubit i reads register qubit positions[i]. Sign kept.
    PauliString restricted(std::span<const size_t> positions) const;

    /// X-only (or Z-only) part, with sign dropped.
    PauliString x_part() const;
    PauliString z_part() const;

    std::string str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    size_t num_qubits_;
    uint64_t xs_ = 0;
    uint64_t zs_ = 0;
    bool negative_ = false;
};

std::ostream &operator<<(std::ostream &out, const PauliString &p);

}  // namespace qtele

#endif
