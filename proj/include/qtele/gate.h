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

#ifndef QTELE_GATE_H
#define QTELE_GATE_H

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qtele {

/// The Clifford gate set used by every circuit in the library.
enum class Gate : uint8_t { H, S, S_DAG, X, Y, Z, CX, CZ };

constexpr size_t gate_arity(Gate g) {
    return (g == Gate::CX || g == Gate::CZ) ? 2 : 1;
}

std::string_view gate_name(Gate g);

/// Parses "H", "S", "S_DAG", "X", "Y", "Z", "CX" (or "CNOT"), "CZ".
/// Throws std::invalid_argument on anything else.
Gate gate_from_name(std::string_view name);

/// Heisenberg-picture update rules P -> U P U^dagger for a packed Pauli row.
///
/// A row is (x, z, r): bit q of x/z gives the X/Z component on qubit q (both
/// set means Y) and r is the sign bit. All rules are branch free so they can be
/// applied to every row of a tableau in a vectorizable loop.
namespace kernel {

inline void h(uint64_t &x, uint64_t &z, uint64_t &r, unsigned q) {
    uint64_t bx = (x >> q) & 1;
    uint64_t bz = (z >> q) & 1;
    r ^= bx & bz;
    uint64_t d = (bx ^ bz) << q;
    x ^= d;
    z ^= d;
}

inline void s(uint64_t &x, uint64_t &z, uint64_t &r, unsigned q) {
    uint64_t bx = (x >> q) & 1;
    uint64_t bz = (z >> q) & 1;
    r ^= bx & bz;
    z ^= bx << q;
}

inline void s_dag(uint64_t &x, uint64_t &z, uint64_t &r, unsigned q) {
    uint64_t bx = (x >> q) & 1;
    uint64_t bz = (z >> q) & 1;
    r ^= bx & (bz ^ 1);
    z ^= bx << q;
}

inline void pauli_x(uint64_t &, uint64_t &z, uint64_t &r, unsigned q) {
    r ^= (z >> q) & 1;
}

inline void pauli_y(uint64_t &x, uint64_t &z, uint64_t &r, unsigned q) {
    r ^= ((x ^ z) >> q) & 1;
}

inline void pauli_z(uint64_t &x, uint64_t &, uint64_t &r, unsigned q) {
    r ^= (x >> q) & 1;
}

inline void cx(uint64_t &x, uint64_t &z, uint64_t &r, unsigned c, unsigned t) {
    uint64_t xc = (x >> c) & 1;
    uint64_t zc = (z >> c) & 1;
    uint64_t xt = (x >> t) & 1;
    uint64_t zt = (z >> t) & 1;
    r ^= xc & zt & (xt ^ zc ^ 1);
    x ^= xc << t;
    z ^= zt << c;
}

inline void cz(uint64_t &x, uint64_t &z, uint64_t &r, unsigned a, unsigned b) {
    uint64_t xa = (x >> a) & 1;
    uint64_t za = (z >> a) & 1;
    uint64_t xb = (x >> b) & 1;
    uint64_t zb = (z >> b) & 1;
    r ^= xa & xb & (za ^ zb);
    z ^= (xb << a) | (xa << b);
}

inline void apply(Gate g, uint64_t &x, uint64_t &z, uint64_t &r, unsigned a, unsigned b) {
    switch (g) {
        case Gate::H:
            h(x, z, r, a);
            break;
        case Gate::S:
            s(x, z, r, a);
            break;
        case Gate::S_DAG:
            s_dag(x, z, r, a);
            break;
        case Gate::X:
            pauli_x(x, z, r, a);
            break;
        case Gate::Y:
            pauli_y(x, z, r, a);
            break;
        case Gate::Z:
            pauli_z(x, z, r, a);
            break;
        case Gate::CX:
            cx(x, z, r, a, b);
            break;
        case Gate::CZ:
            cz(x, z, r, a, b);
            break;
    }
}

}  // namespace kernel

}  // namespace qtele

#endif
