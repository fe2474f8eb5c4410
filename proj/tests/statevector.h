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

#ifndef QTELE_TESTS_STATEVECTOR_H
#define QTELE_TESTS_STATEVECTOR_H

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qtele/gate.h"
#include "qtele/pauli_string.h"

namespace qtele::testing {

/// Dense state vector used as an independent oracle for the tableau. Qubit q is bit q of the index.
class StateVector {
   public:
    using Amp = std::complex<double>;

    explicit StateVector(size_t n) : n_(n), amp_(size_t{1} << n) {
        if (n > 16) throw std::invalid_argument("statevector oracle is limited to 16 qubits");
        amp_[0] = 1;
    }

    size_t num_qubits() const {
        return n_;
    }

    std::vector<Amp> &amplitudes() {
        return amp_;
    }
    const std::vector<Amp> &amplitudes() const {
        return amp_;
    }

    /// Normalized state with pseudo-random complex amplitudes.
    static StateVector random(size_t n, uint64_t seed) {
        StateVector v(n);
        uint64_t x = seed * 0x9E3779B97F4A7C15ull + 1;
        double norm = 0;
        for (Amp &a : v.amp_) {
            auto next = [&x] {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                return static_cast<double>(x >> 11) / 9007199254740992.0 - 0.5;
            };
            a = Amp(next(), next());
            norm += std::norm(a);
        }
        for (Amp &a : v.amp_) a /= std::sqrt(norm);
        return v;
    }

    /// Largest amplitude difference against another vector.
    double distance(const StateVector &o) const {
        double d = 0;
        for (size_t k = 0; k < amp_.size(); k++) d = std::max(d, std::abs(amp_[k] - o.amp_[k]));
        return d;
    }

    void apply(Gate g, size_t a, size_t b = 0) {
        const double r = 1.0 / std::sqrt(2.0);
        const Amp i1(0, 1);
        size_t ma = size_t{1} << a, mb = size_t{1} << b;
        switch (g) {
            case Gate::H:
                for (size_t k = 0; k < amp_.size(); k++) {
                    if (k & ma) continue;
                    Amp u = amp_[k], v = amp_[k | ma];
                    amp_[k] = r * (u + v);
                    amp_[k | ma] = r * (u - v);
                }
                break;
            case Gate::S:
            case Gate::S_DAG:
                for (size_t k = 0; k < amp_.size(); k++) {
                    if (k & ma) amp_[k] *= g == Gate::S ? i1 : -i1;
                }
                break;
            case Gate::X:
            case Gate::Y:
            case Gate::Z: {
                char p = g == Gate::X ? 'X' : g == Gate::Y ? 'Y' : 'Z';
                apply_pauli(PauliString::single(n_, a, p));
                break;
            }
            case Gate::CX:
                for (size_t k = 0; k < amp_.size(); k++) {
                    if ((k & ma) && !(k & mb)) std::swap(amp_[k], amp_[k | mb]);
                }
                break;
            case Gate::CZ:
                for (size_t k = 0; k < amp_.size(); k++) {
                    if ((k & ma) && (k & mb)) amp_[k] = -amp_[k];
                }
                break;
        }
    }

    void apply_pauli(const PauliString &p) {
        std::vector<Amp> out(amp_.size());
        for (size_t k = 0; k < amp_.size(); k++) {
            out[k ^ p.x_mask()] = phase(p, k) * amp_[k];
        }
        amp_ = std::move(out);
    }

    /// <psi|P|psi>, real for Hermitian P.
    double expectation(const PauliString &p) const {
        Amp acc = 0;
        for (size_t k = 0; k < amp_.size(); k++) {
            acc += std::conj(amp_[k ^ p.x_mask()]) * phase(p, k) * amp_[k];
        }
        return acc.real();
    }

    double probability_one(size_t q) const {
        double s = 0;
        for (size_t k = 0; k < amp_.size(); k++) {
            if ((k >> q) & 1) s += std::norm(amp_[k]);
        }
        return s;
    }

    /// Projects qubit q onto `bit` and renormalizes.
    void project(size_t q, bool bit) {
        double norm = 0;
        for (size_t k = 0; k < amp_.size(); k++) {
            if (((k >> q) & 1) != bit) {
                amp_[k] = 0;
            } else {
                norm += std::norm(amp_[k]);
            }
        }
        if (norm < 1e-12) throw std::logic_error("projection onto a zero-probability outcome");
        for (Amp &a : amp_) a /= std::sqrt(norm);
    }

   private:
    static Amp phase(const PauliString &p, size_t k) {
        // P = (-1)^neg * i^{#Y} X^x Z^z, Z acting first.
        int y = std::popcount(p.x_mask() & p.z_mask());
        int zsign = std::popcount(k & p.z_mask()) & 1;
        static const Amp powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        Amp ph = powers[y % 4];
        if (zsign) ph = -ph;
        if (p.negative()) ph = -ph;
        return ph;
    }

    size_t n_;
    std::vector<Amp> amp_;
};

}  // namespace qtele::testing

#endif
