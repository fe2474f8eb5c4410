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

#ifndef QTELE_STABILIZER_STATE_H
#define QTELE_STABILIZER_STATE_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtele/gate.h"
#include "qtele/pauli_string.h"
#include "qtele/random_source.h"

namespace qtele {

enum class Expectation : int8_t { Minus = -1, Indeterminate = 0, Plus = 1 };

struct MeasureResult {
    bool bit;
    bool was_random;
};

/// Classical bits recorded by gadgets, keyed by (gadget label, instance counter).
class BitRegister {
   public:
    using Key = std::pair<std::string, size_t>;

    /// Stores bits under `label` with the next free instance number, which is returned.
    size_t append(const std::string &label, std::vector<uint8_t> bits);
    void set(const std::string &label, size_t instance, std::vector<uint8_t> bits);
    bool contains(const std::string &label, size_t instance) const;
    /// Throws std::out_of_range for a missing key.
    const std::vector<uint8_t> &get(const std::string &label, size_t instance) const;
    size_t instances(const std::string &label) const;
    size_t size() const {
        return bits_.size();
    }
    void clear();
    const std::map<Key, std::vector<uint8_t>> &entries() const {
        return bits_;
    }

   private:
    std::map<Key, std::vector<uint8_t>> bits_;
    std::map<std::string, size_t> next_instance_;
};

/// Shares work between runs of one circuit that differ only in later random
/// outcomes. A recording run stores every measurement outcome and a tableau
/// snapshot before each random one. A later run whose coins agree up to random
/// outcome `resume_at` replays the stored prefix without simulating it, then
/// restores the snapshot and continues normally.
struct BranchCache {
    static constexpr size_t kNoReplay = static_cast<size_t>(-1);
    struct Snapshot {
        std::vector<uint64_t> x, z, r;
    };
    std::vector<MeasureResult> outcomes;
    std::vector<Snapshot> snapshots;
    size_t resume_at = kNoReplay;
};

/// Aaronson-Gottesman tableau on up to 64 qubits.
///
/// Rows 0..n-1 are destabilizers and rows n..2n-1 are stabilizers. Each row is
/// one machine word of X bits, one of Z bits and a sign bit.
class StabilizerState {
   public:
    /// |0...0> on n qubits. n must be in [1, 64].
    explicit StabilizerState(size_t num_qubits);
    static StabilizerState zero_state(size_t num_qubits) {
        return StabilizerState(num_qubits);
    }

    size_t num_qubits() const {
        return n_;
    }

    /// Returns to |0...0> and clears the bit register.
    void reset_all();

    void apply_gate(Gate g, size_t a, size_t b = 0);
    /// `qubits` holds exactly gate_arity(g) distinct indices.
    void apply_gate(Gate g, std::span<const size_t> qubits);
    void apply_pauli(const PauliString &p);
    void apply_pauli_masks(uint64_t xs, uint64_t zs);

    MeasureResult measure_z(size_t q, RandomSource &rng);
    /// Projective measurement of a Hermitian Pauli; bit 1 means eigenvalue -1.
    MeasureResult measure_pauli(const PauliString &p, RandomSource &rng);
    /// Z measurement followed by X on outcome 1.
    MeasureResult reset(size_t q, RandomSource &rng);

    Expectation expectation(const PauliString &p) const;

    PauliString stabilizer(size_t i) const;
    PauliString destabilizer(size_t i) const;
    /// Reduced row echelon generators of the stabilizer group, for comparing states.
    std::vector<PauliString> canonical_stabilizers() const;
    /// Symplectic audit: stabilizers commute, destabilizers commute, and
    /// destabilizer i anticommutes exactly with stabilizer i.
    bool check_invariants() const;

    /// Attaches (or with nullptr detaches) a branch cache for the next run.
    /// The state must be freshly reset; gates are skipped while replaying, and
    /// reading the tableau during replay throws std::logic_error.
    void attach_cache(BranchCache *cache);

    BitRegister &bits() {
        return bits_;
    }
    const BitRegister &bits() const {
        return bits_;
    }

   private:
    template <typename F>
    void for_each_row(F &&f) {
        size_t rows = 2 * n_;
        uint64_t *__restrict xs = x_.data();
        uint64_t *__restrict zs = z_.data();
        uint64_t *__restrict rs = r_.data();
        for (size_t i = 0; i < rows; i++) {
            f(xs[i], zs[i], rs[i]);
        }
    }
    void check_qubit(size_t q) const;
    void check_size(const PauliString &p) const;
    /// row[dst] *= row[src]; sign tracked exactly when `track_sign`.
    void row_mul(size_t dst, size_t src, bool track_sign);
    /// Sign (+1 => false) of the stabilizer-group element equal to (xs, zs), or
    /// nullopt-like flag `found` false when (xs, zs) is not in the group.
    bool group_sign(uint64_t xs, uint64_t zs, bool &found) const;
    MeasureResult measure_now(const PauliString &p, RandomSource &rng);
    void require_live() const;

    size_t n_;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
    /// Sign bits, one word per row so row loops vectorize.
    std::vector<uint64_t> r_;
    BitRegister bits_;
    BranchCache *cache_ = nullptr;
    bool replaying_ = false;
    size_t measured_ = 0;
    size_t random_seen_ = 0;
};

}  // namespace qtele

#endif
