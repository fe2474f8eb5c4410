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

#include "qtele/steane_code.h"

#include <bit>
#include <stdexcept>

#include "qtele/decoder.h"

namespace qtele {

namespace {

constexpr uint8_t kLogicalMask = 0b1110000;

uint8_t support_mask(size_t s) {
    uint8_t m = 0;
    for (size_t q : kCheckSupports[s]) {
        m |= static_cast<uint8_t>(1u << q);
    }
    return m;
}

Schedule build_encoding_schedule() {
    Schedule s(8);
    s.reset({0, 1, 2, 3, 4, 5, 6, 7});
    s.gate1(Gate::H, {2, 3, 4});
    s.gate2(Gate::CX, {2, 1, 3, 0});
    s.gate2(Gate::CX, {2, 5, 4, 0});
    s.gate2(Gate::CX, {2, 6, 3, 5});
    s.gate2(Gate::CX, {3, 6, 4, 5});
    s.gate2(Gate::CX, {4, 1});
    s.gate2(Gate::CX, {4, 7});
    s.gate2(Gate::CX, {5, 7});
    s.gate2(Gate::CX, {6, 7});
    s.measure({7});
    return s;
}

Schedule build_round(bool flagged) {
    Schedule s(9);
    for (size_t c = 0; c < 6; c++) {
        s.append(check_schedule(c, flagged));
    }
    return s;
}

}  // namespace

std::array<size_t, kBlockQubits> Block::qubits() const {
    std::array<size_t, kBlockQubits> out;
    for (size_t i = 0; i < kBlockQubits; i++) {
        out[i] = base() + i;
    }
    return out;
}

std::array<size_t, kDataQubits> Block::data_qubits() const {
    std::array<size_t, kDataQubits> out;
    for (size_t i = 0; i < kDataQubits; i++) {
        out[i] = base() + i;
    }
    return out;
}

char basis_char(Basis b) {
    switch (b) {
        case Basis::Z:
            return 'Z';
        case Basis::X:
            return 'X';
        case Basis::Y:
            return 'Y';
    }
    return '?';
}

Basis basis_from_char(char c) {
    switch (c) {
        case 'Z':
            return Basis::Z;
        case 'X':
            return Basis::X;
        case 'Y':
            return Basis::Y;
        default:
            throw std::invalid_argument(std::string("unknown basis: ") + c);
    }
}

const CodeDefinition &code_definition() {
    static const CodeDefinition code = [] {
        CodeDefinition c;
        for (size_t s = 0; s < 3; s++) {
            c.x_stabilizers[s] = PauliString::on_support(kDataQubits, kCheckSupports[s], 'X');
            c.z_stabilizers[s] = PauliString::on_support(kDataQubits, kCheckSupports[s], 'Z');
        }
        c.logical_x = PauliString::on_support(kDataQubits, kLogicalSupport, 'X');
        c.logical_z = PauliString::on_support(kDataQubits, kLogicalSupport, 'Z');
        return c;
    }();
    return code;
}

uint8_t pattern_syndrome(uint8_t mask7) {
    uint8_t s = 0;
    for (size_t i = 0; i < 3; i++) {
        s |= static_cast<uint8_t>((std::popcount(static_cast<unsigned>(mask7 & support_mask(i))) & 1) << i);
    }
    return s;
}

bool logical_parity(uint8_t mask7) {
    return std::popcount(static_cast<unsigned>(mask7 & kLogicalMask)) & 1;
}

std::array<uint8_t, 6> error_syndrome(const PauliString &e7) {
    if (e7.num_qubits() != kDataQubits) {
        throw std::invalid_argument("block error must act on 7 qubits");
    }
    uint8_t sx = pattern_syndrome(static_cast<uint8_t>(e7.x_mask()));
    uint8_t sz = pattern_syndrome(static_cast<uint8_t>(e7.z_mask()));
    std::array<uint8_t, 6> out{};
    for (size_t i = 0; i < 3; i++) {
        out[i] = (sx >> i) & 1;
        out[3 + i] = (sz >> i) & 1;
    }
    return out;
}

uint8_t pack_syndrome(std::span<const uint8_t> bits6) {
    if (bits6.size() != 6) {
        throw std::invalid_argument("six syndrome bits expected");
    }
    uint8_t v = 0;
    for (size_t i = 0; i < 6; i++) {
        v |= static_cast<uint8_t>((bits6[i] & 1) << i);
    }
    return v;
}

LogicalAction logical_action(const PauliString &e7) {
    if (e7.num_qubits() != kDataQubits) {
        throw std::invalid_argument("block error must act on 7 qubits");
    }
    return {logical_parity(static_cast<uint8_t>(e7.x_mask())), logical_parity(static_cast<uint8_t>(e7.z_mask()))};
}

bool is_stabilizer(const PauliString &e7) {
    auto s = error_syndrome(e7);
    for (uint8_t b : s) {
        if (b) return false;
    }
    return logical_action(e7) == LogicalAction{};
}

size_t min_weight_mod_stabilizers(const PauliString &e7) {
    if (e7.num_qubits() != kDataQubits) {
        throw std::invalid_argument("block error must act on 7 qubits");
    }
    uint8_t ex = static_cast<uint8_t>(e7.x_mask());
    uint8_t ez = static_cast<uint8_t>(e7.z_mask());
    size_t best = kDataQubits;
    for (unsigned a = 0; a < 8; a++) {
        uint8_t sx = 0;
        for (size_t i = 0; i < 3; i++) {
            if ((a >> i) & 1) sx ^= support_mask(i);
        }
        for (unsigned b = 0; b < 8; b++) {
            uint8_t sz = 0;
            for (size_t i = 0; i < 3; i++) {
                if ((b >> i) & 1) sz ^= support_mask(i);
            }
            size_t w = static_cast<size_t>(std::popcount(static_cast<unsigned>((ex ^ sx) | (ez ^ sz))));
            if (w < best) best = w;
        }
    }
    return best;
}

bool GadgetRecord::trivial() const {
    for (const auto *v : {&syndrome_bits, &flag_bits, &verification_bits}) {
        for (uint8_t b : *v) {
            if (b) return false;
        }
    }
    return true;
}

const Schedule &encoding_schedule() {
    static const Schedule s = build_encoding_schedule();
    return s;
}

Schedule check_schedule(size_t check, bool flagged) {
    if (check >= 6) {
        throw std::out_of_range("check index must be in 0..5");
    }
    const auto &sup = kCheckSupports[check % 3];
    bool z_type = check < 3;
    Schedule s(9);
    auto couple = [&](size_t d) {
        if (z_type) {
            s.gate2(Gate::CZ, {7, static_cast<uint8_t>(d)});
        } else {
            s.gate2(Gate::CX, {7, static_cast<uint8_t>(d)});
        }
    };
    if (flagged) {
        s.reset({7, 8});
    } else {
        s.reset({7});
    }
    s.gate1(Gate::H, {7});
    couple(sup[0]);
    if (flagged) s.gate2(Gate::CX, {7, 8});
    couple(sup[1]);
    couple(sup[2]);
    if (flagged) s.gate2(Gate::CX, {7, 8});
    couple(sup[3]);
    s.gate1(Gate::H, {7});
    if (flagged) {
        s.measure({7, 8});
    } else {
        s.measure({7});
    }
    return s;
}

const Schedule &syndrome_round_schedule(bool flagged) {
    static const Schedule with_flags = build_round(true);
    static const Schedule without_flags = build_round(false);
    return flagged ? with_flags : without_flags;
}

GadgetRecord prepare_zero(Executor &exec, Block block, size_t max_attempts) {
    if (max_attempts == 0) {
        throw std::invalid_argument("max_attempts must be at least 1");
    }
    GadgetRecord rec;
    rec.label = "prep";
    std::array<size_t, 8> map;
    for (size_t i = 0; i < 8; i++) {
        map[i] = block.base() + i;
    }
    for (size_t attempt = 1; attempt <= max_attempts; attempt++) {
        uint8_t v = 0;
        std::span<const size_t> maps[1] = {map};
        run_schedule(exec, encoding_schedule(), maps, &v);
        rec.verification_bits.push_back(v);
        rec.attempts = attempt;
        if (!v) break;
    }
    return rec;
}

const Schedule &logical_y_check_schedule() {
    static const Schedule s = [] {
        Schedule b(9);
        for (const auto &line : kInputYCheckLines) {
            b.reset({7, 8});
            b.gate1(Gate::H, {7});
            for (size_t k = 0; k < line.size(); k++) {
                auto d = static_cast<uint8_t>(line[k]);
                if (k == line.size() - 1) b.gate2(Gate::CX, {7, 8});
                b.gate1(Gate::S_DAG, {d});
                b.gate2(Gate::CX, {7, d});
                b.gate1(Gate::S, {d});
                if (k == 0) b.gate2(Gate::CX, {7, 8});
            }
            b.gate1(Gate::H, {7});
            b.measure({7, 8});
        }
        return b;
    }();
    return s;
}

GadgetRecord prepare_rotated(Executor &exec,
                             Block block,
                             std::span<const Gate> rotation,
                             size_t max_attempts,
                             std::optional<uint8_t> expected_y) {
    if (max_attempts == 0) {
        throw std::invalid_argument("max_attempts must be at least 1");
    }
    GadgetRecord rec;
    rec.label = "prep";
    std::array<size_t, 9> map;
    for (size_t i = 0; i < 9; i++) {
        map[i] = block.base() + i;
    }
    std::span<const size_t> enc_map[1] = {std::span<const size_t>(map.data(), 8)};
    std::span<const size_t> check_map[1] = {map};
    for (size_t attempt = 1; attempt <= max_attempts; attempt++) {
        rec.attempts = attempt;
        uint8_t v = 0;
        run_schedule(exec, encoding_schedule(), enc_map, &v);
        rec.verification_bits.push_back(v);
        if (!v) {
            transversal_sequence(exec, block, rotation);
            if (!expected_y) break;
            std::array<uint8_t, 2 * kInputYCheckLines.size()> bits{};
            run_schedule(exec, logical_y_check_schedule(), check_map, bits.data());
            bool clean = true;
            for (size_t k = 0; k < kInputYCheckLines.size(); k++) {
                uint8_t mismatch = bits[2 * k] ^ *expected_y;
                rec.verification_bits.push_back(mismatch);
                rec.verification_bits.push_back(bits[2 * k + 1]);
                clean = clean && !mismatch && !bits[2 * k + 1];
            }
            if (clean) break;
        } else if (attempt == max_attempts) {
            transversal_sequence(exec, block, rotation);
        }
    }
    return rec;
}

void transversal_gate(Executor &exec, Gate g, Block block) {
    if (gate_arity(g) != 1) {
        throw std::invalid_argument("transversal_gate takes a single-qubit gate");
    }
    auto q = block.data_qubits();
    exec.gate1(g, q);
}

void transversal_cx(Executor &exec, Block control, Block target) {
    if (control.index == target.index) {
        throw std::invalid_argument("transversal CX needs two distinct blocks");
    }
    std::array<size_t, 2 * kDataQubits> pairs;
    for (size_t i = 0; i < kDataQubits; i++) {
        pairs[2 * i] = control.data(i);
        pairs[2 * i + 1] = target.data(i);
    }
    exec.gate2(Gate::CX, pairs);
}

void transversal_sequence(Executor &exec, Block block, std::span<const Gate> gates) {
    for (Gate g : gates) {
        transversal_gate(exec, g, block);
    }
}

std::vector<GadgetRecord> syn_round_flagged(Executor &exec, std::span<const Block> blocks) {
    if (blocks.empty() || blocks.size() > 3) {
        throw std::invalid_argument("syn_round_flagged runs on one to three blocks");
    }
    std::array<std::array<size_t, kBlockQubits>, 3> maps_storage;
    std::array<std::span<const size_t>, 3> maps;
    for (size_t b = 0; b < blocks.size(); b++) {
        for (size_t j = 0; j < b; j++) {
            if (blocks[j].index == blocks[b].index) {
                throw std::invalid_argument("syn_round_flagged given the same block twice");
            }
        }
        maps_storage[b] = blocks[b].qubits();
        maps[b] = maps_storage[b];
    }
    const Schedule &sched = syndrome_round_schedule(true);
    std::vector<uint8_t> bits(blocks.size() * sched.num_measurements());
    run_schedule(exec, sched, std::span(maps.data(), blocks.size()), bits.data());
    std::vector<GadgetRecord> out(blocks.size());
    for (size_t b = 0; b < blocks.size(); b++) {
        out[b].label = "syn";
        out[b].attempts = 1;
        for (size_t c = 0; c < 6; c++) {
            out[b].syndrome_bits.push_back(bits[b * 12 + 2 * c]);
            out[b].flag_bits.push_back(bits[b * 12 + 2 * c + 1]);
        }
    }
    return out;
}

GadgetRecord syn_round_flagged(Executor &exec, Block block) {
    return syn_round_flagged(exec, std::span<const Block>(&block, 1))[0];
}

PauliString embed_block_pauli(const PauliString &e7, Block block, size_t num_qubits) {
    auto pos = block.data_qubits();
    return e7.embedded(num_qubits, pos);
}

QecResult qec_gadget_adaptive(Executor &exec, Block block, const QecOptions &options) {
    QecResult res;
    res.record.label = "qec";
    auto map = block.qubits();
    std::vector<uint8_t> r1 = run_schedule(exec, syndrome_round_schedule(true), map);
    bool any = false;
    for (size_t c = 0; c < 6; c++) {
        res.round1_syndrome[c] = r1[2 * c];
        res.round1_flags[c] = r1[2 * c + 1];
        any = any || r1[2 * c] || r1[2 * c + 1];
    }
    res.record.syndrome_bits.assign(res.round1_syndrome.begin(), res.round1_syndrome.end());
    res.record.flag_bits.assign(res.round1_flags.begin(), res.round1_flags.end());
    res.record.attempts = 1;
    if (!any && !options.force_second_round) {
        return res;
    }
    std::vector<uint8_t> r2 = run_schedule(exec, syndrome_round_schedule(false), map);
    res.ran_second_round = true;
    res.record.attempts = 2;
    for (size_t c = 0; c < 6; c++) {
        res.round2_syndrome[c] = r2[c];
        res.record.syndrome_bits.push_back(r2[c]);
    }
    std::optional<size_t> flagged;
    for (size_t c = 0; c < 6 && !flagged; c++) {
        if (res.round1_flags[c]) flagged = c;
    }
    if (options.flag_aware && flagged) {
        res.correction = FlagDecoder::instance().correction(*flagged, res.round2_syndrome);
    } else {
        res.correction = lookup_correction(default_lookup(), res.round2_syndrome);
    }
    if (!options.defer_correction) {
        exec.apply_correction(embed_block_pauli(res.correction, block, exec.num_qubits()));
    }
    return res;
}

ReadoutResult decode_readout(std::span<const uint8_t> raw7) {
    if (raw7.size() != kDataQubits) {
        throw std::invalid_argument("seven readout bits expected");
    }
    ReadoutResult r;
    uint8_t mask = 0;
    for (size_t i = 0; i < kDataQubits; i++) {
        r.raw_bits[i] = raw7[i] & 1;
        mask |= static_cast<uint8_t>(r.raw_bits[i] << i);
    }
    uint8_t s = pattern_syndrome(mask);
    for (size_t i = 0; i < 3; i++) {
        r.syndrome[i] = (s >> i) & 1;
    }
    r.decoded_qubit = decode(default_lookup(), s);
    bool bit = logical_parity(mask);
    if (r.decoded_qubit && ((kLogicalMask >> *r.decoded_qubit) & 1)) {
        bit = !bit;
    }
    r.logical_bit = bit ? 1 : 0;
    return r;
}

ReadoutResult destructive_measure(Executor &exec, Block block, Basis basis) {
    if (basis == Basis::X) {
        transversal_gate(exec, Gate::H, block);
    } else if (basis == Basis::Y) {
        // Transversal S acts as logical S-dagger, taking Y-bar to X-bar.
        transversal_gate(exec, Gate::S, block);
        transversal_gate(exec, Gate::H, block);
    }
    std::array<uint8_t, kDataQubits> raw{};
    auto q = block.data_qubits();
    exec.measure_into(q, raw.data());
    return decode_readout(raw);
}

}  // namespace qtele
