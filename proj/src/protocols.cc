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

#include "qtele/protocols.h"

#include <cmath>
#include <stdexcept>

namespace qtele {

namespace {

constexpr Block kB1{0};
constexpr Block kB2{1};
constexpr Block kB3{2};

/// Byproduct bookkeeping shared by every variant.
class Byproducts {
   public:
    Byproducts(Executor &exec, ShotOutcome &shot, const ProtocolOptions &options, bool logical)
        : exec_(exec), shot_(shot), options_(options), logical_(logical) {
    }

    void apply(size_t block, char kind, bool condition) {
        if (options_.drop_byproducts || !condition) {
            return;
        }
        if (!options_.physical_byproducts) {
            frame_update(shot_.frame, block, kind, condition);
            return;
        }
        PauliString p(exec_.num_qubits());
        if (logical_) {
            for (size_t q : kLogicalSupport) {
                p.set(Block{block}.data(q), kind);
            }
        } else {
            p.set(block, kind);
        }
        exec_.state().apply_pauli(p);
    }

   private:
    Executor &exec_;
    ShotOutcome &shot_;
    const ProtocolOptions &options_;
    bool logical_;
};

ShotOutcome start(Variant v, const InputState &input, Executor &exec) {
    ShotOutcome shot;
    shot.variant = v;
    shot.input = input.label;
    shot.seed = exec.rng().seed();
    shot.stream_id = exec.rng().stream_id();
    return shot;
}

void finish(ShotOutcome &shot, const InputState &input, size_t out_block, bool raw_bit) {
    shot.final_bit = frame_adjust_readout(shot.frame, out_block, input.readout_basis, raw_bit) ? 1 : 0;
    shot.correct = shot.final_bit == input.expected_bit;
    shot.qed_clean = compute_qed_clean(shot);
}

void discard(ShotOutcome &shot, DiscardReason reason) {
    shot.accepted = false;
    shot.discard_reason = reason;
    shot.correct = false;
    shot.qed_clean = false;
}

GadgetRecord labelled(GadgetRecord rec, const std::string &label) {
    rec.label = label;
    return rec;
}

ReadoutResult readout(ShotOutcome &shot, Executor &exec, Block block, Basis basis, const std::string &label) {
    ReadoutResult r = destructive_measure(exec, block, basis);
    ReadoutRecord rec;
    rec.label = label;
    rec.block = block.index;
    rec.basis = basis;
    rec.raw_bits = r.raw_bits;
    rec.syndrome = r.syndrome;
    rec.logical_bit = r.logical_bit;
    shot.readouts.push_back(rec);
    return r;
}

bool any_set(const std::vector<uint8_t> &bits) {
    for (uint8_t b : bits) {
        if (b) return true;
    }
    return false;
}

/// Joint measurement, optionally confirmed by an immediate second copy.
struct JointPair {
    JointMeasurementOutcome first;
    bool flagged = false;
    bool agree = true;
};

JointPair joint_with_confirmation(
    ShotOutcome &shot, Executor &exec, JointType type, Block a, Block b, const ProtocolOptions &options) {
    JointPair out;
    out.first = measure_joint(exec, type, a, b);
    out.first.label += "#1";
    shot.joint_outcomes.push_back(out.first);
    out.flagged = out.first.flag_bit != 0;
    if (options.confirm_joint_parity) {
        JointMeasurementOutcome second = measure_joint(exec, type, a, b);
        second.label += "#2";
        shot.joint_outcomes.push_back(second);
        out.flagged = out.flagged || second.flag_bit != 0;
        out.agree = second.parity_bit == out.first.parity_bit;
    }
    if (!out.agree) {
        shot.parity_confirmed = false;
    }
    return out;
}

/// ZZ measurement on (a, b) followed by QEC on both blocks and the conditional
/// repeat. Returns the parity that drives the X byproduct.
uint8_t zz_with_repeat(ShotOutcome &shot, Executor &exec, Block a, Block b, const ProtocolOptions &options) {
    JointPair zz = joint_with_confirmation(shot, exec, JointType::ZZ, a, b, options);
    bool joint_decode = zz.flagged && options.flag_aware_decoding;
    QecOptions qo;
    qo.flag_aware = options.flag_aware_decoding;
    qo.force_second_round = joint_decode;
    qo.defer_correction = joint_decode;
    QecResult qa = qec_gadget_adaptive(exec, a, qo);
    QecResult qb = qec_gadget_adaptive(exec, b, qo);
    if (joint_decode) {
        auto [ca, cb] = JointFlagDecoder::instance(JointType::ZZ).correction(qa.round2_syndrome, qb.round2_syndrome);
        PauliString c = embed_block_pauli(ca, a, exec.num_qubits());
        c *= embed_block_pauli(cb, b, exec.num_qubits());
        exec.apply_correction(c);
    }
    shot.gadget_records.push_back(labelled(qa.record, "qec.b" + std::to_string(a.index + 1)));
    shot.gadget_records.push_back(labelled(qb.record, "qec.b" + std::to_string(b.index + 1)));
    bool repeat = zz.flagged || !zz.agree || !qa.record.trivial() || !qb.record.trivial();
    if (!repeat) {
        return zz.first.parity_bit;
    }
    shot.repeat_round = true;
    JointMeasurementOutcome again = measure_zz_joint(exec, a, b);
    again.label = "zz.repeat";
    shot.joint_outcomes.push_back(again);
    Block both[2] = {a, b};
    auto syn = syn_round_flagged(exec, both);
    shot.gadget_records.push_back(labelled(syn[0], "syn.repeat.b" + std::to_string(a.index + 1)));
    shot.gadget_records.push_back(labelled(syn[1], "syn.repeat.b" + std::to_string(b.index + 1)));
    return again.parity_bit;
}

// Ancilla reading of a logical Y check on the +i input; Y on any line is minus logical Y.
constexpr uint8_t kPlusIYCheckBit = 1;

GadgetRecord prepare_input(Executor &exec, Block block, const InputState &input, const ProtocolOptions &options) {
    std::optional<uint8_t> expected;
    if (options.verify_input_rotation && input.readout_basis == Basis::Y) {
        expected = static_cast<uint8_t>(kPlusIYCheckBit ^ input.expected_bit);
    }
    return labelled(prepare_rotated(exec, block, input.logical_prep, options.rus_max_attempts, expected), "prep.b1");
}

}  // namespace

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::Physical:
            return "physical";
        case Variant::Transversal0:
            return "transversal_0qec";
        case Variant::Transversal1:
            return "transversal_1qec";
        case Variant::LatticeXXZZ:
            return "lattice_mxx_mzz";
        case Variant::LatticeZZ:
            return "lattice_mzz";
    }
    return "?";
}

Variant variant_from_name(std::string_view name) {
    for (Variant v : all_variants()) {
        if (name == variant_name(v)) return v;
    }
    if (name == "0qec") return Variant::Transversal0;
    if (name == "1qec") return Variant::Transversal1;
    if (name == "mxx_mzz") return Variant::LatticeXXZZ;
    if (name == "mzz") return Variant::LatticeZZ;
    throw std::invalid_argument("unknown variant: " + std::string(name));
}

const std::array<Variant, 5> &all_variants() {
    static const std::array<Variant, 5> v = {
        Variant::Physical, Variant::Transversal0, Variant::Transversal1, Variant::LatticeXXZZ, Variant::LatticeZZ};
    return v;
}

size_t variant_num_qubits(Variant v) {
    switch (v) {
        case Variant::Physical:
            return 3;
        case Variant::LatticeZZ:
            return 2 * kBlockQubits;
        default:
            return 3 * kBlockQubits;
    }
}

bool variant_post_selects(Variant v) {
    return v == Variant::Transversal0 || v == Variant::Transversal1 || v == Variant::LatticeXXZZ;
}

const std::array<InputState, 6> &input_states() {
    static const std::array<InputState, 6> states = {{
        {InputLabel::Zero, "0", {}, {}, Basis::Z, 0},
        {InputLabel::One, "1", {Gate::X}, {Gate::X}, Basis::Z, 1},
        {InputLabel::Plus, "+", {Gate::H}, {Gate::H}, Basis::X, 0},
        {InputLabel::Minus, "-", {Gate::H, Gate::Z}, {Gate::H, Gate::Z}, Basis::X, 1},
        // Transversal S_DAG is logical S.
        {InputLabel::PlusI, "+i", {Gate::H, Gate::S_DAG}, {Gate::H, Gate::S}, Basis::Y, 0},
        {InputLabel::MinusI, "-i", {Gate::H, Gate::S}, {Gate::H, Gate::S_DAG}, Basis::Y, 1},
    }};
    return states;
}

const InputState &input_state(InputLabel label) {
    return input_states()[input_index(label)];
}

size_t input_index(InputLabel label) {
    return static_cast<size_t>(label);
}

InputLabel input_from_name(std::string_view name) {
    for (const InputState &s : input_states()) {
        if (name == s.name) return s.label;
    }
    throw std::invalid_argument("unknown input state: " + std::string(name));
}

std::string_view discard_reason_name(DiscardReason r) {
    switch (r) {
        case DiscardReason::BellVerification:
            return "bell_verification";
        case DiscardReason::BellSyndrome:
            return "bell_syndrome";
        case DiscardReason::BellFlag:
            return "bell_flag";
        case DiscardReason::BellParity:
            return "bell_parity";
    }
    return "?";
}

DiscardReason discard_reason_from_name(std::string_view name) {
    for (DiscardReason r : {DiscardReason::BellVerification, DiscardReason::BellSyndrome, DiscardReason::BellFlag,
                            DiscardReason::BellParity}) {
        if (name == discard_reason_name(r)) return r;
    }
    throw std::invalid_argument("unknown discard reason: " + std::string(name));
}

bool compute_qed_clean(const ShotOutcome &shot) {
    if (!shot.accepted || !shot.parity_confirmed || shot.repeat_round) {
        return false;
    }
    for (const GadgetRecord &g : shot.gadget_records) {
        if (!g.trivial()) return false;
    }
    for (const JointMeasurementOutcome &j : shot.joint_outcomes) {
        if (j.flag_bit) return false;
    }
    for (const ReadoutRecord &r : shot.readouts) {
        for (uint8_t s : r.syndrome) {
            if (s) return false;
        }
    }
    return true;
}

ShotOutcome run_physical_teleport(const InputState &input, Executor &exec, const ProtocolOptions &options) {
    if (exec.num_qubits() < 3) {
        throw std::invalid_argument("physical teleportation needs three qubits");
    }
    ShotOutcome shot = start(Variant::Physical, input, exec);
    Byproducts by(exec, shot, options, false);
    const size_t all[3] = {0, 1, 2};
    exec.reset(all);
    for (Gate g : input.physical_prep) {
        exec.gate1(g, 0);
    }
    exec.gate1(Gate::H, 1);
    exec.gate2(Gate::CX, 1, 2);
    exec.gate2(Gate::CX, 0, 1);
    exec.gate1(Gate::H, 0);
    const size_t bell[2] = {0, 1};
    std::vector<uint8_t> m = exec.measure(bell);
    by.apply(2, 'Z', m[0]);
    by.apply(2, 'X', m[1]);
    if (input.readout_basis == Basis::X) {
        exec.gate1(Gate::H, 2);
    } else if (input.readout_basis == Basis::Y) {
        exec.gate1(Gate::S_DAG, 2);
        exec.gate1(Gate::H, 2);
    }
    const size_t out[1] = {2};
    bool bit = exec.measure(out)[0];
    finish(shot, input, 2, bit);
    return shot;
}

ShotOutcome run_transversal(const InputState &input, int qec_gadgets, Executor &exec, const ProtocolOptions &options) {
    if (qec_gadgets != 0 && qec_gadgets != 1) {
        throw std::invalid_argument("qec_gadgets must be 0 or 1");
    }
    if (exec.num_qubits() < 3 * kBlockQubits) {
        throw std::invalid_argument("transversal teleportation needs three blocks");
    }
    ShotOutcome shot = start(qec_gadgets ? Variant::Transversal1 : Variant::Transversal0, input, exec);
    Byproducts by(exec, shot, options, true);

    GadgetRecord p2 = prepare_zero(exec, kB2, 1);
    GadgetRecord p3 = prepare_zero(exec, kB3, 1);
    shot.gadget_records.push_back(labelled(p2, "prep.b2"));
    shot.gadget_records.push_back(labelled(p3, "prep.b3"));
    if (any_set(p2.verification_bits) || any_set(p3.verification_bits)) {
        discard(shot, DiscardReason::BellVerification);
        return shot;
    }
    transversal_gate(exec, Gate::H, kB2);
    transversal_cx(exec, kB2, kB3);
    Block pair[2] = {kB2, kB3};
    auto syn = syn_round_flagged(exec, pair);
    shot.gadget_records.push_back(labelled(syn[0], "syn.b2"));
    shot.gadget_records.push_back(labelled(syn[1], "syn.b3"));
    if (any_set(syn[0].flag_bits) || any_set(syn[1].flag_bits)) {
        discard(shot, DiscardReason::BellFlag);
        return shot;
    }
    if (any_set(syn[0].syndrome_bits) || any_set(syn[1].syndrome_bits)) {
        discard(shot, DiscardReason::BellSyndrome);
        return shot;
    }

    shot.gadget_records.push_back(prepare_input(exec, kB1, input, options));
    if (qec_gadgets == 1) {
        QecOptions qo;
        qo.flag_aware = options.flag_aware_decoding;
        shot.gadget_records.push_back(labelled(qec_gadget_adaptive(exec, kB1, qo).record, "qec.b1"));
    }

    transversal_cx(exec, kB1, kB2);
    ReadoutResult mx = readout(shot, exec, kB1, Basis::X, "bell.b1");
    ReadoutResult mz = readout(shot, exec, kB2, Basis::Z, "bell.b2");
    by.apply(2, 'Z', mx.logical_bit);
    by.apply(2, 'X', mz.logical_bit);
    ReadoutResult out = readout(shot, exec, kB3, input.readout_basis, "out.b3");
    finish(shot, input, 2, out.logical_bit);
    return shot;
}

ShotOutcome run_lattice_mxx_mzz(const InputState &input, Executor &exec, const ProtocolOptions &options) {
    if (exec.num_qubits() < 3 * kBlockQubits) {
        throw std::invalid_argument("lattice M_XX M_ZZ teleportation needs three blocks");
    }
    ShotOutcome shot = start(Variant::LatticeXXZZ, input, exec);
    Byproducts by(exec, shot, options, true);

    GadgetRecord p2 = prepare_zero(exec, kB2, 1);
    GadgetRecord p3 = prepare_zero(exec, kB3, 1);
    shot.gadget_records.push_back(labelled(p2, "prep.b2"));
    shot.gadget_records.push_back(labelled(p3, "prep.b3"));
    if (any_set(p2.verification_bits) || any_set(p3.verification_bits)) {
        discard(shot, DiscardReason::BellVerification);
        return shot;
    }
    JointPair xx = joint_with_confirmation(shot, exec, JointType::XX, kB2, kB3, options);
    Block pair[2] = {kB2, kB3};
    auto syn = syn_round_flagged(exec, pair);
    shot.gadget_records.push_back(labelled(syn[0], "syn.b2"));
    shot.gadget_records.push_back(labelled(syn[1], "syn.b3"));
    if (xx.flagged || any_set(syn[0].flag_bits) || any_set(syn[1].flag_bits)) {
        discard(shot, DiscardReason::BellFlag);
        return shot;
    }
    if (!xx.agree) {
        discard(shot, DiscardReason::BellParity);
        return shot;
    }
    if (any_set(syn[0].syndrome_bits) || any_set(syn[1].syndrome_bits)) {
        discard(shot, DiscardReason::BellSyndrome);
        return shot;
    }
    by.apply(2, 'Z', xx.first.parity_bit);

    shot.gadget_records.push_back(prepare_input(exec, kB1, input, options));

    uint8_t zz = zz_with_repeat(shot, exec, kB1, kB2, options);
    ReadoutResult x1 = readout(shot, exec, kB1, Basis::X, "bell.b1");
    ReadoutResult x2 = readout(shot, exec, kB2, Basis::X, "bell.b2");
    by.apply(2, 'X', zz);
    by.apply(2, 'Z', x1.logical_bit ^ x2.logical_bit);
    ReadoutResult out = readout(shot, exec, kB3, input.readout_basis, "out.b3");
    finish(shot, input, 2, out.logical_bit);
    return shot;
}

ShotOutcome run_lattice_mzz(const InputState &input, Executor &exec, const ProtocolOptions &options) {
    if (exec.num_qubits() < 2 * kBlockQubits) {
        throw std::invalid_argument("lattice M_ZZ teleportation needs two blocks");
    }
    ShotOutcome shot = start(Variant::LatticeZZ, input, exec);
    Byproducts by(exec, shot, options, true);

    shot.gadget_records.push_back(prepare_input(exec, kB1, input, options));
    shot.gadget_records.push_back(labelled(prepare_zero(exec, kB2, options.rus_max_attempts), "prep.b2"));
    transversal_gate(exec, Gate::H, kB2);

    uint8_t m1 = zz_with_repeat(shot, exec, kB1, kB2, options);
    ReadoutResult m2 = readout(shot, exec, kB1, Basis::X, "bell.b1");
    by.apply(1, 'X', m1);
    by.apply(1, 'Z', m2.logical_bit);
    ReadoutResult out = readout(shot, exec, kB2, input.readout_basis, "out.b2");
    finish(shot, input, 1, out.logical_bit);
    return shot;
}

ShotOutcome run_variant(Variant v, const InputState &input, Executor &exec, const ProtocolOptions &options) {
    switch (v) {
        case Variant::Physical:
            return run_physical_teleport(input, exec, options);
        case Variant::Transversal0:
            return run_transversal(input, 0, exec, options);
        case Variant::Transversal1:
            return run_transversal(input, 1, exec, options);
        case Variant::LatticeXXZZ:
            return run_lattice_mxx_mzz(input, exec, options);
        case Variant::LatticeZZ:
            return run_lattice_mzz(input, exec, options);
    }
    throw std::invalid_argument("unknown variant");
}

ShotOutcome run_shot(
    Variant v,
    InputLabel input,
    const NoiseParams &noise,
    uint64_t seed,
    uint64_t stream_id,
    const ProtocolOptions &options,
    FaultInjector *injector) {
    Executor exec(variant_num_qubits(v), noise, RandomSource(seed, stream_id), injector);
    return run_variant(v, input_state(input), exec, options);
}

IdentityReport verify_noiseless_identity(Variant v,
                                         const ProtocolOptions &options,
                                         size_t leaf_budget,
                                         bool share_prefixes) {
    IdentityReport report;
    report.variant = v;
    for (const InputState &input : input_states()) {
        std::vector<uint8_t> script;
        BranchCache cache;
        while (true) {
            if (report.leaves >= leaf_budget) {
                report.budget_exceeded = true;
                return report;
            }
            Executor exec(variant_num_qubits(v), NoiseParams::noiseless(), RandomSource(0, 0));
            exec.rng().force_coins(script);
            if (share_prefixes) {
                cache.resume_at = script.empty() ? BranchCache::kNoReplay : script.size() - 1;
                exec.state().attach_cache(&cache);
            }
            ShotOutcome shot = run_variant(v, input, exec, options);
            script.resize(exec.rng().coins_drawn(), 0);
            report.leaves++;
            if (!(shot.accepted && shot.correct)) {
                report.failures++;
                report.failure_probability += std::ldexp(1.0, -static_cast<int>(script.size())) / 6.0;
            }
            while (!script.empty() && script.back() == 1) {
                script.pop_back();
            }
            if (script.empty()) {
                break;
            }
            script.back() = 1;
        }
    }
    return report;
}

}  // namespace qtele
