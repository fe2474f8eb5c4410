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

#include "qtele/surgery.h"

#include <array>
#include <stdexcept>

namespace qtele {

namespace {

Schedule build_joint(JointType type) {
    Schedule s(16);
    auto couple = [&](uint8_t d) {
        if (type == JointType::XX) {
            s.gate2(Gate::CX, {14, d});
        } else {
            s.gate2(Gate::CZ, {14, d});
        }
    };
    s.reset({14, 15});
    s.gate1(Gate::H, {14});
    couple(4);
    s.gate2(Gate::CX, {14, 15});
    couple(11);
    couple(5);
    couple(12);
    couple(6);
    s.gate2(Gate::CX, {14, 15});
    couple(13);
    s.gate1(Gate::H, {14});
    s.measure({14, 15});
    return s;
}

PauliString split(const PauliString &e14, size_t offset) {
    std::array<size_t, kDataQubits> pos;
    for (size_t i = 0; i < kDataQubits; i++) {
        pos[i] = offset + i;
    }
    return e14.restricted(pos);
}

}  // namespace

const Schedule &joint_schedule(JointType type) {
    static const Schedule xx = build_joint(JointType::XX);
    static const Schedule zz = build_joint(JointType::ZZ);
    return type == JointType::XX ? xx : zz;
}

JointMeasurementOutcome measure_joint(Executor &exec, JointType type, Block a, Block b) {
    if (a.index == b.index) {
        throw std::invalid_argument("joint measurement needs two distinct blocks");
    }
    std::array<size_t, 16> map;
    for (size_t i = 0; i < kDataQubits; i++) {
        map[i] = a.data(i);
        map[7 + i] = b.data(i);
    }
    map[14] = a.ancilla();
    map[15] = a.flag();
    std::vector<uint8_t> bits = run_schedule(exec, joint_schedule(type), map);
    JointMeasurementOutcome out;
    out.label = type == JointType::XX ? "xx" : "zz";
    out.ancilla_raw = bits[0];
    out.flag_raw = bits[1];
    out.parity_bit = bits[0];
    out.flag_bit = bits[1];
    return out;
}

JointMeasurementOutcome measure_xx_joint(Executor &exec, Block a, Block b) {
    return measure_joint(exec, JointType::XX, a, b);
}

JointMeasurementOutcome measure_zz_joint(Executor &exec, Block a, Block b) {
    return measure_joint(exec, JointType::ZZ, a, b);
}

JointFlagDecoder::JointFlagDecoder(JointType type) {
    auto equivalent = [type](const PauliString &e1, const PauliString &e2) {
        PauliString d = PauliString::from_masks(14, e1.x_mask() ^ e2.x_mask(), e1.z_mask() ^ e2.z_mask());
        PauliString da = split(d, 0);
        PauliString db = split(d, 7);
        for (const PauliString *p : {&da, &db}) {
            for (uint8_t s : error_syndrome(*p)) {
                if (s) return false;
            }
        }
        LogicalAction la = logical_action(da);
        LogicalAction lb = logical_action(db);
        if (type == JointType::ZZ) {
            return !la.x && !lb.x && la.z == lb.z;
        }
        return !la.z && !lb.z && la.x == lb.x;
    };
    std::array<size_t, 14> data;
    for (size_t i = 0; i < 14; i++) {
        data[i] = i;
    }
    for (const PropagatedFault &f : enumerate_single_faults(joint_schedule(type))) {
        if (!f.flips[1]) {
            continue;
        }
        PauliString e = f.residual.restricted(data);
        uint32_t key = pack_syndrome(error_syndrome(split(e, 0))) |
                       (static_cast<uint32_t>(pack_syndrome(error_syndrome(split(e, 7)))) << 6);
        table_.add(key, e, equivalent);
    }
}

const JointFlagDecoder &JointFlagDecoder::instance(JointType type) {
    static const JointFlagDecoder xx(JointType::XX);
    static const JointFlagDecoder zz(JointType::ZZ);
    return type == JointType::XX ? xx : zz;
}

std::pair<PauliString, PauliString> JointFlagDecoder::correction(
    std::span<const uint8_t> syndrome_a6, std::span<const uint8_t> syndrome_b6) const {
    uint32_t key = pack_syndrome(syndrome_a6) | (static_cast<uint32_t>(pack_syndrome(syndrome_b6)) << 6);
    if (const PauliString *e = table_.find(key)) {
        return {split(*e, 0), split(*e, 7)};
    }
    return {lookup_correction(default_lookup(), syndrome_a6), lookup_correction(default_lookup(), syndrome_b6)};
}

}  // namespace qtele
