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

#include "qtele/schedule.h"

#include <stdexcept>

namespace qtele {

Schedule &Schedule::push(OpType type, Gate g, std::initializer_list<uint8_t> qubits) {
    if (qubits.size() == 0 || qubits.size() > ScheduleOp::kMaxSlots) {
        throw std::invalid_argument("schedule op needs between 1 and 16 qubits");
    }
    ScheduleOp op;
    op.type = type;
    op.gate = g;
    op.count = static_cast<uint8_t>(qubits.size());
    size_t i = 0;
    for (uint8_t q : qubits) {
        if (q >= num_qubits_) {
            throw std::out_of_range("schedule qubit out of range");
        }
        op.qubits[i++] = q;
    }
    ops_.push_back(op);
    if (type == OpType::Measure) {
        num_measurements_ += qubits.size();
    }
    return *this;
}

Schedule &Schedule::reset(std::initializer_list<uint8_t> qubits) {
    return push(OpType::Reset, Gate::H, qubits);
}

Schedule &Schedule::gate1(Gate g, std::initializer_list<uint8_t> qubits) {
    if (gate_arity(g) != 1) {
        throw std::invalid_argument("gate1 needs a single-qubit gate");
    }
    return push(OpType::Gate1, g, qubits);
}

Schedule &Schedule::gate2(Gate g, std::initializer_list<uint8_t> pairs) {
    if (gate_arity(g) != 2 || pairs.size() % 2 != 0) {
        throw std::invalid_argument("gate2 needs a two-qubit gate and qubit pairs");
    }
    return push(OpType::Gate2, g, pairs);
}

Schedule &Schedule::measure(std::initializer_list<uint8_t> qubits) {
    return push(OpType::Measure, Gate::H, qubits);
}

Schedule &Schedule::append(const Schedule &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("appending a schedule over a different qubit count");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    num_measurements_ += other.num_measurements_;
    return *this;
}

void run_schedule(
    Executor &exec, const Schedule &schedule, std::span<const std::span<const size_t>> maps, uint8_t *out) {
    for (const auto &map : maps) {
        if (map.size() != schedule.num_qubits()) {
            throw std::invalid_argument("schedule map has the wrong size");
        }
    }
    constexpr size_t kMaxGlobal = 64;
    std::array<size_t, kMaxGlobal> buf;
    size_t m_offset = 0;
    size_t per_map = schedule.num_measurements();
    for (const ScheduleOp &op : schedule.ops()) {
        size_t k = 0;
        for (const auto &map : maps) {
            for (uint8_t q : op.targets()) {
                if (k == kMaxGlobal) {
                    throw std::invalid_argument("layer too wide");
                }
                buf[k++] = map[q];
            }
        }
        std::span<const size_t> globals(buf.data(), k);
        switch (op.type) {
            case OpType::Reset:
                exec.reset(globals);
                break;
            case OpType::Gate1:
                exec.gate1(op.gate, globals);
                break;
            case OpType::Gate2:
                exec.gate2(op.gate, globals);
                break;
            case OpType::Measure: {
                std::array<uint8_t, kMaxGlobal> bits;
                exec.measure_into(globals, bits.data());
                for (size_t m = 0; m < maps.size(); m++) {
                    for (size_t j = 0; j < op.count; j++) {
                        out[m * per_map + m_offset + j] = bits[m * op.count + j];
                    }
                }
                m_offset += op.count;
                break;
            }
        }
    }
}

std::vector<uint8_t> run_schedule(Executor &exec, const Schedule &schedule, std::span<const size_t> map) {
    std::vector<uint8_t> out(schedule.num_measurements());
    std::span<const size_t> maps[1] = {map};
    run_schedule(exec, schedule, maps, out.data());
    return out;
}

PropagatedFault propagate_fault(
    const Schedule &schedule, size_t op_index, const PauliString &error, int flip_measurement) {
    if (error.num_qubits() != schedule.num_qubits()) {
        throw std::invalid_argument("fault Pauli size mismatch");
    }
    const auto &ops = schedule.ops();
    if (op_index >= ops.size()) {
        throw std::out_of_range("op index out of range");
    }
    PropagatedFault result;
    result.op_index = op_index;
    result.injected = error;
    result.flips.assign(schedule.num_measurements(), 0);
    PauliString p = error;
    size_t m = 0;
    for (size_t k = 0; k < ops.size(); k++) {
        const ScheduleOp &op = ops[k];
        if (k > op_index) {
            switch (op.type) {
                case OpType::Reset:
                    for (uint8_t q : op.targets()) {
                        p.set(q, 'I');
                    }
                    break;
                case OpType::Gate1:
                    for (uint8_t q : op.targets()) {
                        p.conjugate(op.gate, q);
                    }
                    break;
                case OpType::Gate2:
                    for (size_t i = 0; i < op.count; i += 2) {
                        p.conjugate(op.gate, op.qubits[i], op.qubits[i + 1]);
                    }
                    break;
                case OpType::Measure:
                    for (size_t j = 0; j < op.count; j++) {
                        result.flips[m + j] ^= p.x(op.qubits[j]) ? 1 : 0;
                    }
                    break;
            }
        }
        if (op.type == OpType::Measure) {
            m += op.count;
        }
    }
    if (flip_measurement >= 0) {
        result.flips.at(static_cast<size_t>(flip_measurement)) ^= 1;
    }
    p.set_negative(false);
    result.residual = p;
    return result;
}

std::vector<PropagatedFault> enumerate_single_faults(const Schedule &schedule) {
    std::vector<PropagatedFault> out;
    size_t n = schedule.num_qubits();
    PauliString identity(n);
    size_t m = 0;
    const auto &ops = schedule.ops();
    for (size_t k = 0; k < ops.size(); k++) {
        const ScheduleOp &op = ops[k];
        switch (op.type) {
            case OpType::Reset:
                for (uint8_t q : op.targets()) {
                    PropagatedFault f = propagate_fault(schedule, k, PauliString::single(n, q, 'X'));
                    f.kind = OpKind::Init;
                    out.push_back(std::move(f));
                }
                break;
            case OpType::Measure:
                for (size_t j = 0; j < op.count; j++) {
                    PropagatedFault f = propagate_fault(schedule, k, identity, static_cast<int>(m + j));
                    f.kind = OpKind::Measure;
                    out.push_back(std::move(f));
                }
                m += op.count;
                break;
            case OpType::Gate1:
                for (uint8_t q : op.targets()) {
                    for (char c : {'X', 'Y', 'Z'}) {
                        out.push_back(propagate_fault(schedule, k, PauliString::single(n, q, c)));
                    }
                }
                break;
            case OpType::Gate2:
                for (size_t i = 0; i < op.count; i += 2) {
                    FaultLocation loc{0, OpKind::Gate, {op.qubits[i], op.qubits[i + 1]}};
                    for (const FaultSpec &spec : faults_at(loc)) {
                        std::array<size_t, 2> pos = {op.qubits[i], op.qubits[i + 1]};
                        out.push_back(propagate_fault(schedule, k, spec.pauli->embedded(n, pos)));
                    }
                }
                break;
        }
    }
    return out;
}

}  // namespace qtele
