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

#include "qtele/shot_log.h"

#include <map>
#include <stdexcept>

namespace qtele {

using nlohmann::json;

namespace {

template <typename Bits>
std::string bits_text(const Bits &bits) {
    std::string s;
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

std::vector<uint8_t> bits_from(const json &j) {
    std::vector<uint8_t> out;
    for (char c : j.get<std::string>()) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string contains a character other than 0 or 1");
        }
        out.push_back(c == '1');
    }
    return out;
}

template <size_t N>
std::array<uint8_t, N> fixed_bits(const json &j) {
    std::vector<uint8_t> v = bits_from(j);
    if (v.size() != N) {
        throw std::invalid_argument("bit string has the wrong length");
    }
    std::array<uint8_t, N> a{};
    std::copy(v.begin(), v.end(), a.begin());
    return a;
}

}  // namespace

json shot_to_json(const ShotOutcome &shot, size_t shot_index) {
    json gadgets = json::array();
    for (const GadgetRecord &g : shot.gadget_records) {
        gadgets.push_back({{"label", g.label},
                           {"syndrome", bits_text(g.syndrome_bits)},
                           {"flags", bits_text(g.flag_bits)},
                           {"verification", bits_text(g.verification_bits)},
                           {"attempts", g.attempts}});
    }
    json joints = json::array();
    for (const JointMeasurementOutcome &m : shot.joint_outcomes) {
        joints.push_back({{"label", m.label},
                          {"parity", m.parity_bit},
                          {"flag", m.flag_bit},
                          {"ancilla_raw", m.ancilla_raw},
                          {"flag_raw", m.flag_raw}});
    }
    json readouts = json::array();
    for (const ReadoutRecord &r : shot.readouts) {
        readouts.push_back({{"label", r.label},
                            {"block", r.block},
                            {"basis", std::string(1, basis_char(r.basis))},
                            {"raw", bits_text(r.raw_bits)},
                            {"syndrome", bits_text(r.syndrome)},
                            {"logical", r.logical_bit}});
    }
    return json{
        {"shot", shot_index},
        {"variant", std::string(variant_name(shot.variant))},
        {"input", std::string(input_state(shot.input).name)},
        {"seed", shot.seed},
        {"stream", shot.stream_id},
        {"accepted", shot.accepted},
        {"discard", shot.discard_reason ? json(std::string(discard_reason_name(*shot.discard_reason))) : json()},
        {"gadgets", gadgets},
        {"joint", joints},
        {"readouts", readouts},
        {"parity_confirmed", shot.parity_confirmed},
        {"repeat_round", shot.repeat_round},
        {"frame", {{"x", bits_text(shot.frame.x)}, {"z", bits_text(shot.frame.z)}}},
        {"final_bit", shot.final_bit},
        {"correct", shot.correct},
        {"qed_clean", shot.qed_clean},
    };
}

ShotOutcome shot_from_json(const json &j, size_t *shot_index) {
    ShotOutcome s;
    if (shot_index) {
        *shot_index = j.at("shot").get<size_t>();
    }
    s.variant = variant_from_name(j.at("variant").get<std::string>());
    s.input = input_from_name(j.at("input").get<std::string>());
    s.seed = j.at("seed").get<uint64_t>();
    s.stream_id = j.at("stream").get<uint64_t>();
    s.accepted = j.at("accepted").get<bool>();
    if (!j.at("discard").is_null()) {
        s.discard_reason = discard_reason_from_name(j.at("discard").get<std::string>());
    }
    for (const json &g : j.at("gadgets")) {
        GadgetRecord r;
        r.label = g.at("label").get<std::string>();
        r.syndrome_bits = bits_from(g.at("syndrome"));
        r.flag_bits = bits_from(g.at("flags"));
        r.verification_bits = bits_from(g.at("verification"));
        r.attempts = g.at("attempts").get<size_t>();
        s.gadget_records.push_back(std::move(r));
    }
    for (const json &m : j.at("joint")) {
        JointMeasurementOutcome o;
        o.label = m.at("label").get<std::string>();
        o.parity_bit = m.at("parity").get<uint8_t>();
        o.flag_bit = m.at("flag").get<uint8_t>();
        o.ancilla_raw = m.at("ancilla_raw").get<uint8_t>();
        o.flag_raw = m.at("flag_raw").get<uint8_t>();
        s.joint_outcomes.push_back(std::move(o));
    }
    for (const json &r : j.at("readouts")) {
        ReadoutRecord o;
        o.label = r.at("label").get<std::string>();
        o.block = r.at("block").get<size_t>();
        std::string b = r.at("basis").get<std::string>();
        if (b.size() != 1) {
            throw std::invalid_argument("readout basis must be one character");
        }
        o.basis = basis_from_char(b[0]);
        o.raw_bits = fixed_bits<7>(r.at("raw"));
        o.syndrome = fixed_bits<3>(r.at("syndrome"));
        o.logical_bit = r.at("logical").get<uint8_t>();
        s.readouts.push_back(std::move(o));
    }
    s.parity_confirmed = j.at("parity_confirmed").get<bool>();
    s.repeat_round = j.at("repeat_round").get<bool>();
    s.frame.x = fixed_bits<3>(j.at("frame").at("x"));
    s.frame.z = fixed_bits<3>(j.at("frame").at("z"));
    s.final_bit = j.at("final_bit").get<uint8_t>();
    s.correct = j.at("correct").get<bool>();
    s.qed_clean = j.at("qed_clean").get<bool>();
    return s;
}

json estimate_to_json(const FidelityEstimate &e) {
    return json{{"value", e.value},
                {"err_lo", e.err_lo},
                {"err_hi", e.err_hi},
                {"n_accepted", e.n_accepted},
                {"n_total", e.n_total},
                {"discard_fraction", e.discard_fraction},
                {"text", format_estimate(e)}};
}

json summary_to_json(const VariantSummary &s, bool qec_report, bool qed_report) {
    json states = json::object();
    for (const InputState &in : input_states()) {
        json entry = json::object();
        if (qec_report && s.qec.count(in.label)) {
            entry["qec"] = estimate_to_json(s.qec.at(in.label));
        }
        if (qed_report && s.qed.count(in.label)) {
            entry["qed"] = estimate_to_json(s.qed.at(in.label));
        }
        if (!entry.empty()) {
            states[std::string(in.name)] = entry;
        }
    }
    auto opt = [](const std::optional<FidelityEstimate> &e) { return e ? estimate_to_json(*e) : json(); };
    json out{{"variant", std::string(variant_name(s.variant))},
             {"total_shots", s.total_shots},
             {"accepted_shots", s.accepted_shots},
             {"discard_fraction", s.discard_fraction},
             {"states", states}};
    if (qec_report) {
        out["F_a"] = opt(s.f_a);
        out["F_p"] = opt(s.f_p);
    }
    if (qed_report) {
        out["F_a_qed"] = opt(s.f_a_qed);
        out["F_p_qed"] = opt(s.f_p_qed);
    }
    return out;
}

std::vector<ExperimentRecord> records_from_shot_log(std::istream &in, size_t job_groups) {
    std::map<InputLabel, ExperimentRecord> by_input;
    std::vector<InputLabel> order;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        size_t index = 0;
        ShotOutcome shot;
        try {
            shot = shot_from_json(json::parse(line), &index);
        } catch (const std::exception &e) {
            throw std::invalid_argument("shot log line " + std::to_string(line_no) + ": " + e.what());
        }
        auto it = by_input.find(shot.input);
        if (it == by_input.end()) {
            it = by_input.emplace(shot.input, ExperimentRecord(shot.variant, shot.input, job_groups)).first;
            order.push_back(shot.input);
        }
        it->second.add(shot, index);
    }
    std::vector<ExperimentRecord> out;
    for (InputLabel l : order) {
        out.push_back(std::move(by_input.at(l)));
    }
    return out;
}

}  // namespace qtele
