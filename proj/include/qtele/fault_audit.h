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

#ifndef QTELE_FAULT_AUDIT_H
#define QTELE_FAULT_AUDIT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qtele/noise_model.h"
#include "qtele/protocols.h"

namespace qtele {

/// Locations of a noiseless reference execution of `v` on `input`.
std::vector<FaultLocation> enumerate_fault_locations(
    Variant v, InputLabel input, const ProtocolOptions &options = {}, bool include_idle = false);

struct FaultRun {
    ShotOutcome outcome;
    /// False when control flow never reached the target (a vacuous pass).
    bool reached = false;
};

/// Noiseless execution with exactly one injected fault.
FaultRun run_with_fault(
    Variant v,
    InputLabel input,
    const FaultSpec &spec,
    uint64_t seed,
    uint64_t stream_id,
    const ProtocolOptions &options = {},
    bool include_idle = false);

struct AuditOptions {
    size_t seeds = 100;
    std::vector<InputLabel> inputs = {InputLabel::Zero, InputLabel::One, InputLabel::Plus,
                                      InputLabel::Minus, InputLabel::PlusI, InputLabel::MinusI};
    bool include_idle = false;
    /// Maximum number of fault runs; 0 means unlimited.
    size_t budget = 0;
    uint64_t base_seed = 1;
    ProtocolOptions protocol;
};

struct AuditFailure {
    InputLabel input = InputLabel::Zero;
    FaultLocation location;
    std::string fault;
    uint64_t seed = 0;
    uint64_t stream_id = 0;
};

struct AuditReport {
    Variant variant = Variant::Physical;
    size_t locations = 0;
    size_t faults = 0;
    size_t runs = 0;
    size_t vacuous = 0;
    size_t accepted_wrong = 0;
    size_t discarded = 0;
    bool complete = true;
    /// First few failing runs, for diagnosis.
    std::vector<AuditFailure> failures;
};

/// Injects every single fault at every reference location, `seeds` times each.
AuditReport fault_audit(Variant v, const AuditOptions &options = {});

}  // namespace qtele

#endif
