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

#include "qtele/fault_audit.h"

namespace qtele {

namespace {

std::string describe(const FaultSpec &spec) {
    return spec.bit_flip ? std::string("flip") : spec.pauli->str().substr(1);
}

}  // namespace

std::vector<FaultLocation> enumerate_fault_locations(
    Variant v, InputLabel input, const ProtocolOptions &options, bool include_idle) {
    FaultInjector inj;
    inj.record_trace = true;
    inj.include_idle = include_idle;
    run_shot(v, input, NoiseParams::noiseless(), 0, 0, options, &inj);
    return std::move(inj.trace);
}

FaultRun run_with_fault(
    Variant v,
    InputLabel input,
    const FaultSpec &spec,
    uint64_t seed,
    uint64_t stream_id,
    const ProtocolOptions &options,
    bool include_idle) {
    FaultInjector inj;
    inj.spec = spec;
    inj.include_idle = include_idle;
    FaultRun run;
    run.outcome = run_shot(v, input, NoiseParams::noiseless(), seed, stream_id, options, &inj);
    run.reached = inj.reached;
    return run;
}

AuditReport fault_audit(Variant v, const AuditOptions &options) {
    constexpr size_t kMaxRecordedFailures = 16;
    AuditReport report;
    report.variant = v;
    for (InputLabel input : options.inputs) {
        std::vector<FaultLocation> locations =
            enumerate_fault_locations(v, input, options.protocol, options.include_idle);
        report.locations += locations.size();
        for (const FaultLocation &loc : locations) {
            for (const FaultSpec &spec : faults_at(loc)) {
                report.faults++;
                for (size_t s = 0; s < options.seeds; s++) {
                    if (options.budget != 0 && report.runs >= options.budget) {
                        report.complete = false;
                        return report;
                    }
                    report.runs++;
                    FaultRun run = run_with_fault(v, input, spec, options.base_seed, s, options.protocol,
                                                  options.include_idle);
                    if (!run.reached) {
                        report.vacuous++;
                        continue;
                    }
                    if (!run.outcome.accepted) {
                        report.discarded++;
                        continue;
                    }
                    if (!run.outcome.correct) {
                        report.accepted_wrong++;
                        if (report.failures.size() < kMaxRecordedFailures) {
                            report.failures.push_back({input, loc, describe(spec), options.base_seed, s});
                        }
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace qtele
