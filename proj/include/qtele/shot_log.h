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

#ifndef QTELE_SHOT_LOG_H
#define QTELE_SHOT_LOG_H

#include <cstddef>
#include <istream>
#include <nlohmann/json.hpp>
#include <string>

#include "qtele/analysis.h"
#include "qtele/protocols.h"

namespace qtele {

/// One JSON object per shot. Bit vectors are written as strings of '0'/'1'.
nlohmann::json shot_to_json(const ShotOutcome &shot, size_t shot_index);
/// Inverse of shot_to_json; the shot index is returned through `shot_index`.
ShotOutcome shot_from_json(const nlohmann::json &j, size_t *shot_index = nullptr);

nlohmann::json estimate_to_json(const FidelityEstimate &e);
nlohmann::json summary_to_json(const VariantSummary &s, bool qec_report = true, bool qed_report = true);

/// Rebuilds the per-input records from a JSON-lines shot log.
std::vector<ExperimentRecord> records_from_shot_log(std::istream &in, size_t job_groups);

}  // namespace qtele

#endif
