// Copyright 2026 The NISQ Analyzer Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nisq/criteria.hpp"
#include "nisq/registry.hpp"

namespace nisq {

/// One (implementation, quantum computer) pair of an analysis.
struct ReportRow {
    std::string implementation_id;
    std::string qpu_id;
    std::optional<std::uint64_t> width;  // q1; source width when transpilation was rejected for size
    std::optional<std::uint64_t> depth;  // d1; absent when not transpiled
    std::uint64_t qpu_qubits = 0;        // q0
    std::uint64_t qpu_max_depth = 0;     // d0
    std::string implementation_sdk;
    std::set<std::string> qpu_sdks;
    bool sdk_match = false;
    bool executable = false;
    std::vector<CriterionResult> plugin_verdicts;
    std::optional<std::string> skip_reason;

    /// Facts for the executability rule; nullopt when width or depth is unknown.
    std::optional<ExecutabilityFacts> facts() const;
};

struct AnalysisReport {
    std::string algorithm_id;
    InputValues input;
    std::vector<std::string> processable;  // implementations accepted by their selection rule
    std::vector<std::string> warnings;
    std::vector<ReportRow> rows;  // sorted by (implementation_id, qpu_id)
};

struct Recommendation {
    std::string implementation_id;
    std::string qpu_id;
    std::string rationale;
};

struct AnalyzeOptions {
    bool parallel = true;
};

/// Filters implementations by their selection rules, transpiles each
/// survivor for every quantum computer sharing its SDK, and evaluates
/// executability. Pairs without a shared SDK are reported with skip_reason
/// "sdk mismatch" and are not transpiled. Per-pair failures are recorded in
/// the row, never raised.
///
/// Throws AnalysisError for an unknown algorithm, a missing input, or an
/// input the algorithm does not declare.
AnalysisReport analyze(const Registry& registry, const std::string& algorithm_id, const InputValues& input,
                       const AnalyzeOptions& options = {});

/// Re-derives a row's executable flag from its stored facts and verdicts.
bool rederive_executable(const ReportRow& row);

/// Among executable rows: minimal depth, then minimal width, then minimal
/// spare qubits (q0 - q1), then (implementation_id, qpu_id).
std::optional<Recommendation> select(const AnalysisReport& report);

/// Best executable row matching the optional filters, using the select() order.
const ReportRow* best_row(const AnalysisReport& report, const std::optional<std::string>& implementation_id,
                          const std::optional<std::string>& qpu_id);

/// Canonical JSON (sorted keys).
nlohmann::json to_json(const ReportRow& row);
nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const Recommendation& rec);

}  // namespace nisq
