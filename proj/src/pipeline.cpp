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

#include "nisq/pipeline.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "nisq/transpiler.hpp"

namespace nisq {

std::optional<ExecutabilityFacts> ReportRow::facts() const {
    if (!width || !depth) return std::nullopt;
    return ExecutabilityFacts{qpu_qubits, *width, qpu_max_depth, *depth, qpu_sdks, implementation_sdk};
}

namespace {

ReportRow analyze_pair(const Implementation& impl, const QuantumComputer& qpu, const InputValues& input,
                       const CriterionList& criteria) {
    ReportRow row;
    row.implementation_id = impl.id;
    row.qpu_id = qpu.id;
    row.qpu_qubits = qpu.num_qubits;
    row.qpu_max_depth = max_depth(qpu);
    row.implementation_sdk = impl.sdk;
    row.qpu_sdks = qpu.sdks;
    row.sdk_match = qpu.sdks.contains(impl.sdk);
    if (!row.sdk_match) {
        row.skip_reason = "sdk mismatch";
        return row;
    }

    std::optional<QuantumCircuit> source;
    try {
        source = impl.circuit_for(input);
    } catch (const Error& e) {
        row.skip_reason = std::string("circuit unavailable: ") + e.what();
        return row;
    }
    if (source->num_qubits() > qpu.num_qubits) {
        row.width = source->num_qubits();
        row.skip_reason = "circuit width " + std::to_string(source->num_qubits()) + " exceeds " +
                          std::to_string(qpu.num_qubits) + " physical qubits";
        return row;
    }

    try {
        TranspiledCircuit t = transpile(*source, qpu);
        t.sdk = impl.sdk;
        row.width = t.width;
        row.depth = t.depth;
        row.plugin_verdicts = run_plugins(criteria, impl, qpu, t);
    } catch (const Error& e) {
        row.skip_reason = std::string("transpilation failed: ") + e.what();
        return row;
    }
    row.executable = rederive_executable(row);
    return row;
}

// Smaller tuples rank first.
auto rank_key(const ReportRow& r) {
    return std::make_tuple(*r.depth, *r.width, r.qpu_qubits - *r.width, r.implementation_id, r.qpu_id);
}

}  // namespace

bool rederive_executable(const ReportRow& row) {
    const auto f = row.facts();
    return f.has_value() && selectable(executable(*f), row.plugin_verdicts);
}

AnalysisReport analyze(const Registry& registry, const std::string& algorithm_id, const InputValues& input,
                       const AnalyzeOptions& options) {
    const Algorithm* alg = registry.find_algorithm(algorithm_id);
    if (alg == nullptr) throw AnalysisError("unknown algorithm '" + algorithm_id + "'");
    for (const auto& p : alg->parameters) {
        if (!input.contains(p.name)) {
            throw AnalysisError("algorithm '" + algorithm_id + "' requires input '" + p.name + "'");
        }
    }
    for (const auto& [name, _] : input) {
        if (std::none_of(alg->parameters.begin(), alg->parameters.end(),
                         [&](const auto& p) { return p.name == name; })) {
            throw AnalysisError("algorithm '" + algorithm_id + "' has no input parameter '" + name + "'");
        }
    }

    AnalysisReport report;
    report.algorithm_id = algorithm_id;
    report.input = input;

    const auto impls = registry.implementations_of(algorithm_id);
    FilterResult filtered = filter_implementations(input, impls);
    report.warnings = std::move(filtered.warnings);
    for (const auto* impl : filtered.retained) report.processable.push_back(impl->id);

    const auto& qpus = registry.qpus();
    const std::size_t pairs = filtered.retained.size() * qpus.size();
    report.rows.resize(pairs);
    // Rows land at fixed indices, so the result does not depend on scheduling.
#pragma omp parallel for schedule(dynamic) if (options.parallel && pairs > 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs); ++k) {
        const auto i = static_cast<std::size_t>(k) / qpus.size();
        const auto j = static_cast<std::size_t>(k) % qpus.size();
        report.rows[static_cast<std::size_t>(k)] =
            analyze_pair(*filtered.retained[i], qpus[j], input, registry.criteria());
    }
    std::sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::tie(a.implementation_id, a.qpu_id) < std::tie(b.implementation_id, b.qpu_id);
    });
    return report;
}

const ReportRow* best_row(const AnalysisReport& report, const std::optional<std::string>& implementation_id,
                          const std::optional<std::string>& qpu_id) {
    const ReportRow* best = nullptr;
    for (const auto& row : report.rows) {
        if (!row.executable) continue;
        if (implementation_id && row.implementation_id != *implementation_id) continue;
        if (qpu_id && row.qpu_id != *qpu_id) continue;
        if (best == nullptr || rank_key(row) < rank_key(*best)) best = &row;
    }
    return best;
}

std::optional<Recommendation> select(const AnalysisReport& report) {
    const ReportRow* best = best_row(report, std::nullopt, std::nullopt);
    if (best == nullptr) return std::nullopt;
    std::string rationale = "depth " + std::to_string(*best->depth) + " <= " + std::to_string(best->qpu_max_depth) +
                            ", width " + std::to_string(*best->width) + " <= " + std::to_string(best->qpu_qubits) +
                            " qubits, sdk " + best->implementation_sdk;
    return Recommendation{best->implementation_id, best->qpu_id, std::move(rationale)};
}

nlohmann::json to_json(const ReportRow& row) {
    nlohmann::json j;
    j["implementation"] = row.implementation_id;
    j["qpu"] = row.qpu_id;
    j["width"] = row.width ? nlohmann::json(*row.width) : nlohmann::json(nullptr);
    j["depth"] = row.depth ? nlohmann::json(*row.depth) : nlohmann::json(nullptr);
    j["qpu_qubits"] = row.qpu_qubits;
    j["qpu_max_depth"] = row.qpu_max_depth;
    j["implementation_sdk"] = row.implementation_sdk;
    j["qpu_sdks"] = row.qpu_sdks;
    j["sdk_match"] = row.sdk_match;
    j["executable"] = row.executable;
    j["plugin_verdicts"] = nlohmann::json::array();
    for (const auto& v : row.plugin_verdicts) {
        j["plugin_verdicts"].push_back({{"name", v.name}, {"verdict", verdict_name(v.verdict)}, {"reason", v.reason}});
    }
    j["skip_reason"] = row.skip_reason ? nlohmann::json(*row.skip_reason) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const AnalysisReport& report) {
    nlohmann::json j;
    j["algorithm"] = report.algorithm_id;
    j["input"] = report.input;
    j["processable"] = report.processable;
    j["warnings"] = report.warnings;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) j["rows"].push_back(to_json(row));
    return j;
}

nlohmann::json to_json(const Recommendation& rec) {
    return {{"implementation", rec.implementation_id}, {"qpu", rec.qpu_id}, {"rationale", rec.rationale}};
}

}  // namespace nisq
