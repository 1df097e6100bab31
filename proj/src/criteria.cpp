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

#include "nisq/criteria.hpp"

#include <algorithm>
#include <exception>

#include "nisq/error.hpp"

namespace nisq {

namespace {

std::uint64_t limit_from(const nlohmann::json& config, std::string_view criterion) {
    if (!config.is_object() || !config.contains("limit") || !config["limit"].is_number_integer() ||
        config["limit"].get<std::int64_t>() < 0) {
        throw Error(std::string(criterion) + ": expected a non-negative integer \"limit\"");
    }
    return config["limit"].get<std::uint64_t>();
}

}  // namespace

FilterResult filter_implementations(const InputValues& input, std::span<const Implementation> impls) {
    FilterResult out;
    for (const auto& impl : impls) {
        if (!impl.rule) {
            out.warnings.push_back(impl.id + ": no selection rule, excluded");
            continue;
        }
        auto it = input.find(impl.rule->parameter);
        if (it == input.end()) {
            out.warnings.push_back(impl.id + ": input has no value for '" + impl.rule->parameter + "', excluded");
            continue;
        }
        if (processable(it->second, *impl.rule)) out.retained.push_back(&impl);
    }
    return out;
}

FilterResult filter_implementations(std::int64_t n, std::span<const Implementation> impls) {
    FilterResult out;
    for (const auto& impl : impls) {
        if (!impl.rule) {
            out.warnings.push_back(impl.id + ": no selection rule, excluded");
            continue;
        }
        if (processable(n, *impl.rule)) out.retained.push_back(&impl);
    }
    return out;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::vector<CriterionResult> run_plugins(const CriterionList& plugins, const Implementation& impl,
                                         const QuantumComputer& qpu, const TranspiledCircuit& transpiled) {
    std::vector<CriterionResult> out;
    out.reserve(plugins.size());
    for (const auto& plugin : plugins) {
        std::string name = "<unnamed>";
        try {
            name = plugin->name();
            CriterionResult r = plugin->evaluate(impl, qpu, transpiled);
            r.name = name;
            out.push_back(std::move(r));
        } catch (const std::exception& e) {
            out.push_back({name, Verdict::Fail, std::string("internal error: ") + e.what()});
        } catch (...) {
            out.push_back({name, Verdict::Fail, "internal error: unknown exception"});
        }
    }
    return out;
}

bool selectable(bool executable, std::span<const CriterionResult> verdicts) {
    return executable &&
           std::none_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.verdict == Verdict::Fail; });
}

CriterionResult MaxGateCountCriterion::evaluate(const Implementation&, const QuantumComputer&,
                                                const TranspiledCircuit& transpiled) const {
    const std::uint64_t count = transpiled.circuit.gate_count();
    const std::string numbers = std::to_string(count) + " gates, limit " + std::to_string(limit_);
    return {name(), count <= limit_ ? Verdict::Pass : Verdict::Fail, numbers};
}

CriterionResult MaxTwoQubitGateCountCriterion::evaluate(const Implementation&, const QuantumComputer&,
                                                        const TranspiledCircuit& transpiled) const {
    const auto& gates = transpiled.circuit.gates();
    const auto count = static_cast<std::uint64_t>(
        std::count_if(gates.begin(), gates.end(), [](const auto& g) { return g.operands.size() == 2; }));
    if (count == 0) return {name(), Verdict::NotApplicable, "no 2-qubit gates"};
    const std::string numbers = std::to_string(count) + " two-qubit gates, limit " + std::to_string(limit_);
    return {name(), count <= limit_ ? Verdict::Pass : Verdict::Fail, numbers};
}

CriterionCatalog CriterionCatalog::builtin() {
    CriterionCatalog catalog;
    catalog.add("max-gate-count", [](const nlohmann::json& config) {
        return std::make_shared<const MaxGateCountCriterion>(limit_from(config, "max-gate-count"));
    });
    catalog.add("max-two-qubit-gates", [](const nlohmann::json& config) {
        return std::make_shared<const MaxTwoQubitGateCountCriterion>(limit_from(config, "max-two-qubit-gates"));
    });
    return catalog;
}

void CriterionCatalog::add(std::string name, Factory factory) {
    auto it = std::find_if(factories_.begin(), factories_.end(), [&](const auto& f) { return f.first == name; });
    if (it != factories_.end()) {
        it->second = std::move(factory);
    } else {
        factories_.emplace_back(std::move(name), std::move(factory));
    }
}

bool CriterionCatalog::contains(std::string_view name) const {
    return std::any_of(factories_.begin(), factories_.end(), [&](const auto& f) { return f.first == name; });
}

std::vector<std::string> CriterionCatalog::names() const {
    std::vector<std::string> out;
    for (const auto& f : factories_) out.push_back(f.first);
    return out;
}

std::shared_ptr<const CriterionPlugin> CriterionCatalog::make(std::string_view name,
                                                              const nlohmann::json& config) const {
    auto it = std::find_if(factories_.begin(), factories_.end(), [&](const auto& f) { return f.first == name; });
    if (it == factories_.end()) throw Error("unknown criterion '" + std::string(name) + "'");
    return it->second(config);
}

}  // namespace nisq
