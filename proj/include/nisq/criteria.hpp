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
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nisq/entities.hpp"
#include "nisq/transpiler.hpp"

namespace nisq {

/// Implementations whose selection rule accepts the input.
struct FilterResult {
    std::vector<const Implementation*> retained;  // registry order preserved
    std::vector<std::string> warnings;            // implementations dropped for lack of a usable rule
};

/// Keeps implementations whose rule accepts `input[rule.parameter]`.
/// Implementations without a rule, or whose parameter is absent from the
/// input, are dropped with a warning.
FilterResult filter_implementations(const InputValues& input, std::span<const Implementation> impls);

/// Single-parameter form: `n` is bound to each rule's own parameter.
FilterResult filter_implementations(std::int64_t n, std::span<const Implementation> impls);

enum class Verdict { Pass, Fail, NotApplicable };

std::string_view verdict_name(Verdict v);

struct CriterionResult {
    std::string name;
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;

    friend bool operator==(const CriterionResult&, const CriterionResult&) = default;
};

/// An additional selection criterion evaluated on each transpiled pair.
/// Implementations must be pure and deterministic.
class CriterionPlugin {
public:
    virtual ~CriterionPlugin() = default;

    virtual std::string name() const = 0;
    virtual CriterionResult evaluate(const Implementation& impl, const QuantumComputer& qpu,
                                     const TranspiledCircuit& transpiled) const = 0;
};

using CriterionList = std::vector<std::shared_ptr<const CriterionPlugin>>;

/// Verdicts in registration order. A plugin that throws yields Fail with the
/// error text as reason.
std::vector<CriterionResult> run_plugins(const CriterionList& plugins, const Implementation& impl,
                                         const QuantumComputer& qpu, const TranspiledCircuit& transpiled);

/// Executable and no plugin failed.
bool selectable(bool executable, std::span<const CriterionResult> verdicts);

/// Fails pairs whose transpiled circuit has more than `limit` gates.
class MaxGateCountCriterion final : public CriterionPlugin {
public:
    explicit MaxGateCountCriterion(std::uint64_t limit) : limit_(limit) {}

    std::string name() const override { return "max-gate-count"; }
    CriterionResult evaluate(const Implementation&, const QuantumComputer&,
                             const TranspiledCircuit& transpiled) const override;

private:
    std::uint64_t limit_;
};

/// Fails pairs whose transpiled circuit has more than `limit` 2-qubit gates.
class MaxTwoQubitGateCountCriterion final : public CriterionPlugin {
public:
    explicit MaxTwoQubitGateCountCriterion(std::uint64_t limit) : limit_(limit) {}

    std::string name() const override { return "max-two-qubit-gates"; }
    CriterionResult evaluate(const Implementation&, const QuantumComputer&,
                             const TranspiledCircuit& transpiled) const override;

private:
    std::uint64_t limit_;
};

/// Named criterion factories used by the registry manifest (plugins.json).
class CriterionCatalog {
public:
    using Factory = std::function<std::shared_ptr<const CriterionPlugin>(const nlohmann::json& config)>;

    /// Catalog with the built-in criteria registered.
    static CriterionCatalog builtin();

    void add(std::string name, Factory factory);
    bool contains(std::string_view name) const;
    std::vector<std::string> names() const;

    /// Throws nisq::Error for unknown names or invalid configuration.
    std::shared_ptr<const CriterionPlugin> make(std::string_view name, const nlohmann::json& config) const;

private:
    std::vector<std::pair<std::string, Factory>> factories_;
};

}  // namespace nisq
