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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nisq/angle_expr.hpp"
#include "nisq/gate.hpp"

namespace nisq {

/// One gate of a rule expansion. Operands index the operands of the gate
/// being rewritten; params are angle expressions over its parameters.
struct GateTemplate {
    GateKind kind;
    std::vector<unsigned> operands;
    std::vector<AngleExpr> params;
};

struct DecompositionRule {
    GateKind from;
    std::vector<GateTemplate> expansion;

    /// Instantiates the expansion for a concrete application of `from`.
    std::vector<GateApplication> expand(const GateApplication& gate) const;
};

/// Parameter names usable in a rule's angle expressions.
///
/// 1-parameter gates bind `theta`; U3 binds `theta`, `phi`, `lambda`.
/// `p0`, `p1`, `p2` are positional aliases.
std::vector<std::string_view> rule_variables(GateKind from);

/// A quantum computer's physically implemented gates plus the rewrite table
/// that reaches them. MEASURE is always native.
class NativeGateSet {
public:
    NativeGateSet() = default;
    NativeGateSet(std::string name, std::set<GateKind> basis, std::vector<DecompositionRule> rules);

    /// Reads the gate-set document
    /// {name, basis:[...], rules:[{from, expansion:[{gate, qubits, params}]}]}.
    /// Throws nisq::Error naming the offending field.
    static NativeGateSet from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;

    const std::string& name() const { return name_; }
    const std::set<GateKind>& basis() const { return basis_; }
    const std::vector<DecompositionRule>& rules() const { return rules_; }

    bool is_native(GateKind kind) const { return kind == GateKind::MEASURE || basis_.contains(kind); }
    const DecompositionRule* rule_for(GateKind kind) const;

    /// Invariant violations: missing entangler, basis not universal for
    /// single-qubit unitaries, malformed templates, and catalog gates whose
    /// expansion never reaches the basis.
    std::vector<std::string> validate() const;

private:
    std::string name_;
    std::set<GateKind> basis_;
    std::vector<DecompositionRule> rules_;
};

inline constexpr unsigned kMaxExpansionDepth = 16;

/// Rewrites one gate into native gates by applying rules recursively.
/// Throws TranspileError when a gate has no rule or the chain is deeper than
/// kMaxExpansionDepth.
std::vector<GateApplication> expand_to_basis(const GateApplication& gate, const NativeGateSet& gate_set);

}  // namespace nisq
