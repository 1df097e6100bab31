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

#include "nisq/gate_set.hpp"

#include <algorithm>

#include "nisq/error.hpp"

namespace nisq {

namespace {

GateKind kind_from_json(const nlohmann::json& value, const std::string& field) {
    if (!value.is_string()) throw Error(field + ": expected a gate name");
    auto kind = gate_kind_from_name(value.get<std::string>());
    if (!kind) throw Error(field + ": unknown gate '" + value.get<std::string>() + "'");
    return *kind;
}

void expand_into(const GateApplication& gate, const NativeGateSet& gs, unsigned level,
                 std::vector<GateApplication>& out) {
    if (gs.is_native(gate.kind)) {
        out.push_back(gate);
        return;
    }
    const DecompositionRule* rule = gs.rule_for(gate.kind);
    if (rule == nullptr) {
        throw TranspileError("gate set '" + gs.name() + "' has no decomposition rule for " +
                             std::string(gate_name(gate.kind)));
    }
    if (level >= kMaxExpansionDepth) {
        throw TranspileError("gate set '" + gs.name() + "': expansion of " + std::string(gate_name(gate.kind)) +
                             " does not reach the basis within " + std::to_string(kMaxExpansionDepth) + " levels");
    }
    for (const auto& child : rule->expand(gate)) expand_into(child, gs, level + 1, out);
}

}  // namespace

std::vector<std::string_view> rule_variables(GateKind from) {
    switch (gate_info(from).param_count) {
        case 1:
            return {"theta", "p0"};
        case 3:
            return {"theta", "phi", "lambda", "p0", "p1", "p2"};
        default:
            return {};
    }
}

std::vector<GateApplication> DecompositionRule::expand(const GateApplication& gate) const {
    // Positional aliases p0..p2 follow the named variables.
    std::vector<double> values(gate.params.begin(), gate.params.end());
    values.insert(values.end(), gate.params.begin(), gate.params.end());

    std::vector<GateApplication> out;
    out.reserve(expansion.size());
    for (const auto& t : expansion) {
        GateApplication g;
        g.kind = t.kind;
        for (unsigned idx : t.operands) g.operands.push_back(gate.operands.at(idx));
        for (const auto& p : t.params) g.params.push_back(p.evaluate(values));
        out.push_back(std::move(g));
    }
    return out;
}

NativeGateSet::NativeGateSet(std::string name, std::set<GateKind> basis, std::vector<DecompositionRule> rules)
    : name_(std::move(name)), basis_(std::move(basis)), rules_(std::move(rules)) {}

const DecompositionRule* NativeGateSet::rule_for(GateKind kind) const {
    auto it = std::find_if(rules_.begin(), rules_.end(), [&](const auto& r) { return r.from == kind; });
    return it == rules_.end() ? nullptr : &*it;
}

NativeGateSet NativeGateSet::from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error("gate set: expected a JSON object");
    if (!doc.contains("name") || !doc["name"].is_string()) throw Error("name: missing or not a string");
    if (!doc.contains("basis") || !doc["basis"].is_array()) throw Error("basis: missing or not an array");

    std::set<GateKind> basis;
    for (std::size_t i = 0; i < doc["basis"].size(); ++i) {
        basis.insert(kind_from_json(doc["basis"][i], "basis[" + std::to_string(i) + "]"));
    }

    std::vector<DecompositionRule> rules;
    if (doc.contains("rules")) {
        if (!doc["rules"].is_array()) throw Error("rules: not an array");
        for (std::size_t i = 0; i < doc["rules"].size(); ++i) {
            const auto& r = doc["rules"][i];
            const std::string field = "rules[" + std::to_string(i) + "]";
            if (!r.is_object() || !r.contains("from") || !r.contains("expansion") || !r["expansion"].is_array()) {
                throw Error(field + ": expected {from, expansion:[...]}");
            }
            DecompositionRule rule;
            rule.from = kind_from_json(r["from"], field + ".from");
            if (std::any_of(rules.begin(), rules.end(), [&](const auto& x) { return x.from == rule.from; })) {
                throw Error(field + ".from: duplicate rule for " + std::string(gate_name(rule.from)));
            }
            const auto vars = rule_variables(rule.from);
            for (std::size_t j = 0; j < r["expansion"].size(); ++j) {
                const auto& t = r["expansion"][j];
                const std::string tfield = field + ".expansion[" + std::to_string(j) + "]";
                if (!t.is_object() || !t.contains("gate") || !t.contains("qubits") || !t["qubits"].is_array()) {
                    throw Error(tfield + ": expected {gate, qubits:[...], params:[...]}");
                }
                GateTemplate tmpl{kind_from_json(t["gate"], tfield + ".gate"), {}, {}};
                for (const auto& q : t["qubits"]) {
                    if (!q.is_number_unsigned()) throw Error(tfield + ".qubits: expected operand indices");
                    tmpl.operands.push_back(q.get<unsigned>());
                }
                if (t.contains("params")) {
                    for (const auto& p : t["params"]) {
                        if (p.is_number()) {
                            tmpl.params.push_back(AngleExpr::constant(p.get<double>()));
                        } else if (p.is_string()) {
                            try {
                                tmpl.params.push_back(AngleExpr::parse(p.get<std::string>(), vars));
                            } catch (const ParseError& e) {
                                throw Error(tfield + ".params: '" + p.get<std::string>() + "': " + e.message());
                            }
                        } else {
                            throw Error(tfield + ".params: expected a number or an angle expression");
                        }
                    }
                }
                rule.expansion.push_back(std::move(tmpl));
            }
            rules.push_back(std::move(rule));
        }
    }
    return NativeGateSet(doc["name"].get<std::string>(), std::move(basis), std::move(rules));
}

nlohmann::json NativeGateSet::to_json() const {
    nlohmann::json doc;
    doc["name"] = name_;
    doc["basis"] = nlohmann::json::array();
    for (auto k : basis_) doc["basis"].push_back(gate_name(k));
    doc["rules"] = nlohmann::json::array();
    for (const auto& r : rules_) {
        nlohmann::json rj{{"from", gate_name(r.from)}, {"expansion", nlohmann::json::array()}};
        for (const auto& t : r.expansion) {
            nlohmann::json tj{{"gate", gate_name(t.kind)}, {"qubits", t.operands}, {"params", nlohmann::json::array()}};
            for (const auto& p : t.params) tj["params"].push_back(p.text());
            rj["expansion"].push_back(std::move(tj));
        }
        doc["rules"].push_back(std::move(rj));
    }
    return doc;
}

std::vector<std::string> NativeGateSet::validate() const {
    std::vector<std::string> problems;
    if (!basis_.contains(GateKind::CX) && !basis_.contains(GateKind::CZ)) {
        problems.push_back("basis has no 2-qubit entangling gate (cx or cz)");
    }
    const bool universal = (basis_.contains(GateKind::RZ) && basis_.contains(GateKind::SX)) ||
                           (basis_.contains(GateKind::RX) && basis_.contains(GateKind::RZ)) ||
                           basis_.contains(GateKind::U3);
    if (!universal) problems.push_back("basis cannot express every single-qubit unitary (needs {rz,sx}, {rx,rz} or {u3})");

    bool templates_ok = true;
    for (const auto& r : rules_) {
        const auto from = gate_info(r.from);
        if (r.from == GateKind::MEASURE) {
            problems.push_back("measure cannot be rewritten");
            templates_ok = false;
        }
        for (std::size_t j = 0; j < r.expansion.size(); ++j) {
            const auto& t = r.expansion[j];
            const auto info = gate_info(t.kind);
            const std::string where = "rule for " + std::string(from.name) + ", expansion[" + std::to_string(j) + "]";
            if (t.kind == GateKind::MEASURE) problems.push_back(where + ": measure is not allowed in an expansion");
            if (t.operands.size() != info.arity) problems.push_back(where + ": wrong operand count");
            if (t.params.size() != info.param_count) problems.push_back(where + ": wrong parameter count");
            for (std::size_t a = 0; a < t.operands.size(); ++a) {
                if (t.operands[a] >= from.arity) problems.push_back(where + ": operand index out of range");
                for (std::size_t b = a + 1; b < t.operands.size(); ++b) {
                    if (t.operands[a] == t.operands[b]) problems.push_back(where + ": duplicate operand");
                }
            }
        }
    }
    if (!problems.empty()) templates_ok = false;
    if (!templates_ok) return problems;

    for (GateKind kind : all_gate_kinds()) {
        if (is_native(kind)) continue;
        const auto& info = gate_info(kind);
        GateApplication probe(kind, {}, {});
        for (unsigned q = 0; q < info.arity; ++q) probe.operands.push_back(q);
        for (unsigned p = 0; p < info.param_count; ++p) probe.params.push_back(0.25 * (p + 1));
        try {
            expand_to_basis(probe, *this);
        } catch (const TranspileError& e) {
            problems.emplace_back(e.what());
        }
    }
    return problems;
}

std::vector<GateApplication> expand_to_basis(const GateApplication& gate, const NativeGateSet& gate_set) {
    std::vector<GateApplication> out;
    expand_into(gate, gate_set, 0, out);
    return out;
}

}  // namespace nisq
