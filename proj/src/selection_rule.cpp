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

#include "nisq/selection_rule.hpp"

namespace nisq {

namespace {

// Smaller(a, b) holds when a < b.
bool smaller(std::int64_t a, std::int64_t b) { return a < b; }
bool smaller(std::uint64_t a, std::uint64_t b) { return a < b; }
// Greater(a, b) holds when a > b.
bool greater(std::int64_t a, std::int64_t b) { return a > b; }

}  // namespace

bool processable(std::int64_t n, const SelectionRule& rule) {
    return !smaller(n, rule.lower_bound) && !greater(n, rule.upper_bound);
}

bool executable(const ExecutabilityFacts& f) {
    const bool qubits = !smaller(f.provided_qubits, f.required_qubits);
    const bool depth = !smaller(f.max_depth, f.required_depth);
    const bool sdk = !f.implementation_sdk.empty() && f.qpu_sdks.contains(f.implementation_sdk);
    return qubits && depth && sdk;
}

std::string_view conjunct_name(Conjunct c) {
    switch (c) {
        case Conjunct::Qubits: return "Qubits";
        case Conjunct::Depth: return "Depth";
        case Conjunct::Sdk: return "Sdk";
    }
    return "?";
}

std::vector<Conjunct> failed_conjuncts(const ExecutabilityFacts& f) {
    std::vector<Conjunct> out;
    if (smaller(f.provided_qubits, f.required_qubits)) out.push_back(Conjunct::Qubits);
    if (smaller(f.max_depth, f.required_depth)) out.push_back(Conjunct::Depth);
    if (f.implementation_sdk.empty() || !f.qpu_sdks.contains(f.implementation_sdk)) out.push_back(Conjunct::Sdk);
    return out;
}

std::string explain(Conjunct c, const ExecutabilityFacts& f) {
    std::string out(conjunct_name(c));
    switch (c) {
        case Conjunct::Qubits:
            out += ": provides " + std::to_string(f.provided_qubits) + " qubit(s), requires " +
                   std::to_string(f.required_qubits);
            break;
        case Conjunct::Depth:
            out += ": max depth " + std::to_string(f.max_depth) + ", requires " + std::to_string(f.required_depth);
            break;
        case Conjunct::Sdk: {
            out += ": '" + f.implementation_sdk + "' not in {";
            bool first = true;
            for (const auto& s : f.qpu_sdks) {
                out += (first ? "" : ",") + s;
                first = false;
            }
            out += "}";
            break;
        }
    }
    return out;
}

}  // namespace nisq
