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
#include <string_view>
#include <vector>

namespace nisq {

/// Input restriction attached to an implementation: the named parameter
/// must lie in the inclusive interval [lower_bound, upper_bound].
struct SelectionRule {
    std::string implementation_id;
    std::string parameter = "n";
    std::int64_t lower_bound = 0;
    std::int64_t upper_bound = 0;
};

/// n >= lower_bound and n <= upper_bound.
bool processable(std::int64_t n, const SelectionRule& rule);

/// Facts about one (implementation, quantum computer) pair.
struct ExecutabilityFacts {
    std::uint64_t provided_qubits = 0;   // qubits of the quantum computer
    std::uint64_t required_qubits = 0;   // width of the transpiled circuit
    std::uint64_t max_depth = 0;         // depth the quantum computer can execute
    std::uint64_t required_depth = 0;    // depth of the transpiled circuit
    std::set<std::string> qpu_sdks;
    std::string implementation_sdk;
};

/// provided_qubits >= required_qubits, max_depth >= required_depth, and the
/// implementation's SDK is supported by the quantum computer.
bool executable(const ExecutabilityFacts& facts);

enum class Conjunct { Qubits, Depth, Sdk };

std::string_view conjunct_name(Conjunct c);

/// The conjuncts of executable() that are false, in Qubits, Depth, Sdk order.
std::vector<Conjunct> failed_conjuncts(const ExecutabilityFacts& facts);

/// "Qubits: provides 5 < requires 8"
std::string explain(Conjunct c, const ExecutabilityFacts& facts);

}  // namespace nisq
