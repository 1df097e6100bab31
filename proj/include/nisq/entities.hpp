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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nisq/circuit.hpp"
#include "nisq/coupling_map.hpp"
#include "nisq/gate_set.hpp"
#include "nisq/selection_rule.hpp"

namespace nisq {

/// Concrete input data, e.g. {"n": 9}.
using InputValues = std::map<std::string, std::int64_t>;

struct InputParameter {
    std::string name;
    std::string type = "integer";
    std::string description;
};

struct Algorithm {
    std::string id;
    std::string name;
    std::string description;
    std::vector<InputParameter> parameters;
    bool parameterless = false;
};

struct Sdk {
    std::string id;
    std::string vendor;
    std::string description;
};

/// A realization of an algorithm in one SDK. The circuit is either static
/// (inline text or a file next to the document) or produced by a named
/// generator from the value of the rule's parameter.
struct Implementation {
    std::string id;
    std::string algorithm_id;
    std::string sdk;
    std::optional<QuantumCircuit> circuit;
    std::optional<std::string> generator;
    std::optional<SelectionRule> rule;

    /// Circuit for the given input. Throws nisq::Error when a generator
    /// input is missing or rejected.
    QuantumCircuit circuit_for(const InputValues& input) const;
};

struct QuantumComputer {
    std::string id;
    std::string vendor;
    std::size_t num_qubits = 0;
    NativeGateSet gate_set;
    CouplingMap coupling;
    double decoherence_time_us = 0.0;
    double layer_time_us = 0.0;
    std::set<std::string> sdks;
    std::string note;
};

/// Estimated maximum number of sequential layers the machine executes
/// within its decoherence budget: floor(decoherence_time_us / layer_time_us).
std::uint64_t max_depth(const QuantumComputer& qpu);

}  // namespace nisq
