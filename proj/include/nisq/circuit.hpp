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

#include <cstddef>
#include <string>
#include <vector>

#include "nisq/gate.hpp"

namespace nisq {

/// Ordered gate list over `num_qubits` indexed qubits.
///
/// Immutable once constructed. The constructor enforces the circuit
/// invariants: every gate is well formed, every operand is in range, and a
/// MEASURE on a qubit is never followed by another gate on that qubit.
class QuantumCircuit {
public:
    QuantumCircuit(std::string name, std::size_t num_qubits, std::vector<GateApplication> gates = {});

    const std::string& name() const { return name_; }
    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<GateApplication>& gates() const { return gates_; }
    std::size_t gate_count() const { return gates_.size(); }

    bool has_measurements() const;
    /// Measured qubits in ascending order.
    std::vector<Qubit> measured_qubits() const;

    friend bool operator==(const QuantumCircuit& a, const QuantumCircuit& b) {
        return a.num_qubits_ == b.num_qubits_ && a.gates_ == b.gates_;
    }

private:
    std::string name_;
    std::size_t num_qubits_;
    std::vector<GateApplication> gates_;
};

/// Same circuit with every MEASURE removed.
QuantumCircuit strip_measurements(const QuantumCircuit& c);

/// Gates grouped into layers of mutually disjoint operand sets.
struct LayeredCircuit {
    std::vector<std::vector<GateApplication>> layers;

    std::size_t depth() const { return layers.size(); }
};

/// Layer index of every gate under as-soon-as-possible placement.
std::vector<std::size_t> asap_layer_indices(const QuantumCircuit& c);

/// Greedy ASAP layering by gate order. MEASURE is layered like any 1-qubit gate.
LayeredCircuit compute_layers(const QuantumCircuit& c);

std::size_t width(const QuantumCircuit& c);
std::size_t depth(const QuantumCircuit& c);

}  // namespace nisq
