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

#include "nisq/circuit.hpp"

#include <algorithm>

#include "nisq/error.hpp"

namespace nisq {

QuantumCircuit::QuantumCircuit(std::string name, std::size_t num_qubits, std::vector<GateApplication> gates)
    : name_(std::move(name)), num_qubits_(num_qubits), gates_(std::move(gates)) {
    if (num_qubits_ == 0) throw CircuitError("circuit '" + name_ + "' must have at least one qubit");
    std::vector<bool> measured(num_qubits_, false);
    for (const auto& g : gates_) {
        check_gate(g);
        for (Qubit q : g.operands) {
            if (q >= num_qubits_) {
                throw CircuitError(to_string(g) + ": operand q[" + std::to_string(q) + "] outside register of size " +
                                   std::to_string(num_qubits_));
            }
            if (measured[q]) {
                throw CircuitError(to_string(g) + ": q[" + std::to_string(q) + "] was already measured");
            }
        }
        if (g.is_measurement()) measured[g.operands[0]] = true;
    }
}

bool QuantumCircuit::has_measurements() const {
    return std::any_of(gates_.begin(), gates_.end(), [](const auto& g) { return g.is_measurement(); });
}

std::vector<Qubit> QuantumCircuit::measured_qubits() const {
    std::vector<Qubit> out;
    for (const auto& g : gates_) {
        if (g.is_measurement()) out.push_back(g.operands[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

QuantumCircuit strip_measurements(const QuantumCircuit& c) {
    std::vector<GateApplication> gates;
    gates.reserve(c.gate_count());
    std::copy_if(c.gates().begin(), c.gates().end(), std::back_inserter(gates),
                 [](const auto& g) { return !g.is_measurement(); });
    return QuantumCircuit(c.name(), c.num_qubits(), std::move(gates));
}

std::vector<std::size_t> asap_layer_indices(const QuantumCircuit& c) {
    // frontier[q] = number of layers already holding a gate on q
    std::vector<std::size_t> frontier(c.num_qubits(), 0);
    std::vector<std::size_t> layer_of;
    layer_of.reserve(c.gate_count());
    for (const auto& g : c.gates()) {
        std::size_t layer = 0;
        for (Qubit q : g.operands) layer = std::max(layer, frontier[q]);
        for (Qubit q : g.operands) frontier[q] = layer + 1;
        layer_of.push_back(layer);
    }
    return layer_of;
}

LayeredCircuit compute_layers(const QuantumCircuit& c) {
    const auto layer_of = asap_layer_indices(c);
    LayeredCircuit out;
    for (std::size_t i = 0; i < layer_of.size(); ++i) {
        if (layer_of[i] >= out.layers.size()) out.layers.resize(layer_of[i] + 1);
        out.layers[layer_of[i]].push_back(c.gates()[i]);
    }
    return out;
}

std::size_t width(const QuantumCircuit& c) { return c.num_qubits(); }

std::size_t depth(const QuantumCircuit& c) {
    const auto layer_of = asap_layer_indices(c);
    return layer_of.empty() ? 0 : *std::max_element(layer_of.begin(), layer_of.end()) + 1;
}

}  // namespace nisq
