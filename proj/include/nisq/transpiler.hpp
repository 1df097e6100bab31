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

#include "nisq/circuit.hpp"
#include "nisq/coupling_map.hpp"
#include "nisq/entities.hpp"
#include "nisq/gate_set.hpp"

namespace nisq {

/// Logical qubit -> physical qubit, one entry per output qubit.
using Layout = std::vector<Qubit>;

/// A circuit rewritten for one quantum computer.
///
/// `circuit` uses only native gates and every 2-qubit gate acts on a coupled
/// pair. `final_layout[l]` is the physical qubit holding logical qubit `l`
/// at the end of the circuit; the transpiled unitary equals the source
/// unitary followed by that permutation (up to global phase).
struct TranspiledCircuit {
    QuantumCircuit circuit;
    std::string source_id;
    std::string target_id;
    std::string sdk;  // SDK of the implementation, filled in by callers that know it
    std::size_t width = 0;
    std::size_t depth = 0;
    Layout final_layout;
};

/// Rewrites every gate into `basis` via its rule table. MEASURE passes through.
QuantumCircuit decompose(const QuantumCircuit& c, const NativeGateSet& basis);

struct RoutedCircuit {
    QuantumCircuit circuit;
    Layout final_layout;
};

/// Inserts SWAPs so every 2-qubit gate acts on a coupled pair.
///
/// The layout starts as the identity. For each uncoupled gate the first
/// operand is swapped along a breadth-first shortest path (lowest index wins
/// ties) until it neighbours the second. Routing uses the smallest prefix of
/// physical qubits [0, k), k >= width, whose induced subgraph is connected;
/// k is the width of the result. MEASUREs are deferred to the end and placed
/// on the final physical position of their qubit, in ascending logical
/// order.
///
/// Throws TranspileError when the circuit is wider than the map or contains
/// gates on more than two qubits.
RoutedCircuit route(const QuantumCircuit& c, const CouplingMap& map);

/// decompose -> route -> decompose, then measures width and depth.
TranspiledCircuit transpile(const QuantumCircuit& c, const QuantumComputer& qpu);

inline constexpr double kEquivalenceTolerance = 1e-6;

/// Whether `b` implements `a` followed by the qubit permutation `layout`,
/// up to global phase.
///
/// `layout` must be a permutation of b's qubits; when `a` is narrower than
/// `b` it is padded with idle qubits. Phase is aligned on the largest
/// magnitude entry of a's unitary; the result is the max absolute entry
/// difference compared against `tolerance`. Throws CircuitError beyond 10
/// qubits or when either circuit measures.
bool circuits_equivalent(const QuantumCircuit& a, const QuantumCircuit& b, const Layout& layout,
                         double tolerance = kEquivalenceTolerance);

/// Identity layout over n qubits.
Layout identity_layout(std::size_t n);

/// Basis index of the state reached when each qubit l of `index` is moved to layout[l].
std::size_t permute_index(std::size_t index, const Layout& layout);

}  // namespace nisq
