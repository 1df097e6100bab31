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

#include "nisq/transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nisq/error.hpp"
#include "nisq/unitary.hpp"

namespace nisq {

QuantumCircuit decompose(const QuantumCircuit& c, const NativeGateSet& basis) {
    std::vector<GateApplication> out;
    out.reserve(c.gate_count());
    for (const auto& g : c.gates()) {
        auto expanded = expand_to_basis(g, basis);
        out.insert(out.end(), std::make_move_iterator(expanded.begin()), std::make_move_iterator(expanded.end()));
    }
    return QuantumCircuit(c.name(), c.num_qubits(), std::move(out));
}

Layout identity_layout(std::size_t n) {
    Layout layout(n);
    std::iota(layout.begin(), layout.end(), Qubit{0});
    return layout;
}

RoutedCircuit route(const QuantumCircuit& c, const CouplingMap& map) {
    const std::size_t logical = c.num_qubits();
    const std::size_t physical = map.num_physical_qubits();
    if (logical > physical) {
        throw TranspileError("circuit width " + std::to_string(logical) + " exceeds " + std::to_string(physical) +
                             " physical qubits");
    }
    for (const auto& g : c.gates()) {
        if (g.operands.size() > 2) {
            throw TranspileError("route: " + std::string(gate_name(g.kind)) + " acts on more than two qubits");
        }
    }

    std::size_t region = logical;
    while (region < physical && !map.prefix_connected(region)) ++region;
    if (!map.prefix_connected(region)) throw TranspileError("route: coupling map is not connected");

    Layout to_physical = identity_layout(region);
    Layout to_logical = identity_layout(region);
    std::vector<GateApplication> out;
    out.reserve(c.gate_count());

    auto swap_physical = [&](Qubit p0, Qubit p1) {
        out.emplace_back(GateKind::SWAP, std::vector<Qubit>{p0, p1});
        std::swap(to_logical[p0], to_logical[p1]);
        to_physical[to_logical[p0]] = p0;
        to_physical[to_logical[p1]] = p1;
    };

    for (const auto& g : c.gates()) {
        if (g.is_measurement()) continue;
        if (g.operands.size() == 2) {
            const Qubit pa = to_physical[g.operands[0]];
            const Qubit pb = to_physical[g.operands[1]];
            if (!map.coupled(pa, pb)) {
                const auto path = map.shortest_path(pa, pb, region);
                if (path.size() < 2) throw TranspileError("route: no path between physical qubits");
                for (std::size_t i = 0; i + 2 < path.size(); ++i) swap_physical(path[i], path[i + 1]);
            }
        }
        GateApplication mapped = g;
        for (auto& q : mapped.operands) q = to_physical[q];
        out.push_back(std::move(mapped));
    }
    for (Qubit q : c.measured_qubits()) out.emplace_back(GateKind::MEASURE, std::vector<Qubit>{to_physical[q]});

    return RoutedCircuit{QuantumCircuit(c.name(), region, std::move(out)), std::move(to_physical)};
}

TranspiledCircuit transpile(const QuantumCircuit& c, const QuantumComputer& qpu) {
    if (c.num_qubits() > qpu.num_qubits) {
        throw TranspileError("circuit width " + std::to_string(c.num_qubits()) + " exceeds " +
                             std::to_string(qpu.num_qubits) + " physical qubits of " + qpu.id);
    }
    auto native = decompose(c, qpu.gate_set);
    auto routed = route(native, qpu.coupling);
    auto final_circuit = decompose(routed.circuit, qpu.gate_set);

    TranspiledCircuit t{std::move(final_circuit), c.name(), qpu.id, {}, 0, 0, std::move(routed.final_layout)};
    t.width = width(t.circuit);
    t.depth = depth(t.circuit);
    return t;
}

std::size_t permute_index(std::size_t index, const Layout& layout) {
    std::size_t out = 0;
    for (std::size_t l = 0; l < layout.size(); ++l) {
        if ((index >> l) & 1U) out |= std::size_t{1} << layout[l];
    }
    return out;
}

bool circuits_equivalent(const QuantumCircuit& a, const QuantumCircuit& b, const Layout& layout, double tolerance) {
    if (a.num_qubits() > b.num_qubits()) return false;
    if (layout.size() != b.num_qubits()) {
        throw CircuitError("layout size " + std::to_string(layout.size()) + " does not match circuit width " +
                           std::to_string(b.num_qubits()));
    }
    std::vector<bool> hit(layout.size(), false);
    for (Qubit p : layout) {
        if (p >= layout.size() || hit[p]) throw CircuitError("layout is not a permutation");
        hit[p] = true;
    }

    const QuantumCircuit padded(a.name(), b.num_qubits(), a.gates());
    const DenseMatrix ua = unitary_of(padded);
    const DenseMatrix ub = unitary_of(b);
    const std::size_t dim = ua.dim();

    std::vector<std::size_t> row_map(dim);
    for (std::size_t i = 0; i < dim; ++i) row_map[i] = permute_index(i, layout);

    // Expect ub(row_map[i], j) == phase * ua(i, j).
    std::size_t best_r = 0, best_c = 0;
    double best = -1.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t col = 0; col < dim; ++col) {
            const double m = std::abs(ua(r, col));
            if (m > best) {
                best = m;
                best_r = r;
                best_c = col;
            }
        }
    }
    const Complex anchor_b = ub(row_map[best_r], best_c);
    if (std::abs(anchor_b) < 1e-12) return false;
    const Complex phase = anchor_b / ua(best_r, best_c);
    if (std::abs(std::abs(phase) - 1.0) > tolerance) return false;

    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t col = 0; col < dim; ++col) {
            if (std::abs(ub(row_map[r], col) - phase * ua(r, col)) > tolerance) return false;
        }
    }
    return true;
}

}  // namespace nisq
