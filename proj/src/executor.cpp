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

#include "nisq/executor.hpp"

#include <algorithm>
#include <random>

#include "nisq/error.hpp"
#include "nisq/kernels.hpp"

namespace nisq {

Statevector simulate(const QuantumCircuit& c, KernelPolicy policy) {
    if (c.num_qubits() > kSimulatorQubitLimit) {
        throw ExecutionError("simulator supports at most " + std::to_string(kSimulatorQubitLimit) + " qubits, got " +
                             std::to_string(c.num_qubits()));
    }
    Statevector state(std::size_t{1} << c.num_qubits());
    state[0] = 1.0;
    for (const auto& g : c.gates()) {
        if (g.is_measurement()) continue;
        const GateMatrix m = gate_matrix(g);
        if (policy == KernelPolicy::Parallel) {
            kernels::omp::apply_gate(state, g.operands, m);
        } else {
            kernels::serial::apply_gate(state, g.operands, m);
        }
    }
    return state;
}

Counts sample(std::span<const Complex> state, std::span<const Qubit> measured, std::uint64_t shots,
              std::uint64_t seed) {
    if (measured.empty()) throw ExecutionError("sample: no qubits to measure");
    if (shots == 0) throw ExecutionError("sample: shots must be at least 1");
    const std::vector<double> probs = kernels::omp::marginal_probabilities(state, measured);

    std::vector<double> cumulative(probs.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        running += probs[i];
        cumulative[i] = running;
    }
    const double total = running;
    if (!(total > 0.0)) throw ExecutionError("sample: state has zero norm");
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) last_nonzero = i;
    }

    std::mt19937_64 engine(seed);
    std::vector<std::uint64_t> hits(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t outcome = static_cast<std::size_t>(it - cumulative.begin());
        if (outcome > last_nonzero) outcome = last_nonzero;
        ++hits[outcome];
    }

    Counts counts;
    const std::size_t width = measured.size();
    for (std::size_t o = 0; o < hits.size(); ++o) {
        if (hits[o] == 0) continue;
        std::string key(width, '0');
        for (std::size_t i = 0; i < width; ++i) {
            if ((o >> i) & 1U) key[width - 1 - i] = '1';
        }
        counts.emplace(std::move(key), hits[o]);
    }
    return counts;
}

nlohmann::json to_json(const ExecutionResult& result) {
    return {{"backend", result.backend_id},
            {"shots", result.shots},
            {"seed", result.seed},
            {"counts", result.counts}};
}

std::vector<Qubit> logical_measurement_order(const TranspiledCircuit& t) {
    const auto& layout = t.final_layout.empty() ? identity_layout(t.circuit.num_qubits()) : t.final_layout;
    std::vector<Qubit> to_logical(layout.size());
    for (std::size_t l = 0; l < layout.size(); ++l) to_logical[layout[l]] = static_cast<Qubit>(l);

    std::vector<Qubit> physical = t.circuit.measured_qubits();
    if (physical.empty()) physical = identity_layout(t.circuit.num_qubits());
    std::sort(physical.begin(), physical.end(), [&](Qubit a, Qubit b) { return to_logical[a] < to_logical[b]; });
    return physical;
}

ExecutionResult StatevectorBackend::execute(const TranspiledCircuit& t, std::uint64_t shots,
                                            std::uint64_t seed) const {
    const Statevector state = simulate(t.circuit);
    const auto measured = logical_measurement_order(t);
    return ExecutionResult{id_, shots, seed, sample(state, measured, shots, seed)};
}

ExecutionResult RemoteStubBackend::execute(const TranspiledCircuit&, std::uint64_t, std::uint64_t) const {
    throw ExecutionError(id_ + ": not connected");
}

ExecutionResult execute(const TranspiledCircuit& t, const Backend& backend, std::uint64_t shots,
                        std::uint64_t seed) {
    if (shots == 0) throw ExecutionError("shots must be at least 1");
    const auto sdks = backend.supported_sdks();
    if (!sdks.contains(t.sdk)) {
        throw ExecutionError("backend " + backend.id() + " does not support sdk '" + t.sdk + "'");
    }
    if (t.width > backend.max_qubits()) {
        throw ExecutionError("circuit width " + std::to_string(t.width) + " exceeds backend " + backend.id() +
                             " capacity of " + std::to_string(backend.max_qubits()) + " qubits");
    }
    return backend.execute(t, shots, seed);
}

}  // namespace nisq
