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
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nisq/circuit.hpp"
#include "nisq/transpiler.hpp"

namespace nisq {

using Statevector = std::vector<Complex>;

inline constexpr std::size_t kSimulatorQubitLimit = 20;

enum class KernelPolicy { Serial, Parallel };

/// State after applying every gate to |0...0>; MEASURE is ignored (deferred).
/// Amplitude index bit q holds qubit q.
Statevector simulate(const QuantumCircuit& c, KernelPolicy policy = KernelPolicy::Parallel);

/// Outcome bitstring -> occurrences. In each key the character for
/// measured[i] sits i places from the right.
using Counts = std::map<std::string, std::uint64_t>;

/// `shots` independent draws from the marginal distribution over `measured`.
///
/// Draw k uses the k-th output x of std::mt19937_64 seeded with `seed`, maps
/// it to u = (x >> 11) * 2^-53, and picks the first outcome (ascending
/// integer value, bit i = measured[i]) whose cumulative probability exceeds
/// u * total. Both engine and mapping are fully specified, so counts are
/// reproducible across platforms.
Counts sample(std::span<const Complex> state, std::span<const Qubit> measured, std::uint64_t shots,
              std::uint64_t seed);

struct ExecutionResult {
    std::string backend_id;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    Counts counts;
};

/// {backend, counts, seed, shots}
nlohmann::json to_json(const ExecutionResult& result);

/// A target that runs transpiled circuits. execute() must be deterministic
/// for a given (circuit, shots, seed) and safe to call concurrently.
class Backend {
public:
    virtual ~Backend() = default;

    virtual std::string id() const = 0;
    virtual std::set<std::string> supported_sdks() const = 0;
    virtual std::size_t max_qubits() const = 0;
    virtual ExecutionResult execute(const TranspiledCircuit& t, std::uint64_t shots, std::uint64_t seed) const = 0;
};

/// Local noiseless statevector simulator.
///
/// Measures the circuit's MEASUREd qubits, or every qubit when it has none.
/// Bitstrings are indexed by logical qubit: the physical qubit holding
/// logical qubit l (per final_layout) is reported at position l from the right.
class StatevectorBackend final : public Backend {
public:
    explicit StatevectorBackend(std::set<std::string> sdks, std::string id = "local-simulator")
        : id_(std::move(id)), sdks_(std::move(sdks)) {}

    std::string id() const override { return id_; }
    std::set<std::string> supported_sdks() const override { return sdks_; }
    std::size_t max_qubits() const override { return kSimulatorQubitLimit; }
    ExecutionResult execute(const TranspiledCircuit& t, std::uint64_t shots, std::uint64_t seed) const override;

private:
    std::string id_;
    std::set<std::string> sdks_;
};

/// Placeholder for vendor cloud delivery; every execution fails with "not connected".
class RemoteStubBackend final : public Backend {
public:
    RemoteStubBackend(std::string id, std::set<std::string> sdks, std::size_t max_qubits)
        : id_(std::move(id)), sdks_(std::move(sdks)), max_qubits_(max_qubits) {}

    std::string id() const override { return id_; }
    std::set<std::string> supported_sdks() const override { return sdks_; }
    std::size_t max_qubits() const override { return max_qubits_; }
    ExecutionResult execute(const TranspiledCircuit& t, std::uint64_t shots, std::uint64_t seed) const override;

private:
    std::string id_;
    std::set<std::string> sdks_;
    std::size_t max_qubits_;
};

/// Checks SDK support and capacity, then delegates to the backend.
/// Throws ExecutionError on SDK mismatch, capacity excess, or shots == 0.
ExecutionResult execute(const TranspiledCircuit& t, const Backend& backend, std::uint64_t shots,
                        std::uint64_t seed);

/// Physical qubits to measure, ordered by logical qubit.
std::vector<Qubit> logical_measurement_order(const TranspiledCircuit& t);

}  // namespace nisq
