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

#include "nisq/generators.hpp"

#include <map>

#include "nisq/error.hpp"

namespace nisq {

namespace {

const std::map<std::string, CircuitGenerator, std::less<>>& catalog() {
    static const std::map<std::string, CircuitGenerator, std::less<>> generators{
        {"ghz", ghz_circuit},
    };
    return generators;
}

}  // namespace

const CircuitGenerator* find_generator(std::string_view id) {
    const auto& c = catalog();
    auto it = c.find(id);
    return it == c.end() ? nullptr : &it->second;
}

std::vector<std::string> generator_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, _] : catalog()) ids.push_back(id);
    return ids;
}

QuantumCircuit ghz_circuit(std::int64_t n) {
    if (n < 1 || n > 32) throw Error("ghz: n must be in [1, 32], got " + std::to_string(n));
    const auto width = static_cast<std::size_t>(n);
    std::vector<GateApplication> gates;
    gates.emplace_back(GateKind::H, std::vector<Qubit>{0});
    for (Qubit q = 0; q + 1 < width; ++q) gates.emplace_back(GateKind::CX, std::vector<Qubit>{q, q + 1});
    for (Qubit q = 0; q < width; ++q) gates.emplace_back(GateKind::MEASURE, std::vector<Qubit>{q});
    return QuantumCircuit("ghz-" + std::to_string(n), width, std::move(gates));
}

}  // namespace nisq
