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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nisq/circuit.hpp"

namespace nisq {

/// Builds a circuit from the value of one input parameter.
using CircuitGenerator = std::function<QuantumCircuit(std::int64_t)>;

/// Built-in generators by id; nullptr when unknown.
const CircuitGenerator* find_generator(std::string_view id);
std::vector<std::string> generator_ids();

/// H on q[0], a CX chain q[i] -> q[i+1], then MEASURE on every qubit.
/// Accepts 1 <= n <= 32.
QuantumCircuit ghz_circuit(std::int64_t n);

}  // namespace nisq
