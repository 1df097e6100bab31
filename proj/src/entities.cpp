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

#include "nisq/entities.hpp"

#include <cmath>

#include "nisq/error.hpp"
#include "nisq/generators.hpp"

namespace nisq {

QuantumCircuit Implementation::circuit_for(const InputValues& input) const {
    if (circuit) return *circuit;
    if (!generator) throw Error("implementation '" + id + "' has neither a circuit nor a generator");
    const CircuitGenerator* gen = find_generator(*generator);
    if (gen == nullptr) throw Error("implementation '" + id + "': unknown generator '" + *generator + "'");
    const std::string parameter = rule ? rule->parameter : "n";
    auto it = input.find(parameter);
    if (it == input.end()) {
        throw Error("implementation '" + id + "': generator '" + *generator + "' needs input '" + parameter + "'");
    }
    return (*gen)(it->second);
}

std::uint64_t max_depth(const QuantumComputer& qpu) {
    if (!(qpu.layer_time_us > 0.0) || !(qpu.decoherence_time_us > 0.0)) return 0;
    // The small slack keeps exact ratios such as 0.9 / 0.3 from flooring to one less.
    return static_cast<std::uint64_t>(std::floor(qpu.decoherence_time_us / qpu.layer_time_us + 1e-9));
}

}  // namespace nisq
