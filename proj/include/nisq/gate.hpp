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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nisq {

using Qubit = std::uint32_t;
using Complex = std::complex<double>;

/// The fixed universal gate catalog.
enum class GateKind : std::uint8_t {
    I,
    X,
    Y,
    Z,
    H,
    S,
    SDG,
    T,
    TDG,
    SX,
    RX,
    RY,
    RZ,
    U3,
    CX,
    CZ,
    SWAP,
    CCX,
    MEASURE,
};

struct GateInfo {
    GateKind kind;
    std::string_view name;  // lowercase text-format name
    unsigned arity;
    unsigned param_count;
};

const GateInfo& gate_info(GateKind kind);
std::string_view gate_name(GateKind kind);

/// Accepts the lowercase text-format names; `id` and `i` both denote I.
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// Every catalog entry, in declaration order.
std::span<const GateKind> all_gate_kinds();

/// Angles are equal when they agree modulo 2*pi within 1e-9.
bool same_angle(double a, double b);

struct GateApplication {
    GateKind kind = GateKind::I;
    std::vector<Qubit> operands;
    std::vector<double> params;

    GateApplication() = default;
    GateApplication(GateKind k, std::vector<Qubit> ops, std::vector<double> ps = {})
        : kind(k), operands(std::move(ops)), params(std::move(ps)) {}

    bool is_measurement() const { return kind == GateKind::MEASURE; }
    bool acts_on(Qubit q) const;

    friend bool operator==(const GateApplication& a, const GateApplication& b);
};

/// Throws CircuitError when arity, parameter count, or operand distinctness is violated.
void check_gate(const GateApplication& gate);

std::string to_string(const GateApplication& gate);

/// Dense row-major matrix acting on 2^arity local basis states.
///
/// Local index bit k holds operand k, so for CX(control, target) the local
/// index is control + 2 * target.
struct GateMatrix {
    std::size_t dim = 0;
    std::vector<Complex> entries;

    Complex operator()(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
};

/// Matrix of a unitary catalog gate. Throws CircuitError for MEASURE.
GateMatrix gate_matrix(GateKind kind, std::span<const double> params);
inline GateMatrix gate_matrix(const GateApplication& gate) { return gate_matrix(gate.kind, gate.params); }

}  // namespace nisq
