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

#include "nisq/gate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nisq/error.hpp"

namespace nisq {

namespace {

constexpr std::array<GateInfo, 19> kCatalog{{
    {GateKind::I, "id", 1, 0},
    {GateKind::X, "x", 1, 0},
    {GateKind::Y, "y", 1, 0},
    {GateKind::Z, "z", 1, 0},
    {GateKind::H, "h", 1, 0},
    {GateKind::S, "s", 1, 0},
    {GateKind::SDG, "sdg", 1, 0},
    {GateKind::T, "t", 1, 0},
    {GateKind::TDG, "tdg", 1, 0},
    {GateKind::SX, "sx", 1, 0},
    {GateKind::RX, "rx", 1, 1},
    {GateKind::RY, "ry", 1, 1},
    {GateKind::RZ, "rz", 1, 1},
    {GateKind::U3, "u3", 1, 3},
    {GateKind::CX, "cx", 2, 0},
    {GateKind::CZ, "cz", 2, 0},
    {GateKind::SWAP, "swap", 2, 0},
    {GateKind::CCX, "ccx", 3, 0},
    {GateKind::MEASURE, "measure", 1, 0},
}};

constexpr std::array<GateKind, 19> kAllKinds{
    GateKind::I,  GateKind::X,  GateKind::Y,  GateKind::Z,  GateKind::H,    GateKind::S,   GateKind::SDG,
    GateKind::T,  GateKind::TDG, GateKind::SX, GateKind::RX, GateKind::RY,  GateKind::RZ,  GateKind::U3,
    GateKind::CX, GateKind::CZ, GateKind::SWAP, GateKind::CCX, GateKind::MEASURE,
};

GateMatrix diagonal(std::initializer_list<Complex> d) {
    GateMatrix m{d.size(), std::vector<Complex>(d.size() * d.size())};
    std::size_t i = 0;
    for (const auto& v : d) {
        m.entries[i * m.dim + i] = v;
        ++i;
    }
    return m;
}

GateMatrix dense2(Complex a, Complex b, Complex c, Complex d) { return GateMatrix{2, {a, b, c, d}}; }

GateMatrix permutation(std::initializer_list<std::size_t> image) {
    // image[col] is the row the basis state `col` is sent to.
    GateMatrix m{image.size(), std::vector<Complex>(image.size() * image.size())};
    std::size_t col = 0;
    for (auto row : image) {
        m.entries[row * m.dim + col] = 1.0;
        ++col;
    }
    return m;
}

}  // namespace

const GateInfo& gate_info(GateKind kind) { return kCatalog[static_cast<std::size_t>(kind)]; }

std::string_view gate_name(GateKind kind) { return gate_info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    if (name == "i") return GateKind::I;
    for (const auto& info : kCatalog) {
        if (info.name == name) return info.kind;
    }
    return std::nullopt;
}

std::span<const GateKind> all_gate_kinds() { return kAllKinds; }

bool same_angle(double a, double b) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double d = std::fmod(a - b, two_pi);
    if (d < 0) d += two_pi;
    return d < 1e-9 || two_pi - d < 1e-9;
}

bool GateApplication::acts_on(Qubit q) const { return std::find(operands.begin(), operands.end(), q) != operands.end(); }

bool operator==(const GateApplication& a, const GateApplication& b) {
    if (a.kind != b.kind || a.operands != b.operands || a.params.size() != b.params.size()) return false;
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        if (!same_angle(a.params[i], b.params[i])) return false;
    }
    return true;
}

void check_gate(const GateApplication& gate) {
    const auto& info = gate_info(gate.kind);
    if (gate.operands.size() != info.arity) {
        throw CircuitError(std::string(info.name) + " expects " + std::to_string(info.arity) + " operand(s), got " +
                           std::to_string(gate.operands.size()));
    }
    if (gate.params.size() != info.param_count) {
        throw CircuitError(std::string(info.name) + " expects " + std::to_string(info.param_count) +
                           " parameter(s), got " + std::to_string(gate.params.size()));
    }
    for (std::size_t i = 0; i < gate.operands.size(); ++i) {
        for (std::size_t j = i + 1; j < gate.operands.size(); ++j) {
            if (gate.operands[i] == gate.operands[j]) {
                throw CircuitError(std::string(info.name) + " has duplicate operand q[" +
                                   std::to_string(gate.operands[i]) + "]");
            }
        }
    }
    for (double p : gate.params) {
        if (!std::isfinite(p)) throw CircuitError(std::string(info.name) + " has a non-finite parameter");
    }
}

std::string to_string(const GateApplication& gate) {
    std::ostringstream os;
    os << gate_name(gate.kind);
    if (!gate.params.empty()) {
        os << '(';
        for (std::size_t i = 0; i < gate.params.size(); ++i) os << (i ? "," : "") << gate.params[i];
        os << ')';
    }
    for (std::size_t i = 0; i < gate.operands.size(); ++i) os << (i ? "," : " ") << gate.operands[i];
    return os.str();
}

GateMatrix gate_matrix(GateKind kind, std::span<const double> params) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::sqrt(2.0);
    const auto& info = gate_info(kind);
    if (params.size() != info.param_count) {
        throw CircuitError(std::string(info.name) + ": wrong parameter count for matrix");
    }
    switch (kind) {
        case GateKind::I:
            return diagonal({1.0, 1.0});
        case GateKind::X:
            return dense2(0.0, 1.0, 1.0, 0.0);
        case GateKind::Y:
            return dense2(0.0, -1i, 1i, 0.0);
        case GateKind::Z:
            return diagonal({1.0, -1.0});
        case GateKind::H:
            return dense2(r, r, r, -r);
        case GateKind::S:
            return diagonal({1.0, 1i});
        case GateKind::SDG:
            return diagonal({1.0, -1i});
        case GateKind::T:
            return diagonal({1.0, std::polar(1.0, std::numbers::pi / 4)});
        case GateKind::TDG:
            return diagonal({1.0, std::polar(1.0, -std::numbers::pi / 4)});
        case GateKind::SX:
            return dense2(0.5 + 0.5i, 0.5 - 0.5i, 0.5 - 0.5i, 0.5 + 0.5i);
        case GateKind::RX: {
            const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
            return dense2(c, -1i * s, -1i * s, c);
        }
        case GateKind::RY: {
            const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
            return dense2(c, -s, s, c);
        }
        case GateKind::RZ:
            return diagonal({std::polar(1.0, -params[0] / 2), std::polar(1.0, params[0] / 2)});
        case GateKind::U3: {
            const double theta = params[0], phi = params[1], lambda = params[2];
            const double c = std::cos(theta / 2), s = std::sin(theta / 2);
            return dense2(c, -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda));
        }
        case GateKind::CX:
            return permutation({0, 3, 2, 1});
        case GateKind::CZ:
            return diagonal({1.0, 1.0, 1.0, -1.0});
        case GateKind::SWAP:
            return permutation({0, 2, 1, 3});
        case GateKind::CCX:
            return permutation({0, 1, 2, 7, 4, 5, 6, 3});
        case GateKind::MEASURE:
            break;
    }
    throw CircuitError("measure has no unitary matrix");
}

}  // namespace nisq
