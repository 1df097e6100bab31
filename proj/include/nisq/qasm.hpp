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

#include <string>
#include <string_view>

#include "nisq/circuit.hpp"

namespace nisq {

/// Parses the OpenQASM-2 subset documented in docs/circuit-format.md.
///
/// Anything outside the grammar raises ParseError with the line and column of
/// the offending token; nothing is silently skipped.
QuantumCircuit parse_circuit(std::string_view text, std::string name = "circuit");

/// Canonical text form. parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const QuantumCircuit& c);

/// Shortest text that parses back to exactly `value`.
std::string format_angle(double value);

}  // namespace nisq
