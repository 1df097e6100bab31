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
#include <span>
#include <vector>

#include "nisq/gate.hpp"

// Dense statevector kernels. Amplitude index bit q holds qubit q.
//
// `serial` is the reference implementation; `omp` is the OpenMP version used
// by the simulator. Both produce bit-identical results for apply_gate and
// marginal_probabilities (the OpenMP versions keep the serial summation
// order); norm_squared may differ in the last ulp.
namespace nisq::kernels {

/// Regions smaller than this run single-threaded in the omp kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

namespace serial {

void apply_gate(std::span<Complex> state, std::span<const Qubit> operands, const GateMatrix& m);
double norm_squared(std::span<const Complex> state);
/// Entry o sums |a_i|^2 over indices whose measured bits spell o (bit k of o = measured[k]).
std::vector<double> marginal_probabilities(std::span<const Complex> state, std::span<const Qubit> measured);

}  // namespace serial

namespace omp {

void apply_gate(std::span<Complex> state, std::span<const Qubit> operands, const GateMatrix& m);
double norm_squared(std::span<const Complex> state);
std::vector<double> marginal_probabilities(std::span<const Complex> state, std::span<const Qubit> measured);

}  // namespace omp

}  // namespace nisq::kernels
