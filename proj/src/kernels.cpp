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

#include "nisq/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "nisq/error.hpp"

namespace nisq::kernels {

namespace {

constexpr std::size_t kMaxArity = 3;

struct GateLayout {
    std::size_t arity = 0;
    std::array<Qubit, kMaxArity> sorted{};             // operand positions, ascending
    std::array<std::size_t, 1U << kMaxArity> offset{};  // local index -> amplitude offset
};

GateLayout make_layout(std::size_t dim, std::span<const Qubit> operands, const GateMatrix& m) {
    GateLayout layout;
    layout.arity = operands.size();
    if (layout.arity == 0 || layout.arity > kMaxArity || m.dim != (std::size_t{1} << layout.arity)) {
        throw Error("kernel: matrix does not match operand count");
    }
    for (std::size_t k = 0; k < layout.arity; ++k) {
        if ((std::size_t{1} << operands[k]) >= dim) throw Error("kernel: operand outside state");
        layout.sorted[k] = operands[k];
    }
    std::sort(layout.sorted.begin(), layout.sorted.begin() + layout.arity);
    for (std::size_t l = 0; l < m.dim; ++l) {
        std::size_t off = 0;
        for (std::size_t k = 0; k < layout.arity; ++k) {
            if ((l >> k) & 1U) off |= std::size_t{1} << operands[k];
        }
        layout.offset[l] = off;
    }
    return layout;
}

// Spreads r over the bit positions not occupied by the gate operands.
inline std::size_t insert_zero_bits(std::size_t r, const GateLayout& layout) {
    for (std::size_t k = 0; k < layout.arity; ++k) {
        const std::size_t low = r & ((std::size_t{1} << layout.sorted[k]) - 1);
        r = ((r >> layout.sorted[k]) << (layout.sorted[k] + 1)) | low;
    }
    return r;
}

inline void apply_block(Complex* state, std::size_t base, const GateLayout& layout, const GateMatrix& m) {
    std::array<Complex, 1U << kMaxArity> in{};
    const std::size_t local = m.dim;
    for (std::size_t l = 0; l < local; ++l) in[l] = state[base + layout.offset[l]];
    for (std::size_t row = 0; row < local; ++row) {
        Complex acc{};
        const Complex* mrow = m.entries.data() + row * local;
        for (std::size_t l = 0; l < local; ++l) acc += mrow[l] * in[l];
        state[base + layout.offset[row]] = acc;
    }
}

void check_state(std::span<const Complex> state) {
    if (state.empty() || !std::has_single_bit(state.size())) throw Error("kernel: state size must be a power of two");
}

struct MarginalLayout {
    std::vector<Qubit> measured;
    std::vector<Qubit> rest;
};

MarginalLayout make_marginal_layout(std::size_t num_qubits, std::span<const Qubit> measured) {
    MarginalLayout ml;
    std::vector<bool> seen(num_qubits, false);
    for (Qubit q : measured) {
        if (q >= num_qubits || seen[q]) throw Error("kernel: measured qubits must be distinct and in range");
        seen[q] = true;
        ml.measured.push_back(q);
    }
    for (Qubit q = 0; q < num_qubits; ++q) {
        if (!seen[q]) ml.rest.push_back(q);
    }
    return ml;
}

inline std::size_t deposit(std::size_t bits, const std::vector<Qubit>& positions) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        if ((bits >> k) & 1U) out |= std::size_t{1} << positions[k];
    }
    return out;
}

}  // namespace

namespace serial {

void apply_gate(std::span<Complex> state, std::span<const Qubit> operands, const GateMatrix& m) {
    check_state(state);
    const GateLayout layout = make_layout(state.size(), operands, m);
    const std::size_t count = state.size() >> layout.arity;
    for (std::size_t r = 0; r < count; ++r) apply_block(state.data(), insert_zero_bits(r, layout), layout, m);
}

double norm_squared(std::span<const Complex> state) {
    double acc = 0.0;
    for (const auto& a : state) acc += std::norm(a);
    return acc;
}

std::vector<double> marginal_probabilities(std::span<const Complex> state, std::span<const Qubit> measured) {
    check_state(state);
    const auto ml = make_marginal_layout(static_cast<std::size_t>(std::countr_zero(state.size())), measured);
    std::vector<double> out(std::size_t{1} << ml.measured.size(), 0.0);
    for (std::size_t i = 0; i < state.size(); ++i) {
        std::size_t o = 0;
        for (std::size_t k = 0; k < ml.measured.size(); ++k) o |= ((i >> ml.measured[k]) & 1U) << k;
        out[o] += std::norm(state[i]);
    }
    return out;
}

}  // namespace serial

namespace omp {

void apply_gate(std::span<Complex> state, std::span<const Qubit> operands, const GateMatrix& m) {
    check_state(state);
    const GateLayout layout = make_layout(state.size(), operands, m);
    const auto count = static_cast<std::int64_t>(state.size() >> layout.arity);
    Complex* data = state.data();
#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(count) >= kParallelThreshold)
    for (std::int64_t r = 0; r < count; ++r) {
        apply_block(data, insert_zero_bits(static_cast<std::size_t>(r), layout), layout, m);
    }
}

double norm_squared(std::span<const Complex> state) {
    const auto n = static_cast<std::int64_t>(state.size());
    const Complex* data = state.data();
    double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static) if (state.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) acc += std::norm(data[i]);
    return acc;
}

std::vector<double> marginal_probabilities(std::span<const Complex> state, std::span<const Qubit> measured) {
    check_state(state);
    const auto ml = make_marginal_layout(static_cast<std::size_t>(std::countr_zero(state.size())), measured);
    const auto outcomes = static_cast<std::int64_t>(std::size_t{1} << ml.measured.size());
    std::size_t measured_mask = 0;
    for (Qubit q : ml.measured) measured_mask |= std::size_t{1} << q;
    const std::size_t rest_mask = (state.size() - 1) & ~measured_mask;
    std::vector<double> out(static_cast<std::size_t>(outcomes), 0.0);
    const Complex* data = state.data();
    // Each outcome sums its amplitudes in ascending index order, as the serial kernel does.
#pragma omp parallel for schedule(dynamic) if (state.size() >= kParallelThreshold && outcomes > 1)
    for (std::int64_t o = 0; o < outcomes; ++o) {
        const std::size_t fixed = deposit(static_cast<std::size_t>(o), ml.measured);
        double acc = 0.0;
        std::size_t r = 0;
        do {
            acc += std::norm(data[fixed | r]);
            r = (r - rest_mask) & rest_mask;
        } while (r != 0);
        out[static_cast<std::size_t>(o)] = acc;
    }
    return out;
}

}  // namespace omp

}  // namespace nisq::kernels
