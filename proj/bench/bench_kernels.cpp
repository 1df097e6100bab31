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

// Serial and OpenMP statevector kernels side by side.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "nisq/executor.hpp"
#include "nisq/kernels.hpp"

namespace {

using nisq::Complex;
using nisq::Qubit;

std::vector<Complex> random_state(std::size_t n) {
    std::mt19937_64 rng(n);
    std::normal_distribution<double> d;
    std::vector<Complex> s(std::size_t{1} << n);
    for (auto& a : s) a = {d(rng), d(rng)};
    return s;
}

template <auto Apply>
void apply_cx(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    auto state = random_state(n);
    const nisq::GateApplication g(nisq::GateKind::CX, {0, static_cast<Qubit>(n - 1)});
    const auto m = nisq::gate_matrix(g);
    for (auto _ : st) {
        Apply(state, g.operands, m);
        benchmark::DoNotOptimize(state.data());
    }
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * static_cast<std::int64_t>(state.size()));
}

template <auto Marginal>
void marginal(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const auto state = random_state(n);
    const std::vector<Qubit> measured{0, 1, 2, 3};
    for (auto _ : st) benchmark::DoNotOptimize(Marginal(state, measured));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * static_cast<std::int64_t>(state.size()));
}

void simulate_ghz(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    std::vector<nisq::GateApplication> gates{{nisq::GateKind::H, {0}}};
    for (std::size_t q = 1; q < n; ++q) gates.emplace_back(nisq::GateKind::CX, std::vector<Qubit>{0, static_cast<Qubit>(q)});
    const nisq::QuantumCircuit c("ghz", n, gates);
    const auto policy = st.range(1) ? nisq::KernelPolicy::Parallel : nisq::KernelPolicy::Serial;
    for (auto _ : st) benchmark::DoNotOptimize(nisq::simulate(c, policy));
}

}  // namespace

BENCHMARK(apply_cx<nisq::kernels::serial::apply_gate>)->DenseRange(10, 20, 5);
BENCHMARK(apply_cx<nisq::kernels::omp::apply_gate>)->DenseRange(10, 20, 5);
BENCHMARK(marginal<nisq::kernels::serial::marginal_probabilities>)->DenseRange(10, 20, 5);
BENCHMARK(marginal<nisq::kernels::omp::marginal_probabilities>)->DenseRange(10, 20, 5);
BENCHMARK(simulate_ghz)->ArgsProduct({{12, 18}, {0, 1}});

BENCHMARK_MAIN();
