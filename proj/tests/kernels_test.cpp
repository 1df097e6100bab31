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

#include <gtest/gtest.h>

#include <random>

#include "nisq/kernels.hpp"
#include "support/oracles.hpp"

using namespace nisq;

namespace {

std::vector<Complex> random_state(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    std::vector<Complex> s(std::size_t{1} << n);
    double norm = 0;
    for (auto& a : s) {
        a = {d(rng), d(rng)};
        norm += std::norm(a);
    }
    for (auto& a : s) a /= std::sqrt(norm);
    return s;
}

}  // namespace

TEST(kernels, serial_and_omp_are_bit_identical) {
    std::mt19937_64 rng(40);
    for (std::size_t n : {3u, 12u, 15u}) {
        auto a = random_state(n, n);
        auto b = a;
        const auto c = nisq::testing::random_circuit(rng, {n, 40, false, true});
        for (const auto& g : c.gates()) {
            const auto m = gate_matrix(g);
            kernels::serial::apply_gate(a, g.operands, m);
            kernels::omp::apply_gate(b, g.operands, m);
        }
        ASSERT_EQ(a, b) << n;
        const std::vector<Qubit> measured{static_cast<Qubit>(n - 1), 0, 1};
        EXPECT_EQ(kernels::serial::marginal_probabilities(a, measured), kernels::omp::marginal_probabilities(b, measured));
        EXPECT_NEAR(kernels::serial::norm_squared(a), kernels::omp::norm_squared(b), 1e-12);
        EXPECT_NEAR(kernels::serial::norm_squared(a), 1.0, 1e-9);
    }
}

TEST(kernels, apply_gate_matches_oracle) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = nisq::testing::random_circuit(rng, {4, 1, false, true});
        const auto& g = c.gates()[0];
        auto state = random_state(4, static_cast<std::uint64_t>(trial));
        const auto u = nisq::testing::embed(g, 4);
        std::vector<Complex> expected(state.size());
        for (std::size_t i = 0; i < state.size(); ++i)
            for (std::size_t j = 0; j < state.size(); ++j) expected[i] += u[i][j] * state[j];
        kernels::serial::apply_gate(state, g.operands, gate_matrix(g));
        for (std::size_t i = 0; i < state.size(); ++i) ASSERT_NEAR(std::abs(state[i] - expected[i]), 0, 1e-12);
    }
}

TEST(kernels, marginal_probabilities) {
    const auto s = random_state(5, 9);
    const std::vector<Qubit> measured{4, 1};
    const auto p = kernels::serial::marginal_probabilities(s, measured);
    ASSERT_EQ(p.size(), 4u);
    std::vector<double> expected(4, 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) expected[((i >> 4) & 1U) | (((i >> 1) & 1U) << 1)] += std::norm(s[i]);
    for (std::size_t o = 0; o < 4; ++o) EXPECT_NEAR(p[o], expected[o], 1e-15);
}

TEST(kernels, marginal_edge_masks_agree) {
    const auto s = random_state(13, 5);
    std::vector<Qubit> all(13);
    for (std::size_t q = 0; q < all.size(); ++q) all[q] = static_cast<Qubit>(12 - q);
    for (const auto& measured : {all, std::vector<Qubit>{12}, std::vector<Qubit>{6, 2}}) {
        const auto a = kernels::serial::marginal_probabilities(s, measured);
        EXPECT_EQ(a, kernels::omp::marginal_probabilities(s, measured));
        double sum = 0;
        for (double p : a) sum += p;
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
}
