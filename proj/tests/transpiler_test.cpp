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

#include <fstream>
#include <numbers>
#include <random>

#include "nisq/coupling_map.hpp"
#include "nisq/error.hpp"
#include "nisq/gate_set.hpp"
#include "nisq/qasm.hpp"
#include "nisq/registry.hpp"
#include "nisq/transpiler.hpp"
#include "nisq/unitary.hpp"
#include "support/oracles.hpp"

using namespace nisq;

namespace {

constexpr double kPi = std::numbers::pi;

NativeGateSet bundled_gate_set(const std::string& name) {
    std::ifstream in(nisq::testing::bundled_registry() / "gatesets" / (name + ".json"));
    return NativeGateSet::from_json(nlohmann::json::parse(in));
}

QuantumComputer make_qpu(std::string id, CouplingMap map, const std::string& gate_set = "ibm-basis") {
    QuantumComputer q;
    q.id = std::move(id);
    q.vendor = "test";
    q.num_qubits = map.num_physical_qubits();
    q.gate_set = bundled_gate_set(gate_set);
    q.coupling = std::move(map);
    q.decoherence_time_us = 100;
    q.layer_time_us = 1;
    q.sdks = {"qiskit"};
    return q;
}

QuantumCircuit make(std::size_t n, std::vector<GateApplication> gates) {
    return QuantumCircuit("t", n, std::move(gates));
}

bool oracle_equivalent(const QuantumCircuit& a, const QuantumCircuit& b, const Layout& layout) {
    return nisq::testing::permuted_equivalent_oracle(a, b, layout, 1e-6);
}

void expect_compliant(const TranspiledCircuit& t, const QuantumComputer& qpu) {
    for (const auto& g : t.circuit.gates()) {
        EXPECT_TRUE(qpu.gate_set.is_native(g.kind)) << to_string(g) << " on " << qpu.id;
        if (g.operands.size() == 2) {
            EXPECT_TRUE(qpu.coupling.coupled(g.operands[0], g.operands[1])) << to_string(g) << " on " << qpu.id;
        }
        EXPECT_LE(g.operands.size(), 2u);
    }
    EXPECT_EQ(t.width, t.circuit.num_qubits());
    EXPECT_EQ(t.depth, depth(t.circuit));
}

}  // namespace

TEST(gate_set, bundled_sets_validate) {
    for (const char* name : {"ibm-basis", "rigetti-basis"}) {
        const auto gs = bundled_gate_set(name);
        EXPECT_TRUE(gs.validate().empty()) << name;
        EXPECT_EQ(NativeGateSet::from_json(gs.to_json()).to_json(), gs.to_json());
    }
}

TEST(gate_set, every_rule_is_unitary_equivalent) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-7, 7);
    for (const char* name : {"ibm-basis", "rigetti-basis"}) {
        const auto gs = bundled_gate_set(name);
        for (const auto& rule : gs.rules()) {
            const auto& info = gate_info(rule.from);
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<double> ps(info.param_count);
                for (auto& p : ps) p = angle(rng);
                std::vector<Qubit> ops;
                for (unsigned i = 0; i < info.arity; ++i) ops.push_back(i);
                const GateApplication g(rule.from, ops, ps);
                const auto expanded = make(info.arity, rule.expand(g));
                const auto direct = make(info.arity, expand_to_basis(g, gs));
                const auto expected = nisq::testing::unitary_oracle(make(info.arity, {g}));
                EXPECT_TRUE(nisq::testing::equal_up_to_phase(nisq::testing::unitary_oracle(expanded), expected, 1e-9))
                    << name << " " << gate_name(rule.from);
                EXPECT_TRUE(nisq::testing::equal_up_to_phase(nisq::testing::unitary_oracle(direct), expected, 1e-9))
                    << name << " " << gate_name(rule.from);
                for (const auto& out : direct.gates()) EXPECT_TRUE(gs.is_native(out.kind));
            }
        }
    }
}

TEST(gate_set, validation_problems) {
    const NativeGateSet no_entangler("x", {GateKind::RZ, GateKind::SX}, {});
    EXPECT_FALSE(no_entangler.validate().empty());
    const NativeGateSet not_universal("x", {GateKind::RZ, GateKind::CX}, {});
    EXPECT_FALSE(not_universal.validate().empty());
    const NativeGateSet no_rules("x", {GateKind::RZ, GateKind::SX, GateKind::CX}, {});
    EXPECT_FALSE(no_rules.validate().empty());
    EXPECT_THROW(expand_to_basis({GateKind::H, {0}}, no_rules), TranspileError);

    // A self-referential rule must be cut off rather than loop.
    DecompositionRule loop{GateKind::H, {{GateKind::H, {0}, {}}}};
    const NativeGateSet looping("x", {GateKind::RZ, GateKind::SX, GateKind::CX}, {loop});
    EXPECT_THROW(expand_to_basis({GateKind::H, {0}}, looping), TranspileError);
    EXPECT_FALSE(looping.validate().empty());
}

TEST(gate_set, from_json_errors) {
    EXPECT_THROW(NativeGateSet::from_json(nlohmann::json::object()), Error);
    EXPECT_THROW(NativeGateSet::from_json({{"name", "x"}, {"basis", {"cnot"}}}), Error);
    EXPECT_THROW(NativeGateSet::from_json({{"name", "x"},
                                           {"basis", {"rz"}},
                                           {"rules", {{{"from", "h"}, {"expansion", {{{"gate", "rz"}, {"qubits", {0}}, {"params", {"alpha"}}}}}}}}}),
                 Error);
}

TEST(decompose, examples) {
    const auto ibm = bundled_gate_set("ibm-basis");
    const auto h = decompose(make(1, {{GateKind::H, {0}}}), ibm);
    EXPECT_EQ(h.gates(), (std::vector<GateApplication>{
                             {GateKind::RZ, {0}, {kPi / 2}}, {GateKind::SX, {0}}, {GateKind::RZ, {0}, {kPi / 2}}}));
    EXPECT_TRUE(circuits_equivalent(make(1, {{GateKind::H, {0}}}), h, identity_layout(1)));

    const auto cx = make(2, {{GateKind::CX, {0, 1}}});
    EXPECT_EQ(decompose(cx, ibm), cx);

    const auto swap = decompose(make(2, {{GateKind::SWAP, {0, 1}}}), ibm);
    EXPECT_EQ(swap.gates(), (std::vector<GateApplication>{
                                {GateKind::CX, {0, 1}}, {GateKind::CX, {1, 0}}, {GateKind::CX, {0, 1}}}));
    EXPECT_TRUE(circuits_equivalent(make(2, {{GateKind::SWAP, {0, 1}}}), swap, identity_layout(2)));

    const auto ccx = decompose(make(3, {{GateKind::CCX, {0, 1, 2}}}), ibm);
    std::size_t two = 0, one = 0;
    for (const auto& g : ccx.gates()) (g.operands.size() == 2 ? two : one)++;
    EXPECT_EQ(two, 6u);

    const auto measured = decompose(make(1, {{GateKind::H, {0}}, {GateKind::MEASURE, {0}}}), ibm);
    EXPECT_EQ(measured.gates().back().kind, GateKind::MEASURE);
}

TEST(coupling_map, structure) {
    const CouplingMap m(4, {{2, 1}, {0, 1}, {1, 2}});
    EXPECT_EQ(m.edges(), (std::vector<CouplingMap::Edge>{{0, 1}, {1, 2}}));
    EXPECT_TRUE(m.coupled(2, 1));
    EXPECT_FALSE(m.coupled(0, 2));
    EXPECT_FALSE(m.is_connected());
    EXPECT_EQ(describe_components(m.components()), "{0,1,2} | {3}");
    EXPECT_TRUE(m.prefix_connected(3));
    EXPECT_FALSE(m.prefix_connected(4));
    EXPECT_THROW(CouplingMap(2, {{0, 0}}), Error);
    EXPECT_THROW(CouplingMap(2, {{0, 2}}), Error);

    const auto ring = CouplingMap(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    EXPECT_EQ(ring.shortest_path(0, 3, 6), (std::vector<Qubit>{0, 1, 2, 3}));
    EXPECT_EQ(ring.shortest_path(0, 4, 6), (std::vector<Qubit>{0, 5, 4}));
    EXPECT_EQ(ring.shortest_path(0, 4, 5), (std::vector<Qubit>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(CouplingMap::fully_connected(4).coupled(0, 3));
    EXPECT_EQ(CouplingMap::linear(3).edges().size(), 2u);
}

TEST(route, examples) {
    const auto linear = CouplingMap::linear(3);
    const auto c = make(3, {{GateKind::CX, {0, 2}}});
    const auto routed = route(c, linear);
    bool saw_swap = false;
    for (const auto& g : routed.circuit.gates()) {
        if (g.operands.size() == 2) EXPECT_TRUE(linear.coupled(g.operands[0], g.operands[1]));
        saw_swap = saw_swap || g.kind == GateKind::SWAP;
    }
    EXPECT_TRUE(saw_swap);
    EXPECT_TRUE(circuits_equivalent(c, routed.circuit, routed.final_layout));
    EXPECT_TRUE(oracle_equivalent(c, routed.circuit, routed.final_layout));
    EXPECT_NE(routed.final_layout, identity_layout(3));

    const auto compliant = make(3, {{GateKind::CX, {0, 1}}, {GateKind::H, {2}}, {GateKind::CX, {2, 1}}});
    const auto same = route(compliant, linear);
    EXPECT_EQ(same.circuit, compliant);
    EXPECT_EQ(same.final_layout, identity_layout(3));

    const auto singles = make(3, {{GateKind::H, {0}}, {GateKind::X, {2}}, {GateKind::RZ, {1}, {0.3}}});
    const auto unchanged = route(singles, CouplingMap(3, {{0, 2}, {1, 2}}));
    EXPECT_EQ(unchanged.circuit, singles);
    EXPECT_EQ(unchanged.final_layout, identity_layout(3));

    EXPECT_THROW(route(make(4, {}), linear), TranspileError);
}

TEST(route, measurements_follow_their_qubits) {
    const auto c = make(3, {{GateKind::H, {0}}, {GateKind::CX, {0, 2}}, {GateKind::MEASURE, {0}}, {GateKind::MEASURE, {2}}});
    const auto routed = route(c, CouplingMap::linear(3));
    std::vector<Qubit> measured;
    for (const auto& g : routed.circuit.gates())
        if (g.is_measurement()) measured.push_back(g.operands[0]);
    ASSERT_EQ(measured.size(), 2u);
    EXPECT_EQ(measured[0], routed.final_layout[0]);
    EXPECT_EQ(measured[1], routed.final_layout[2]);
}

TEST(circuits_equivalent, examples) {
    const auto c = make(2, {{GateKind::H, {0}}, {GateKind::CX, {0, 1}}});
    EXPECT_TRUE(circuits_equivalent(c, c, identity_layout(2)));
    EXPECT_FALSE(circuits_equivalent(make(1, {{GateKind::X, {0}}}), make(1, {{GateKind::H, {0}}}), identity_layout(1)));
    EXPECT_TRUE(circuits_equivalent(make(2, {{GateKind::SWAP, {0, 1}}}), make(2, {}), Layout{1, 0}));
    EXPECT_FALSE(circuits_equivalent(make(2, {{GateKind::SWAP, {0, 1}}}), make(2, {}), identity_layout(2)));
    // Global phase is ignored.
    EXPECT_TRUE(circuits_equivalent(make(1, {{GateKind::Z, {0}}}), make(1, {{GateKind::RZ, {0}, {kPi}}}),
                                    identity_layout(1)));
    EXPECT_THROW(circuits_equivalent(make(11, {}), make(11, {}), identity_layout(11)), Error);
}

TEST(transpile, examples) {
    const auto qpu = make_qpu("linear-5", CouplingMap::linear(5));
    const auto source = make(3, {{GateKind::H, {0}}, {GateKind::CX, {0, 1}}, {GateKind::CX, {1, 2}}});
    const auto t = transpile(source, qpu);
    expect_compliant(t, qpu);
    EXPECT_EQ(t.width, 3u);
    EXPECT_EQ(t.depth, nisq::testing::critical_path_oracle(t.circuit));
    EXPECT_TRUE(circuits_equivalent(source, t.circuit, t.final_layout));

    const auto native = make(2, {{GateKind::RZ, {0}, {0.1}}, {GateKind::SX, {1}}, {GateKind::CX, {0, 1}}});
    const auto fixed = transpile(native, qpu);
    EXPECT_EQ(fixed.circuit, native);
    EXPECT_EQ(fixed.depth, depth(native));
    EXPECT_EQ(fixed.width, width(native));

    EXPECT_THROW(transpile(make(6, {}), qpu), TranspileError);
}

TEST(transpile, bundled_profiles_random_circuits) {
    const auto registry = load_registry(nisq::testing::bundled_registry());
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = nisq::testing::random_circuit(rng, {static_cast<std::size_t>(1 + trial % 5), 12, false, true});
        for (const auto& qpu : registry.qpus()) {
            const auto t = transpile(c, qpu);
            expect_compliant(t, qpu);
            ASSERT_TRUE(circuits_equivalent(c, t.circuit, t.final_layout)) << qpu.id << "\n" << render_circuit(c);
            ASSERT_TRUE(oracle_equivalent(c, t.circuit, t.final_layout)) << qpu.id << "\n" << render_circuit(c);
            EXPECT_EQ(t.width, c.num_qubits());
        }
    }
}

TEST(transpile, deterministic_and_never_shrinks_non_native) {
    const auto qpu = make_qpu("ring", CouplingMap(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}), "rigetti-basis");
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = nisq::testing::random_circuit(rng, {4, 10, true, true});
        const auto a = transpile(c, qpu);
        const auto b = transpile(c, qpu);
        EXPECT_EQ(a.circuit, b.circuit);
        EXPECT_EQ(a.final_layout, b.final_layout);
        EXPECT_EQ(a.depth, b.depth);
        const bool has_foreign = std::any_of(c.gates().begin(), c.gates().end(),
                                             [&](const auto& g) { return !qpu.gate_set.is_native(g.kind); });
        if (has_foreign) EXPECT_GE(a.circuit.gate_count(), c.gate_count());
    }
}

TEST(transpile, depth_depends_on_coupling) {
    const auto cx02 = parse_circuit("qreg q[3]; cx q[0],q[2];");
    const auto linear = transpile(cx02, make_qpu("linear", CouplingMap::linear(3)));
    const auto full = transpile(cx02, make_qpu("full", CouplingMap::fully_connected(3)));
    EXPECT_GE(linear.depth, full.depth);
    EXPECT_GT(linear.depth, full.depth);
    EXPECT_EQ(full.depth, 1u);
}

TEST(transpile, skips_disconnected_tail_qubits) {
    // Prefix {0,1,2} is connected even though qubit 3 only attaches via 0.
    const auto qpu = make_qpu("tail", CouplingMap(4, {{0, 1}, {1, 2}, {0, 3}}));
    const auto c = make(2, {{GateKind::CX, {0, 1}}});
    const auto t = transpile(c, qpu);
    EXPECT_EQ(t.width, 2u);
    EXPECT_EQ(t.circuit, c);
}
