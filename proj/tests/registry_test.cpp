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
#include <random>

#include <unistd.h>

#include "nisq/error.hpp"
#include "nisq/generators.hpp"
#include "nisq/registry.hpp"
#include "support/oracles.hpp"

using namespace nisq;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// A scratch copy of a fixture registry, removed on destruction.
class ScratchRegistry {
public:
    explicit ScratchRegistry(const fs::path& source = {}) {
        static int counter = 0;
        root_ = fs::temp_directory_path() /
                ("nisq-registry-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(root_);
        fs::create_directories(root_);
        if (!source.empty()) fs::copy(source, root_, fs::copy_options::recursive);
    }
    ~ScratchRegistry() { fs::remove_all(root_); }

    const fs::path& root() const { return root_; }

    void write(const fs::path& rel, const std::string& text) const {
        fs::create_directories((root_ / rel).parent_path());
        std::ofstream(root_ / rel) << text;
    }
    void write(const fs::path& rel, const json& doc) const { write(rel, doc.dump(2)); }

private:
    fs::path root_;
};

fs::path fixture(const char* name) { return nisq::testing::fixture_dir() / "registries" / name; }

std::vector<Diagnostic> only_problems(const fs::path& root) { return validate_registry(root); }

bool ends_with(const std::string& s, const std::string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

json qpu_doc() {
    return {{"id", "t-3"},          {"vendor", "IBM"},       {"qubits", 3},
            {"gateset", "ibm-basis"}, {"coupling", {{"edges", {{0, 1}, {1, 2}}}}},
            {"decoherence_us", 10.0}, {"layer_time_us", 1.0}, {"sdks", {"qiskit"}}};
}

json impl_doc() {
    return {{"id", "Extra"},
            {"algorithm", "shor"},
            {"sdk", "qiskit"},
            {"circuit", "qreg q[2]; h q[0]; cx q[0],q[1];"},
            {"rule", {{"parameter", "n"}, {"min", 0}, {"max", 3}}}};
}

}  // namespace

TEST(load_registry, bundled) {
    EXPECT_TRUE(validate_registry(nisq::testing::bundled_registry()).empty());
    const auto r = load_registry(nisq::testing::bundled_registry());
    ASSERT_NE(r.find_algorithm("shor"), nullptr);
    ASSERT_NE(r.find_implementation("Shor-15-Qiskit"), nullptr);
    ASSERT_NE(r.find_implementation("Shor-General-Forest"), nullptr);
    ASSERT_NE(r.find_qpu("ibmq-16"), nullptr);
    ASSERT_NE(r.find_qpu("ibmq-5"), nullptr);
    ASSERT_NE(r.find_qpu("forest-8"), nullptr);
    ASSERT_NE(r.find_sdk("qiskit"), nullptr);
    ASSERT_NE(r.find_sdk("forest"), nullptr);
    EXPECT_EQ(r.find_qpu("ibmq-16")->num_qubits, 16u);
    EXPECT_EQ(r.find_qpu("ibmq-16")->gate_set.name(), "ibm-basis");
    EXPECT_EQ(r.find_implementation("Shor-15-Qiskit")->rule->upper_bound, 15);
    EXPECT_EQ(r.find_implementation("Shor-15-Qiskit")->circuit->num_qubits(), 8u);
    EXPECT_EQ(r.find_algorithm("nope"), nullptr);

    auto sorted = [](const auto& v) {
        return std::is_sorted(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    };
    EXPECT_TRUE(sorted(r.algorithms()));
    EXPECT_TRUE(sorted(r.implementations()));
    EXPECT_TRUE(sorted(r.qpus()));
    EXPECT_TRUE(sorted(r.sdks()));
    for (const auto& q : r.qpus()) {
        EXPECT_EQ(q.coupling.num_physical_qubits(), q.num_qubits);
        EXPECT_FALSE(q.note.empty()) << "bundled profiles are marked illustrative";
    }
    EXPECT_EQ(r.implementations_of("shor").size(), 2u);
    ASSERT_NE(r.document(EntityKind::Qpu, "ibmq-16"), nullptr);
    EXPECT_EQ((*r.document(EntityKind::Qpu, "ibmq-16"))["qubits"], 16);
}

TEST(load_registry, bundled_circuits_fit_largest_qpu) {
    const auto r = load_registry(nisq::testing::bundled_registry());
    std::size_t largest = 0;
    for (const auto& q : r.qpus()) largest = std::max(largest, q.num_qubits);
    for (const auto& impl : r.implementations()) {
        const std::int64_t n = impl.rule->upper_bound;
        if (impl.circuit) {
            EXPECT_LE(impl.circuit->num_qubits(), largest) << impl.id;
        } else {
            EXPECT_LE(impl.circuit_for({{impl.rule->parameter, n}}).num_qubits(), largest) << impl.id;
        }
    }
}

TEST(load_registry, empty_and_missing_directories) {
    ScratchRegistry empty;
    for (const char* d : {"algorithms", "implementations", "qpus", "sdks"}) fs::create_directories(empty.root() / d);
    const auto r = load_registry(empty.root());
    EXPECT_TRUE(r.algorithms().empty());
    EXPECT_TRUE(r.qpus().empty());
    EXPECT_TRUE(validate_registry(empty.root()).empty());

    ScratchRegistry bare;
    EXPECT_NO_THROW(load_registry(bare.root()));
    EXPECT_FALSE(validate_registry(bare.root() / "does-not-exist").empty());
}

TEST(load_registry, missing_sdk_reference) {
    const auto diags = only_problems(fixture("missing_sdk"));
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_TRUE(ends_with(diags[0].path, "shor-15-cirq.json"));
    EXPECT_EQ(diags[0].field, "sdk");
    EXPECT_EQ(diags[0].message, "unknown sdk 'cirq'");
    try {
        load_registry(fixture("missing_sdk"));
        FAIL();
    } catch (const RegistryError& e) {
        EXPECT_EQ(e.diagnostics(), diags);
        EXPECT_NE(std::string(e.what()).find("shor-15-cirq.json"), std::string::npos);
    }
}

TEST(load_registry, disconnected_coupling_map) {
    const auto diags = only_problems(fixture("disconnected"));
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_TRUE(ends_with(diags[0].path, "split-4.json"));
    EXPECT_EQ(diags[0].field, "coupling");
    EXPECT_EQ(diags[0].message, "coupling map is disconnected: components {0,1} | {2,3}");
    EXPECT_THROW(load_registry(fixture("disconnected")), RegistryError);
}

TEST(load_registry, duplicate_id) {
    const auto diags = only_problems(fixture("duplicate_id"));
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_EQ(diags[0].field, "id");
    EXPECT_EQ(diags[0].message.rfind("duplicate implementation id 'Shor-15-Qiskit'", 0), 0u);
    EXPECT_THROW(load_registry(fixture("duplicate_id")), RegistryError);
}

TEST(load_registry, malformed_documents) {
    struct Case {
        const char* file;
        json doc;
        const char* field;
    };
    json bad_rule = impl_doc();
    bad_rule["rule"]["min"] = 5;
    json undeclared = impl_doc();
    undeclared["rule"]["parameter"] = "m";
    json both = impl_doc();
    both["generator"] = "ghz";
    json generator_no_rule = impl_doc();
    generator_no_rule.erase("circuit");
    generator_no_rule.erase("rule");
    generator_no_rule["generator"] = "ghz";
    json unknown_generator = impl_doc();
    unknown_generator.erase("circuit");
    unknown_generator["generator"] = "qft";
    json bad_circuit = impl_doc();
    bad_circuit["circuit"] = "qreg q[2]; foo q[0];";
    json missing_file = impl_doc();
    missing_file["circuit"] = "nowhere.qasm";
    json unknown_algorithm = impl_doc();
    unknown_algorithm["algorithm"] = "grover";
    json zero_layer = qpu_doc();
    zero_layer["layer_time_us"] = 0.0;
    json bad_edge = qpu_doc();
    bad_edge["coupling"]["edges"] = {{0, 3}};
    json unknown_gateset = qpu_doc();
    unknown_gateset["gateset"] = "ion-basis";
    json no_sdks = qpu_doc();
    no_sdks["sdks"] = json::array();
    json no_params = {{"id", "grover"}, {"name", "Grover"}};

    const std::vector<Case> cases{
        {"implementations/x.json", bad_rule, "rule"},
        {"implementations/x.json", undeclared, "rule.parameter"},
        {"implementations/x.json", both, "circuit"},
        {"implementations/x.json", generator_no_rule, "rule"},
        {"implementations/x.json", unknown_generator, "generator"},
        {"implementations/x.json", bad_circuit, "circuit"},
        {"implementations/x.json", missing_file, "circuit"},
        {"implementations/x.json", unknown_algorithm, "algorithm"},
        {"qpus/x.json", zero_layer, "layer_time_us"},
        {"qpus/x.json", bad_edge, "coupling.edges"},
        {"qpus/x.json", unknown_gateset, "gateset"},
        {"qpus/x.json", no_sdks, "sdks"},
        {"algorithms/x.json", no_params, "parameters"},
    };
    for (const auto& c : cases) {
        ScratchRegistry reg(fixture("shor15_only"));
        reg.write(c.file, c.doc);
        const auto diags = validate_registry(reg.root());
        ASSERT_EQ(diags.size(), 1u) << c.doc.dump();
        EXPECT_EQ(diags[0].field, c.field) << diags[0].to_string();
        EXPECT_TRUE(ends_with(diags[0].path, "x.json")) << diags[0].to_string();
        EXPECT_THROW(load_registry(reg.root()), RegistryError);
    }
}

TEST(load_registry, circuit_errors_carry_position) {
    ScratchRegistry reg(fixture("shor15_only"));
    json doc = impl_doc();
    doc["circuit"] = "qreg q[2];\nh q[0];\nfoo q[1];";
    reg.write("implementations/x.json", doc);
    const auto diags = validate_registry(reg.root());
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_NE(diags[0].message.find("line 3"), std::string::npos) << diags[0].message;
}

TEST(load_registry, invalid_json_reported) {
    ScratchRegistry reg(fixture("shor15_only"));
    reg.write("sdks/broken.json", std::string("{ \"id\": "));
    const auto diags = validate_registry(reg.root());
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_TRUE(ends_with(diags[0].path, "broken.json"));
}

TEST(load_registry, inline_and_generated_sources) {
    ScratchRegistry reg(fixture("shor15_only"));
    reg.write("implementations/x.json", impl_doc());
    json gen = impl_doc();
    gen["id"] = "Gen";
    gen.erase("circuit");
    gen["generator"] = "ghz";
    reg.write("implementations/y.json", gen);
    const auto r = load_registry(reg.root());
    EXPECT_EQ(r.find_implementation("Extra")->circuit->gate_count(), 2u);
    const auto* g = r.find_implementation("Gen");
    ASSERT_TRUE(g->generator.has_value());
    EXPECT_EQ(g->circuit_for({{"n", 3}}), ghz_circuit(3));
}

TEST(load_registry, plugins_manifest) {
    ScratchRegistry reg(fixture("shor15_only"));
    reg.write("plugins.json", json{{"criteria", {{{"name", "max-gate-count"}, {"limit", 5000}}}}});
    const auto r = load_registry(reg.root());
    ASSERT_EQ(r.criteria().size(), 1u);
    EXPECT_EQ(r.criteria()[0]->name(), "max-gate-count");

    reg.write("plugins.json", json{{"criteria", {{{"name", "fidelity"}}}}});
    const auto diags = validate_registry(reg.root());
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_TRUE(ends_with(diags[0].path, "plugins.json"));
}

TEST(load_registry, order_insensitive) {
    // Same entities under file names that sort in the opposite order.
    ScratchRegistry renamed(nisq::testing::bundled_registry());
    for (const char* dir : {"algorithms", "implementations", "qpus", "sdks", "gatesets"}) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(renamed.root() / dir)) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (std::size_t i = 0; i < files.size(); ++i) {
            fs::rename(files[i], files[i].parent_path() / (std::to_string(files.size() - i) + "_" +
                                                           files[i].filename().string()));
        }
    }
    const auto a = load_registry(nisq::testing::bundled_registry());
    const auto b = load_registry(renamed.root());
    auto ids = [](const auto& v) {
        std::vector<std::string> out;
        for (const auto& e : v) out.push_back(e.id);
        return out;
    };
    EXPECT_EQ(ids(a.algorithms()), ids(b.algorithms()));
    EXPECT_EQ(ids(a.implementations()), ids(b.implementations()));
    EXPECT_EQ(ids(a.qpus()), ids(b.qpus()));
    EXPECT_EQ(ids(a.sdks()), ids(b.sdks()));
    for (const auto& impl : a.implementations()) {
        EXPECT_EQ(impl.circuit, b.find_implementation(impl.id)->circuit);
    }
}

TEST(max_depth, examples) {
    QuantumComputer q;
    q.decoherence_time_us = 100;
    q.layer_time_us = 1;
    EXPECT_EQ(max_depth(q), 100u);
    q.decoherence_time_us = 50;
    q.layer_time_us = 0.3;
    EXPECT_EQ(max_depth(q), 166u);
    q.decoherence_time_us = 1;
    q.layer_time_us = 2;
    EXPECT_EQ(max_depth(q), 0u);
    // Exact quotients are not lost to rounding.
    q.decoherence_time_us = 0.3;
    q.layer_time_us = 0.1;
    EXPECT_EQ(max_depth(q), 3u);
}

TEST(max_depth, monotone) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> t(0.01, 200);
    for (int i = 0; i < 10000; ++i) {
        QuantumComputer a;
        a.decoherence_time_us = t(rng);
        a.layer_time_us = t(rng);
        QuantumComputer longer = a;
        longer.decoherence_time_us += t(rng);
        QuantumComputer slower = a;
        slower.layer_time_us += t(rng);
        ASSERT_GE(max_depth(longer), max_depth(a));
        ASSERT_LE(max_depth(slower), max_depth(a));
    }
}

TEST(generators, ghz) {
    const auto c = ghz_circuit(3);
    EXPECT_EQ(c.num_qubits(), 3u);
    EXPECT_EQ(c.measured_qubits(), (std::vector<Qubit>{0, 1, 2}));
    EXPECT_THROW(ghz_circuit(0), Error);
    EXPECT_THROW(ghz_circuit(33), Error);
    ASSERT_NE(find_generator("ghz"), nullptr);
    EXPECT_EQ(find_generator("nope"), nullptr);
}
