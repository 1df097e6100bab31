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

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nisq/error.hpp"
#include "nisq/executor.hpp"
#include "nisq/pipeline.hpp"
#include "nisq/qasm.hpp"
#include "nisq/registry.hpp"
#include "nisq/selection_rule.hpp"
#include "nisq/transpiler.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoPair = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string registry;
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t shots = 1024;
};

// Plain left-aligned text table.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> widths(rows_.front().size(), 0);
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line += row[i];
                if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
            }
            out << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::set<std::string>& items, const char* sep = ",") {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string opt_number(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

nisq::InputValues parse_assignments(const std::vector<std::string>& items) {
    nisq::InputValues input;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected NAME=INTEGER, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        std::int64_t n = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
            throw UsageError("'" + name + "' must be an integer, got '" + value + "'");
        }
        if (!input.emplace(name, n).second) throw UsageError("'" + name + "' given more than once");
    }
    return input;
}

nisq::Registry open_registry(const Config& cfg) { return nisq::load_registry(cfg.registry); }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_list(const Config& cfg, const std::string& kind) {
    const auto registry = open_registry(cfg);
    auto emit_docs = [&](nisq::EntityKind k, const auto& entities) {
        json out = json::array();
        for (const auto& e : entities) {
            const json* doc = registry.document(k, e.id);
            out.push_back(doc != nullptr ? *doc : json(nullptr));
        }
        print_json(out);
    };

    if (kind == "algorithms") {
        if (cfg.json) {
            emit_docs(nisq::EntityKind::Algorithm, registry.algorithms());
            return kExitOk;
        }
        Table t({"ID", "NAME", "INPUTS"});
        for (const auto& a : registry.algorithms()) {
            std::set<std::string> names;
            for (const auto& p : a.parameters) names.insert(p.name);
            t.add({a.id, a.name, names.empty() ? "-" : join(names)});
        }
        t.print(std::cout);
    } else if (kind == "implementations") {
        if (cfg.json) {
            emit_docs(nisq::EntityKind::Implementation, registry.implementations());
            return kExitOk;
        }
        Table t({"ID", "ALGORITHM", "SDK", "RULE", "SOURCE"});
        for (const auto& impl : registry.implementations()) {
            std::string rule = "-";
            if (impl.rule) {
                rule = impl.rule->parameter + " in [" + std::to_string(impl.rule->lower_bound) + ", " +
                       std::to_string(impl.rule->upper_bound) + "]";
            }
            std::string source = impl.generator ? "generator " + *impl.generator
                                                : std::to_string(impl.circuit->num_qubits()) + "-qubit circuit";
            t.add({impl.id, impl.algorithm_id, impl.sdk, rule, source});
        }
        t.print(std::cout);
    } else if (kind == "qpus") {
        if (cfg.json) {
            emit_docs(nisq::EntityKind::Qpu, registry.qpus());
            return kExitOk;
        }
        Table t({"ID", "VENDOR", "QUBITS", "GATESET", "MAX_DEPTH", "SDKS"});
        for (const auto& q : registry.qpus()) {
            t.add({q.id, q.vendor, std::to_string(q.num_qubits), q.gate_set.name(),
                   std::to_string(nisq::max_depth(q)), join(q.sdks)});
        }
        t.print(std::cout);
    } else if (kind == "sdks") {
        if (cfg.json) {
            emit_docs(nisq::EntityKind::Sdk, registry.sdks());
            return kExitOk;
        }
        Table t({"ID", "VENDOR", "DESCRIPTION"});
        for (const auto& s : registry.sdks()) t.add({s.id, s.vendor, s.description});
        t.print(std::cout);
    } else {
        throw UsageError("unknown entity kind '" + kind + "' (expected algorithms, implementations, qpus or sdks)");
    }
    return kExitOk;
}

void print_report_table(const nisq::AnalysisReport& report) {
    std::cout << "algorithm: " << report.algorithm_id << "  input:";
    for (const auto& [k, v] : report.input) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
    std::cout << "processable implementations:";
    if (report.processable.empty()) std::cout << " none";
    for (const auto& id : report.processable) std::cout << ' ' << id;
    std::cout << '\n';
    for (const auto& w : report.warnings) std::cout << "warning: " << w << '\n';
    if (report.rows.empty()) return;
    std::cout << '\n';
    Table t({"IMPLEMENTATION", "QPU", "WIDTH", "DEPTH", "QUBITS", "MAX_DEPTH", "SDK", "EXECUTABLE", "NOTE"});
    for (const auto& row : report.rows) {
        std::string note = row.skip_reason.value_or("");
        for (const auto& v : row.plugin_verdicts) {
            if (v.verdict != nisq::Verdict::Fail) continue;
            if (!note.empty()) note += "; ";
            note += v.name + ": " + v.reason;
        }
        t.add({row.implementation_id, row.qpu_id, opt_number(row.width), opt_number(row.depth),
               std::to_string(row.qpu_qubits), std::to_string(row.qpu_max_depth),
               row.implementation_sdk + (row.sdk_match ? "" : " (mismatch)"), row.executable ? "yes" : "no", note});
    }
    t.print(std::cout);
}

int cmd_analyze(const Config& cfg, const std::string& algorithm, const std::vector<std::string>& assignments) {
    const auto registry = open_registry(cfg);
    const auto report = nisq::analyze(registry, algorithm, parse_assignments(assignments));
    const auto rec = nisq::select(report);
    if (cfg.json) {
        print_json({{"report", nisq::to_json(report)}, {"recommendation", rec ? nisq::to_json(*rec) : json(nullptr)}});
    } else {
        print_report_table(report);
        std::cout << '\n';
        if (rec) {
            std::cout << "recommendation: " << rec->implementation_id << " on " << rec->qpu_id << " (" << rec->rationale
                      << ")\n";
        } else {
            std::cout << "no executable pair\n";
        }
    }
    return rec ? kExitOk : kExitNoPair;
}

// Why an explicitly requested pair cannot be used.
std::string override_failure(const nisq::ReportRow& row) {
    nisq::ExecutabilityFacts facts{row.qpu_qubits, row.width.value_or(0),   row.qpu_max_depth,
                                   row.depth.value_or(0), row.qpu_sdks, row.implementation_sdk};
    std::vector<std::string> reasons;
    if (row.width && *row.width > row.qpu_qubits) reasons.push_back(nisq::explain(nisq::Conjunct::Qubits, facts));
    if (row.depth && *row.depth > row.qpu_max_depth) reasons.push_back(nisq::explain(nisq::Conjunct::Depth, facts));
    if (!row.sdk_match) reasons.push_back(nisq::explain(nisq::Conjunct::Sdk, facts));
    for (const auto& v : row.plugin_verdicts) {
        if (v.verdict == nisq::Verdict::Fail) reasons.push_back(v.name + ": " + v.reason);
    }
    if (reasons.empty() && row.skip_reason) reasons.push_back(*row.skip_reason);
    std::string out;
    for (const auto& r : reasons) out += (out.empty() ? "" : "; ") + r;
    return out;
}

int cmd_execute(const Config& cfg, const std::string& algorithm, const std::vector<std::string>& assignments,
                const std::optional<std::string>& impl_override, const std::optional<std::string>& qpu_override) {
    const auto registry = open_registry(cfg);
    const auto input = parse_assignments(assignments);
    const auto report = nisq::analyze(registry, algorithm, input);

    if (impl_override) {
        const auto* impl = registry.find_implementation(*impl_override);
        if (impl == nullptr || impl->algorithm_id != algorithm) {
            throw UsageError("unknown implementation '" + *impl_override + "' for algorithm '" + algorithm + "'");
        }
        if (std::find(report.processable.begin(), report.processable.end(), impl->id) == report.processable.end()) {
            throw UsageError("implementation '" + impl->id + "' cannot process the given input");
        }
    }
    if (qpu_override && registry.find_qpu(*qpu_override) == nullptr) {
        throw UsageError("unknown qpu '" + *qpu_override + "'");
    }

    const nisq::ReportRow* chosen = nisq::best_row(report, impl_override, qpu_override);
    if (chosen == nullptr) {
        if (impl_override || qpu_override) {
            std::string detail;
            for (const auto& row : report.rows) {
                if ((impl_override && row.implementation_id != *impl_override) ||
                    (qpu_override && row.qpu_id != *qpu_override)) {
                    continue;
                }
                detail += "\n  " + row.implementation_id + " is not executable on " + row.qpu_id + ": " +
                          override_failure(row);
            }
            throw UsageError("no executable pair matches the requested override" + detail);
        }
        std::cerr << "no executable pair\n";
        return kExitNoPair;
    }

    const auto* impl = registry.find_implementation(chosen->implementation_id);
    const auto* qpu = registry.find_qpu(chosen->qpu_id);
    auto transpiled = nisq::transpile(impl->circuit_for(input), *qpu);
    transpiled.source_id = impl->id;
    transpiled.sdk = impl->sdk;

    std::set<std::string> all_sdks;
    for (const auto& s : registry.sdks()) all_sdks.insert(s.id);
    const nisq::StatevectorBackend backend(all_sdks);
    const std::uint64_t seed = cfg.seed.value_or(std::random_device{}());
    const auto result = nisq::execute(transpiled, backend, cfg.shots, seed);

    if (cfg.json) {
        print_json({{"implementation", impl->id}, {"qpu", qpu->id}, {"result", nisq::to_json(result)}});
    } else {
        std::cout << "executed " << impl->id << " (transpiled for " << qpu->id << ", width " << transpiled.width
                  << ", depth " << transpiled.depth << ") on " << result.backend_id << '\n';
        std::cout << "shots " << result.shots << ", seed " << result.seed << "\n\n";
        Table t({"OUTCOME", "COUNT"});
        for (const auto& [bits, count] : result.counts) t.add({bits, std::to_string(count)});
        t.print(std::cout);
    }
    return kExitOk;
}

int cmd_transpile(const Config& cfg, const std::string& impl_id, const std::string& qpu_id,
                  const std::vector<std::string>& assignments) {
    const auto registry = open_registry(cfg);
    const auto* impl = registry.find_implementation(impl_id);
    if (impl == nullptr) throw UsageError("unknown implementation '" + impl_id + "'");
    const auto* qpu = registry.find_qpu(qpu_id);
    if (qpu == nullptr) throw UsageError("unknown qpu '" + qpu_id + "'");
    auto t = nisq::transpile(impl->circuit_for(parse_assignments(assignments)), *qpu);
    if (cfg.json) {
        print_json({{"implementation", impl->id},
                    {"qpu", qpu->id},
                    {"width", t.width},
                    {"depth", t.depth},
                    {"final_layout", t.final_layout},
                    {"circuit", nisq::render_circuit(t.circuit)}});
    } else {
        std::cout << "// " << impl->id << " for " << qpu->id << ": width " << t.width << ", depth " << t.depth
                  << ", final layout";
        for (std::size_t l = 0; l < t.final_layout.size(); ++l) std::cout << ' ' << l << "->" << t.final_layout[l];
        std::cout << '\n' << nisq::render_circuit(t.circuit);
    }
    return kExitOk;
}

int cmd_validate(const Config& cfg) {
    const auto diags = nisq::validate_registry(cfg.registry);
    if (cfg.json) {
        json list = json::array();
        for (const auto& d : diags) list.push_back({{"path", d.path}, {"field", d.field}, {"message", d.message}});
        print_json({{"valid", diags.empty()}, {"diagnostics", list}});
    } else if (diags.empty()) {
        std::cout << "registry OK: " << cfg.registry << '\n';
    } else {
        for (const auto& d : diags) std::cout << d.to_string() << '\n';
    }
    return diags.empty() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Selects an implementation and a quantum computer for an algorithm input, then runs it."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "nisq-analyzer 0.1.0");

    Config cfg;
    cfg.registry = NISQ_DEFAULT_REGISTRY;
    app.add_option("--registry", cfg.registry, "Registry root directory")->envname("NISQ_REGISTRY");
    app.add_flag("--json", cfg.json, "Emit canonical JSON on stdout");
    app.add_option("--seed", cfg.seed, "Sampling seed (random when omitted)");
    app.add_option("--shots", cfg.shots, "Number of shots")->check(CLI::PositiveNumber);

    std::string list_kind;
    auto* list = app.add_subcommand("list", "List registry entities");
    list->add_option("kind", list_kind, "algorithms | implementations | qpus | sdks")->required();

    std::string algorithm;
    std::vector<std::string> assignments;
    auto* analyze = app.add_subcommand("analyze", "Analyze implementations and quantum computers for an input");
    analyze->add_option("algorithm", algorithm, "Algorithm id")->required();
    analyze->add_option("inputs", assignments, "Input values as NAME=INTEGER");

    std::optional<std::string> impl_override;
    std::optional<std::string> qpu_override;
    auto* execute = app.add_subcommand("execute", "Analyze, select and run on the local simulator");
    execute->add_option("algorithm", algorithm, "Algorithm id")->required();
    execute->add_option("inputs", assignments, "Input values as NAME=INTEGER");
    execute->add_option("--implementation", impl_override, "Use this implementation");
    execute->add_option("--qpu", qpu_override, "Use this quantum computer");

    std::string impl_id;
    std::string qpu_id;
    auto* transpile = app.add_subcommand("transpile", "Print an implementation's circuit transpiled for a QPU");
    transpile->add_option("implementation", impl_id, "Implementation id")->required();
    transpile->add_option("qpu", qpu_id, "Quantum computer id")->required();
    transpile->add_option("inputs", assignments, "Input values as NAME=INTEGER");

    auto* validate = app.add_subcommand("validate", "Check the registry and print every diagnostic");

    // Global options may appear after the subcommand name too.
    for (auto* sub : {list, analyze, execute, transpile, validate}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*list) return cmd_list(cfg, list_kind);
        if (*analyze) return cmd_analyze(cfg, algorithm, assignments);
        if (*execute) return cmd_execute(cfg, algorithm, assignments, impl_override, qpu_override);
        if (*transpile) return cmd_transpile(cfg, impl_id, qpu_id, assignments);
        if (*validate) return cmd_validate(cfg);
    } catch (const nisq::RegistryError& e) {
        std::cerr << "error: registry failed to load\n";
        for (const auto& d : e.diagnostics()) std::cerr << "  " << d.to_string() << '\n';
        return kExitError;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
