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

#include "nisq/registry.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "nisq/generators.hpp"
#include "nisq/qasm.hpp"

namespace fs = std::filesystem;

namespace nisq {

std::string Diagnostic::to_string() const {
    std::string out = path;
    if (!field.empty()) out += " [" + field + "]";
    return out + ": " + message;
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
    std::string out = "registry failed to load with " + std::to_string(diagnostics.size()) + " problem(s)";
    for (const auto& d : diagnostics) out += "\n  " + d.to_string();
    return out;
}

}  // namespace

RegistryError::RegistryError(std::vector<Diagnostic> diagnostics)
    : Error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string_view entity_directory(EntityKind kind) {
    switch (kind) {
        case EntityKind::Algorithm: return "algorithms";
        case EntityKind::Implementation: return "implementations";
        case EntityKind::Qpu: return "qpus";
        case EntityKind::Sdk: return "sdks";
    }
    return "";
}

namespace {

template <typename T>
void sort_by_id(std::vector<T>& v) {
    std::sort(v.begin(), v.end(), [](const T& a, const T& b) { return a.id < b.id; });
}

template <typename T>
const T* find_by_id(const std::vector<T>& v, std::string_view id) {
    auto it = std::lower_bound(v.begin(), v.end(), id, [](const T& a, std::string_view key) { return a.id < key; });
    return it != v.end() && it->id == id ? &*it : nullptr;
}

}  // namespace

Registry::Registry(RegistryContents contents) : c_(std::move(contents)) {
    sort_by_id(c_.algorithms);
    sort_by_id(c_.implementations);
    sort_by_id(c_.qpus);
    sort_by_id(c_.sdks);
    std::sort(c_.gate_sets.begin(), c_.gate_sets.end(),
              [](const auto& a, const auto& b) { return a.name() < b.name(); });
}

const Algorithm* Registry::find_algorithm(std::string_view id) const { return find_by_id(c_.algorithms, id); }
const Implementation* Registry::find_implementation(std::string_view id) const {
    return find_by_id(c_.implementations, id);
}
const QuantumComputer* Registry::find_qpu(std::string_view id) const { return find_by_id(c_.qpus, id); }
const Sdk* Registry::find_sdk(std::string_view id) const { return find_by_id(c_.sdks, id); }

std::vector<Implementation> Registry::implementations_of(std::string_view algorithm_id) const {
    std::vector<Implementation> out;
    for (const auto& impl : c_.implementations) {
        if (impl.algorithm_id == algorithm_id) out.push_back(impl);
    }
    return out;
}

const nlohmann::json* Registry::document(EntityKind kind, std::string_view id) const {
    auto k = c_.documents.find(kind);
    if (k == c_.documents.end()) return nullptr;
    auto it = k->second.find(std::string(id));
    return it == k->second.end() ? nullptr : &it->second;
}

namespace {

struct Document {
    fs::path path;
    nlohmann::json json;
};

/// Typed field access that records a diagnostic instead of throwing.
class Fields {
public:
    Fields(const Document& doc, std::vector<Diagnostic>& diags) : doc_(doc), diags_(diags) {}

    void report(const std::string& field, const std::string& message) {
        diags_.push_back({doc_.path.string(), field, message});
        ok_ = false;
    }

    bool ok() const { return ok_; }
    bool has(const char* key) const { return doc_.json.contains(key); }

    std::optional<std::string> string(const char* key, bool required = true) {
        if (!doc_.json.contains(key)) {
            if (required) report(key, "missing");
            return std::nullopt;
        }
        if (!doc_.json[key].is_string()) {
            report(key, "expected a string");
            return std::nullopt;
        }
        return doc_.json[key].get<std::string>();
    }

    std::optional<std::string> id() {
        auto v = string("id");
        if (v && v->empty()) {
            report("id", "must not be empty");
            return std::nullopt;
        }
        return v;
    }

    std::optional<double> positive_number(const char* key) {
        if (!doc_.json.contains(key)) {
            report(key, "missing");
            return std::nullopt;
        }
        if (!doc_.json[key].is_number() || !(doc_.json[key].get<double>() > 0.0)) {
            report(key, "expected a positive number");
            return std::nullopt;
        }
        return doc_.json[key].get<double>();
    }

    const nlohmann::json& operator[](const char* key) const { return doc_.json[key]; }

private:
    const Document& doc_;
    std::vector<Diagnostic>& diags_;
    bool ok_ = true;
};

std::vector<Document> read_directory(const fs::path& dir, std::vector<Diagnostic>& diags) {
    std::vector<Document> docs;
    if (!fs::exists(dir)) return docs;
    if (!fs::is_directory(dir)) {
        diags.push_back({dir.string(), "", "expected a directory"});
        return docs;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        std::ifstream in(file);
        try {
            docs.push_back({file, nlohmann::json::parse(in)});
        } catch (const nlohmann::json::exception& e) {
            diags.push_back({file.string(), "", std::string("invalid JSON: ") + e.what()});
            continue;
        }
        if (!docs.back().json.is_object()) {
            diags.push_back({file.string(), "", "expected a JSON object"});
            docs.pop_back();
        }
    }
    return docs;
}

std::optional<std::string> read_text(const fs::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Reports a diagnostic for every id defined by more than one document.
template <typename T>
std::vector<T> drop_duplicates(std::vector<std::pair<T, fs::path>> items, std::string_view what,
                               std::vector<Diagnostic>& diags) {
    std::map<std::string, fs::path> first_seen;
    std::vector<T> out;
    for (auto& [item, path] : items) {
        auto [it, inserted] = first_seen.emplace(item.id, path);
        if (!inserted) {
            diags.push_back({path.string(), "id",
                             "duplicate " + std::string(what) + " id '" + item.id + "' (also defined in " +
                                 it->second.string() + ")"});
            continue;
        }
        out.push_back(std::move(item));
    }
    return out;
}

class Builder {
public:
    Builder(fs::path root, const CriterionCatalog& catalog) : root_(std::move(root)), catalog_(catalog) {}

    std::vector<Diagnostic> run() {
        if (!fs::is_directory(root_)) {
            diags_.push_back({root_.string(), "", "registry root is not a directory"});
            return diags_;
        }
        load_sdks();
        load_gate_sets();
        load_algorithms();
        load_implementations();
        load_qpus();
        load_plugins();
        return diags_;
    }

    Registry take() { return Registry(std::move(contents_)); }

private:
    fs::path dir(EntityKind kind) const { return root_ / entity_directory(kind); }

    void keep_document(EntityKind kind, const std::string& id, const Document& doc) {
        contents_.documents[kind].emplace(id, doc.json);
    }

    void load_sdks() {
        std::vector<std::pair<Sdk, fs::path>> items;
        for (const auto& doc : read_directory(dir(EntityKind::Sdk), diags_)) {
            Fields f(doc, diags_);
            Sdk sdk;
            auto id = f.id();
            auto vendor = f.string("vendor");
            auto description = f.string("description", false);
            if (!f.ok()) continue;
            sdk.id = *id;
            sdk.vendor = *vendor;
            sdk.description = description.value_or("");
            keep_document(EntityKind::Sdk, sdk.id, doc);
            items.emplace_back(std::move(sdk), doc.path);
        }
        contents_.sdks = drop_duplicates(std::move(items), "sdk", diags_);
    }

    void load_gate_sets() {
        std::map<std::string, fs::path> seen;
        for (const auto& doc : read_directory(root_ / "gatesets", diags_)) {
            NativeGateSet gs;
            try {
                gs = NativeGateSet::from_json(doc.json);
            } catch (const Error& e) {
                diags_.push_back({doc.path.string(), "", e.what()});
                continue;
            }
            bool valid = true;
            for (const auto& problem : gs.validate()) {
                diags_.push_back({doc.path.string(), "basis", problem});
                valid = false;
            }
            auto [it, inserted] = seen.emplace(gs.name(), doc.path);
            if (!inserted) {
                diags_.push_back({doc.path.string(), "name",
                                  "duplicate gate set '" + gs.name() + "' (also defined in " + it->second.string() +
                                      ")"});
                continue;
            }
            if (valid) contents_.gate_sets.push_back(std::move(gs));
        }
    }

    void load_algorithms() {
        std::vector<std::pair<Algorithm, fs::path>> items;
        for (const auto& doc : read_directory(dir(EntityKind::Algorithm), diags_)) {
            Fields f(doc, diags_);
            Algorithm alg;
            auto id = f.id();
            auto name = f.string("name");
            auto description = f.string("description", false);
            if (f.has("parameterless")) {
                if (!f["parameterless"].is_boolean()) {
                    f.report("parameterless", "expected a boolean");
                } else {
                    alg.parameterless = f["parameterless"].get<bool>();
                }
            }
            if (f.has("parameters")) {
                if (!f["parameters"].is_array()) {
                    f.report("parameters", "expected an array");
                } else {
                    std::set<std::string> names;
                    for (std::size_t i = 0; i < f["parameters"].size(); ++i) {
                        const auto& p = f["parameters"][i];
                        const std::string field = "parameters[" + std::to_string(i) + "]";
                        if (!p.is_object() || !p.contains("name") || !p["name"].is_string() ||
                            p["name"].get<std::string>().empty()) {
                            f.report(field, "expected {name, type, description}");
                            continue;
                        }
                        InputParameter param;
                        param.name = p["name"].get<std::string>();
                        if (p.contains("type")) {
                            if (!p["type"].is_string() || p["type"].get<std::string>() != "integer") {
                                f.report(field + ".type", "only \"integer\" parameters are supported");
                                continue;
                            }
                        }
                        if (p.contains("description") && p["description"].is_string()) {
                            param.description = p["description"].get<std::string>();
                        }
                        if (!names.insert(param.name).second) {
                            f.report(field + ".name", "duplicate parameter '" + param.name + "'");
                            continue;
                        }
                        alg.parameters.push_back(std::move(param));
                    }
                }
            }
            if (f.ok() && alg.parameters.empty() && !alg.parameterless) {
                f.report("parameters", "declare at least one input parameter or set \"parameterless\": true");
            }
            if (!f.ok()) continue;
            alg.id = *id;
            alg.name = *name;
            alg.description = description.value_or("");
            keep_document(EntityKind::Algorithm, alg.id, doc);
            items.emplace_back(std::move(alg), doc.path);
        }
        contents_.algorithms = drop_duplicates(std::move(items), "algorithm", diags_);
        sort_by_id(contents_.algorithms);
    }

    void load_implementations() {
        sort_by_id(contents_.sdks);
        std::vector<std::pair<Implementation, fs::path>> items;
        for (const auto& doc : read_directory(dir(EntityKind::Implementation), diags_)) {
            Fields f(doc, diags_);
            Implementation impl;
            auto id = f.id();
            auto algorithm = f.string("algorithm");
            auto sdk = f.string("sdk");
            if (!f.ok()) continue;
            impl.id = *id;
            impl.algorithm_id = *algorithm;
            impl.sdk = *sdk;

            const Algorithm* alg = find_by_id(contents_.algorithms, impl.algorithm_id);
            if (alg == nullptr) f.report("algorithm", "unknown algorithm '" + impl.algorithm_id + "'");
            if (find_by_id(contents_.sdks, impl.sdk) == nullptr) f.report("sdk", "unknown sdk '" + impl.sdk + "'");

            if (f.has("rule")) read_rule(f, impl, alg);

            const bool has_circuit = f.has("circuit");
            const bool has_generator = f.has("generator");
            if (has_circuit == has_generator) {
                f.report("circuit", "exactly one of \"circuit\" and \"generator\" must be given");
            } else if (has_circuit) {
                read_circuit(f, doc, impl);
            } else if (auto gen = f.string("generator")) {
                if (find_generator(*gen) == nullptr) {
                    f.report("generator", "unknown generator '" + *gen + "'");
                } else if (!impl.rule) {
                    f.report("rule", "a generator needs a rule naming its input parameter");
                } else {
                    impl.generator = *gen;
                }
            }
            if (!f.ok()) continue;
            keep_document(EntityKind::Implementation, impl.id, doc);
            items.emplace_back(std::move(impl), doc.path);
        }
        contents_.implementations = drop_duplicates(std::move(items), "implementation", diags_);
    }

    void read_rule(Fields& f, Implementation& impl, const Algorithm* alg) {
        const auto& r = f["rule"];
        if (!r.is_object() || !r.contains("parameter") || !r["parameter"].is_string() || !r.contains("min") ||
            !r["min"].is_number_integer() || !r.contains("max") || !r["max"].is_number_integer()) {
            f.report("rule", "expected {\"parameter\": name, \"min\": integer, \"max\": integer}");
            return;
        }
        SelectionRule rule{impl.id, r["parameter"].get<std::string>(), r["min"].get<std::int64_t>(),
                           r["max"].get<std::int64_t>()};
        if (rule.lower_bound > rule.upper_bound) {
            f.report("rule", "min " + std::to_string(rule.lower_bound) + " exceeds max " +
                                 std::to_string(rule.upper_bound));
            return;
        }
        if (alg != nullptr && std::none_of(alg->parameters.begin(), alg->parameters.end(),
                                           [&](const auto& p) { return p.name == rule.parameter; })) {
            f.report("rule.parameter",
                     "algorithm '" + alg->id + "' declares no parameter '" + rule.parameter + "'");
            return;
        }
        impl.rule = std::move(rule);
    }

    void read_circuit(Fields& f, const Document& doc, Implementation& impl) {
        auto source = f.string("circuit");
        if (!source) return;
        std::string text;
        std::string where = "inline circuit";
        if (source->find(';') != std::string::npos) {
            text = *source;
        } else {
            const fs::path file = doc.path.parent_path() / *source;
            auto content = read_text(file);
            if (!content) {
                f.report("circuit", "cannot read circuit file '" + file.string() + "'");
                return;
            }
            text = std::move(*content);
            where = file.string();
        }
        try {
            impl.circuit = parse_circuit(text, impl.id);
        } catch (const Error& e) {
            f.report("circuit", where + ": " + e.what());
        }
    }

    void load_qpus() {
        sort_by_id(contents_.sdks);
        std::vector<std::pair<QuantumComputer, fs::path>> items;
        for (const auto& doc : read_directory(dir(EntityKind::Qpu), diags_)) {
            Fields f(doc, diags_);
            QuantumComputer qpu;
            auto id = f.id();
            auto vendor = f.string("vendor");
            auto gateset = f.string("gateset");
            auto decoherence = f.positive_number("decoherence_us");
            auto layer_time = f.positive_number("layer_time_us");
            auto note = f.string("note", false);

            if (!f.has("qubits") || !f["qubits"].is_number_unsigned() || f["qubits"].get<std::size_t>() == 0) {
                f.report("qubits", "expected a positive integer");
            } else {
                qpu.num_qubits = f["qubits"].get<std::size_t>();
            }

            if (gateset) {
                auto it = std::find_if(contents_.gate_sets.begin(), contents_.gate_sets.end(),
                                       [&](const auto& g) { return g.name() == *gateset; });
                if (it == contents_.gate_sets.end()) {
                    f.report("gateset", "unknown gate set '" + *gateset + "'");
                } else {
                    qpu.gate_set = *it;
                }
            }

            if (!f.has("sdks") || !f["sdks"].is_array() || f["sdks"].empty()) {
                f.report("sdks", "expected a non-empty array of sdk ids");
            } else {
                for (const auto& s : f["sdks"]) {
                    if (!s.is_string()) {
                        f.report("sdks", "expected sdk ids");
                        break;
                    }
                    const auto sid = s.get<std::string>();
                    if (find_by_id(contents_.sdks, sid) == nullptr) f.report("sdks", "unknown sdk '" + sid + "'");
                    qpu.sdks.insert(sid);
                }
            }

            if (qpu.num_qubits > 0) read_coupling(f, qpu);

            if (!f.ok()) continue;
            qpu.id = *id;
            qpu.vendor = *vendor;
            qpu.decoherence_time_us = *decoherence;
            qpu.layer_time_us = *layer_time;
            qpu.note = note.value_or("");
            keep_document(EntityKind::Qpu, qpu.id, doc);
            items.emplace_back(std::move(qpu), doc.path);
        }
        contents_.qpus = drop_duplicates(std::move(items), "qpu", diags_);
    }

    void read_coupling(Fields& f, QuantumComputer& qpu) {
        if (!f.has("coupling") || !f["coupling"].is_object() || !f["coupling"].contains("edges") ||
            !f["coupling"]["edges"].is_array()) {
            f.report("coupling", "expected {\"edges\": [[a, b], ...]}");
            return;
        }
        std::vector<CouplingMap::Edge> edges;
        for (const auto& e : f["coupling"]["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
                f.report("coupling.edges", "expected pairs of physical qubit indices");
                return;
            }
            edges.emplace_back(e[0].get<Qubit>(), e[1].get<Qubit>());
        }
        try {
            qpu.coupling = CouplingMap(qpu.num_qubits, std::move(edges));
        } catch (const Error& e) {
            f.report("coupling.edges", e.what());
            return;
        }
        const auto comps = qpu.coupling.components();
        if (comps.size() > 1) {
            f.report("coupling", "coupling map is disconnected: components " + describe_components(comps));
        }
    }

    void load_plugins() {
        const fs::path manifest = root_ / "plugins.json";
        if (!fs::exists(manifest)) return;
        std::ifstream in(manifest);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            diags_.push_back({manifest.string(), "", std::string("invalid JSON: ") + e.what()});
            return;
        }
        if (!doc.is_object() || !doc.contains("criteria") || !doc["criteria"].is_array()) {
            diags_.push_back({manifest.string(), "criteria", "expected {\"criteria\": [{\"name\": ..., ...}]}"});
            return;
        }
        for (std::size_t i = 0; i < doc["criteria"].size(); ++i) {
            const auto& entry = doc["criteria"][i];
            const std::string field = "criteria[" + std::to_string(i) + "]";
            if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string()) {
                diags_.push_back({manifest.string(), field, "expected an object with a \"name\""});
                continue;
            }
            try {
                contents_.criteria.push_back(catalog_.make(entry["name"].get<std::string>(), entry));
            } catch (const Error& e) {
                diags_.push_back({manifest.string(), field, e.what()});
            }
        }
    }

    fs::path root_;
    const CriterionCatalog& catalog_;
    RegistryContents contents_;
    std::vector<Diagnostic> diags_;
};

}  // namespace

Registry load_registry(const fs::path& root, const CriterionCatalog& criteria) {
    Builder builder(root, criteria);
    auto diags = builder.run();
    if (!diags.empty()) throw RegistryError(std::move(diags));
    return builder.take();
}

std::vector<Diagnostic> validate_registry(const fs::path& root, const CriterionCatalog& criteria) {
    return Builder(root, criteria).run();
}

}  // namespace nisq
