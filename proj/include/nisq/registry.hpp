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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nisq/criteria.hpp"
#include "nisq/entities.hpp"
#include "nisq/error.hpp"
#include "nisq/gate_set.hpp"

namespace nisq {

/// One invariant violation or dangling reference found while loading.
struct Diagnostic {
    std::string path;   // file (or directory) the problem was found in
    std::string field;  // JSON field, empty when the whole document is at fault
    std::string message;

    std::string to_string() const;
    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

class RegistryError : public Error {
public:
    explicit RegistryError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

enum class EntityKind { Algorithm, Implementation, Qpu, Sdk };

std::string_view entity_directory(EntityKind kind);

/// Everything a registry holds. Entities are sorted by id.
struct RegistryContents {
    std::vector<Algorithm> algorithms;
    std::vector<Implementation> implementations;
    std::vector<QuantumComputer> qpus;
    std::vector<Sdk> sdks;
    std::vector<NativeGateSet> gate_sets;
    CriterionList criteria;
    /// Source documents by kind and id, as read from disk.
    std::map<EntityKind, std::map<std::string, nlohmann::json>> documents;
};

/// Immutable catalog of algorithms, implementations, quantum computers and
/// SDKs. Concurrent readers need no coordination.
class Registry {
public:
    Registry() = default;
    /// Sorts every entity list by id; does not validate.
    explicit Registry(RegistryContents contents);

    const std::vector<Algorithm>& algorithms() const { return c_.algorithms; }
    const std::vector<Implementation>& implementations() const { return c_.implementations; }
    const std::vector<QuantumComputer>& qpus() const { return c_.qpus; }
    const std::vector<Sdk>& sdks() const { return c_.sdks; }
    const std::vector<NativeGateSet>& gate_sets() const { return c_.gate_sets; }
    const CriterionList& criteria() const { return c_.criteria; }

    const Algorithm* find_algorithm(std::string_view id) const;
    const Implementation* find_implementation(std::string_view id) const;
    const QuantumComputer* find_qpu(std::string_view id) const;
    const Sdk* find_sdk(std::string_view id) const;

    /// Implementations of an algorithm, sorted by id.
    std::vector<Implementation> implementations_of(std::string_view algorithm_id) const;

    /// The document an entity was loaded from; null for entities built in code.
    const nlohmann::json* document(EntityKind kind, std::string_view id) const;

    const RegistryContents& contents() const { return c_; }

private:
    RegistryContents c_;
};

/// Loads `root` containing algorithms/, implementations/, qpus/, sdks/,
/// gatesets/ (one JSON document per file) and an optional plugins.json.
/// Missing directories count as empty. All-or-nothing: throws RegistryError
/// carrying every diagnostic.
Registry load_registry(const std::filesystem::path& root,
                       const CriterionCatalog& criteria = CriterionCatalog::builtin());

/// Every diagnostic load_registry would report; empty iff loading succeeds.
std::vector<Diagnostic> validate_registry(const std::filesystem::path& root,
                                          const CriterionCatalog& criteria = CriterionCatalog::builtin());

}  // namespace nisq
