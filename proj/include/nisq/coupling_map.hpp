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
#include <string>
#include <utility>
#include <vector>

#include "nisq/gate.hpp"

namespace nisq {

/// Undirected graph of physical qubit pairs that support a 2-qubit gate.
class CouplingMap {
public:
    using Edge = std::pair<Qubit, Qubit>;

    CouplingMap() = default;
    /// Edges are normalized to (low, high), sorted and de-duplicated.
    /// Throws nisq::Error on self-loops or endpoints >= num_physical_qubits.
    CouplingMap(std::size_t num_physical_qubits, std::vector<Edge> edges);

    static CouplingMap linear(std::size_t n);
    static CouplingMap fully_connected(std::size_t n);

    std::size_t num_physical_qubits() const { return num_qubits_; }
    const std::vector<Edge>& edges() const { return edges_; }
    /// Neighbours in ascending order.
    const std::vector<Qubit>& neighbours(Qubit q) const { return adjacency_[q]; }
    bool coupled(Qubit a, Qubit b) const;

    /// Connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<Qubit>> components() const;
    bool is_connected() const { return components().size() <= 1; }

    /// Whether the subgraph induced by qubits [0, k) is connected.
    bool prefix_connected(std::size_t k) const;

    /// Breadth-first shortest path from `from` to `to` using only qubits below
    /// `limit`; neighbours are explored in ascending order so ties resolve to
    /// the lowest physical index. Empty when unreachable.
    std::vector<Qubit> shortest_path(Qubit from, Qubit to, std::size_t limit) const;

private:
    std::size_t num_qubits_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Qubit>> adjacency_;
};

/// "{0,1,2} | {3,4}"
std::string describe_components(const std::vector<std::vector<Qubit>>& components);

}  // namespace nisq
