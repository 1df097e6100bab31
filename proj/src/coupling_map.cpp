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

#include "nisq/coupling_map.hpp"

#include <algorithm>
#include <queue>

#include "nisq/error.hpp"

namespace nisq {

CouplingMap::CouplingMap(std::size_t num_physical_qubits, std::vector<Edge> edges)
    : num_qubits_(num_physical_qubits), adjacency_(num_physical_qubits) {
    for (auto& [a, b] : edges) {
        if (a == b) throw Error("coupling edge [" + std::to_string(a) + "," + std::to_string(b) + "] is a self-loop");
        if (a >= num_qubits_ || b >= num_qubits_) {
            throw Error("coupling edge [" + std::to_string(a) + "," + std::to_string(b) + "] references a qubit >= " +
                        std::to_string(num_qubits_));
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

CouplingMap CouplingMap::linear(std::size_t n) {
    std::vector<Edge> edges;
    for (Qubit q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
    return CouplingMap(n, std::move(edges));
}

CouplingMap CouplingMap::fully_connected(std::size_t n) {
    std::vector<Edge> edges;
    for (Qubit a = 0; a < n; ++a) {
        for (Qubit b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return CouplingMap(n, std::move(edges));
}

bool CouplingMap::coupled(Qubit a, Qubit b) const {
    if (a >= num_qubits_) return false;
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<std::vector<Qubit>> CouplingMap::components() const {
    std::vector<std::vector<Qubit>> out;
    std::vector<bool> seen(num_qubits_, false);
    for (Qubit start = 0; start < num_qubits_; ++start) {
        if (seen[start]) continue;
        std::vector<Qubit> comp;
        std::vector<Qubit> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            Qubit q = stack.back();
            stack.pop_back();
            comp.push_back(q);
            for (Qubit n : adjacency_[q]) {
                if (!seen[n]) {
                    seen[n] = true;
                    stack.push_back(n);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool CouplingMap::prefix_connected(std::size_t k) const {
    if (k == 0 || k > num_qubits_) return k == 0;
    std::vector<bool> seen(k, false);
    std::vector<Qubit> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Qubit q = stack.back();
        stack.pop_back();
        for (Qubit n : adjacency_[q]) {
            if (n < k && !seen[n]) {
                seen[n] = true;
                ++reached;
                stack.push_back(n);
            }
        }
    }
    return reached == k;
}

std::vector<Qubit> CouplingMap::shortest_path(Qubit from, Qubit to, std::size_t limit) const {
    limit = std::min(limit, num_qubits_);
    if (from >= limit || to >= limit) return {};
    constexpr Qubit kNone = ~Qubit{0};
    std::vector<Qubit> parent(limit, kNone);
    std::queue<Qubit> frontier;
    parent[from] = from;
    frontier.push(from);
    while (!frontier.empty() && parent[to] == kNone) {
        Qubit q = frontier.front();
        frontier.pop();
        for (Qubit n : adjacency_[q]) {
            if (n < limit && parent[n] == kNone) {
                parent[n] = q;
                frontier.push(n);
            }
        }
    }
    if (parent[to] == kNone) return {};
    std::vector<Qubit> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::string describe_components(const std::vector<std::vector<Qubit>>& components) {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += " | ";
        out += '{';
        for (std::size_t j = 0; j < components[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(components[i][j]);
        }
        out += '}';
    }
    return out;
}

}  // namespace nisq
