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

#include "nisq/unitary.hpp"

#include <algorithm>
#include <cmath>

#include "nisq/error.hpp"

namespace nisq {

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim()) throw Error("matrix dimension mismatch");
    const std::size_t n = a.dim();
    DenseMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
    if (dim_ != other.dim_) throw Error("matrix dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    return worst;
}

DenseMatrix unitary_of(const QuantumCircuit& c) {
    if (c.num_qubits() > kUnitaryQubitLimit) {
        throw CircuitError("unitary_of supports at most " + std::to_string(kUnitaryQubitLimit) + " qubits, got " +
                           std::to_string(c.num_qubits()));
    }
    if (c.has_measurements()) throw CircuitError("unitary_of requires a measurement-free circuit");

    const std::size_t dim = std::size_t{1} << c.num_qubits();
    DenseMatrix u = DenseMatrix::identity(dim);

    for (const auto& g : c.gates()) {
        const GateMatrix m = gate_matrix(g);
        const std::size_t local = m.dim;
        std::size_t mask = 0;
        for (Qubit q : g.operands) mask |= std::size_t{1} << q;

        // Row r of the embedded matrix couples only to rows sharing r's bits outside `mask`.
        std::vector<std::size_t> rows(local);
        std::vector<Complex> column(local);
        for (std::size_t base = 0; base < dim; ++base) {
            if (base & mask) continue;
            for (std::size_t l = 0; l < local; ++l) {
                std::size_t idx = base;
                for (std::size_t k = 0; k < g.operands.size(); ++k) {
                    if ((l >> k) & 1U) idx |= std::size_t{1} << g.operands[k];
                }
                rows[l] = idx;
            }
            for (std::size_t col = 0; col < dim; ++col) {
                for (std::size_t l = 0; l < local; ++l) column[l] = u(rows[l], col);
                for (std::size_t out = 0; out < local; ++out) {
                    Complex acc{};
                    for (std::size_t in = 0; in < local; ++in) acc += m(out, in) * column[in];
                    u(rows[out], col) = acc;
                }
            }
        }
    }
    return u;
}

}  // namespace nisq
