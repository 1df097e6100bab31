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
#include <vector>

#include "nisq/circuit.hpp"

namespace nisq {

/// Square complex matrix, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static DenseMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    DenseMatrix adjoint() const;
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

    /// Largest absolute entry difference.
    double max_abs_diff(const DenseMatrix& other) const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

inline constexpr std::size_t kUnitaryQubitLimit = 10;

/// Unitary of a measurement-free circuit of at most 10 qubits.
///
/// Basis index bit q holds qubit q. Each gate's matrix is embedded at its
/// operand positions and left-multiplied in circuit order.
DenseMatrix unitary_of(const QuantumCircuit& c);

}  // namespace nisq
