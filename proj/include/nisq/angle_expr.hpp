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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nisq {

/// Arithmetic expression over real angles: numbers, `pi`, named variables,
/// `+ - * /`, unary minus and parentheses.
///
/// Used for gate parameters in circuit text (no variables) and for the angle
/// templates of decomposition rules (variables bound to the parameters of the
/// gate being rewritten). Parse errors are ParseError with line 1 and the
/// 1-based column inside `text`.
class AngleExpr {
public:
    AngleExpr() = default;

    static AngleExpr parse(std::string_view text, std::span<const std::string_view> variables = {});
    static AngleExpr constant(double value);

    /// `values[i]` binds the i-th variable passed to parse().
    double evaluate(std::span<const double> values = {}) const;

    const std::string& text() const { return text_; }
    std::size_t variable_count() const { return variable_count_; }

private:
    enum class OpCode { Push, Load, Add, Sub, Mul, Div, Neg };
    struct Op {
        OpCode code;
        double value = 0.0;
        std::size_t slot = 0;
    };

    friend class AngleExprParser;

    std::vector<Op> program_;  // postfix
    std::string text_;
    std::size_t variable_count_ = 0;
};

}  // namespace nisq
