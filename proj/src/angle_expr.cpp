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

#include "nisq/angle_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nisq/error.hpp"

namespace nisq {

class AngleExprParser {
public:
    AngleExprParser(std::string_view text, std::span<const std::string_view> variables, AngleExpr& out)
        : text_(text), variables_(variables), out_(out) {}

    void run() {
        skip_space();
        if (pos_ == text_.size()) fail("empty expression");
        expression();
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    }

private:
    using OpCode = AngleExpr::OpCode;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void emit(OpCode code, double value = 0.0, std::size_t slot = 0) { out_.program_.push_back({code, value, slot}); }

    void expression() {
        term();
        for (;;) {
            if (accept('+')) {
                term();
                emit(OpCode::Add);
            } else if (accept('-')) {
                term();
                emit(OpCode::Sub);
            } else {
                return;
            }
        }
    }

    void term() {
        unary();
        for (;;) {
            if (accept('*')) {
                unary();
                emit(OpCode::Mul);
            } else if (accept('/')) {
                unary();
                emit(OpCode::Div);
            } else {
                return;
            }
        }
    }

    void unary() {
        if (accept('-')) {
            unary();
            emit(OpCode::Neg);
        } else if (accept('+')) {
            unary();
        } else {
            primary();
        }
    }

    void primary() {
        skip_space();
        if (pos_ == text_.size()) fail("expected a number, name or '('");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            expression();
            if (!accept(')')) fail("expected ')'");
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "pi") {
                emit(OpCode::Push, std::numbers::pi);
                return;
            }
            for (std::size_t i = 0; i < variables_.size(); ++i) {
                if (variables_[i] == name) {
                    emit(OpCode::Load, 0.0, i);
                    return;
                }
            }
            pos_ = start;
            fail("unknown name '" + std::string(name) + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    void number() {
        // digits [. digits] [(e|E) [+-] digits]
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t n = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            n += digits();
        }
        if (n == 0) fail("malformed number");
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) fail("malformed exponent");
        }
        double value = 0.0;
        const auto* first = text_.data() + start;
        const auto* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            pos_ = start;
            fail("malformed number");
        }
        emit(OpCode::Push, value);
    }

    std::string_view text_;
    std::span<const std::string_view> variables_;
    AngleExpr& out_;
    std::size_t pos_ = 0;
};

AngleExpr AngleExpr::parse(std::string_view text, std::span<const std::string_view> variables) {
    AngleExpr expr;
    expr.text_ = std::string(text);
    expr.variable_count_ = variables.size();
    AngleExprParser(text, variables, expr).run();
    return expr;
}

AngleExpr AngleExpr::constant(double value) {
    AngleExpr expr;
    std::ostringstream os;
    os.precision(17);
    os << value;
    expr.text_ = os.str();
    expr.program_.push_back({OpCode::Push, value, 0});
    return expr;
}

double AngleExpr::evaluate(std::span<const double> values) const {
    if (values.size() < variable_count_) throw Error("angle expression '" + text_ + "': missing variable values");
    std::vector<double> stack;
    stack.reserve(program_.size());
    for (const auto& op : program_) {
        switch (op.code) {
            case OpCode::Push:
                stack.push_back(op.value);
                break;
            case OpCode::Load:
                stack.push_back(values[op.slot]);
                break;
            case OpCode::Neg:
                stack.back() = -stack.back();
                break;
            default: {
                const double rhs = stack.back();
                stack.pop_back();
                double& lhs = stack.back();
                switch (op.code) {
                    case OpCode::Add: lhs += rhs; break;
                    case OpCode::Sub: lhs -= rhs; break;
                    case OpCode::Mul: lhs *= rhs; break;
                    case OpCode::Div: lhs /= rhs; break;
                    default: break;
                }
            }
        }
    }
    return stack.empty() ? 0.0 : stack.back();
}

}  // namespace nisq
