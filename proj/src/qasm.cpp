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

#include "nisq/qasm.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "nisq/angle_expr.hpp"
#include "nisq/error.hpp"

namespace nisq {

namespace {

enum class TokenKind { Identifier, Integer, Real, String, Symbol, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_trivia();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= src_.size()) return tok;

        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok.kind = TokenKind::Identifier;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                tok.text += advance();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.kind = TokenKind::Integer;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) tok.text += advance();
            if (pos_ < src_.size() && src_[pos_] == '.') {
                tok.kind = TokenKind::Real;
                tok.text += advance();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    tok.text += advance();
                }
            }
        } else if (c == '"') {
            tok.kind = TokenKind::String;
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') tok.text += advance();
            if (pos_ >= src_.size() || src_[pos_] != '"') throw ParseError("unterminated string", tok.line, tok.column);
            advance();
        } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            tok.kind = TokenKind::Symbol;
            tok.text = "->";
            advance();
            advance();
        } else {
            tok.kind = TokenKind::Symbol;
            tok.text = std::string(1, advance());
        }
        return tok;
    }

    /// Raw source up to the ')' matching an already-consumed '('.
    /// Returns the top-level comma-separated pieces with their start positions.
    std::vector<Token> raw_arguments(std::size_t open_line, std::size_t open_column) {
        std::vector<Token> pieces;
        Token cur;
        cur.line = line_;
        cur.column = column_;
        int nesting = 0;
        for (;;) {
            if (pos_ >= src_.size() || src_[pos_] == ';') throw ParseError("unclosed '('", open_line, open_column);
            const char c = src_[pos_];
            if (c == '(') {
                ++nesting;
            } else if (c == ')' && nesting == 0) {
                advance();
                pieces.push_back(std::move(cur));
                return pieces;
            } else if (c == ')') {
                --nesting;
            } else if (c == ',' && nesting == 0) {
                advance();
                pieces.push_back(std::move(cur));
                cur = Token{};
                cur.line = line_;
                cur.column = column_;
                continue;
            }
            cur.text += advance();
        }
    }

private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    Parser(std::string_view src, std::string name) : lexer_(src), name_(std::move(name)) { bump(); }

    QuantumCircuit run() {
        if (is_identifier("OPENQASM")) version_header();
        while (is_identifier("include")) include_line();
        register_declaration();
        while (tok_.kind != TokenKind::End) statement();
        return QuantumCircuit(name_, num_qubits_, std::move(gates_));
    }

private:
    [[noreturn]] void fail(const std::string& message, const Token& at) const {
        throw ParseError(message, at.line, at.column);
    }

    std::string describe(const Token& t) const {
        return t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    }

    void bump() { tok_ = lexer_.next(); }

    bool is_identifier(std::string_view text) const { return tok_.kind == TokenKind::Identifier && tok_.text == text; }
    bool is_symbol(std::string_view text) const { return tok_.kind == TokenKind::Symbol && tok_.text == text; }

    void expect_symbol(std::string_view text) {
        if (!is_symbol(text)) fail("expected '" + std::string(text) + "', found " + describe(tok_), tok_);
        bump();
    }

    Token expect(TokenKind kind, const char* what) {
        if (tok_.kind != kind) fail(std::string("expected ") + what + ", found " + describe(tok_), tok_);
        Token t = tok_;
        bump();
        return t;
    }

    std::size_t integer_value(const Token& t) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail("integer out of range", t);
        return value;
    }

    void version_header() {
        bump();
        Token v = tok_;
        if (v.kind != TokenKind::Real || v.text != "2.0") fail("only OPENQASM 2.0 is supported", v);
        bump();
        expect_symbol(";");
    }

    void include_line() {
        bump();
        Token file = expect(TokenKind::String, "a quoted file name");
        if (file.text != "qelib1.inc") fail("only \"qelib1.inc\" may be included", file);
        expect_symbol(";");
    }

    void register_declaration() {
        if (!is_identifier("qreg")) fail("expected 'qreg' declaration, found " + describe(tok_), tok_);
        bump();
        register_name_ = expect(TokenKind::Identifier, "register name").text;
        expect_symbol("[");
        Token size = expect(TokenKind::Integer, "register size");
        num_qubits_ = integer_value(size);
        if (num_qubits_ == 0) fail("register size must be at least 1", size);
        expect_symbol("]");
        expect_symbol(";");
        measured_.assign(num_qubits_, false);
    }

    Qubit operand() {
        Token reg = expect(TokenKind::Identifier, "qubit operand");
        if (reg.text != register_name_) fail("unknown register '" + reg.text + "'", reg);
        expect_symbol("[");
        Token index = expect(TokenKind::Integer, "qubit index");
        const std::size_t q = integer_value(index);
        if (q >= num_qubits_) {
            fail("qubit index " + std::to_string(q) + " out of range for register of size " +
                     std::to_string(num_qubits_),
                 index);
        }
        expect_symbol("]");
        return static_cast<Qubit>(q);
    }

    void statement() {
        Token head = expect(TokenKind::Identifier, "gate name");
        if (head.text == "qreg") fail("only a single quantum register is supported", head);
        auto kind = gate_kind_from_name(head.text);
        if (!kind) fail("unknown gate '" + head.text + "'", head);
        const auto& info = gate_info(*kind);

        std::vector<double> params;
        if (is_symbol("(")) {
            Token open = tok_;
            auto pieces = lexer_.raw_arguments(open.line, open.column);
            for (const auto& piece : pieces) params.push_back(angle(piece));
            bump();
        }
        if (params.size() != info.param_count) {
            fail(head.text + " expects " + std::to_string(info.param_count) + " parameter(s), got " +
                     std::to_string(params.size()),
                 head);
        }

        std::vector<Qubit> operands{operand()};
        while (is_symbol(",")) {
            bump();
            operands.push_back(operand());
        }
        if (operands.size() != info.arity) {
            fail(head.text + " expects " + std::to_string(info.arity) + " operand(s), got " +
                     std::to_string(operands.size()),
                 head);
        }
        for (std::size_t i = 0; i < operands.size(); ++i) {
            for (std::size_t j = i + 1; j < operands.size(); ++j) {
                if (operands[i] == operands[j]) {
                    fail("duplicate operand q[" + std::to_string(operands[i]) + "]", head);
                }
            }
            if (measured_[operands[i]]) {
                fail("q[" + std::to_string(operands[i]) + "] is used after being measured", head);
            }
        }
        if (*kind == GateKind::MEASURE) measured_[operands[0]] = true;
        expect_symbol(";");
        gates_.emplace_back(*kind, std::move(operands), std::move(params));
    }

    double angle(const Token& piece) {
        try {
            return AngleExpr::parse(piece.text).evaluate();
        } catch (const ParseError& e) {
            throw ParseError("bad parameter: " + e.message(),
                             piece.line, piece.column + e.column() - 1);
        }
    }

    Lexer lexer_;
    Token tok_;
    std::string name_;
    std::string register_name_;
    std::size_t num_qubits_ = 0;
    std::vector<bool> measured_;
    std::vector<GateApplication> gates_;
};

}  // namespace

QuantumCircuit parse_circuit(std::string_view text, std::string name) { return Parser(text, std::move(name)).run(); }

std::string format_angle(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string render_circuit(const QuantumCircuit& c) {
    std::ostringstream os;
    os << "qreg q[" << c.num_qubits() << "];\n";
    for (const auto& g : c.gates()) {
        os << gate_name(g.kind);
        if (!g.params.empty()) {
            os << '(';
            for (std::size_t i = 0; i < g.params.size(); ++i) os << (i ? "," : "") << format_angle(g.params[i]);
            os << ')';
        }
        for (std::size_t i = 0; i < g.operands.size(); ++i) os << (i ? "," : " ") << "q[" << g.operands[i] << ']';
        os << ";\n";
    }
    return os.str();
}

}  // namespace nisq
