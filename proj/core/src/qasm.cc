// Copyright 2026 The qut Authors
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


#include "qut/qasm.h"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

namespace qut {

namespace {

constexpr std::size_t kMaxExpressionDepth = 128;

enum class Tok : std::uint8_t { Ident, Number, String, Symbol, Arrow, End, Bad };

struct Token {
    Tok kind = Tok::End;
    std::string_view text;
    std::size_t line = 1;
    std::size_t column = 1;
};

bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space();
        Token t{Tok::End, {}, line_, col_};
        if (pos_ >= src_.size()) {
            return t;
        }
        const std::size_t start = pos_;
        char c = src_[pos_];
        if (is_ident_start(c)) {
            while (pos_ < src_.size() && (is_ident_start(src_[pos_]) || is_digit(src_[pos_]))) {
                advance();
            }
            t.kind = Tok::Ident;
        } else if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '.')) {
                advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                advance();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                    advance();
                }
                while (pos_ < src_.size() && is_digit(src_[pos_])) {
                    advance();
                }
            }
            t.kind = Tok::Number;
        } else if (c == '"') {
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                advance();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                t.kind = Tok::Bad;
                t.text = src_.substr(start, pos_ - start);
                return t;
            }
            advance();
            t.kind = Tok::String;
        } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            t.kind = Tok::Arrow;
        } else if (std::string_view(";,()[]+-*/").find(c) != std::string_view::npos) {
            advance();
            t.kind = Tok::Symbol;
        } else {
            advance();
            t.kind = Tok::Bad;
        }
        t.text = src_.substr(start, pos_ - start);
        return t;
    }

   private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

struct Failure {
    ParseDiagnostic diag;
};

class Parser {
   public:
    explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

    ParseResult run() {
        ParseResult result;
        try {
            header();
            while (tok_.kind != Tok::End) {
                statement();
            }
            if (!circuit_) {
                fail(tok_, "no qreg declared");
            }
            result.circuit = std::move(circuit_);
        } catch (const Failure &f) {
            warnings_.push_back(f.diag);
        }
        result.diagnostics = std::move(warnings_);
        return result;
    }

    double expression_only() {
        double v = expr(0);
        if (tok_.kind != Tok::End) {
            fail(tok_, "unexpected trailing input in expression");
        }
        return v;
    }

   private:
    [[noreturn]] void fail(const Token &at, std::string message) {
        throw Failure{{at.line, at.column, std::move(message), Severity::Error}};
    }

    void warn(const Token &at, std::string message) {
        warnings_.push_back({at.line, at.column, std::move(message), Severity::Warning});
    }

    Token take() {
        Token t = tok_;
        if (t.kind == Tok::Bad) {
            fail(t, "unexpected character '" + std::string(t.text.substr(0, 1)) + "'");
        }
        tok_ = lex_.next();
        return t;
    }

    bool at_symbol(char c) const { return tok_.kind == Tok::Symbol && tok_.text[0] == c; }

    void expect_symbol(char c) {
        if (!at_symbol(c)) {
            fail(tok_, std::string("expected '") + c + "'");
        }
        take();
    }

    Token expect_ident() {
        if (tok_.kind != Tok::Ident) {
            fail(tok_, "expected identifier");
        }
        return take();
    }

    std::uint64_t expect_index() {
        if (tok_.kind != Tok::Number) {
            fail(tok_, "expected integer");
        }
        Token t = take();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(t, "expected integer, got '" + std::string(t.text) + "'");
        }
        return v;
    }

    void header() {
        if (tok_.kind != Tok::Ident || tok_.text != "OPENQASM") {
            fail(tok_, "missing OPENQASM header");
        }
        take();
        if (tok_.kind != Tok::Number || tok_.text != "2.0") {
            fail(tok_, "unsupported OPENQASM version; expected 2.0");
        }
        take();
        expect_symbol(';');
        if (tok_.kind == Tok::Ident && tok_.text == "include") {
            take();
            if (tok_.kind != Tok::String) {
                fail(tok_, "expected quoted include path");
            }
            take();
            expect_symbol(';');
        }
    }

    void statement() {
        Token head = expect_ident();
        if (head.text == "qreg") {
            qreg(head);
        } else if (head.text == "creg") {
            creg(head);
        } else if (head.text == "measure") {
            operand();
            if (tok_.kind != Tok::Arrow) {
                fail(tok_, "expected '->' in measure");
            }
            take();
            classical_operand();
            expect_symbol(';');
            warn(head, "measurement removed");
        } else if (head.text == "barrier") {
            operand();
            while (at_symbol(',')) {
                take();
                operand();
            }
            expect_symbol(';');
            warn(head, "barrier removed");
        } else if (head.text == "OPENQASM") {
            fail(head, "duplicate OPENQASM header");
        } else if (head.text == "gate" || head.text == "opaque" || head.text == "if" || head.text == "reset" ||
                   head.text == "include") {
            fail(head, "unsupported statement '" + std::string(head.text) + "'");
        } else {
            gate_application(head);
        }
    }

    void qreg(const Token &head) {
        Token name = expect_ident();
        expect_symbol('[');
        Token size_tok = tok_;
        std::uint64_t size = expect_index();
        expect_symbol(']');
        expect_symbol(';');
        if (circuit_) {
            fail(head, "register redeclaration: only one qreg is supported");
        }
        if (name.text == creg_name_) {
            fail(name, "register redeclaration of '" + std::string(name.text) + "'");
        }
        if (size == 0 || size > 32) {
            fail(size_tok, "qreg size must be between 1 and 32");
        }
        qreg_name_ = name.text;
        circuit_.emplace(static_cast<std::size_t>(size));
    }

    void creg(const Token &) {
        Token name = expect_ident();
        expect_symbol('[');
        expect_index();
        expect_symbol(']');
        expect_symbol(';');
        if (name.text == qreg_name_ || name.text == creg_name_) {
            fail(name, "register redeclaration of '" + std::string(name.text) + "'");
        }
        creg_name_ = name.text;
    }

    // Qubit operand; std::nullopt for a whole register reference.
    std::optional<std::uint32_t> operand() {
        Token name = expect_ident();
        if (!circuit_ || name.text != qreg_name_) {
            fail(name, "unknown quantum register '" + std::string(name.text) + "'");
        }
        if (!at_symbol('[')) {
            return std::nullopt;
        }
        take();
        Token idx_tok = tok_;
        std::uint64_t idx = expect_index();
        expect_symbol(']');
        if (idx >= circuit_->num_qubits()) {
            fail(idx_tok, "qubit index " + std::to_string(idx) + " out of range for qreg of size " +
                              std::to_string(circuit_->num_qubits()));
        }
        return static_cast<std::uint32_t>(idx);
    }

    void classical_operand() {
        Token name = expect_ident();
        if (name.text != creg_name_ || creg_name_.empty()) {
            fail(name, "unknown classical register '" + std::string(name.text) + "'");
        }
        if (at_symbol('[')) {
            take();
            expect_index();
            expect_symbol(']');
        }
    }

    void gate_application(const Token &head) {
        auto kind = gate_from_name(head.text);
        if (!kind || *kind == GateKind::Unitary) {
            fail(head, "unknown gate '" + std::string(head.text) + "'");
        }
        if (!circuit_) {
            fail(head, "gate applied before qreg declaration");
        }
        std::vector<double> params;
        if (at_symbol('(')) {
            take();
            params.push_back(expr(0));
            while (at_symbol(',')) {
                take();
                params.push_back(expr(0));
            }
            expect_symbol(')');
        }
        std::vector<std::uint32_t> targets;
        do {
            if (!targets.empty()) {
                take();
            }
            Token at = tok_;
            auto q = operand();
            if (!q) {
                fail(at, "whole-register gate arguments are not supported");
            }
            targets.push_back(*q);
        } while (at_symbol(','));
        expect_symbol(';');
        const auto &info = gate_info(*kind);
        if (params.size() != info.num_params) {
            fail(head, "gate '" + std::string(head.text) + "' takes " + std::to_string(info.num_params) +
                           " parameter(s), got " + std::to_string(params.size()));
        }
        if (targets.size() != info.arity) {
            fail(head, "gate '" + std::string(head.text) + "' takes " + std::to_string(info.arity) +
                           " qubit(s), got " + std::to_string(targets.size()));
        }
        try {
            circuit_->append(*kind, std::move(targets), std::move(params));
        } catch (const std::invalid_argument &e) {
            fail(head, e.what());
        }
    }

    double expr(std::size_t depth) {
        double v = term(depth);
        while (at_symbol('+') || at_symbol('-')) {
            char op = take().text[0];
            double rhs = term(depth);
            v = op == '+' ? v + rhs : v - rhs;
        }
        return v;
    }

    double term(std::size_t depth) {
        double v = unary(depth);
        while (at_symbol('*') || at_symbol('/')) {
            Token op = take();
            double rhs = unary(depth);
            if (op.text[0] == '/') {
                if (rhs == 0.0) {
                    fail(op, "malformed parameter expression: division by zero");
                }
                v /= rhs;
            } else {
                v *= rhs;
            }
        }
        return v;
    }

    double unary(std::size_t depth) {
        if (depth > kMaxExpressionDepth) {
            fail(tok_, "malformed parameter expression: nesting too deep");
        }
        if (at_symbol('-')) {
            take();
            return -unary(depth + 1);
        }
        if (at_symbol('+')) {
            take();
            return unary(depth + 1);
        }
        return primary(depth);
    }

    double primary(std::size_t depth) {
        if (at_symbol('(')) {
            take();
            double v = expr(depth + 1);
            expect_symbol(')');
            return v;
        }
        if (tok_.kind == Tok::Ident && tok_.text == "pi") {
            take();
            return std::numbers::pi;
        }
        if (tok_.kind == Tok::Number) {
            Token t = take();
            double v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(v)) {
                fail(t, "malformed parameter expression: bad number '" + std::string(t.text) + "'");
            }
            return v;
        }
        fail(tok_, "malformed parameter expression");
    }

    Lexer lex_;
    Token tok_;
    std::optional<Circuit> circuit_;
    std::string_view qreg_name_;
    std::string_view creg_name_;
    std::vector<ParseDiagnostic> warnings_;
};

std::string format_param(double v) {
    std::array<char, 40> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string to_string(const ParseDiagnostic &diag) {
    return std::to_string(diag.line) + ":" + std::to_string(diag.column) + ": " +
           (diag.severity == Severity::Error ? "error: " : "warning: ") + diag.message;
}

ParseResult parse_qasm(std::string_view source) {
    return Parser(source).run();
}

Circuit parse_qasm_or_throw(std::string_view source) {
    ParseResult r = parse_qasm(source);
    if (!r.ok()) {
        for (const auto &d : r.diagnostics) {
            if (d.severity == Severity::Error) {
                throw ParseError(to_string(d));
            }
        }
        throw ParseError("parse failed");
    }
    return std::move(*r.circuit);
}

std::string emit_qasm(const Circuit &circuit) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(circuit.num_qubits()) + "];\n";
    for (const auto &g : circuit.gates()) {
        if (g.kind == GateKind::Unitary) {
            throw std::invalid_argument("custom unitary gates cannot be written as OpenQASM");
        }
        out += gate_name(g.kind);
        if (!g.params.empty()) {
            out += '(';
            for (std::size_t i = 0; i < g.params.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                out += format_param(g.params[i]);
            }
            out += ')';
        }
        for (std::size_t i = 0; i < g.targets.size(); ++i) {
            out += i == 0 ? " " : ",";
            out += "q[" + std::to_string(g.targets[i]) + "]";
        }
        out += ";\n";
    }
    return out;
}

std::optional<double> evaluate_expression(std::string_view text) {
    try {
        return Parser(text).expression_only();
    } catch (const Failure &) {
        return std::nullopt;
    }
}

}  // namespace qut
