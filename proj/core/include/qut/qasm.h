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


#ifndef QUT_QASM_H
#define QUT_QASM_H

// OpenQASM 2.0 subset: one qreg, any number of cregs, catalog gate
// applications. measure and barrier statements are dropped with a warning.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qut/circuit.h"

namespace qut {

enum class Severity : std::uint8_t { Error, Warning };

struct ParseDiagnostic {
    std::size_t line = 1;
    std::size_t column = 1;
    std::string message;
    Severity severity = Severity::Error;
};

std::string to_string(const ParseDiagnostic &diag);

struct ParseResult {
    std::optional<Circuit> circuit;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return circuit.has_value(); }
};

class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Never throws on malformed input; problems are reported as diagnostics.
ParseResult parse_qasm(std::string_view source);

/// parse_qasm, throwing ParseError with the first error diagnostic.
Circuit parse_qasm_or_throw(std::string_view source);

/// Throws std::invalid_argument if the circuit contains a custom unitary.
std::string emit_qasm(const Circuit &circuit);

/// Evaluates a parameter expression (numbers, pi, + - * /, unary minus,
/// parentheses). std::nullopt on malformed input.
std::optional<double> evaluate_expression(std::string_view text);

}  // namespace qut

#endif
