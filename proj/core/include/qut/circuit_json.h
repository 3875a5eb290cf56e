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


#ifndef QUT_CIRCUIT_JSON_H
#define QUT_CIRCUIT_JSON_H

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qut/circuit.h"
#include "qut/test_circuits.h"

namespace qut {

class SchemaError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Custom matrices with a unitarity defect at or below this are replaced by
/// their nearest unitary; larger defects are rejected.
inline constexpr double kReunitarizeLimit = 1e-3;

/// Nearest unitary (polar factor) of a square matrix.
GateMatrix nearest_unitary(const GateMatrix &m);

/// {"num_qubits", "name", "gates": [{"kind", "targets", "params", "matrix"}]}
std::string emit_json(const Circuit &circuit);
/// Throws SchemaError on malformed documents or non-unitary matrices.
Circuit parse_json(std::string_view text);

/// {"num_qubits", "amplitudes": [[re, im], ...]}
std::string emit_state_json(const StateVector &state);
StateVector parse_state_json(std::string_view text);

/// Reads a circuit from .qasm or .json. Throws ParseError, SchemaError or
/// std::runtime_error on I/O failure.
Circuit load_circuit(const std::filesystem::path &path);
/// Like load_circuit, but a JSON document with "amplitudes" yields a state.
ExpectedSpec load_expected(const std::filesystem::path &path);

void write_text_file(const std::filesystem::path &path, std::string_view text);
std::string read_text_file(const std::filesystem::path &path);

}  // namespace qut

#endif
