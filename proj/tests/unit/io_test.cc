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


#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "oracles.h"
#include "qut/circuit_json.h"
#include "qut/qasm.h"
#include "qut/random.h"
#include "qut/simulator.h"

namespace qut {
namespace {

bool same_bits(const Circuit &a, const Circuit &b) {
    if (a.num_qubits() != b.num_qubits() || a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].kind != b[i].kind || a[i].targets != b[i].targets || a[i].params.size() != b[i].params.size()) {
            return false;
        }
        for (std::size_t k = 0; k < a[i].params.size(); ++k) {
            if (std::bit_cast<std::uint64_t>(a[i].params[k]) != std::bit_cast<std::uint64_t>(b[i].params[k])) {
                return false;
            }
        }
        if (a[i].matrix != b[i].matrix) {
            return false;
        }
    }
    return true;
}

const ParseDiagnostic *first_error(const ParseResult &r) {
    for (const auto &d : r.diagnostics) {
        if (d.severity == Severity::Error) {
            return &d;
        }
    }
    return nullptr;
}

TEST(Qasm, MinimalProgram) {
    Circuit c = parse_qasm_or_throw("OPENQASM 2.0; qreg q[1]; h q[0];");
    EXPECT_EQ(c.num_qubits(), 1u);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], make_gate(GateKind::H, {0}));
}

TEST(Qasm, ParameterExpression) {
    Circuit c = parse_qasm_or_throw("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\nrx(pi/180) q[2];\n");
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].kind, GateKind::RX);
    EXPECT_EQ(c[0].targets, std::vector<std::uint32_t>{2});
    EXPECT_NEAR(c[0].params[0], 0.0174533, 1e-7);
    EXPECT_DOUBLE_EQ(c[0].params[0], std::numbers::pi / 180);
}

TEST(Qasm, ExpressionEvaluator) {
    EXPECT_DOUBLE_EQ(*evaluate_expression("1 + 2 * 3"), 7.0);
    EXPECT_DOUBLE_EQ(*evaluate_expression("(1 + 2) * 3"), 9.0);
    EXPECT_DOUBLE_EQ(*evaluate_expression("8 / 4 / 2"), 1.0);
    EXPECT_DOUBLE_EQ(*evaluate_expression("10 - 4 - 3"), 3.0);
    EXPECT_DOUBLE_EQ(*evaluate_expression("-pi/2"), -std::numbers::pi / 2);
    EXPECT_DOUBLE_EQ(*evaluate_expression("--1.5e1"), 15.0);
    EXPECT_DOUBLE_EQ(*evaluate_expression(".5"), 0.5);
    EXPECT_FALSE(evaluate_expression("1 +"));
    EXPECT_FALSE(evaluate_expression("(1"));
    EXPECT_FALSE(evaluate_expression("1 / 0"));
    EXPECT_FALSE(evaluate_expression("tau"));
    EXPECT_FALSE(evaluate_expression(std::string(1000, '(') + "1" + std::string(1000, ')')));
}

TEST(Qasm, Errors) {
    struct Case {
        const char *src;
        const char *needle;
        std::size_t line;
    };
    const Case cases[] = {
        {"qreg q[1];", "missing OPENQASM header", 1},
        {"OPENQASM 2.0;\nqreg q[1];\nfoo q[0];", "unknown gate", 3},
        {"OPENQASM 2.0;\nqreg q[1];\nqreg r[1];", "redeclaration", 3},
        {"OPENQASM 2.0;\nqreg q[2];\nh q[2];", "out of range", 3},
        {"OPENQASM 2.0;\nqreg q[1];\nrx(1 +) q[0];", "malformed parameter expression", 3},
        {"OPENQASM 2.0;\nqreg q[1];\ncreg q[1];", "redeclaration", 3},
        {"OPENQASM 2.0;\nqreg q[2];\nrx q[0];", "parameter", 3},
        {"OPENQASM 2.0;\nqreg q[2];\ncx q[0];", "qubit", 3},
        {"OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[0];", "duplicate", 3},
        {"OPENQASM 2.0;\nqreg q[1];\ngate foo a { h a; }", "unsupported", 3},
    };
    for (const auto &c : cases) {
        auto r = parse_qasm(c.src);
        EXPECT_FALSE(r.ok()) << c.src;
        const auto *e = first_error(r);
        ASSERT_NE(e, nullptr) << c.src;
        EXPECT_NE(e->message.find(c.needle), std::string::npos) << e->message;
        EXPECT_EQ(e->line, c.line) << c.src;
        EXPECT_THROW(parse_qasm_or_throw(c.src), ParseError);
    }
}

TEST(Qasm, MeasurementIsStrippedWithWarning) {
    const char *with = "OPENQASM 2.0;\nqreg q[2];\ncreg c[2];\nh q[0];\ncx q[0],q[1];\nmeasure q[0] -> c[0];\n"
                       "measure q -> c;\n";
    const char *without = "OPENQASM 2.0;\nqreg q[2];\ncreg c[2];\nh q[0];\ncx q[0],q[1];\n";
    auto a = parse_qasm(with);
    auto b = parse_qasm(without);
    ASSERT_TRUE(a.ok());
    ASSERT_TRUE(b.ok());
    EXPECT_EQ(*a.circuit, *b.circuit);
    ASSERT_EQ(a.diagnostics.size(), 2u);
    EXPECT_EQ(a.diagnostics[0].severity, Severity::Warning);
    EXPECT_EQ(a.diagnostics[0].line, 6u);
    EXPECT_TRUE(b.diagnostics.empty());
}

TEST(Qasm, EmitExamples) {
    EXPECT_EQ(emit_qasm(Circuit(2)), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");
    Circuit c(2);
    c.append(GateKind::H, {0}).append(GateKind::CX, {0, 1});
    EXPECT_EQ(emit_qasm(c), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n");
    Circuit r(1);
    r.append(GateKind::RZ, {0}, {std::numbers::pi / 180});
    Circuit back = parse_qasm_or_throw(emit_qasm(r));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(back[0].params[0]), std::bit_cast<std::uint64_t>(std::numbers::pi / 180));
    EXPECT_THROW(emit_qasm(parse_json(oracle::hbug_json())), std::invalid_argument);
}

TEST(Qasm, RoundTripRandomCircuitsBitExact) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Circuit c = random_circuit(1 + seed % 5, 1 + seed % 10, seed);
        ASSERT_TRUE(same_bits(parse_qasm_or_throw(emit_qasm(c)), c)) << "seed " << seed;
    }
}

TEST(Qasm, NeverCrashesOnArbitraryBytes) {
    Rng rng(2718);
    const std::string seed_program = emit_qasm(random_circuit(3, 4, 1));
    for (int i = 0; i < 5000; ++i) {
        std::string s;
        if (i % 2 == 0) {
            s.resize(rng.below(200));
            for (auto &ch : s) {
                ch = static_cast<char>(rng.below(256));
            }
        } else {
            s = seed_program;
            for (int k = 0; k < 5; ++k) {
                s[rng.below(s.size())] = static_cast<char>(rng.below(256));
            }
        }
        ParseResult r;
        ASSERT_NO_THROW(r = parse_qasm(s));
        if (!r.ok()) {
            ASSERT_NE(first_error(r), nullptr);
        }
    }
}

TEST(Json, RoundTripIncludingUnitary) {
    Circuit x(1, "x");
    x.append(GateKind::X, {0});
    EXPECT_EQ(parse_json(emit_json(x)), x);
    Circuit empty = parse_json(R"({"num_qubits": 2, "name": "", "gates": []})");
    EXPECT_TRUE(empty.empty());
    EXPECT_EQ(empty.num_qubits(), 2u);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Circuit c = random_circuit(1 + seed % 4, 1 + seed % 6, seed);
        c.append(make_unitary({0}, gate_matrix(make_gate(GateKind::RY, {0}, {0.1 * static_cast<double>(seed)}))));
        ASSERT_TRUE(same_bits(parse_json(emit_json(c)), c)) << seed;
    }
}

TEST(Json, PerturbedHadamardIsReunitarized) {
    Circuit c = parse_json(oracle::hbug_json());
    ASSERT_EQ(c.size(), 1u);
    const GateMatrix &m = c[0].matrix;
    EXPECT_LE(unitarity_defect(m), 1e-14);
    const double norm = oracle::hbug_row_norm();
    EXPECT_NEAR(m(0, 0).real(), oracle::kHbugA / norm, 1e-14);
    EXPECT_NEAR(m(0, 1).real(), oracle::kHbugB / norm, 1e-14);
    EXPECT_NEAR(m(1, 1).real(), -oracle::kHbugA / norm, 1e-14);
}

TEST(Json, SchemaErrors) {
    EXPECT_THROW(parse_json("not json"), SchemaError);
    EXPECT_THROW(parse_json("[]"), SchemaError);
    EXPECT_THROW(parse_json(R"({"gates": []})"), SchemaError);
    EXPECT_THROW(parse_json(R"({"num_qubits": 1, "gates": [{"kind": "foo", "targets": [0]}]})"), SchemaError);
    EXPECT_THROW(parse_json(R"({"num_qubits": 1, "gates": [{"kind": "h", "targets": [3]}]})"), SchemaError);
    EXPECT_THROW(parse_json(R"({"num_qubits": 1, "gates": [{"kind": "h", "targets": [-1]}]})"), SchemaError);
    // Defect well above the re-unitarization limit.
    EXPECT_THROW(parse_json(R"({"num_qubits": 1, "gates": [{"kind": "unitary", "targets": [0],
                   "matrix": [[[1,0],[0.1,0]],[[0,0],[1,0]]]}]})"),
                 SchemaError);
    EXPECT_THROW(parse_json(R"({"num_qubits": 1, "gates": [{"kind": "unitary", "targets": [0],
                   "matrix": [[[1,0]],[[0,0],[1,0]]]}]})"),
                 SchemaError);
}

TEST(Json, StateDocuments) {
    Rng rng(4);
    StateVector s = random_state(3, rng);
    EXPECT_EQ(parse_state_json(emit_state_json(s)), s);
    EXPECT_THROW(parse_state_json(R"({"num_qubits": 1, "amplitudes": [[1,0]]})"), SchemaError);
    EXPECT_THROW(parse_state_json(R"({"num_qubits": 1, "amplitudes": [[1,0],[1,0]]})"), SchemaError);
}

TEST(NearestUnitary, IsUnitaryAndClose) {
    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
        GateMatrix m = gate_matrix(make_gate(GateKind::CRY, {0, 1}, {rng.uniform() * 6}));
        for (auto &e : m.entries) {
            e += Complex(1e-5 * rng.normal(), 1e-5 * rng.normal());
        }
        GateMatrix u = nearest_unitary(m);
        EXPECT_LE(unitarity_defect(u), 1e-13);
        double dist = 0;
        for (std::size_t k = 0; k < m.entries.size(); ++k) {
            dist = std::max(dist, std::abs(m.entries[k] - u.entries[k]));
        }
        EXPECT_LE(dist, 1e-4);
    }
}

}  // namespace
}  // namespace qut
