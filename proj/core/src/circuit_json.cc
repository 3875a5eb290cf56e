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


#include "qut/circuit_json.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

#include "qut/qasm.h"

namespace qut {

namespace {

using nlohmann::json;

constexpr double kUnitaryTolerance = 1e-10;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw SchemaError("complex number must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

GateMatrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        throw SchemaError("matrix must be a non-empty array of rows");
    }
    GateMatrix m{j.size(), {}};
    m.entries.reserve(m.dim * m.dim);
    for (const auto &row : j) {
        if (!row.is_array() || row.size() != m.dim) {
            throw SchemaError("matrix must be square");
        }
        for (const auto &z : row) {
            m.entries.push_back(complex_from_json(z));
        }
    }
    double defect = unitarity_defect(m);
    if (!(defect <= kReunitarizeLimit)) {
        throw SchemaError("matrix is not unitary (defect " + std::to_string(defect) + ")");
    }
    return defect <= kUnitaryTolerance ? m : nearest_unitary(m);
}

GateApplication gate_from_json(const json &g) {
    if (!g.is_object() || !g.contains("kind") || !g["kind"].is_string()) {
        throw SchemaError("gate needs a string \"kind\"");
    }
    auto kind = gate_from_name(g["kind"].get<std::string>());
    if (!kind) {
        throw SchemaError("unknown gate kind '" + g["kind"].get<std::string>() + "'");
    }
    if (!g.contains("targets") || !g["targets"].is_array()) {
        throw SchemaError("gate needs a \"targets\" array");
    }
    std::vector<std::uint32_t> targets;
    for (const auto &t : g["targets"]) {
        if (!t.is_number_unsigned() || t.get<std::uint64_t>() > 0xffffffffULL) {
            throw SchemaError("targets must be non-negative integers");
        }
        targets.push_back(t.get<std::uint32_t>());
    }
    std::vector<double> params;
    if (g.contains("params")) {
        if (!g["params"].is_array()) {
            throw SchemaError("\"params\" must be an array");
        }
        for (const auto &p : g["params"]) {
            if (!p.is_number()) {
                throw SchemaError("params must be numbers");
            }
            params.push_back(p.get<double>());
        }
    }
    if (*kind == GateKind::Unitary) {
        if (!g.contains("matrix")) {
            throw SchemaError("unitary gate needs a \"matrix\"");
        }
        try {
            return make_unitary(std::move(targets), matrix_from_json(g["matrix"]));
        } catch (const std::invalid_argument &e) {
            throw SchemaError(e.what());
        }
    }
    if (g.contains("matrix")) {
        throw SchemaError("only unitary gates carry a \"matrix\"");
    }
    GateApplication app{*kind, std::move(targets), std::move(params), {}};
    return app;
}

json parse_document(std::string_view text) {
    json doc = json::parse(text.begin(), text.end(), nullptr, false);
    if (doc.is_discarded()) {
        throw SchemaError("invalid JSON");
    }
    if (!doc.is_object()) {
        throw SchemaError("top-level JSON value must be an object");
    }
    return doc;
}

std::size_t num_qubits_from(const json &doc) {
    if (!doc.contains("num_qubits") || !doc["num_qubits"].is_number_unsigned()) {
        throw SchemaError("\"num_qubits\" must be a non-negative integer");
    }
    return doc["num_qubits"].get<std::size_t>();
}

Circuit circuit_from_document(const json &doc) {
    std::size_t n = num_qubits_from(doc);
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw SchemaError("\"name\" must be a string");
        }
        name = doc["name"].get<std::string>();
    }
    if (!doc.contains("gates") || !doc["gates"].is_array()) {
        throw SchemaError("\"gates\" must be an array");
    }
    try {
        Circuit c(n, std::move(name));
        for (const auto &g : doc["gates"]) {
            c.append(gate_from_json(g));
        }
        return c;
    } catch (const std::invalid_argument &e) {
        throw SchemaError(e.what());
    }
}

StateVector state_from_document(const json &doc) {
    std::size_t n = num_qubits_from(doc);
    const json &amps = doc["amplitudes"];
    if (!amps.is_array()) {
        throw SchemaError("\"amplitudes\" must be an array");
    }
    if (n > 30 || amps.size() != (std::size_t{1} << n)) {
        throw SchemaError("\"amplitudes\" must hold 2^num_qubits entries");
    }
    std::vector<Complex> v;
    v.reserve(amps.size());
    for (const auto &z : amps) {
        v.push_back(complex_from_json(z));
    }
    try {
        return StateVector(std::move(v));
    } catch (const std::invalid_argument &e) {
        throw SchemaError(e.what());
    }
}

bool has_extension(const std::filesystem::path &path, std::string_view ext) {
    return path.extension() == ext;
}

}  // namespace

GateMatrix nearest_unitary(const GateMatrix &m) {
    const auto d = static_cast<Eigen::Index>(m.dim);
    Eigen::MatrixXcd a(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            a(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXcd u = svd.matrixU() * svd.matrixV().adjoint();
    GateMatrix out{m.dim, std::vector<Complex>(m.entries.size())};
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = u(r, c);
        }
    }
    return out;
}

std::string emit_json(const Circuit &circuit) {
    json gates = json::array();
    for (const auto &g : circuit.gates()) {
        json jg{{"kind", gate_name(g.kind)}, {"targets", g.targets}, {"params", g.params}};
        if (g.kind == GateKind::Unitary) {
            json rows = json::array();
            for (std::size_t r = 0; r < g.matrix.dim; ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < g.matrix.dim; ++c) {
                    row.push_back(complex_to_json(g.matrix(r, c)));
                }
                rows.push_back(std::move(row));
            }
            jg["matrix"] = std::move(rows);
        }
        gates.push_back(std::move(jg));
    }
    json doc{{"num_qubits", circuit.num_qubits()}, {"name", circuit.name()}, {"gates", std::move(gates)}};
    return doc.dump(2) + "\n";
}

Circuit parse_json(std::string_view text) {
    return circuit_from_document(parse_document(text));
}

std::string emit_state_json(const StateVector &state) {
    json amps = json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back(complex_to_json(a));
    }
    json doc{{"num_qubits", state.num_qubits()}, {"amplitudes", std::move(amps)}};
    return doc.dump(2) + "\n";
}

StateVector parse_state_json(std::string_view text) {
    json doc = parse_document(text);
    if (!doc.contains("amplitudes")) {
        throw SchemaError("state document needs \"amplitudes\"");
    }
    return state_from_document(doc);
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

Circuit load_circuit(const std::filesystem::path &path) {
    std::string text = read_text_file(path);
    if (has_extension(path, ".json")) {
        return parse_json(text);
    }
    return parse_qasm_or_throw(text);
}

ExpectedSpec load_expected(const std::filesystem::path &path) {
    std::string text = read_text_file(path);
    if (has_extension(path, ".json")) {
        json doc = parse_document(text);
        if (doc.contains("amplitudes")) {
            return state_from_document(doc);
        }
        return circuit_from_document(doc);
    }
    return parse_qasm_or_throw(text);
}

}  // namespace qut
