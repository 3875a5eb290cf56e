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

#include "qut/gate.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qut {

namespace {

using K = GateKind;

constexpr std::array<GateInfo, kNumCatalogKinds + 1> kGateTable{{
    {K::I, "id", 1, 0},     {K::X, "x", 1, 0},       {K::Y, "y", 1, 0},       {K::Z, "z", 1, 0},
    {K::H, "h", 1, 0},      {K::S, "s", 1, 0},       {K::Sdg, "sdg", 1, 0},   {K::T, "t", 1, 0},
    {K::Tdg, "tdg", 1, 0},  {K::RX, "rx", 1, 1},     {K::RY, "ry", 1, 1},     {K::RZ, "rz", 1, 1},
    {K::P, "p", 1, 1},      {K::R, "r", 1, 2},       {K::CX, "cx", 2, 0},     {K::CY, "cy", 2, 0},
    {K::CZ, "cz", 2, 0},    {K::Swap, "swap", 2, 0}, {K::CRX, "crx", 2, 1},   {K::CRY, "cry", 2, 1},
    {K::CRZ, "crz", 2, 1},  {K::CP, "cp", 2, 1},     {K::CCX, "ccx", 3, 0},   {K::CSwap, "cswap", 3, 0},
    {K::Unitary, "unitary", 0, 0},
}};

constexpr std::array<GateKind, kNumCatalogKinds> kCatalog = [] {
    std::array<GateKind, kNumCatalogKinds> out{};
    for (std::size_t i = 0; i < kNumCatalogKinds; ++i) {
        out[i] = static_cast<GateKind>(i);
    }
    return out;
}();

const std::vector<std::vector<GateKind>> &classes() {
    static const std::vector<std::vector<GateKind>> kClasses{
        {K::I, K::X, K::Y, K::Z, K::H, K::S, K::Sdg, K::T, K::Tdg},
        {K::RX, K::RY, K::RZ, K::P},
        {K::R},
        {K::CX, K::CY, K::CZ, K::Swap},
        {K::CRX, K::CRY, K::CRZ, K::CP},
        {K::CCX, K::CSwap},
    };
    return kClasses;
}

constexpr Complex kI{0.0, 1.0};

GateMatrix square(std::size_t dim) {
    return GateMatrix{dim, std::vector<Complex>(dim * dim)};
}

GateMatrix one_qubit(Complex a, Complex b, Complex c, Complex d) {
    return GateMatrix{2, {a, b, c, d}};
}

/// Controlled version of a single-qubit matrix. Controls are the low local
/// bits, the target is the highest local bit.
GateMatrix controlled(const GateMatrix &u, std::size_t num_controls) {
    std::size_t dim = std::size_t{2} << num_controls;
    GateMatrix m = square(dim);
    std::size_t all_controls = (std::size_t{1} << num_controls) - 1;
    std::size_t target_bit = std::size_t{1} << num_controls;
    for (std::size_t r = 0; r < dim; ++r) {
        if ((r & all_controls) != all_controls) {
            m(r, r) = 1.0;
            continue;
        }
        for (std::size_t tr = 0; tr < 2; ++tr) {
            for (std::size_t tc = 0; tc < 2; ++tc) {
                std::size_t row = all_controls | (tr ? target_bit : 0);
                std::size_t col = all_controls | (tc ? target_bit : 0);
                m(row, col) = u(tr, tc);
            }
        }
    }
    return m;
}

GateMatrix single_qubit_matrix(GateKind kind, std::span<const double> p) {
    const double r2 = std::numbers::sqrt2 / 2;
    switch (kind) {
        case K::I:
            return one_qubit(1, 0, 0, 1);
        case K::X:
            return one_qubit(0, 1, 1, 0);
        case K::Y:
            return one_qubit(0, -kI, kI, 0);
        case K::Z:
            return one_qubit(1, 0, 0, -1);
        case K::H:
            return one_qubit(r2, r2, r2, -r2);
        case K::S:
            return one_qubit(1, 0, 0, kI);
        case K::Sdg:
            return one_qubit(1, 0, 0, -kI);
        case K::T:
            return one_qubit(1, 0, 0, std::polar(1.0, std::numbers::pi / 4));
        case K::Tdg:
            return one_qubit(1, 0, 0, std::polar(1.0, -std::numbers::pi / 4));
        case K::RX: {
            double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
            return one_qubit(c, -kI * s, -kI * s, c);
        }
        case K::RY: {
            double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
            return one_qubit(c, -s, s, c);
        }
        case K::RZ:
            return one_qubit(std::polar(1.0, -p[0] / 2), 0, 0, std::polar(1.0, p[0] / 2));
        case K::P:
            return one_qubit(1, 0, 0, std::polar(1.0, p[0]));
        case K::R: {
            // exp(-i theta/2 (cos(phi) X + sin(phi) Y))
            double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
            return one_qubit(c, -kI * std::polar(1.0, -p[1]) * s, -kI * std::polar(1.0, p[1]) * s, c);
        }
        default:
            throw std::logic_error("not a single-qubit kind");
    }
}

GateMatrix swap_matrix() {
    GateMatrix m = square(4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
    return m;
}

void check_targets_distinct(const std::vector<std::uint32_t> &targets) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw std::invalid_argument("duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
}

}  // namespace

const GateInfo &gate_info(GateKind kind) {
    auto idx = static_cast<std::size_t>(kind);
    if (idx >= kGateTable.size()) {
        throw std::invalid_argument("unknown gate kind");
    }
    return kGateTable[idx];
}

std::string_view gate_name(GateKind kind) {
    return gate_info(kind).name;
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (const auto &info : kGateTable) {
        if (info.name == name) {
            return info.kind;
        }
    }
    return std::nullopt;
}

std::span<const GateKind> catalog_kinds() {
    return kCatalog;
}

std::span<const std::vector<GateKind>> equivalence_classes() {
    return classes();
}

const std::vector<GateKind> *equivalence_class_of(GateKind kind) {
    for (const auto &cls : classes()) {
        if (std::find(cls.begin(), cls.end(), kind) != cls.end()) {
            return &cls;
        }
    }
    return nullptr;
}

double unitarity_defect(const GateMatrix &m) {
    double worst = 0;
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            Complex acc = 0;
            for (std::size_t k = 0; k < m.dim; ++k) {
                acc += std::conj(m(k, r)) * m(k, c);
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

void GateApplication::validate() const {
    const GateInfo &info = gate_info(kind);
    check_targets_distinct(targets);
    if (kind == K::Unitary) {
        if (targets.empty() || targets.size() > 10) {
            throw std::invalid_argument("unitary gate must act on 1..10 qubits");
        }
        if (!params.empty()) {
            throw std::invalid_argument("unitary gate takes no parameters");
        }
        std::size_t dim = std::size_t{1} << targets.size();
        if (matrix.dim != dim || matrix.entries.size() != dim * dim) {
            throw std::invalid_argument("unitary matrix shape does not match its target count");
        }
        for (const auto &e : matrix.entries) {
            if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
                throw std::invalid_argument("unitary matrix has non-finite entries");
            }
        }
        if (unitarity_defect(matrix) > 1e-10) {
            throw std::invalid_argument("matrix is not unitary within 1e-10");
        }
        return;
    }
    if (targets.size() != info.arity) {
        throw std::invalid_argument(
            std::string(info.name) + " expects " + std::to_string(info.arity) + " target(s), got " +
            std::to_string(targets.size()));
    }
    if (params.size() != info.num_params) {
        throw std::invalid_argument(
            std::string(info.name) + " expects " + std::to_string(info.num_params) + " parameter(s), got " +
            std::to_string(params.size()));
    }
    for (double v : params) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("gate parameter is not finite");
        }
    }
    if (!matrix.entries.empty() || matrix.dim != 0) {
        throw std::invalid_argument("only unitary gates carry a matrix");
    }
}

GateApplication make_gate(GateKind kind, std::vector<std::uint32_t> targets, std::vector<double> params) {
    GateApplication g{kind, std::move(targets), std::move(params), {}};
    g.validate();
    return g;
}

GateApplication make_unitary(std::vector<std::uint32_t> targets, GateMatrix matrix) {
    GateApplication g{K::Unitary, std::move(targets), {}, std::move(matrix)};
    g.validate();
    return g;
}

GateMatrix gate_matrix(const GateApplication &gate) {
    const auto &p = gate.params;
    switch (gate.kind) {
        case K::Unitary:
            return gate.matrix;
        case K::CX:
            return controlled(single_qubit_matrix(K::X, p), 1);
        case K::CY:
            return controlled(single_qubit_matrix(K::Y, p), 1);
        case K::CZ:
            return controlled(single_qubit_matrix(K::Z, p), 1);
        case K::CRX:
            return controlled(single_qubit_matrix(K::RX, p), 1);
        case K::CRY:
            return controlled(single_qubit_matrix(K::RY, p), 1);
        case K::CRZ:
            return controlled(single_qubit_matrix(K::RZ, p), 1);
        case K::CP:
            return controlled(single_qubit_matrix(K::P, p), 1);
        case K::CCX:
            return controlled(single_qubit_matrix(K::X, p), 2);
        case K::Swap:
            return swap_matrix();
        case K::CSwap: {
            // Control on local bit 0; swap local bits 1 and 2.
            GateMatrix m = square(8);
            for (std::size_t r = 0; r < 8; ++r) {
                std::size_t c = r;
                if (r & 1) {
                    std::size_t b1 = (r >> 1) & 1, b2 = (r >> 2) & 1;
                    c = 1 | (b2 << 1) | (b1 << 2);
                }
                m(r, c) = 1.0;
            }
            return m;
        }
        default:
            return single_qubit_matrix(gate.kind, p);
    }
}

GateApplication inverse_gate(const GateApplication &gate) {
    GateApplication inv = gate;
    switch (gate.kind) {
        case K::S:
            inv.kind = K::Sdg;
            break;
        case K::Sdg:
            inv.kind = K::S;
            break;
        case K::T:
            inv.kind = K::Tdg;
            break;
        case K::Tdg:
            inv.kind = K::T;
            break;
        case K::RX:
        case K::RY:
        case K::RZ:
        case K::P:
        case K::R:
        case K::CRX:
        case K::CRY:
        case K::CRZ:
        case K::CP:
            // r(theta, phi) inverts to r(-theta, phi); phi is untouched.
            inv.params[0] = -gate.params[0];
            break;
        case K::Unitary: {
            const auto &m = gate.matrix;
            for (std::size_t r = 0; r < m.dim; ++r) {
                for (std::size_t c = 0; c < m.dim; ++c) {
                    inv.matrix(r, c) = std::conj(m(c, r));
                }
            }
            break;
        }
        default:
            break;  // self-inverse
    }
    return inv;
}

void apply_gate_in_place(std::span<Complex> amplitudes, std::size_t num_qubits, const GateApplication &gate) {
    if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude array does not match qubit count");
    }
    gate.validate();
    for (auto t : gate.targets) {
        if (t >= num_qubits) {
            throw std::invalid_argument(
                "target qubit " + std::to_string(t) + " out of range for " + std::to_string(num_qubits) + " qubits");
        }
    }
    GateMatrix m = gate_matrix(gate);
    const std::size_t k = gate.targets.size();
    const std::size_t dim = m.dim;
    const std::size_t n_amps = amplitudes.size();

    if (k == 1) {
        const std::size_t stride = std::size_t{1} << gate.targets[0];
        const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
        for (std::size_t base = 0; base < n_amps; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                Complex a0 = amplitudes[i];
                Complex a1 = amplitudes[i + stride];
                amplitudes[i] = m00 * a0 + m01 * a1;
                amplitudes[i + stride] = m10 * a0 + m11 * a1;
            }
        }
        return;
    }

    std::vector<std::size_t> offsets(dim);
    std::size_t mask = 0;
    for (std::size_t local = 0; local < dim; ++local) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if ((local >> j) & 1) {
                off |= std::size_t{1} << gate.targets[j];
            }
        }
        offsets[local] = off;
    }
    for (auto t : gate.targets) {
        mask |= std::size_t{1} << t;
    }
    std::vector<Complex> in(dim);
    for (std::size_t base = 0; base < n_amps; ++base) {
        if (base & mask) {
            continue;
        }
        for (std::size_t c = 0; c < dim; ++c) {
            in[c] = amplitudes[base | offsets[c]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Complex acc = 0;
            for (std::size_t c = 0; c < dim; ++c) {
                acc += m(r, c) * in[c];
            }
            amplitudes[base | offsets[r]] = acc;
        }
    }
}

StateVector apply_gate(const StateVector &state, const GateApplication &gate) {
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    apply_gate_in_place(amps, state.num_qubits(), gate);
    return StateVector(std::move(amps));
}

}  // namespace qut
