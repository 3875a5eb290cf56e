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

#ifndef QUT_GATE_H
#define QUT_GATE_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qut/state_vector.h"

namespace qut {

/// The closed gate catalog. Angles are radians.
///
/// Target conventions follow the usual OpenQASM ordering: controls come first
/// (cx c t, ccx c0 c1 t, cswap c a b).
enum class GateKind : std::uint8_t {
    I,
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    RX,
    RY,
    RZ,
    P,
    R,
    CX,
    CY,
    CZ,
    Swap,
    CRX,
    CRY,
    CRZ,
    CP,
    CCX,
    CSwap,
    /// An arbitrary 2^k x 2^k unitary supplied as a matrix.
    Unitary,
};

inline constexpr std::size_t kNumCatalogKinds = static_cast<std::size_t>(GateKind::Unitary);

struct GateInfo {
    GateKind kind;
    std::string_view name;
    /// 0 for Unitary, whose arity comes from its matrix.
    std::uint8_t arity;
    std::uint8_t num_params;
};

const GateInfo &gate_info(GateKind kind);
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// Every catalog kind except Unitary, in declaration order.
std::span<const GateKind> catalog_kinds();

/// Syntactic-equivalence classes: kinds that can replace one another without
/// changing arity or parameter signature. Unitary belongs to no class.
std::span<const std::vector<GateKind>> equivalence_classes();
/// The class containing `kind`, or nullptr for Unitary.
const std::vector<GateKind> *equivalence_class_of(GateKind kind);

/// Row-major dim x dim complex matrix.
struct GateMatrix {
    std::size_t dim = 0;
    std::vector<Complex> entries;

    Complex operator()(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
    Complex &operator()(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    bool operator==(const GateMatrix &) const = default;
};

/// max |(U^dagger U - I)_{ij}|.
double unitarity_defect(const GateMatrix &m);

/// One gate placed on specific qubits.
///
/// The local basis of the gate matrix maps bit j of the local index to
/// targets[j], so targets[0] is the least-significant local bit.
struct GateApplication {
    GateKind kind = GateKind::I;
    std::vector<std::uint32_t> targets;
    std::vector<double> params;
    /// Populated only for GateKind::Unitary.
    GateMatrix matrix;

    /// Throws std::invalid_argument on arity, parameter-count, duplicate
    /// target or (for Unitary) shape / unitarity violations.
    void validate() const;

    bool operator==(const GateApplication &) const = default;
};

GateApplication make_gate(GateKind kind, std::vector<std::uint32_t> targets, std::vector<double> params = {});
/// Builds a Unitary gate. Checks unitarity within 1e-10.
GateApplication make_unitary(std::vector<std::uint32_t> targets, GateMatrix matrix);

/// The gate's matrix in its local basis (see GateApplication).
GateMatrix gate_matrix(const GateApplication &gate);

/// The exact inverse within the catalog.
GateApplication inverse_gate(const GateApplication &gate);

/// Applies a gate in place to a dense amplitude array of 2^num_qubits entries.
void apply_gate_in_place(std::span<Complex> amplitudes, std::size_t num_qubits, const GateApplication &gate);

/// Left-multiplies the state by the gate's unitary embedded on its targets.
StateVector apply_gate(const StateVector &state, const GateApplication &gate);

}  // namespace qut

#endif
