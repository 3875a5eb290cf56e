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

#ifndef QUT_CIRCUIT_H
#define QUT_CIRCUIT_H

#include <cstdint>
#include <string>
#include <vector>

#include "qut/gate.h"

namespace qut {

/// An ordered gate sequence over an n-qubit register.
class Circuit {
   public:
    explicit Circuit(std::size_t num_qubits, std::string name = {});

    std::size_t num_qubits() const { return num_qubits_; }
    const std::string &name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::vector<GateApplication> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    const GateApplication &operator[](std::size_t i) const { return gates_[i]; }

    /// Validates the gate and its targets against the register width.
    Circuit &append(GateApplication gate);
    Circuit &append(GateKind kind, std::vector<std::uint32_t> targets, std::vector<double> params = {});
    /// Appends all gates of `other`, which must have the same width.
    Circuit &append(const Circuit &other);

    void insert(std::size_t position, GateApplication gate);
    void erase(std::size_t position);
    void replace(std::size_t position, GateApplication gate);

    bool operator==(const Circuit &) const = default;

   private:
    void check(const GateApplication &gate) const;

    std::size_t num_qubits_;
    std::string name_;
    std::vector<GateApplication> gates_;
};

/// `first` followed by `second`. Widths must match.
Circuit compose(const Circuit &first, const Circuit &second);

/// Reversed gate order with every gate replaced by its inverse.
Circuit invert_circuit(const Circuit &circuit);

/// Copies `circuit` into a wider register, shifting every target by `offset`.
Circuit embed(const Circuit &circuit, std::size_t num_qubits, std::uint32_t offset);

/// Hash of gate kinds, targets, parameter bits and matrices. Ignores the name.
std::uint64_t structural_hash(const Circuit &circuit);

/// Layered random circuit.
///
/// Each of `depth` layers shuffles the qubits and covers every qubit with
/// exactly one gate drawn uniformly from the catalog kinds (excluding id)
/// whose arity fits the qubits still free in that layer, capped at
/// min(n, 3). Angles are uniform in [0, 2pi). Deterministic for a fixed
/// (num_qubits, depth, seed).
Circuit random_circuit(std::size_t num_qubits, std::size_t depth, std::uint64_t seed);

}  // namespace qut

#endif
