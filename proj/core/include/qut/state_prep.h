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

#ifndef QUT_STATE_PREP_H
#define QUT_STATE_PREP_H

#include <span>

#include "qut/circuit.h"

namespace qut {

struct StatePrep {
    Circuit circuit;
    /// Simulating `circuit` from |0...0> yields exp(i * global_phase) * target.
    double global_phase = 0.0;
};

/// Builds a circuit preparing `target` from |0...0>.
///
/// Works by recursive disentangling: qubit 0 is rotated out first by a
/// multiplexed rz then a multiplexed ry (controlled on all higher qubits),
/// then qubit 1, and so on; the preparation is the inverse of that sequence.
/// Multiplexed rotations are expanded recursively into single-qubit rotations
/// and cx gates, giving O(2^n) gates. Zero-angle rotations are omitted, so a
/// basis state |0...0> yields an empty circuit.
StatePrep synthesize_state_prep_with_phase(const StateVector &target);

/// synthesize_state_prep_with_phase(target).circuit
Circuit synthesize_state_prep(const StateVector &target);

/// Appends a uniformly controlled rotation to `circuit`.
///
/// `kind` is RY or RZ. angles[j] is applied to `target` when the control
/// register reads j, with controls[b] supplying bit b of j.
void append_multiplexed_rotation(Circuit &circuit, GateKind kind, std::uint32_t target,
                                 std::span<const std::uint32_t> controls, std::span<const double> angles);

}  // namespace qut

#endif
