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

#ifndef QUT_STATE_VECTOR_H
#define QUT_STATE_VECTOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qut {

using Complex = std::complex<double>;

/// Tolerance on sum |a_i|^2 == 1 accepted by StateVector.
inline constexpr double kNormTolerance = 1e-10;

/// A normalized pure state over n qubits.
///
/// Amplitudes are stored densely and indexed by the integer value of the
/// measured bitstring, with qubit 0 as the least-significant bit. So for two
/// qubits, index 2 (binary 10) is the amplitude of q1 = 1, q0 = 0.
///
/// Instances are immutable; every operation that changes a state returns a
/// new value.
class StateVector {
   public:
    /// Validates finiteness, power-of-two length (>= 2) and normalization.
    explicit StateVector(std::vector<Complex> amplitudes);

    /// |0...0> on n qubits.
    static StateVector zero(std::size_t num_qubits);
    /// The computational basis state |index>.
    static StateVector basis(std::size_t num_qubits, std::uint64_t index);
    /// Rescales to unit norm before validating. Throws on a zero vector.
    static StateVector normalized(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    /// Sum of |a_i|^2.
    double norm_squared() const;

    /// Multiplies every amplitude by exp(i * phase).
    StateVector with_global_phase(double phase) const;

    bool operator==(const StateVector &other) const = default;

   private:
    struct Unchecked {};
    StateVector(Unchecked, std::size_t num_qubits, std::vector<Complex> amplitudes);

    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// sum_i conj(a_i) * b_i. Throws std::invalid_argument on a size mismatch.
Complex inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2 clamped to [0, 1].
double fidelity(const StateVector &a, const StateVector &b);

}  // namespace qut

#endif
