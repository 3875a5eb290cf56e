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

#include "qut/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qut {

namespace {

std::size_t qubits_for_length(std::size_t length) {
    if (length < 2 || !std::has_single_bit(length)) {
        throw std::invalid_argument(
            "state vector length must be a power of two >= 2, got " + std::to_string(length));
    }
    return static_cast<std::size_t>(std::countr_zero(length));
}

double sum_norm(const std::vector<Complex> &amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace

StateVector::StateVector(Unchecked, std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector::StateVector(std::vector<Complex> amplitudes) : num_qubits_(qubits_for_length(amplitudes.size())) {
    for (const auto &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state vector contains a non-finite amplitude");
        }
    }
    double n2 = sum_norm(amplitudes);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state vector is not normalized (sum |a|^2 = " + std::to_string(n2) + ")");
    }
    amplitudes_ = std::move(amplitudes);
}

StateVector StateVector::zero(std::size_t num_qubits) {
    return basis(num_qubits, 0);
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
    if (num_qubits == 0 || num_qubits > 62) {
        throw std::invalid_argument("num_qubits must be in [1, 62]");
    }
    std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(Unchecked{}, num_qubits, std::move(amps));
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
    double n2 = sum_norm(amplitudes);
    if (!(n2 > 0) || !std::isfinite(n2)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    double scale = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return StateVector(std::move(amplitudes));
}

double StateVector::norm_squared() const {
    return sum_norm(amplitudes_);
}

StateVector StateVector::with_global_phase(double phase) const {
    Complex factor = std::polar(1.0, phase);
    std::vector<Complex> out(amplitudes_);
    for (auto &a : out) {
        a *= factor;
    }
    return StateVector(Unchecked{}, num_qubits_, std::move(out));
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    Complex total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

}  // namespace qut
