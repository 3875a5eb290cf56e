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

#ifndef QUT_DENSITY_MATRIX_H
#define QUT_DENSITY_MATRIX_H

#include <Eigen/Dense>

#include "qut/state_vector.h"

namespace qut {

using ComplexMatrix = Eigen::MatrixXcd;

/// Eigenvalues at or below this magnitude are treated as exact zeros when
/// raising a Hermitian matrix to a power.
inline constexpr double kEigenvalueFloor = 1e-12;

/// A Hermitian, positive semidefinite, unit-trace matrix of dimension 2^n.
class DensityMatrix {
   public:
    /// Validates shape, Hermiticity (1e-10), trace (1e-10) and eigenvalues >= -1e-10.
    explicit DensityMatrix(ComplexMatrix entries);

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const ComplexMatrix &matrix() const { return entries_; }
    Complex operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

   private:
    ComplexMatrix entries_;
};

/// The projector |psi><psi|.
DensityMatrix density_from_pure(const StateVector &state);

/// A^p for Hermitian positive semidefinite A via eigendecomposition.
///
/// Eigenvalues <= kEigenvalueFloor are dropped, so p = 0 yields the projector
/// onto the support of A (0^0 = 0). Throws std::invalid_argument when A is
/// not square, not Hermitian within 1e-10, or p is outside [0, 1].
ComplexMatrix hermitian_power(const ComplexMatrix &a, double p);

/// hermitian_power applied to a density matrix.
ComplexMatrix fractional_power(const DensityMatrix &dm, double p);

}  // namespace qut

#endif
