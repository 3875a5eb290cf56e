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

#include "qut/density_matrix.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qut {

namespace {

constexpr double kHermitianTolerance = 1e-10;

double hermitian_defect(const ComplexMatrix &a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    auto rows = static_cast<std::size_t>(entries_.rows());
    if (entries_.rows() != entries_.cols() || rows < 2 || !std::has_single_bit(rows)) {
        throw std::invalid_argument("density matrix must be square with power-of-two dimension >= 2");
    }
    if (!entries_.allFinite()) {
        throw std::invalid_argument("density matrix has non-finite entries");
    }
    if (hermitian_defect(entries_) > kHermitianTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    Complex tr = entries_.trace();
    if (std::abs(tr - Complex(1.0)) > kHermitianTolerance) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::invalid_argument("density matrix eigendecomposition failed");
    }
    if (solver.eigenvalues().minCoeff() < -kHermitianTolerance) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix density_from_pure(const StateVector &state) {
    Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(), static_cast<Eigen::Index>(state.size()));
    return DensityMatrix(psi * psi.adjoint());
}

ComplexMatrix hermitian_power(const ComplexMatrix &a, double p) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermitian_power: matrix is not square");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("hermitian_power: exponent must lie in [0, 1]");
    }
    if (hermitian_defect(a) > kHermitianTolerance) {
        throw std::invalid_argument("hermitian_power: matrix is not Hermitian");
    }
    if (p == 1.0) {
        return a;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::invalid_argument("hermitian_power: eigendecomposition failed");
    }
    Eigen::VectorXd lambda = solver.eigenvalues();
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        lambda[i] = lambda[i] > kEigenvalueFloor ? std::pow(lambda[i], p) : 0.0;
    }
    const ComplexMatrix &v = solver.eigenvectors();
    ComplexMatrix out = v * lambda.asDiagonal() * v.adjoint();
    // Restore exact Hermiticity lost to rounding in the triple product.
    return (out + out.adjoint()) * 0.5;
}

ComplexMatrix fractional_power(const DensityMatrix &dm, double p) {
    return hermitian_power(dm.matrix(), p);
}

}  // namespace qut
