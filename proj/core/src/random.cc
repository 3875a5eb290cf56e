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

#include "qut/random.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qut {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::below: bound must be positive");
    }
    // Reject the top partial bucket so every residue is equally likely.
    std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    while (true) {
        std::uint64_t x = next_u64();
        if (x < limit) {
            return x % bound;
        }
    }
}

double Rng::normal() {
    double u1 = uniform();
    double u2 = uniform();
    // 1 - u1 lies in (0, 1], keeping the log finite.
    return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::binomial(std::uint64_t trials, double p) {
    if (trials == 0 || p <= 0.0) {
        return 0;
    }
    if (p >= 1.0) {
        return trials;
    }
    std::binomial_distribution<std::uint64_t> dist(trials, p);
    return dist(engine_);
}

StateVector random_state(std::size_t num_qubits, Rng &rng) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    for (auto &a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = Complex(re, im);
    }
    return StateVector::normalized(std::move(amps));
}

}  // namespace qut
