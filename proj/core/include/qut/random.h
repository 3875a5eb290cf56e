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

#ifndef QUT_RANDOM_H
#define QUT_RANDOM_H

#include <cstdint>
#include <random>
#include <string_view>

#include "qut/state_vector.h"

namespace qut {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used for all seed mixing.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// 64-bit FNV-1a over the bytes of `s`.
constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Derives an independent stream seed from a parent seed and a job id:
/// splitmix64(splitmix64(parent) ^ job).
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t job) {
    return splitmix64(splitmix64(parent) ^ job);
}

/// Seeded generator used for every random draw in the library.
///
/// The engine is std::mt19937_64 seeded directly with the 64-bit seed, whose
/// output sequence is fixed by the C++ standard. Derived quantities use only
/// the documented transforms below (never the implementation-defined
/// std::*_distribution), so streams are reproducible across toolchains. The
/// one exception is binomial(), which defers to std::binomial_distribution.
class Rng {
   public:
    using Engine = std::mt19937_64;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1): top 53 bits of next_u64() times 2^-53.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Standard normal via Box-Muller on two uniform() draws.
    double normal();

    /// Binomial(trials, p) via std::binomial_distribution on the engine.
    std::uint64_t binomial(std::uint64_t trials, double p);

    Engine &engine() { return engine_; }

   private:
    Engine engine_;
};

/// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
StateVector random_state(std::size_t num_qubits, Rng &rng);

}  // namespace qut

#endif
