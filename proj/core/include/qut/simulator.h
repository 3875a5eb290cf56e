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

#ifndef QUT_SIMULATOR_H
#define QUT_SIMULATOR_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qut/circuit.h"
#include "qut/random.h"
#include "qut/state_vector.h"

namespace qut {

/// Outcome probabilities below this are treated as exactly zero.
inline constexpr double kProbabilityFloor = 1e-16;

/// Final state of the circuit applied to |0...0>.
StateVector run_statevector(const Circuit &circuit);

/// `circuit` applied to `initial`.
StateVector evolve(const StateVector &initial, const Circuit &circuit);

/// |a_i|^2 with entries below kProbabilityFloor set to zero.
std::vector<double> outcome_probabilities(const StateVector &state);

/// Probability that `qubit` reads 1, from floored outcome probabilities.
double marginal_one_probability(const StateVector &state, std::size_t qubit);

/// Inverse-CDF sampler over a fixed discrete distribution.
class DiscreteSampler {
   public:
    /// Weights need not sum to one; entries below kProbabilityFloor are dropped.
    explicit DiscreteSampler(const std::vector<double> &weights);

    std::uint32_t operator()(Rng &rng) const;
    std::size_t size() const { return cdf_.size(); }

   private:
    std::vector<double> cdf_;
};

/// Measured outcomes in shot order. Each outcome is the integer value of the
/// measured bitstring (qubit 0 least significant).
struct ShotStream {
    std::size_t num_bits = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> outcomes;

    std::size_t size() const { return outcomes.size(); }
};

/// Bitstring occurrence counts over S shots.
class CountsHistogram {
   public:
    CountsHistogram(std::size_t num_bits, std::map<std::uint64_t, std::uint64_t> counts);
    static CountsHistogram from_stream(const ShotStream &stream);
    /// Histogram of the first `prefix` outcomes of `stream`.
    static CountsHistogram from_prefix(const ShotStream &stream, std::size_t prefix);

    std::size_t num_bits() const { return num_bits_; }
    std::uint64_t shots() const { return shots_; }
    const std::map<std::uint64_t, std::uint64_t> &counts() const { return counts_; }
    std::uint64_t count(std::uint64_t outcome) const;

    /// Counts keyed by bitstring text, most significant qubit first.
    std::map<std::string, std::uint64_t> by_bitstring() const;

   private:
    std::size_t num_bits_;
    std::uint64_t shots_ = 0;
    std::map<std::uint64_t, std::uint64_t> counts_;
};

/// `value` as `num_bits` characters, qubit num_bits-1 first.
std::string format_bitstring(std::uint64_t value, std::size_t num_bits);

struct SampleResult {
    ShotStream stream;
    CountsHistogram histogram;
};

/// S independent full-register measurements of a state.
ShotStream sample_state(const StateVector &state, std::uint64_t shots, std::uint64_t seed);

/// S independent full-register measurements of the circuit's final state.
SampleResult sample_counts(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed);

/// S measurements of a single qubit; outcomes are 0 or 1.
ShotStream marginal_sample(const Circuit &circuit, std::size_t qubit, std::uint64_t shots, std::uint64_t seed);
ShotStream marginal_sample(const StateVector &state, std::size_t qubit, std::uint64_t shots, std::uint64_t seed);

}  // namespace qut

#endif
