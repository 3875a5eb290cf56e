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

#include "qut/simulator.h"

#include <algorithm>
#include <stdexcept>

namespace qut {

namespace {

// Streams over at most this many bits are tallied through a flat array.
constexpr std::size_t kDenseTallyBits = 20;

}  // namespace

StateVector evolve(const StateVector &initial, const Circuit &circuit) {
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("evolve: state and circuit widths differ");
    }
    std::vector<Complex> amps(initial.amplitudes().begin(), initial.amplitudes().end());
    for (const auto &gate : circuit.gates()) {
        apply_gate_in_place(amps, circuit.num_qubits(), gate);
    }
    return StateVector(std::move(amps));
}

StateVector run_statevector(const Circuit &circuit) {
    return evolve(StateVector::zero(circuit.num_qubits()), circuit);
}

std::vector<double> outcome_probabilities(const StateVector &state) {
    std::vector<double> probs(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        double p = std::norm(state[i]);
        probs[i] = p < kProbabilityFloor ? 0.0 : p;
    }
    return probs;
}

double marginal_one_probability(const StateVector &state, std::size_t qubit) {
    if (qubit >= state.num_qubits()) {
        throw std::invalid_argument("marginal qubit index out of range");
    }
    auto probs = outcome_probabilities(state);
    double one = 0, total = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        total += probs[i];
        if ((i >> qubit) & 1) {
            one += probs[i];
        }
    }
    one /= total;
    return one < kProbabilityFloor ? 0.0 : one;
}

DiscreteSampler::DiscreteSampler(const std::vector<double> &weights) : cdf_(weights.size()) {
    if (weights.empty()) {
        throw std::invalid_argument("DiscreteSampler needs at least one weight");
    }
    double acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0)) {
            throw std::invalid_argument("DiscreteSampler weights must be non-negative");
        }
        acc += weights[i] < kProbabilityFloor ? 0.0 : weights[i];
        cdf_[i] = acc;
    }
    if (!(acc > 0)) {
        throw std::invalid_argument("DiscreteSampler weights sum to zero");
    }
}

std::uint32_t DiscreteSampler::operator()(Rng &rng) const {
    // First index whose cumulative weight exceeds u * total. Zero-weight
    // entries share their predecessor's cdf value and are never selected.
    double u = rng.uniform() * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) {
        --it;
    }
    return static_cast<std::uint32_t>(it - cdf_.begin());
}

CountsHistogram::CountsHistogram(std::size_t num_bits, std::map<std::uint64_t, std::uint64_t> counts)
    : num_bits_(num_bits), counts_(std::move(counts)) {
    for (const auto &[k, v] : counts_) {
        if (num_bits < 64 && (k >> num_bits) != 0) {
            throw std::invalid_argument("histogram key wider than num_bits");
        }
        shots_ += v;
    }
}

CountsHistogram CountsHistogram::from_stream(const ShotStream &stream) {
    return from_prefix(stream, stream.size());
}

CountsHistogram CountsHistogram::from_prefix(const ShotStream &stream, std::size_t prefix) {
    if (prefix > stream.size()) {
        throw std::invalid_argument("histogram prefix longer than stream");
    }
    std::map<std::uint64_t, std::uint64_t> counts;
    if (stream.num_bits <= kDenseTallyBits) {
        std::vector<std::uint64_t> dense(std::size_t{1} << stream.num_bits);
        for (std::size_t i = 0; i < prefix; ++i) {
            ++dense[stream.outcomes[i]];
        }
        for (std::size_t k = 0; k < dense.size(); ++k) {
            if (dense[k] > 0) {
                counts.emplace_hint(counts.end(), k, dense[k]);
            }
        }
    } else {
        for (std::size_t i = 0; i < prefix; ++i) {
            ++counts[stream.outcomes[i]];
        }
    }
    return CountsHistogram(stream.num_bits, std::move(counts));
}

std::uint64_t CountsHistogram::count(std::uint64_t outcome) const {
    auto it = counts_.find(outcome);
    return it == counts_.end() ? 0 : it->second;
}

std::map<std::string, std::uint64_t> CountsHistogram::by_bitstring() const {
    std::map<std::string, std::uint64_t> out;
    for (const auto &[k, v] : counts_) {
        out[format_bitstring(k, num_bits_)] = v;
    }
    return out;
}

std::string format_bitstring(std::uint64_t value, std::size_t num_bits) {
    std::string s(num_bits, '0');
    for (std::size_t b = 0; b < num_bits; ++b) {
        if ((value >> b) & 1) {
            s[num_bits - 1 - b] = '1';
        }
    }
    return s;
}

ShotStream sample_state(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    if (state.num_qubits() > 32) {
        throw std::invalid_argument("sampling supports at most 32 qubits");
    }
    DiscreteSampler sampler(outcome_probabilities(state));
    Rng rng(seed);
    ShotStream stream{state.num_qubits(), seed, {}};
    stream.outcomes.resize(shots);
    for (auto &o : stream.outcomes) {
        o = sampler(rng);
    }
    return stream;
}

SampleResult sample_counts(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed) {
    ShotStream stream = sample_state(run_statevector(circuit), shots, seed);
    CountsHistogram hist = CountsHistogram::from_stream(stream);
    return SampleResult{std::move(stream), std::move(hist)};
}

ShotStream marginal_sample(const StateVector &state, std::size_t qubit, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    double p1 = marginal_one_probability(state, qubit);
    DiscreteSampler sampler({1.0 - p1, p1});
    Rng rng(seed);
    ShotStream stream{1, seed, {}};
    stream.outcomes.resize(shots);
    for (auto &o : stream.outcomes) {
        o = sampler(rng);
    }
    return stream;
}

ShotStream marginal_sample(const Circuit &circuit, std::size_t qubit, std::uint64_t shots, std::uint64_t seed) {
    if (qubit >= circuit.num_qubits()) {
        throw std::invalid_argument("marginal qubit index out of range");
    }
    return marginal_sample(run_statevector(circuit), qubit, shots, seed);
}

}  // namespace qut
