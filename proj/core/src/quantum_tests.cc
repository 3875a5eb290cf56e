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

#include "qut/quantum_tests.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qut/simulator.h"

namespace qut {

namespace {

void check_widths(const Circuit &input, const Circuit &program, const ExpectedSpec &expected) {
    if (input.num_qubits() != program.num_qubits() || expected_num_qubits(expected) != program.num_qubits()) {
        throw std::invalid_argument("input, program and expected state must have the same number of qubits");
    }
}

void check_sampling_args(std::uint64_t shots, double p_threshold) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    if (!(p_threshold > 0.0 && p_threshold < 1.0)) {
        throw std::invalid_argument("p-value threshold must lie in (0, 1)");
    }
}

std::vector<std::string> shot_warnings(std::uint64_t shots) {
    if (shots < kPearsonMinimumShots) {
        return {"fewer than " + std::to_string(kPearsonMinimumShots) +
                " total observations; goodness-of-fit p-values are unreliable"};
    }
    return {};
}

TestVerdict first_failure_verdict(const ShotStream &stream) {
    auto shot = first_nonzero_shot(stream);
    return TestVerdict{shot ? Outcome::Fail : Outcome::Pass, FirstFailureDetail{shot}, {}};
}

}  // namespace

double max_amplitude_deviation(const StateVector &actual, const StateVector &expected, PhaseMode mode) {
    if (actual.size() != expected.size()) {
        throw std::invalid_argument("state vectors have different dimensions");
    }
    Complex rotation = 1.0;
    if (mode == PhaseMode::GlobalPhase) {
        auto amps = actual.amplitudes();
        auto biggest = std::max_element(amps.begin(), amps.end(), [](const Complex &a, const Complex &b) {
            return std::norm(a) < std::norm(b);
        });
        auto j = static_cast<std::size_t>(biggest - amps.begin());
        if (std::abs(expected[j]) > 0.0 && std::abs(actual[j]) > 0.0) {
            rotation = std::polar(1.0, std::arg(expected[j]) - std::arg(actual[j]));
        }
    }
    double worst = 0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        worst = std::max(worst, std::abs(actual[i] * rotation - expected[i]));
    }
    return worst;
}

StateVector expected_state(const ExpectedSpec &expected) {
    if (const auto *v = std::get_if<StateVector>(&expected)) {
        return *v;
    }
    return run_statevector(std::get<Circuit>(expected));
}

std::optional<std::uint64_t> first_nonzero_shot(const ShotStream &stream) {
    for (std::size_t i = 0; i < stream.outcomes.size(); ++i) {
        if (stream.outcomes[i] != 0) {
            return i + 1;
        }
    }
    return std::nullopt;
}

TestVerdict statistical_test(const Circuit &input, const Circuit &program, const ExpectedSpec &expected,
                             std::uint64_t shots, double p_threshold, StatKind kind, std::uint64_t seed) {
    if (is_monte_carlo(kind)) {
        return mc_statistical_test(input, program, expected, shots, p_threshold, kind, kDefaultMonteCarloRepetitions,
                                   seed);
    }
    check_widths(input, program, expected);
    check_sampling_args(shots, p_threshold);
    // Arrange
    ExpectedDistribution dist = ExpectedDistribution::from_state(expected_state(expected));
    Circuit testing = compose(input, program);
    // Act
    SampleResult observed = sample_counts(testing, shots, seed);
    // Assert
    double p = p_value(kind, dist.tally(observed.histogram), dist);
    return TestVerdict{p >= p_threshold ? Outcome::Pass : Outcome::Fail, PValueDetail{p}, shot_warnings(shots)};
}

TestVerdict mc_statistical_test(const Circuit &input, const Circuit &program, const ExpectedSpec &expected,
                                std::uint64_t shots, double p_threshold, StatKind kind, std::size_t repetitions,
                                std::uint64_t seed) {
    check_widths(input, program, expected);
    check_sampling_args(shots, p_threshold);
    ExpectedDistribution dist = ExpectedDistribution::from_state(expected_state(expected));
    Circuit testing = compose(input, program);
    SampleResult observed = sample_counts(testing, shots, seed);
    // Synthetic draws get their own stream so they never overlap the shots.
    Rng synthetic(derive_seed(seed, 1));
    double p = monte_carlo_p_value(kind, dist.tally(observed.histogram), dist, repetitions, synthetic);
    return TestVerdict{p >= p_threshold ? Outcome::Pass : Outcome::Fail, PValueDetail{p}, shot_warnings(shots)};
}

TestVerdict swap_test(const Circuit &input, const Circuit &program, const ExpectedSpec &expected,
                      std::uint64_t shots, std::uint64_t seed) {
    check_widths(input, program, expected);
    if (shots == 0) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    Circuit harness = build_swap_harness(compose(input, program), expected_prep_circuit(expected));
    ShotStream ancilla = marginal_sample(harness, 0, shots, seed);
    return first_failure_verdict(ancilla);
}

TestVerdict statevector_test(const Circuit &input, const Circuit &program, const ExpectedSpec &expected,
                             double tolerance, PhaseMode mode, std::size_t max_qubits) {
    check_widths(input, program, expected);
    if (program.num_qubits() > max_qubits) {
        throw std::invalid_argument("statevector test limited to " + std::to_string(max_qubits) + " qubits");
    }
    if (!(tolerance >= 0.0)) {
        throw std::invalid_argument("tolerance must be non-negative");
    }
    StateVector actual = run_statevector(compose(input, program));
    double deviation = max_amplitude_deviation(actual, expected_state(expected), mode);
    return TestVerdict{deviation <= tolerance ? Outcome::Pass : Outcome::Fail, DeviationDetail{deviation}, {}};
}

TestVerdict inverse_test(const Circuit &input, const Circuit &program, const ExpectedSpec &expected,
                         std::uint64_t shots, std::uint64_t seed) {
    check_widths(input, program, expected);
    if (shots == 0) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    Circuit harness = build_inverse_harness(input, program, expected);
    SampleResult result = sample_counts(harness, shots, seed);
    return first_failure_verdict(result.stream);
}

}  // namespace qut
