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


#ifndef QUT_HARNESS_H
#define QUT_HARNESS_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qut/circuit.h"
#include "qut/mutation.h"
#include "qut/simulator.h"
#include "qut/statistics.h"
#include "qut/test_circuits.h"

namespace qut {

/// Any test the benchmark can run: a StatKind, or one of the three
/// non-statistical families.
struct TestKind {
    enum class Family : std::uint8_t { Statistical, Swap, Statevector, Inverse };
    Family family = Family::Statevector;
    StatKind stat = StatKind::Chi2;

    bool operator==(const TestKind &) const = default;
};

std::string test_kind_name(const TestKind &kind);
std::optional<TestKind> test_kind_from_name(std::string_view name);

/// Generated corpus: random originals paired with their filtered mutants.
struct RandomCorpus {
    std::size_t num_circuits = 10;
    std::size_t max_qubits = 4;
    std::size_t max_depth = 10;
    std::vector<MutationOperator> operators{MutationOperator::QGD, MutationOperator::RGI};
    std::size_t rgi_per_circuit = 5;
    double fraction = 1.0;
    std::uint64_t seed = 1;
};

/// A file-backed pair; paths are relative to the config file's directory.
struct PairFiles {
    std::string program;
    std::string input;  // empty: no input preparation
    std::string expected;
};

struct ExperimentConfig {
    std::optional<RandomCorpus> random_corpus;
    std::vector<PairFiles> pair_files;
    std::vector<TestKind> tests;
    double p_t = 0.05;
    double p_e = 0.05;
    std::uint64_t shot_cap_absolute = 10000;
    double cap_factor = 2.0;
    std::size_t repetitions = 100;
    std::uint64_t base_seed = 0;
    std::size_t mc_reps = 1000;
    /// 0 uses std::thread::hardware_concurrency().
    std::size_t workers = 0;
    /// When false wall_time_ms is written as 0 so reruns are byte-identical.
    bool record_wall_time = false;

    /// Throws std::invalid_argument on invariant violations.
    void validate() const;
};

/// Parses the JSON form; relative pair paths are resolved against `base_dir`.
ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path &base_dir = {});

/// One unit test to run: W, U and the expected state.
struct TestPair {
    std::uint64_t id = 0;
    Circuit input{1};
    Circuit program{1};
    ExpectedSpec expected{Circuit{1}};
    /// Set when the pair could not be loaded; its rows report "error".
    std::string load_error;
};

std::vector<TestPair> build_random_corpus(const RandomCorpus &spec);
std::vector<TestPair> load_pairs(const ExperimentConfig &config);

enum class RowVerdict : std::uint8_t { Pass, Fail, NotDetected, Unsupported, Error };
std::string_view verdict_name(RowVerdict v);

struct ExperimentRow {
    std::uint64_t pair_id = 0;
    std::string test;
    std::size_t repetition = 0;
    std::uint64_t seed = 0;
    RowVerdict verdict = RowVerdict::Pass;
    std::uint64_t shots_used = 0;
    std::optional<std::uint64_t> shot_estimate;
    std::optional<std::uint64_t> rank;
    double wall_time_ms = 0.0;
};

/// splitmix64 chain over (base_seed, pair_id, fnv1a64(test), repetition).
std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t pair_id, std::string_view test,
                       std::uint64_t repetition);

/// 1-based index of the first nonzero outcome; std::nullopt is NotDetected.
std::optional<std::uint64_t> first_failure_shot(const ShotStream &stream);

/// Dense ranks; std::nullopt (NotDetected) entries share the last rank.
std::vector<std::uint64_t> dense_rank(const std::vector<std::optional<std::uint64_t>> &values);

/// Smallest prefix length S <= stream.size() whose p-value is below p_t,
/// found by a power-of-two scan then bisection of the first bracketing
/// interval. Monte Carlo kinds draw synthetic samples from a stream derived
/// from `mc_seed` and S. Throws MultinomialTooLarge.
std::optional<std::uint64_t> min_shots_statistical(const ShotStream &stream, const ExpectedDistribution &expected,
                                                   StatKind kind, double p_t, std::size_t mc_reps = 1000,
                                                   std::uint64_t mc_seed = 0);

/// Samples `cap` shots of W then U and searches them as above.
std::optional<std::uint64_t> min_shots_statistical(const TestPair &pair, StatKind kind, double p_t,
                                                   std::uint64_t cap, std::uint64_t seed, std::size_t mc_reps = 1000);

/// Runs every (pair, test, repetition); rows are sorted by (pair_id, test,
/// repetition) and ranked per (pair, repetition) across sampled tests.
std::vector<ExperimentRow> run_benchmark(const ExperimentConfig &config, const std::vector<TestPair> &pairs);
std::vector<ExperimentRow> run_benchmark(const ExperimentConfig &config);

void write_csv(std::ostream &out, const std::vector<ExperimentRow> &rows);

struct TestMetrics {
    std::uint64_t tp = 0;
    std::uint64_t fn = 0;
    double recall = 0.0;
    /// Median shots_used over detected rows; std::nullopt when none.
    std::optional<double> median_shots;
    /// Pairs where this test has dense rank 1 by median shots over repetitions.
    std::uint64_t rank1_pairs = 0;
};

/// Throws std::invalid_argument on empty input.
std::map<std::string, TestMetrics> compute_metrics(const std::vector<ExperimentRow> &rows);

}  // namespace qut

#endif
