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


#include "qut/harness.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "qut/circuit_json.h"
#include "qut/quantum_tests.h"
#include "qut/random.h"
#include "qut/shot_estimator.h"

namespace qut {

namespace {

using nlohmann::json;

// Per-pair values shared by every task on that pair.
struct PairCache {
    std::string error;
    std::optional<std::uint64_t> estimate;
    std::uint64_t cap = 0;
    std::optional<StateVector> output;
    std::optional<ExpectedDistribution> distribution;
    std::optional<StateVector> inverse_state;
    std::optional<StateVector> swap_state;
};

struct Task {
    std::size_t pair;
    std::size_t test;
    std::size_t repetition;
};

Tally tally_prefix(const ShotStream &stream, std::uint64_t prefix, const ExpectedDistribution &dist) {
    Tally t{std::vector<std::uint64_t>(dist.support_size()), 0, prefix};
    for (std::uint64_t i = 0; i < prefix; ++i) {
        if (auto c = dist.category(stream.outcomes[i])) {
            ++t.counts[*c];
        } else {
            ++t.outside;
        }
    }
    return t;
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn &&fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

PairCache prepare_pair(const TestPair &pair, const ExperimentConfig &config, const std::vector<TestKind> &tests) {
    PairCache cache;
    if (!pair.load_error.empty()) {
        cache.error = pair.load_error;
        return cache;
    }
    try {
        try {
            cache.estimate = estimate_shots_for_pair(pair.input, pair.program, pair.expected, config.p_e).shots;
        } catch (const EquivalentStates &) {
            cache.estimate.reset();
        }
        cache.cap = config.shot_cap_absolute;
        if (cache.estimate) {
            auto scaled = static_cast<std::uint64_t>(std::ceil(config.cap_factor * static_cast<double>(*cache.estimate)));
            cache.cap = std::max<std::uint64_t>(1, std::min(cache.cap, scaled));
        }
        for (const auto &t : tests) {
            switch (t.family) {
                case TestKind::Family::Statistical:
                    if (!cache.output) {
                        cache.output = run_statevector(compose(pair.input, pair.program));
                        cache.distribution = ExpectedDistribution::from_state(expected_state(pair.expected));
                    }
                    break;
                case TestKind::Family::Inverse:
                    cache.inverse_state =
                        run_statevector(build_inverse_harness(pair.input, pair.program, pair.expected));
                    break;
                case TestKind::Family::Swap:
                    cache.swap_state = run_statevector(build_swap_harness(compose(pair.input, pair.program),
                                                                          expected_prep_circuit(pair.expected)));
                    break;
                case TestKind::Family::Statevector:
                    break;
            }
        }
    } catch (const std::exception &e) {
        cache.error = e.what();
    }
    return cache;
}

ExperimentRow run_task(const TestPair &pair, const PairCache &cache, const TestKind &test,
                       const ExperimentConfig &config, std::size_t repetition) {
    ExperimentRow row;
    row.pair_id = pair.id;
    row.test = test_kind_name(test);
    row.repetition = repetition;
    row.seed = mix_seed(config.base_seed, pair.id, row.test, repetition);
    row.shot_estimate = cache.estimate;
    if (!cache.error.empty()) {
        row.verdict = RowVerdict::Error;
        return row;
    }
    auto started = std::chrono::steady_clock::now();
    auto detected = [&](std::optional<std::uint64_t> shots) {
        row.verdict = shots ? RowVerdict::Fail : RowVerdict::NotDetected;
        row.shots_used = shots.value_or(cache.cap);
    };
    try {
        switch (test.family) {
            case TestKind::Family::Statevector: {
                TestVerdict v = statevector_test(pair.input, pair.program, pair.expected);
                row.verdict = v.passed() ? RowVerdict::Pass : RowVerdict::Fail;
                row.shots_used = 0;
                break;
            }
            case TestKind::Family::Inverse:
                detected(first_failure_shot(sample_state(*cache.inverse_state, cache.cap, row.seed)));
                break;
            case TestKind::Family::Swap:
                detected(first_failure_shot(marginal_sample(*cache.swap_state, 0, cache.cap, row.seed)));
                break;
            case TestKind::Family::Statistical: {
                ShotStream stream = sample_state(*cache.output, cache.cap, row.seed);
                detected(min_shots_statistical(stream, *cache.distribution, test.stat, config.p_t, config.mc_reps,
                                               derive_seed(row.seed, 1)));
                break;
            }
        }
    } catch (const MultinomialTooLarge &) {
        row.verdict = RowVerdict::Unsupported;
        row.shots_used = 0;
    } catch (const std::exception &) {
        row.verdict = RowVerdict::Error;
        row.shots_used = 0;
    }
    if (config.record_wall_time) {
        row.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    return row;
}

bool rankable(const ExperimentRow &row) {
    return row.test != "statevector" && (row.verdict == RowVerdict::Fail || row.verdict == RowVerdict::NotDetected);
}

void assign_ranks(std::vector<ExperimentRow> &rows) {
    std::map<std::pair<std::uint64_t, std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rankable(rows[i])) {
            groups[{rows[i].pair_id, rows[i].repetition}].push_back(i);
        }
    }
    for (const auto &[key, members] : groups) {
        std::vector<std::optional<std::uint64_t>> values;
        for (auto i : members) {
            values.push_back(rows[i].verdict == RowVerdict::Fail ? std::optional(rows[i].shots_used) : std::nullopt);
        }
        auto ranks = dense_rank(values);
        for (std::size_t j = 0; j < members.size(); ++j) {
            rows[members[j]].rank = ranks[j];
        }
    }
}

std::string format_number(double v) {
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

RandomCorpus parse_random_corpus(const json &j) {
    RandomCorpus rc;
    rc.num_circuits = j.value("num_circuits", rc.num_circuits);
    rc.max_qubits = j.value("max_qubits", rc.max_qubits);
    rc.max_depth = j.value("max_depth", rc.max_depth);
    rc.rgi_per_circuit = j.value("rgi_per_circuit", rc.rgi_per_circuit);
    rc.fraction = j.value("fraction", rc.fraction);
    rc.seed = j.value("seed", rc.seed);
    if (j.contains("operators")) {
        rc.operators.clear();
        for (const auto &name : j.at("operators")) {
            auto op = operator_from_name(name.get<std::string>());
            if (!op) {
                throw std::invalid_argument("unknown mutation operator '" + name.get<std::string>() + "'");
            }
            rc.operators.push_back(*op);
        }
    }
    return rc;
}

}  // namespace

std::string test_kind_name(const TestKind &kind) {
    switch (kind.family) {
        case TestKind::Family::Statistical:
            return std::string(stat_kind_name(kind.stat));
        case TestKind::Family::Swap:
            return "swap";
        case TestKind::Family::Statevector:
            return "statevector";
        case TestKind::Family::Inverse:
            return "inverse";
    }
    return {};
}

std::optional<TestKind> test_kind_from_name(std::string_view name) {
    if (name == "swap") {
        return TestKind{TestKind::Family::Swap};
    }
    if (name == "statevector") {
        return TestKind{TestKind::Family::Statevector};
    }
    if (name == "inverse") {
        return TestKind{TestKind::Family::Inverse};
    }
    if (auto s = stat_kind_from_name(name)) {
        return TestKind{TestKind::Family::Statistical, *s};
    }
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    if (repetitions < 1) {
        throw std::invalid_argument("repetitions must be at least 1");
    }
    if (!(cap_factor > 0.0)) {
        throw std::invalid_argument("cap_factor must be positive");
    }
    if (shot_cap_absolute < 1) {
        throw std::invalid_argument("shot_cap_absolute must be at least 1");
    }
    if (!(p_t > 0.0 && p_t < 1.0) || !(p_e > 0.0 && p_e < 1.0)) {
        throw std::invalid_argument("p_t and p_e must lie in (0, 1)");
    }
    if (mc_reps < 1) {
        throw std::invalid_argument("mc_reps must be at least 1");
    }
    if (tests.empty()) {
        throw std::invalid_argument("at least one test is required");
    }
    if (random_corpus && !(random_corpus->fraction > 0.0 && random_corpus->fraction <= 1.0)) {
        throw std::invalid_argument("random_corpus.fraction must lie in (0, 1]");
    }
}

ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path &base_dir) {
    json j = json::parse(json_text.begin(), json_text.end(), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    static const std::set<std::string> kKeys{"pairs",  "random_corpus", "tests",    "p_t",     "p_e",
                                             "shot_cap_absolute", "cap_factor", "repetitions", "base_seed",
                                             "mc_reps", "workers",      "record_wall_time"};
    for (const auto &[key, value] : j.items()) {
        if (!kKeys.contains(key)) {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    ExperimentConfig c;
    try {
        if (j.contains("random_corpus")) {
            c.random_corpus = parse_random_corpus(j.at("random_corpus"));
        }
        if (j.contains("pairs")) {
            for (const auto &p : j.at("pairs")) {
                auto resolve = [&](const char *key) -> std::string {
                    std::string v = p.value(key, std::string{});
                    if (v.empty()) {
                        return v;
                    }
                    std::filesystem::path path(v);
                    return (path.is_relative() ? base_dir / path : path).string();
                };
                PairFiles f{resolve("program"), resolve("input"), resolve("expected")};
                if (f.program.empty() || f.expected.empty()) {
                    throw std::invalid_argument("each pair needs \"program\" and \"expected\"");
                }
                c.pair_files.push_back(std::move(f));
            }
        }
        for (const auto &t : j.at("tests")) {
            auto kind = test_kind_from_name(t.get<std::string>());
            if (!kind) {
                throw std::invalid_argument("unknown test '" + t.get<std::string>() + "'");
            }
            c.tests.push_back(*kind);
        }
        c.p_t = j.value("p_t", c.p_t);
        c.p_e = j.value("p_e", c.p_e);
        c.shot_cap_absolute = j.value("shot_cap_absolute", c.shot_cap_absolute);
        c.cap_factor = j.value("cap_factor", c.cap_factor);
        c.repetitions = j.value("repetitions", c.repetitions);
        c.base_seed = j.value("base_seed", c.base_seed);
        c.mc_reps = j.value("mc_reps", c.mc_reps);
        c.workers = j.value("workers", c.workers);
        c.record_wall_time = j.value("record_wall_time", c.record_wall_time);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
    c.validate();
    return c;
}

std::vector<TestPair> build_random_corpus(const RandomCorpus &spec) {
    if (spec.max_qubits < 1 || spec.max_depth < 1) {
        throw std::invalid_argument("random corpus needs max_qubits and max_depth of at least 1");
    }
    std::vector<TestPair> pairs;
    for (std::size_t i = 0; i < spec.num_circuits; ++i) {
        const std::uint64_t circuit_seed = derive_seed(spec.seed, i);
        Rng rng(circuit_seed);
        std::size_t n = 1 + rng.below(spec.max_qubits);
        std::size_t depth = 1 + rng.below(spec.max_depth);
        Circuit original = random_circuit(n, depth, derive_seed(circuit_seed, 1));
        auto mutants = filter_equivalent(
            original, mutate(original, spec.operators, spec.rgi_per_circuit, derive_seed(circuit_seed, 2)));
        if (spec.fraction < 1.0) {
            mutants = sample_mutants(std::move(mutants), spec.fraction, derive_seed(circuit_seed, 3));
        }
        for (auto &m : mutants) {
            TestPair p;
            p.id = pairs.size();
            p.input = Circuit(n);
            p.program = std::move(m.circuit);
            p.expected = original;
            pairs.push_back(std::move(p));
        }
    }
    return pairs;
}

std::vector<TestPair> load_pairs(const ExperimentConfig &config) {
    std::vector<TestPair> pairs;
    if (config.random_corpus) {
        pairs = build_random_corpus(*config.random_corpus);
    }
    for (const auto &f : config.pair_files) {
        TestPair p;
        p.id = pairs.size();
        try {
            p.program = load_circuit(f.program);
            p.input = f.input.empty() ? Circuit(p.program.num_qubits()) : load_circuit(f.input);
            p.expected = load_expected(f.expected);
        } catch (const std::exception &e) {
            p.load_error = e.what();
        }
        pairs.push_back(std::move(p));
    }
    return pairs;
}

std::string_view verdict_name(RowVerdict v) {
    switch (v) {
        case RowVerdict::Pass:
            return "pass";
        case RowVerdict::Fail:
            return "fail";
        case RowVerdict::NotDetected:
            return "not_detected";
        case RowVerdict::Unsupported:
            return "unsupported";
        case RowVerdict::Error:
            return "error";
    }
    return "error";
}

std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t pair_id, std::string_view test,
                       std::uint64_t repetition) {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ pair_id);
    h = splitmix64(h ^ fnv1a64(test));
    return splitmix64(h ^ repetition);
}

std::optional<std::uint64_t> first_failure_shot(const ShotStream &stream) {
    return first_nonzero_shot(stream);
}

std::vector<std::uint64_t> dense_rank(const std::vector<std::optional<std::uint64_t>> &values) {
    std::vector<std::uint64_t> distinct;
    for (const auto &v : values) {
        if (v) {
            distinct.push_back(*v);
        }
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint64_t> ranks;
    ranks.reserve(values.size());
    for (const auto &v : values) {
        if (v) {
            ranks.push_back(1 + static_cast<std::uint64_t>(std::lower_bound(distinct.begin(), distinct.end(), *v) -
                                                           distinct.begin()));
        } else {
            ranks.push_back(distinct.size() + 1);
        }
    }
    return ranks;
}

std::optional<std::uint64_t> min_shots_statistical(const ShotStream &stream, const ExpectedDistribution &expected,
                                                   StatKind kind, double p_t, std::size_t mc_reps,
                                                   std::uint64_t mc_seed) {
    const std::uint64_t cap = stream.size();
    if (cap < 1) {
        throw std::invalid_argument("shot cap must be at least 1");
    }
    auto detects = [&](std::uint64_t s) {
        Tally t = tally_prefix(stream, s, expected);
        double p;
        if (is_monte_carlo(kind)) {
            Rng rng(derive_seed(mc_seed, s));
            p = monte_carlo_p_value(kind, t, expected, mc_reps, rng);
        } else {
            p = p_value(kind, t, expected);
        }
        return p < p_t;
    };
    std::uint64_t below = 0;  // largest candidate seen that did not detect
    for (std::uint64_t s = 1;; s = std::min(cap, s * 2)) {
        if (detects(s)) {
            std::uint64_t lo = below;
            std::uint64_t hi = s;
            while (hi - lo > 1) {
                std::uint64_t mid = lo + (hi - lo) / 2;
                if (detects(mid)) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return hi;
        }
        below = s;
        if (s == cap) {
            return std::nullopt;
        }
    }
}

std::optional<std::uint64_t> min_shots_statistical(const TestPair &pair, StatKind kind, double p_t,
                                                   std::uint64_t cap, std::uint64_t seed, std::size_t mc_reps) {
    ShotStream stream = sample_state(run_statevector(compose(pair.input, pair.program)), cap, seed);
    auto dist = ExpectedDistribution::from_state(expected_state(pair.expected));
    return min_shots_statistical(stream, dist, kind, p_t, mc_reps, derive_seed(seed, 1));
}

std::vector<ExperimentRow> run_benchmark(const ExperimentConfig &config) {
    config.validate();
    return run_benchmark(config, load_pairs(config));
}

std::vector<ExperimentRow> run_benchmark(const ExperimentConfig &config, const std::vector<TestPair> &pairs) {
    config.validate();
    const std::size_t workers =
        config.workers > 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());

    std::vector<PairCache> caches(pairs.size());
    parallel_for(pairs.size(), workers,
                 [&](std::size_t i) { caches[i] = prepare_pair(pairs[i], config, config.tests); });

    std::vector<Task> tasks;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (std::size_t t = 0; t < config.tests.size(); ++t) {
            const bool once = config.tests[t].family == TestKind::Family::Statevector;
            for (std::size_t r = 0; r < (once ? 1 : config.repetitions); ++r) {
                tasks.push_back({p, t, r});
            }
        }
    }
    std::vector<ExperimentRow> rows(tasks.size());
    parallel_for(tasks.size(), workers, [&](std::size_t i) {
        const Task &task = tasks[i];
        rows[i] = run_task(pairs[task.pair], caches[task.pair], config.tests[task.test], config, task.repetition);
    });

    std::sort(rows.begin(), rows.end(), [](const ExperimentRow &a, const ExperimentRow &b) {
        return std::tie(a.pair_id, a.test, a.repetition) < std::tie(b.pair_id, b.test, b.repetition);
    });
    assign_ranks(rows);
    return rows;
}

void write_csv(std::ostream &out, const std::vector<ExperimentRow> &rows) {
    out << "pair_id,test,repetition,seed,verdict,shots_used,shot_estimate,rank,wall_time_ms\n";
    for (const auto &r : rows) {
        out << r.pair_id << ',' << r.test << ',' << r.repetition << ',' << r.seed << ',' << verdict_name(r.verdict)
            << ',' << r.shots_used << ',';
        if (r.shot_estimate) {
            out << *r.shot_estimate;
        }
        out << ',';
        if (r.rank) {
            out << *r.rank;
        }
        out << ',' << format_number(r.wall_time_ms) << '\n';
    }
}

std::map<std::string, TestMetrics> compute_metrics(const std::vector<ExperimentRow> &rows) {
    if (rows.empty()) {
        throw std::invalid_argument("no rows to summarize");
    }
    std::map<std::string, TestMetrics> out;
    std::map<std::string, std::vector<double>> detected;
    // pair -> test -> shots per repetition, infinity for NotDetected
    std::map<std::uint64_t, std::map<std::string, std::vector<double>>> per_pair;
    for (const auto &r : rows) {
        auto &m = out[r.test];
        if (r.verdict == RowVerdict::Fail) {
            ++m.tp;
            detected[r.test].push_back(static_cast<double>(r.shots_used));
        } else if (r.verdict == RowVerdict::Pass || r.verdict == RowVerdict::NotDetected) {
            ++m.fn;
        }
        if (rankable(r)) {
            per_pair[r.pair_id][r.test].push_back(r.verdict == RowVerdict::Fail
                                                      ? static_cast<double>(r.shots_used)
                                                      : std::numeric_limits<double>::infinity());
        }
    }
    for (auto &[name, m] : out) {
        m.recall = m.tp + m.fn > 0 ? static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn) : 0.0;
        if (auto it = detected.find(name); it != detected.end() && !it->second.empty()) {
            m.median_shots = median(it->second);
        }
    }
    for (const auto &[pair_id, by_test] : per_pair) {
        double best = std::numeric_limits<double>::infinity();
        std::map<std::string, double> medians;
        for (const auto &[name, shots] : by_test) {
            medians[name] = median(shots);
            best = std::min(best, medians[name]);
        }
        if (std::isinf(best)) {
            continue;
        }
        for (const auto &[name, med] : medians) {
            if (med == best) {
                ++out[name].rank1_pairs;
            }
        }
    }
    return out;
}

}  // namespace qut
