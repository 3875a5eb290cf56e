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


#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qut/circuit_json.h"
#include "qut/harness.h"
#include "qut/mutation.h"
#include "qut/qasm.h"
#include "qut/quantum_tests.h"
#include "qut/shot_estimator.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct RunOptions {
    std::string program;
    std::string input;
    std::string expected;
    std::string test;
    std::uint64_t shots = 0;
    double p_value = 0.05;
    std::uint64_t seed = 0;
    double tolerance = qut::kDefaultStateTolerance;
    std::string phase_mode = "global";
    std::size_t mc_reps = qut::kDefaultMonteCarloRepetitions;
};

struct EstimateOptions {
    std::string program;
    std::string input;
    std::string expected;
    double p_e = 0.05;
};

struct MutateOptions {
    std::string circuit;
    std::string operators = "qgr,qgd,qgi,rgi";
    double fraction = 1.0;
    std::uint64_t seed = 0;
    std::size_t rgi_count = 10;
    std::string out;
};

struct BenchOptions {
    std::string config;
    std::string out;
    std::size_t workers = 0;
};

struct ParseOptions {
    std::string in;
    std::string emit = "json";
};

struct CurveOptions {
    std::vector<double> p_e{0.001, 0.01, 0.05};
    std::size_t points = 200;
    double lo = 0.001;
    double hi = 0.999;
    std::string out;
};

qut::Circuit load_input(const std::string &path, std::size_t width) {
    return path.empty() ? qut::Circuit(width) : qut::load_circuit(path);
}

std::string format_detail(const qut::TestVerdict &v) {
    std::ostringstream out;
    std::visit(
        [&](const auto &d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, qut::PValueDetail>) {
                out << "p_value=" << d.p_value;
            } else if constexpr (std::is_same_v<T, qut::FirstFailureDetail>) {
                if (d.shot) {
                    out << "first_failure_shot=" << *d.shot;
                } else {
                    out << "first_failure_shot=none";
                }
            } else {
                out << "max_amplitude_deviation=" << d.max_amplitude_deviation;
            }
        },
        v.detail);
    return out.str();
}

int cmd_run(const RunOptions &o) {
    qut::Circuit program = qut::load_circuit(o.program);
    qut::Circuit input = load_input(o.input, program.num_qubits());
    qut::ExpectedSpec expected = qut::load_expected(o.expected);
    auto kind = qut::test_kind_from_name(o.test);
    if (!kind) {
        throw std::invalid_argument("unknown test " + o.test);
    }
    qut::TestVerdict v;
    switch (kind->family) {
        case qut::TestKind::Family::Statevector:
            v = qut::statevector_test(input, program, expected, o.tolerance,
                                      o.phase_mode == "strict" ? qut::PhaseMode::Strict : qut::PhaseMode::GlobalPhase);
            break;
        case qut::TestKind::Family::Swap:
            v = qut::swap_test(input, program, expected, o.shots, o.seed);
            break;
        case qut::TestKind::Family::Inverse:
            v = qut::inverse_test(input, program, expected, o.shots, o.seed);
            break;
        case qut::TestKind::Family::Statistical:
            v = qut::is_monte_carlo(kind->stat)
                    ? qut::mc_statistical_test(input, program, expected, o.shots, o.p_value, kind->stat, o.mc_reps,
                                               o.seed)
                    : qut::statistical_test(input, program, expected, o.shots, o.p_value, kind->stat, o.seed);
            break;
    }
    for (const auto &w : v.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    std::cout << (v.passed() ? "PASS" : "FAIL") << ' ' << o.test << ' ' << format_detail(v) << '\n';
    return v.passed() ? kExitPass : kExitFail;
}

int cmd_estimate(const EstimateOptions &o) {
    qut::Circuit program = qut::load_circuit(o.program);
    qut::Circuit input = load_input(o.input, program.num_qubits());
    qut::ExpectedSpec expected = qut::load_expected(o.expected);
    try {
        auto est = qut::estimate_shots_for_pair(input, program, expected, o.p_e);
        std::cout << "shots=" << est.shots << " sigma11=" << std::setprecision(17) << est.sigma11
                  << " p_e=" << est.p_e << '\n';
    } catch (const qut::EquivalentStates &) {
        std::cout << "shots=none sigma11=1 (states are equivalent)\n";
    }
    return kExitPass;
}

int cmd_mutate(const MutateOptions &o) {
    qut::Circuit original = qut::load_circuit(o.circuit);
    std::vector<qut::MutationOperator> ops;
    std::stringstream ss(o.operators);
    for (std::string name; std::getline(ss, name, ',');) {
        auto op = qut::operator_from_name(name);
        if (!op) {
            throw std::invalid_argument("unknown mutation operator '" + name + "'");
        }
        ops.push_back(*op);
    }
    auto mutants = qut::filter_equivalent(original, qut::mutate(original, ops, o.rgi_count, o.seed));
    mutants = qut::sample_mutants(std::move(mutants), o.fraction, qut::derive_seed(o.seed, 0x5a));
    std::filesystem::path dir(o.out);
    std::filesystem::create_directories(dir);
    std::ofstream manifest(dir / "manifest.jsonl", std::ios::binary);
    if (!manifest) {
        throw std::runtime_error("cannot write " + (dir / "manifest.jsonl").string());
    }
    const bool has_unitary = [&] {
        for (const auto &g : original.gates()) {
            if (g.kind == qut::GateKind::Unitary) {
                return true;
            }
        }
        return false;
    }();
    const std::string ext = has_unitary ? ".json" : ".qasm";
    qut::write_text_file(dir / ("original" + ext),
                         has_unitary ? qut::emit_json(original) : qut::emit_qasm(original));
    for (std::size_t i = 0; i < mutants.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "mutant_%05zu", i);
        std::string file = name + ext;
        qut::write_text_file(dir / file,
                             has_unitary ? qut::emit_json(mutants[i].circuit) : qut::emit_qasm(mutants[i].circuit));
        qut::write_manifest_line(manifest, mutants[i], file);
    }
    std::cout << mutants.size() << " mutants written to " << dir.string() << '\n';
    return kExitPass;
}

int cmd_bench(const BenchOptions &o) {
    std::filesystem::path cfg_path(o.config);
    auto config = qut::parse_experiment_config(qut::read_text_file(cfg_path), cfg_path.parent_path());
    if (o.workers > 0) {
        config.workers = o.workers;
    }
    auto rows = qut::run_benchmark(config);
    std::ostringstream csv;
    qut::write_csv(csv, rows);
    qut::write_text_file(o.out, csv.str());
    for (const auto &[name, m] : qut::compute_metrics(rows)) {
        std::cout << name << ": tp=" << m.tp << " fn=" << m.fn << " recall=" << m.recall << " median_shots=";
        if (m.median_shots) {
            std::cout << *m.median_shots;
        } else {
            std::cout << "none";
        }
        std::cout << " rank1_pairs=" << m.rank1_pairs << '\n';
    }
    return kExitPass;
}

int cmd_parse(const ParseOptions &o) {
    std::string text = qut::read_text_file(o.in);
    qut::Circuit circuit{1};
    if (std::filesystem::path(o.in).extension() == ".json") {
        circuit = qut::parse_json(text);
    } else {
        auto result = qut::parse_qasm(text);
        for (const auto &d : result.diagnostics) {
            std::cerr << o.in << ':' << qut::to_string(d) << '\n';
        }
        if (!result.ok()) {
            return kExitIo;
        }
        circuit = std::move(*result.circuit);
    }
    std::cout << (o.emit == "qasm" ? qut::emit_qasm(circuit) : qut::emit_json(circuit));
    return kExitPass;
}

int cmd_curve(const CurveOptions &o) {
    auto grid = qut::linear_grid(o.lo, o.hi, o.points);
    auto points = qut::shot_curve(grid, o.p_e);
    std::ostringstream csv;
    qut::write_shot_curve_csv(csv, points);
    if (o.out.empty()) {
        std::cout << csv.str();
    } else {
        qut::write_text_file(o.out, csv.str());
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum unit tests, shot planning and mutation benchmarks"};
    app.require_subcommand(1);

    RunOptions run;
    auto *run_cmd = app.add_subcommand("run", "Run one quantum unit test");
    run_cmd->add_option("--program", run.program, "Program U (.qasm or .json)")->required();
    run_cmd->add_option("--input", run.input, "Input preparation W (default: none)");
    run_cmd->add_option("--expected", run.expected, "Expected preparation circuit or state (.qasm or .json)")
        ->required();
    run_cmd->add_option("--test", run.test, "Test to run")
        ->required()
        ->check(CLI::IsMember({"chi2", "g", "multinomial", "mc-chi2", "mc-g", "mc-multinomial", "swap",
                               "statevector", "inverse"}));
    run_cmd->add_option("--shots", run.shots, "Shot count for sampled tests");
    run_cmd->add_option("--p-value", run.p_value, "p-value threshold")->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--seed", run.seed, "Random seed");
    run_cmd->add_option("--tolerance", run.tolerance, "Statevector tolerance")->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--phase-mode", run.phase_mode, "Statevector phase handling")
        ->check(CLI::IsMember({"global", "strict"}));
    run_cmd->add_option("--mc-reps", run.mc_reps, "Monte Carlo repetitions")->check(CLI::PositiveNumber);

    EstimateOptions est;
    auto *est_cmd = app.add_subcommand("estimate-shots", "Estimate shots needed by the inverse test");
    est_cmd->add_option("--program", est.program, "Program U")->required();
    est_cmd->add_option("--input", est.input, "Input preparation W");
    est_cmd->add_option("--expected", est.expected, "Expected preparation circuit or state")->required();
    est_cmd->add_option("--pe", est.p_e, "Target error probability")->check(CLI::Range(0.0, 1.0));

    MutateOptions mut;
    auto *mut_cmd = app.add_subcommand("mutate", "Generate non-equivalent mutants of a circuit");
    mut_cmd->add_option("--circuit", mut.circuit, "Circuit to mutate")->required();
    mut_cmd->add_option("--operators", mut.operators, "Comma-separated subset of qgr,qgd,qgi,rgi");
    mut_cmd->add_option("--fraction", mut.fraction, "Fraction of mutants to keep")->check(CLI::Range(0.0, 1.0));
    mut_cmd->add_option("--seed", mut.seed, "Random seed");
    mut_cmd->add_option("--rgi-count", mut.rgi_count, "Number of rgi mutants to draw");
    mut_cmd->add_option("--out", mut.out, "Output directory")->required();

    BenchOptions bench;
    auto *bench_cmd = app.add_subcommand("bench", "Run a benchmark experiment");
    bench_cmd->add_option("--config", bench.config, "Experiment config (JSON)")->required();
    bench_cmd->add_option("--out", bench.out, "Result CSV path")->required();
    bench_cmd->add_option("--workers", bench.workers, "Worker threads (overrides the config)");

    ParseOptions parse;
    auto *parse_cmd = app.add_subcommand("parse", "Parse a circuit and re-emit it");
    parse_cmd->add_option("--in", parse.in, "Input circuit")->required();
    parse_cmd->add_option("--emit", parse.emit, "Output format")->check(CLI::IsMember({"json", "qasm"}));

    CurveOptions curve;
    auto *curve_cmd = app.add_subcommand("shot-curve", "Tabulate the shot estimate over sigma11");
    curve_cmd->add_option("--pe", curve.p_e, "Error probabilities")->delimiter(',');
    curve_cmd->add_option("--points", curve.points, "Grid points")->check(CLI::PositiveNumber);
    curve_cmd->add_option("--min", curve.lo, "Smallest sigma11");
    curve_cmd->add_option("--max", curve.hi, "Largest sigma11");
    curve_cmd->add_option("--out", curve.out, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*run_cmd) {
            if (run.test != "statevector" && run.shots == 0) {
                throw std::invalid_argument("--shots is required for sampled tests");
            }
            return cmd_run(run);
        }
        if (*est_cmd) {
            return cmd_estimate(est);
        }
        if (*mut_cmd) {
            return cmd_mutate(mut);
        }
        if (*bench_cmd) {
            return cmd_bench(bench);
        }
        if (*parse_cmd) {
            return cmd_parse(parse);
        }
        if (*curve_cmd) {
            return cmd_curve(curve);
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
