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


#include <benchmark/benchmark.h>

#include <vector>

#include "qut/density_matrix.h"
#include "qut/random.h"
#include "qut/shot_estimator.h"
#include "qut/simulator.h"
#include "qut/statistics.h"
#include "qut/test_circuits.h"

namespace {

using namespace qut;

void BM_ApplyGate(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    StateVector psi = random_state(n, rng);
    std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
    auto h = make_gate(GateKind::H, {0});
    auto cx = make_gate(GateKind::CX, {0, static_cast<std::uint32_t>(n - 1)});
    for (auto _ : state) {
        apply_gate_in_place(amps, n, h);
        apply_gate_in_place(amps, n, cx);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * 2);
}
BENCHMARK(BM_ApplyGate)->Arg(4)->Arg(10)->Arg(16)->Arg(20);

void BM_RunRandomCircuit(benchmark::State &state) {
    Circuit c = random_circuit(static_cast<std::size_t>(state.range(0)), 10, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_statevector(c));
    }
}
BENCHMARK(BM_RunRandomCircuit)->Arg(4)->Arg(9)->Arg(14);

void BM_SampleState(benchmark::State &state) {
    Rng rng(2);
    StateVector psi = random_state(4, rng);
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_state(psi, shots, ++seed));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleState)->Arg(1000)->Arg(100000);

void BM_PValue(benchmark::State &state) {
    const auto kind = static_cast<StatKind>(state.range(0));
    Rng rng(3);
    StateVector psi = random_state(2, rng);
    auto dist = ExpectedDistribution::from_state(psi);
    auto hist = CountsHistogram::from_stream(sample_state(psi, 40, 3));
    Tally tally = dist.tally(hist);
    for (auto _ : state) {
        if (is_monte_carlo(kind)) {
            Rng mc(4);
            benchmark::DoNotOptimize(monte_carlo_p_value(kind, tally, dist, 1000, mc));
        } else {
            benchmark::DoNotOptimize(p_value(kind, tally, dist));
        }
    }
}
BENCHMARK(BM_PValue)
    ->Arg(static_cast<int>(StatKind::Chi2))
    ->Arg(static_cast<int>(StatKind::GTest))
    ->Arg(static_cast<int>(StatKind::Multinomial))
    ->Arg(static_cast<int>(StatKind::McChi2));

void BM_QcbExponent(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    DensityMatrix zero = density_from_pure(StateVector::zero(n));
    DensityMatrix sigma = density_from_pure(random_state(n, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcb_exponent(zero, sigma));
    }
}
BENCHMARK(BM_QcbExponent)->Arg(1)->Arg(3)->Arg(5);

void BM_SwapHarness(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Circuit u = random_circuit(n, 10, 11);
    ExpectedSpec expected = run_statevector(u);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_statevector(build_swap_harness(u, expected_prep_circuit(expected))));
    }
}
BENCHMARK(BM_SwapHarness)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
