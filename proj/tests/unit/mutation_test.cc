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


#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qut/mutation.h"
#include "qut/quantum_tests.h"
#include "qut/simulator.h"

namespace qut {
namespace {

Circuit single(GateKind kind, std::vector<double> params = {}) {
    Circuit c(1);
    c.append(kind, {0}, std::move(params));
    return c;
}

TEST(Qgr, Examples) {
    auto h = mutate_qgr(single(GateKind::H));
    ASSERT_EQ(h.size(), 8u);
    std::set<GateKind> kinds;
    for (const auto &m : h) {
        kinds.insert(*m.replacement);
        EXPECT_EQ(m.circuit.size(), 1u);
        EXPECT_EQ(m.circuit[0].kind, *m.replacement);
    }
    EXPECT_EQ(kinds, (std::set<GateKind>{GateKind::I, GateKind::X, GateKind::Y, GateKind::Z, GateKind::S,
                                         GateKind::Sdg, GateKind::T, GateKind::Tdg}));
    EXPECT_TRUE(mutate_qgr(single(GateKind::R, {0.1, 0.2})).empty());
    Circuit cx(2);
    cx.append(GateKind::CX, {0, 1});
    std::set<GateKind> two;
    for (const auto &m : mutate_qgr(cx)) {
        two.insert(*m.replacement);
        EXPECT_EQ(m.circuit[0].targets, cx[0].targets);
    }
    EXPECT_EQ(two, (std::set<GateKind>{GateKind::CY, GateKind::CZ, GateKind::Swap}));
    auto rx = mutate_qgr(single(GateKind::RX, {0.7}));
    ASSERT_EQ(rx.size(), 3u);
    for (const auto &m : rx) {
        EXPECT_EQ(m.circuit[0].params, std::vector<double>{0.7});
    }
}

TEST(Qgd, Examples) {
    auto one = mutate_qgd(single(GateKind::X));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one[0].circuit.empty());
    Circuit hh(1);
    hh.append(GateKind::H, {0}).append(GateKind::H, {0});
    auto m = filter_equivalent(hh, mutate_qgd(hh));
    ASSERT_EQ(m.size(), 2u);
    EXPECT_NEAR(m[0].fidelity_to_original, 0.5, 1e-12);
}

TEST(Qgi, Examples) {
    auto x = mutate_qgi(single(GateKind::X));
    ASSERT_EQ(x.size(), 9u);
    for (const auto &m : x) {
        ASSERT_EQ(m.circuit.size(), 2u);
        EXPECT_EQ(m.site, 1u);
        EXPECT_EQ(m.circuit[1].kind, *m.replacement);
        EXPECT_EQ(m.circuit[1].targets, std::vector<std::uint32_t>{0});
    }
    // x followed by x returns to |0>, which differs from X|0>, so it survives.
    auto kept = filter_equivalent(single(GateKind::X), x);
    bool has_xx = false;
    for (const auto &m : kept) {
        EXPECT_NE(*m.replacement, GateKind::I);
        has_xx |= *m.replacement == GateKind::X;
    }
    EXPECT_TRUE(has_xx);
}

TEST(Qgi, IdentityInsertionAlwaysFiltered) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Circuit c = random_circuit(1 + seed % 3, 3, seed);
        for (const auto &m : filter_equivalent(c, mutate_qgi(c))) {
            EXPECT_NE(*m.replacement, GateKind::I);
        }
    }
}

TEST(Rgi, Examples) {
    auto m = mutate_rgi(Circuit(1), 1, 5);
    ASSERT_EQ(m.size(), 1u);
    ASSERT_EQ(m[0].circuit.size(), 1u);
    EXPECT_EQ(m[0].circuit[0].kind, GateKind::R);
    double f = fidelity(run_statevector(m[0].circuit), StateVector::zero(1));
    EXPECT_NEAR(f, std::pow(std::cos(kRgiAngle / 2), 2), 1e-14);
    EXPECT_NEAR(f, 0.999924, 1e-6);

    Circuit c = random_circuit(3, 5, 2);
    auto a = mutate_rgi(c, 20, 9);
    auto b = mutate_rgi(c, 20, 9);
    ASSERT_EQ(a.size(), 20u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].circuit, b[i].circuit);
        EXPECT_LE(a[i].site, c.size());
    }
    EXPECT_EQ(filter_equivalent(c, a).size(), 20u);
}

TEST(Mutation, CardinalitiesAndPurity) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Circuit c = random_circuit(1 + seed % 4, 1 + seed % 6, seed);
        const Circuit copy = c;
        std::size_t qgr = 0, qgi = 0;
        for (const auto &g : c.gates()) {
            qgr += equivalence_class_of(g.kind)->size() - 1;
            qgi += equivalence_class_of(g.kind)->size();
        }
        EXPECT_EQ(mutate_qgd(c).size(), c.size());
        EXPECT_EQ(mutate_qgr(c).size(), qgr);
        EXPECT_EQ(mutate_qgi(c).size(), qgi);
        EXPECT_EQ(c, copy);
    }
}

TEST(FilterEquivalent, Examples) {
    Circuit ss(1);
    ss.append(GateKind::S, {0}).append(GateKind::S, {0});
    MutantRecord direct{MutationOperator::QGR, 0, std::nullopt, ss, 0.0};
    EXPECT_TRUE(filter_equivalent(single(GateKind::Z), {direct}).empty());
    // From |+> the phase gates are not no-ops, and S S = Z still holds.
    Circuit plus_z(1), plus_ss(1);
    plus_z.append(GateKind::H, {0}).append(GateKind::Z, {0});
    plus_ss.append(GateKind::H, {0}).append(GateKind::S, {0}).append(GateKind::S, {0});
    MutantRecord eq{MutationOperator::QGR, 0, std::nullopt, plus_ss, 0.0};
    EXPECT_TRUE(filter_equivalent(plus_z, {eq}).empty());
    MutantRecord x{MutationOperator::QGR, 0, GateKind::X, single(GateKind::X), 0.0};
    EXPECT_EQ(filter_equivalent(single(GateKind::H), {x}).size(), 1u);
}

TEST(FilterEquivalent, SurvivorsFailStatevectorTest) {
    const MutationOperator ops[] = {MutationOperator::QGR, MutationOperator::QGD, MutationOperator::QGI,
                                    MutationOperator::RGI};
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Circuit c = random_circuit(1 + seed % 4, 1 + seed % 5, seed);
        auto kept = filter_equivalent(c, mutate(c, ops, 5, seed));
        for (const auto &m : kept) {
            EXPECT_LT(m.fidelity_to_original, 1 - 1e-10);
            EXPECT_FALSE(statevector_test(Circuit(c.num_qubits()), m.circuit, c).passed());
        }
    }
}

TEST(SampleMutants, SizesAndDeterminism) {
    std::vector<MutantRecord> all;
    for (std::size_t i = 0; i < 40; ++i) {
        all.push_back({MutationOperator::QGD, i, std::nullopt, Circuit(1), 0.0});
    }
    EXPECT_EQ(sample_mutants(all, 1.0, 3).size(), 40u);
    auto a = sample_mutants(all, 0.1, 3);
    auto b = sample_mutants(all, 0.1, 3);
    ASSERT_EQ(a.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(a[i].site, b[i].site);
        if (i > 0) {
            EXPECT_LT(a[i - 1].site, a[i].site);
        }
    }
    std::vector<MutantRecord> thirty(all.begin(), all.begin() + 30);
    EXPECT_EQ(sample_mutants(thirty, 0.1, 1).size(), 3u);
    EXPECT_THROW(sample_mutants(all, 0.0, 1), std::invalid_argument);
    int differ = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto x = sample_mutants(all, 0.1, 2 * s);
        auto y = sample_mutants(all, 0.1, 2 * s + 1);
        bool same = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
            same &= x[i].site == y[i].site;
        }
        differ += same ? 0 : 1;
    }
    EXPECT_GE(differ, 95);
}

TEST(Manifest, OneJsonObjectPerLine) {
    MutantRecord r{MutationOperator::QGR, 2, GateKind::Y, Circuit(1), 0.25};
    std::ostringstream out;
    write_manifest_line(out, r, "mutant_00000.qasm");
    auto j = nlohmann::json::parse(out.str());
    EXPECT_EQ(j["operator"], "qgr");
    EXPECT_EQ(j["site"], 2);
    EXPECT_EQ(j["replacement"], "y");
    EXPECT_EQ(j["fidelity"], 0.25);
    EXPECT_EQ(j["path"], "mutant_00000.qasm");
    EXPECT_EQ(out.str().back(), '\n');
    EXPECT_EQ(operator_from_name("rgi"), MutationOperator::RGI);
    EXPECT_FALSE(operator_from_name("qmi"));
}

}  // namespace
}  // namespace qut
