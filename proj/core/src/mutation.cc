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


#include "qut/mutation.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "qut/quantum_tests.h"
#include "qut/random.h"
#include "qut/simulator.h"

namespace qut {

namespace {

constexpr std::array<std::string_view, 4> kOperatorNames{"qgr", "qgd", "qgi", "rgi"};

GateApplication with_kind(const GateApplication &g, GateKind kind) {
    GateApplication out{kind, g.targets, g.params, {}};
    return out;
}

}  // namespace

std::string_view operator_name(MutationOperator op) {
    return kOperatorNames.at(static_cast<std::size_t>(op));
}

std::optional<MutationOperator> operator_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kOperatorNames.size(); ++i) {
        if (kOperatorNames[i] == name) {
            return static_cast<MutationOperator>(i);
        }
    }
    return std::nullopt;
}

std::vector<MutantRecord> mutate_qgr(const Circuit &c) {
    std::vector<MutantRecord> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto *cls = equivalence_class_of(c[i].kind);
        if (cls == nullptr) {
            continue;
        }
        for (GateKind k : *cls) {
            if (k == c[i].kind) {
                continue;
            }
            Circuit m = c;
            m.replace(i, with_kind(c[i], k));
            out.push_back({MutationOperator::QGR, i, k, std::move(m), 0.0});
        }
    }
    return out;
}

std::vector<MutantRecord> mutate_qgd(const Circuit &c) {
    std::vector<MutantRecord> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Circuit m = c;
        m.erase(i);
        out.push_back({MutationOperator::QGD, i, std::nullopt, std::move(m), 0.0});
    }
    return out;
}

std::vector<MutantRecord> mutate_qgi(const Circuit &c) {
    std::vector<MutantRecord> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto *cls = equivalence_class_of(c[i].kind);
        if (cls == nullptr) {
            continue;
        }
        for (GateKind k : *cls) {
            Circuit m = c;
            m.insert(i + 1, with_kind(c[i], k));
            out.push_back({MutationOperator::QGI, i + 1, k, std::move(m), 0.0});
        }
    }
    return out;
}

std::vector<MutantRecord> mutate_rgi(const Circuit &c, std::size_t count, std::uint64_t seed) {
    std::vector<MutantRecord> out;
    Rng rng(seed);
    for (std::size_t j = 0; j < count; ++j) {
        auto position = static_cast<std::size_t>(rng.below(c.size() + 1));
        auto qubit = static_cast<std::uint32_t>(rng.below(c.num_qubits()));
        Circuit m = c;
        m.insert(position, make_gate(GateKind::R, {qubit}, {kRgiAngle, kRgiAngle}));
        out.push_back({MutationOperator::RGI, position, GateKind::R, std::move(m), 0.0});
    }
    return out;
}

std::vector<MutantRecord> mutate(const Circuit &c, std::span<const MutationOperator> ops, std::size_t rgi_count,
                                 std::uint64_t seed) {
    std::vector<MutantRecord> out;
    for (MutationOperator op : ops) {
        std::vector<MutantRecord> batch;
        switch (op) {
            case MutationOperator::QGR:
                batch = mutate_qgr(c);
                break;
            case MutationOperator::QGD:
                batch = mutate_qgd(c);
                break;
            case MutationOperator::QGI:
                batch = mutate_qgi(c);
                break;
            case MutationOperator::RGI:
                batch = mutate_rgi(c, rgi_count, derive_seed(seed, static_cast<std::uint64_t>(op)));
                break;
        }
        std::move(batch.begin(), batch.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<MutantRecord> filter_equivalent(const Circuit &original, std::vector<MutantRecord> mutants,
                                            double tolerance) {
    const StateVector reference = run_statevector(original);
    std::vector<MutantRecord> kept;
    for (auto &m : mutants) {
        StateVector out = run_statevector(m.circuit);
        double f = fidelity(out, reference);
        if (max_amplitude_deviation(out, reference, PhaseMode::GlobalPhase) <= tolerance || f >= 1.0 - tolerance) {
            continue;
        }
        m.fidelity_to_original = f;
        kept.push_back(std::move(m));
    }
    return kept;
}

std::vector<MutantRecord> sample_mutants(std::vector<MutantRecord> records, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("sample fraction must lie in (0, 1]");
    }
    const std::size_t n = records.size();
    // The slack keeps products like 0.1 * 30 from rounding up past the target.
    const auto k = std::min(n, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9)));
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        auto j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    std::vector<MutantRecord> out;
    out.reserve(k);
    for (auto i : idx) {
        out.push_back(std::move(records[i]));
    }
    return out;
}

void write_manifest_line(std::ostream &out, const MutantRecord &record, std::string_view path) {
    nlohmann::json j{{"operator", operator_name(record.op)},
                     {"site", record.site},
                     {"replacement", nullptr},
                     {"fidelity", record.fidelity_to_original},
                     {"path", path}};
    if (record.replacement) {
        j["replacement"] = gate_name(*record.replacement);
    }
    out << j.dump() << '\n';
}

}  // namespace qut
