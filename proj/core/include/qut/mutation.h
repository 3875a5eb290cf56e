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


#ifndef QUT_MUTATION_H
#define QUT_MUTATION_H

#include <cstdint>
#include <optional>
#include <span>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qut/circuit.h"

namespace qut {

enum class MutationOperator : std::uint8_t { QGR, QGD, QGI, RGI };

/// "qgr", "qgd", "qgi", "rgi".
std::string_view operator_name(MutationOperator op);
std::optional<MutationOperator> operator_from_name(std::string_view name);

/// Angle used for both theta and phi of the inserted r gate.
inline constexpr double kRgiAngle = 3.14159265358979323846 / 180.0;
inline constexpr double kEquivalenceTolerance = 1e-10;

struct MutantRecord {
    MutationOperator op = MutationOperator::QGD;
    /// Gate index for QGR/QGD, insertion index for QGI/RGI.
    std::size_t site = 0;
    std::optional<GateKind> replacement;
    Circuit circuit{1};
    /// Filled in by filter_equivalent.
    double fidelity_to_original = 0.0;
};

std::vector<MutantRecord> mutate_qgr(const Circuit &c);
std::vector<MutantRecord> mutate_qgd(const Circuit &c);
std::vector<MutantRecord> mutate_qgi(const Circuit &c);
/// `count` mutants, each an r(pi/180, pi/180) at a seeded uniform (gate
/// boundary, qubit) choice.
std::vector<MutantRecord> mutate_rgi(const Circuit &c, std::size_t count, std::uint64_t seed);

std::vector<MutantRecord> mutate(const Circuit &c, std::span<const MutationOperator> ops, std::size_t rgi_count,
                                 std::uint64_t seed);

/// Drops mutants whose output state equals the original's up to global
/// phase within `tolerance`, and mutants whose fidelity to the original is at
/// least 1 - tolerance. Survivors carry fidelity_to_original.
std::vector<MutantRecord> filter_equivalent(const Circuit &original, std::vector<MutantRecord> mutants,
                                            double tolerance = kEquivalenceTolerance);

/// ceil(fraction * size) records drawn without replacement, in original order.
std::vector<MutantRecord> sample_mutants(std::vector<MutantRecord> records, double fraction, std::uint64_t seed);

/// One JSON object per line: operator, site, replacement, fidelity, path.
void write_manifest_line(std::ostream &out, const MutantRecord &record, std::string_view path);

}  // namespace qut

#endif
