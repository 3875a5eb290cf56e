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

#ifndef QUT_STATISTICS_H
#define QUT_STATISTICS_H

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qut/random.h"
#include "qut/simulator.h"

namespace qut {

enum class StatKind : std::uint8_t { Chi2, GTest, Multinomial, McChi2, McG, McMultinomial };

/// "chi2", "g", "multinomial", "mc-chi2", "mc-g", "mc-multinomial".
std::string_view stat_kind_name(StatKind kind);
std::optional<StatKind> stat_kind_from_name(std::string_view name);
bool is_monte_carlo(StatKind kind);
/// The asymptotic/exact kind behind a Monte Carlo kind (identity otherwise).
StatKind base_kind(StatKind kind);

/// Expected outcome probabilities at or below this are outside the support.
inline constexpr double kSupportFloor = 1e-12;
/// Largest number of count vectors the exact multinomial test enumerates.
inline constexpr double kMaxMultinomialVectors = 1e6;
/// Pearson's minimum total number of observations.
inline constexpr std::uint64_t kPearsonMinimumShots = 13;

/// Raised when the exact multinomial test would need more than
/// kMaxMultinomialVectors count vectors; only the Monte Carlo variant applies.
class MultinomialTooLarge : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Observed counts aligned with an ExpectedDistribution's categories.
struct Tally {
    std::vector<std::uint64_t> counts;
    /// Observations whose outcome has zero expected probability.
    std::uint64_t outside = 0;
    std::uint64_t total = 0;
};

/// An expected outcome distribution restricted to its support.
class ExpectedDistribution {
   public:
    /// `outcome_probabilities[i]` is the expected probability of outcome i.
    explicit ExpectedDistribution(const std::vector<double> &outcome_probabilities);
    static ExpectedDistribution from_state(const StateVector &state);

    std::size_t support_size() const { return outcomes_.size(); }
    std::span<const std::uint64_t> outcomes() const { return outcomes_; }
    /// Renormalized over the support.
    std::span<const double> probabilities() const { return probabilities_; }
    std::optional<std::size_t> category(std::uint64_t outcome) const;

    Tally tally(const CountsHistogram &histogram) const;

   private:
    std::vector<std::uint64_t> outcomes_;
    std::vector<double> probabilities_;
    std::vector<std::int64_t> index_;  // outcome -> category, -1 outside support
};

/// Pearson's sum (O - E)^2 / E.
double chi2_statistic(std::span<const std::uint64_t> counts, std::span<const double> probabilities);
/// Log-likelihood ratio 2 sum O ln(O / E), skipping O = 0 terms.
double g_statistic(std::span<const std::uint64_t> counts, std::span<const double> probabilities);
/// Upper tail of the chi-square distribution, P(X >= x) with `dof` degrees.
double chi2_survival(double x, double dof);
/// log P(counts) under Multinomial(sum(counts), probabilities).
double multinomial_log_probability(std::span<const std::uint64_t> counts, std::span<const double> probabilities);
/// C(shots + k - 1, k - 1), the number of count vectors, as a double.
double count_vector_total(std::uint64_t shots, std::size_t categories);
/// Exact p-value: total probability of count vectors no more likely than the
/// observed one. std::nullopt when enumeration exceeds `max_vectors`.
std::optional<double> exact_multinomial_p_value(std::span<const std::uint64_t> counts,
                                                std::span<const double> probabilities,
                                                double max_vectors = kMaxMultinomialVectors);

/// p-value of a non-Monte-Carlo kind. 0 if any observation lies outside the
/// support, 1 if the support has a single category. Throws
/// MultinomialTooLarge for an oversized exact multinomial.
double p_value(StatKind kind, const Tally &tally, const ExpectedDistribution &expected);

/// A synthetic count vector of `shots` draws (conditional binomials).
std::vector<std::uint64_t> sample_multinomial(std::uint64_t shots, std::span<const double> probabilities, Rng &rng);

/// Empirical p-value c / M: the fraction of M synthetic count vectors drawn
/// from the expected distribution whose score is at least as extreme as the
/// observed one. Scores: asymptotic p-value for chi2 and g, log-probability
/// for multinomial; lower is more extreme.
double monte_carlo_p_value(StatKind kind, const Tally &tally, const ExpectedDistribution &expected,
                           std::size_t repetitions, Rng &rng);

}  // namespace qut

#endif
