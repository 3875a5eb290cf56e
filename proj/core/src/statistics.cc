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

#include "qut/statistics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include <boost/math/special_functions/gamma.hpp>

namespace qut {

namespace {

struct KindName {
    StatKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 6> kKindNames{{
    {StatKind::Chi2, "chi2"},
    {StatKind::GTest, "g"},
    {StatKind::Multinomial, "multinomial"},
    {StatKind::McChi2, "mc-chi2"},
    {StatKind::McG, "mc-g"},
    {StatKind::McMultinomial, "mc-multinomial"},
}};

// Relative slack when comparing log-probabilities, so count vectors that are
// equally likely up to rounding are treated as ties.
constexpr double kLogTieSlack = 1e-9;

void check_aligned(std::span<const std::uint64_t> counts, std::span<const double> probs) {
    if (counts.size() != probs.size() || counts.empty()) {
        throw std::invalid_argument("counts and probabilities must be non-empty and aligned");
    }
}

double score(StatKind base, std::span<const std::uint64_t> counts, std::span<const double> probs) {
    const double dof = static_cast<double>(counts.size() - 1);
    switch (base) {
        case StatKind::Chi2:
            return chi2_survival(chi2_statistic(counts, probs), dof);
        case StatKind::GTest:
            return chi2_survival(g_statistic(counts, probs), dof);
        case StatKind::Multinomial:
            return multinomial_log_probability(counts, probs);
        default:
            throw std::logic_error("score: expected a base kind");
    }
}

}  // namespace

std::string_view stat_kind_name(StatKind kind) {
    for (const auto &k : kKindNames) {
        if (k.kind == kind) {
            return k.name;
        }
    }
    throw std::invalid_argument("unknown statistical test kind");
}

std::optional<StatKind> stat_kind_from_name(std::string_view name) {
    for (const auto &k : kKindNames) {
        if (k.name == name) {
            return k.kind;
        }
    }
    return std::nullopt;
}

bool is_monte_carlo(StatKind kind) {
    return kind == StatKind::McChi2 || kind == StatKind::McG || kind == StatKind::McMultinomial;
}

StatKind base_kind(StatKind kind) {
    switch (kind) {
        case StatKind::McChi2:
            return StatKind::Chi2;
        case StatKind::McG:
            return StatKind::GTest;
        case StatKind::McMultinomial:
            return StatKind::Multinomial;
        default:
            return kind;
    }
}

ExpectedDistribution::ExpectedDistribution(const std::vector<double> &outcome_probabilities)
    : index_(outcome_probabilities.size(), -1) {
    double mass = 0;
    for (std::size_t i = 0; i < outcome_probabilities.size(); ++i) {
        if (outcome_probabilities[i] > kSupportFloor) {
            index_[i] = static_cast<std::int64_t>(outcomes_.size());
            outcomes_.push_back(i);
            probabilities_.push_back(outcome_probabilities[i]);
            mass += outcome_probabilities[i];
        }
    }
    if (outcomes_.empty()) {
        throw std::invalid_argument("expected distribution has empty support");
    }
    for (auto &p : probabilities_) {
        p /= mass;
    }
}

ExpectedDistribution ExpectedDistribution::from_state(const StateVector &state) {
    return ExpectedDistribution(outcome_probabilities(state));
}

std::optional<std::size_t> ExpectedDistribution::category(std::uint64_t outcome) const {
    if (outcome >= index_.size() || index_[outcome] < 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(index_[outcome]);
}

Tally ExpectedDistribution::tally(const CountsHistogram &histogram) const {
    Tally t{std::vector<std::uint64_t>(outcomes_.size()), 0, histogram.shots()};
    for (const auto &[outcome, n] : histogram.counts()) {
        if (auto c = category(outcome)) {
            t.counts[*c] += n;
        } else {
            t.outside += n;
        }
    }
    return t;
}

double chi2_statistic(std::span<const std::uint64_t> counts, std::span<const double> probabilities) {
    check_aligned(counts, probabilities);
    double total = 0;
    for (auto c : counts) {
        total += static_cast<double>(c);
    }
    double stat = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        double e = total * probabilities[i];
        double d = static_cast<double>(counts[i]) - e;
        stat += d * d / e;
    }
    return stat;
}

double g_statistic(std::span<const std::uint64_t> counts, std::span<const double> probabilities) {
    check_aligned(counts, probabilities);
    double total = 0;
    for (auto c : counts) {
        total += static_cast<double>(c);
    }
    double stat = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) {
            continue;
        }
        double o = static_cast<double>(counts[i]);
        stat += o * std::log(o / (total * probabilities[i]));
    }
    // Rounding can leave a tiny negative value when O == E exactly.
    return std::max(0.0, 2.0 * stat);
}

double chi2_survival(double x, double dof) {
    if (dof <= 0) {
        return 1.0;
    }
    if (x <= 0) {
        return 1.0;
    }
    return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

double multinomial_log_probability(std::span<const std::uint64_t> counts, std::span<const double> probabilities) {
    check_aligned(counts, probabilities);
    double total = 0;
    double lp = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        double c = static_cast<double>(counts[i]);
        total += c;
        lp -= std::lgamma(c + 1.0);
        if (counts[i] > 0) {
            lp += c * std::log(probabilities[i]);
        }
    }
    return lp + std::lgamma(total + 1.0);
}

double count_vector_total(std::uint64_t shots, std::size_t categories) {
    if (categories == 0) {
        return 0;
    }
    double k = static_cast<double>(categories - 1);
    double s = static_cast<double>(shots);
    return std::round(std::exp(std::lgamma(s + k + 1.0) - std::lgamma(k + 1.0) - std::lgamma(s + 1.0)));
}

std::optional<double> exact_multinomial_p_value(std::span<const std::uint64_t> counts,
                                                std::span<const double> probabilities, double max_vectors) {
    check_aligned(counts, probabilities);
    const std::size_t k = counts.size();
    std::uint64_t shots = 0;
    for (auto c : counts) {
        shots += c;
    }
    if (k == 1) {
        return 1.0;
    }
    if (count_vector_total(shots, k) > max_vectors) {
        return std::nullopt;
    }
    std::vector<double> log_fact(shots + 1);
    for (std::uint64_t i = 1; i <= shots; ++i) {
        log_fact[i] = log_fact[i - 1] + std::log(static_cast<double>(i));
    }
    std::vector<double> log_p(k);
    for (std::size_t i = 0; i < k; ++i) {
        log_p[i] = std::log(probabilities[i]);
    }
    const double observed = multinomial_log_probability(counts, probabilities);
    const double threshold = observed + kLogTieSlack * std::max(1.0, std::abs(observed));

    double p = 0;
    // Depth-first over compositions; `acc` is log S! + sum_j (x_j log p_j - log x_j!).
    std::function<void(std::size_t, std::uint64_t, double)> walk = [&](std::size_t cat, std::uint64_t left,
                                                                     double acc) {
        if (cat + 1 == k) {
            double lp = acc + static_cast<double>(left) * log_p[cat] - log_fact[left];
            if (lp <= threshold) {
                p += std::exp(lp);
            }
            return;
        }
        for (std::uint64_t x = 0; x <= left; ++x) {
            walk(cat + 1, left - x, acc + static_cast<double>(x) * log_p[cat] - log_fact[x]);
        }
    };
    walk(0, shots, log_fact[shots]);
    return std::min(1.0, p);
}

double p_value(StatKind kind, const Tally &tally, const ExpectedDistribution &expected) {
    if (is_monte_carlo(kind)) {
        throw std::invalid_argument("p_value: use monte_carlo_p_value for Monte Carlo kinds");
    }
    if (tally.outside > 0) {
        return 0.0;
    }
    if (tally.counts.size() == 1) {
        return 1.0;
    }
    if (kind == StatKind::Multinomial) {
        auto p = exact_multinomial_p_value(tally.counts, expected.probabilities());
        if (!p) {
            throw MultinomialTooLarge(
                "exact multinomial test needs more than 1e6 count vectors at " + std::to_string(tally.total) +
                " shots over " + std::to_string(tally.counts.size()) + " outcomes; only mc-multinomial is available");
        }
        return *p;
    }
    return score(kind, tally.counts, expected.probabilities());
}

std::vector<std::uint64_t> sample_multinomial(std::uint64_t shots, std::span<const double> probabilities, Rng &rng) {
    std::vector<std::uint64_t> out(probabilities.size());
    std::uint64_t left = shots;
    double mass = 1.0;
    for (std::size_t i = 0; i + 1 < probabilities.size() && left > 0; ++i) {
        double q = mass > 0 ? std::clamp(probabilities[i] / mass, 0.0, 1.0) : 1.0;
        out[i] = rng.binomial(left, q);
        left -= out[i];
        mass -= probabilities[i];
    }
    out.back() += left;
    return out;
}

double monte_carlo_p_value(StatKind kind, const Tally &tally, const ExpectedDistribution &expected,
                           std::size_t repetitions, Rng &rng) {
    if (repetitions == 0) {
        throw std::invalid_argument("Monte Carlo repetitions must be at least 1");
    }
    const StatKind base = base_kind(kind);
    if (tally.outside > 0) {
        return 0.0;
    }
    if (tally.counts.size() == 1) {
        return 1.0;
    }
    const auto probs = expected.probabilities();
    const double observed = score(base, tally.counts, probs);
    const double slack = base == StatKind::Multinomial ? kLogTieSlack * std::max(1.0, std::abs(observed)) : 0.0;
    std::size_t as_extreme = 0;
    for (std::size_t m = 0; m < repetitions; ++m) {
        auto synthetic = sample_multinomial(tally.total, probs, rng);
        if (score(base, synthetic, probs) <= observed + slack) {
            ++as_extreme;
        }
    }
    return static_cast<double>(as_extreme) / static_cast<double>(repetitions);
}

}  // namespace qut
