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
#include <vector>

#include "qut/random.h"
#include "qut/statistics.h"

namespace qut {
namespace {

using Counts = std::vector<std::uint64_t>;
using Probs = std::vector<double>;

double log_choose(double n, double k) { return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1); }

TEST(Chi2, StatisticAndSurvivalAgainstClosedForms) {
    Counts c{30, 70};
    Probs p{0.5, 0.5};
    EXPECT_DOUBLE_EQ(chi2_statistic(c, p), 16.0);
    // One degree of freedom: P(X >= x) = erfc(sqrt(x / 2)).
    EXPECT_NEAR(chi2_survival(16.0, 1), std::erfc(std::sqrt(8.0)), 1e-15);
    // Two degrees of freedom: exp(-x / 2).
    for (double x : {0.1, 1.0, 5.0, 30.0}) {
        EXPECT_NEAR(chi2_survival(x, 2), std::exp(-x / 2), 1e-14);
    }
    // Four degrees: exp(-x/2) (1 + x/2).
    EXPECT_NEAR(chi2_survival(7.0, 4), std::exp(-3.5) * 4.5, 1e-14);
    EXPECT_DOUBLE_EQ(chi2_survival(0.0, 3), 1.0);
}

TEST(GTest, StatisticByHand) {
    Counts c{30, 70};
    Probs p{0.5, 0.5};
    double want = 2 * (30 * std::log(30.0 / 50) + 70 * std::log(70.0 / 50));
    EXPECT_NEAR(g_statistic(c, p), want, 1e-12);
    EXPECT_DOUBLE_EQ(g_statistic(Counts{0, 10}, Probs{0.5, 0.5}), 2 * 10 * std::log(2.0));
    EXPECT_DOUBLE_EQ(g_statistic(Counts{25, 75}, Probs{0.25, 0.75}), 0.0);
}

TEST(Multinomial, LogProbabilityMatchesBinomialPmf) {
    for (std::uint64_t k = 0; k <= 12; ++k) {
        Counts c{k, 12 - k};
        Probs p{0.3, 0.7};
        double want = log_choose(12, static_cast<double>(k)) + static_cast<double>(k) * std::log(0.3) +
                      static_cast<double>(12 - k) * std::log(0.7);
        EXPECT_NEAR(multinomial_log_probability(c, p), want, 1e-12);
    }
}

TEST(Multinomial, ExactPValueSmallCases) {
    // Fair coin, 4 flips, all heads: P(4,0) + P(0,4) = 2 / 16.
    EXPECT_NEAR(*exact_multinomial_p_value(Counts{4, 0}, Probs{0.5, 0.5}), 0.125, 1e-15);
    // The most likely vector has p-value 1.
    EXPECT_NEAR(*exact_multinomial_p_value(Counts{2, 2}, Probs{0.5, 0.5}), 1.0, 1e-15);
    // Three categories, brute force over all 15 vectors of 4 shots.
    Probs p{0.2, 0.3, 0.5};
    Counts obs{3, 1, 0};
    auto lp = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
        return multinomial_log_probability(Counts{a, b, c}, p);
    };
    double want = 0;
    for (std::uint64_t a = 0; a <= 4; ++a) {
        for (std::uint64_t b = 0; a + b <= 4; ++b) {
            if (lp(a, b, 4 - a - b) <= lp(3, 1, 0) + 1e-12) {
                want += std::exp(lp(a, b, 4 - a - b));
            }
        }
    }
    EXPECT_NEAR(*exact_multinomial_p_value(obs, p), want, 1e-12);
}

TEST(Multinomial, EnumerationLimit) {
    EXPECT_DOUBLE_EQ(count_vector_total(4, 3), 15.0);
    EXPECT_DOUBLE_EQ(count_vector_total(10000, 2), 10001.0);
    EXPECT_GT(count_vector_total(10000, 4), kMaxMultinomialVectors);
    EXPECT_FALSE(exact_multinomial_p_value(Counts{5000, 3000, 1000, 1000}, Probs{0.25, 0.25, 0.25, 0.25}));
    ExpectedDistribution d({0.25, 0.25, 0.25, 0.25});
    Tally t{Counts{5000, 3000, 1000, 1000}, 0, 10000};
    EXPECT_THROW(p_value(StatKind::Multinomial, t, d), MultinomialTooLarge);
}

TEST(ExpectedDistribution, SupportAndTally) {
    ExpectedDistribution d({0.5, 1e-13, 0.5, 0.0});
    EXPECT_EQ(d.support_size(), 2u);
    EXPECT_EQ(d.category(2), 1u);
    EXPECT_FALSE(d.category(1));
    EXPECT_FALSE(d.category(17));
    CountsHistogram h(2, {{0, 3}, {1, 1}, {2, 6}});
    Tally t = d.tally(h);
    EXPECT_EQ(t.counts, (Counts{3, 6}));
    EXPECT_EQ(t.outside, 1u);
    EXPECT_EQ(t.total, 10u);
    EXPECT_THROW(ExpectedDistribution({0.0, 0.0}), std::invalid_argument);
}

TEST(PValue, ImpossibleOutcomeAndSingleCategory) {
    ExpectedDistribution zero({1.0, 0.0});
    Tally bad{Counts{9}, 1, 10};
    for (auto k : {StatKind::Chi2, StatKind::GTest, StatKind::Multinomial}) {
        EXPECT_EQ(p_value(k, bad, zero), 0.0);
    }
    Tally good{Counts{10}, 0, 10};
    EXPECT_EQ(p_value(StatKind::Chi2, good, zero), 1.0);
    Rng rng(1);
    EXPECT_EQ(monte_carlo_p_value(StatKind::McChi2, bad, zero, 100, rng), 0.0);
}

TEST(MonteCarlo, ModalObservationHasLargePValue) {
    ExpectedDistribution d({0.25, 0.25, 0.25, 0.25});
    Tally t{Counts{250, 250, 250, 250}, 0, 1000};
    for (auto k : {StatKind::McChi2, StatKind::McG, StatKind::McMultinomial}) {
        Rng rng(7);
        EXPECT_GE(monte_carlo_p_value(k, t, d, 1000, rng), 0.95) << stat_kind_name(k);
    }
}

TEST(MonteCarlo, ApproximatesAsymptoticPValue) {
    ExpectedDistribution d({0.2, 0.3, 0.5});
    Tally t{Counts{230, 290, 480}, 0, 1000};
    double asym = p_value(StatKind::Chi2, t, d);
    Rng rng(9);
    double mc = monte_carlo_p_value(StatKind::McChi2, t, d, 20000, rng);
    EXPECT_NEAR(mc, asym, 5 * std::sqrt(asym * (1 - asym) / 20000) + 0.01);
}

TEST(MonteCarlo, RejectsZeroRepetitions) {
    ExpectedDistribution d({0.5, 0.5});
    Tally t{Counts{5, 5}, 0, 10};
    Rng rng(1);
    EXPECT_THROW(monte_carlo_p_value(StatKind::McChi2, t, d, 0, rng), std::invalid_argument);
}

TEST(SampleMultinomial, MeansAndTotal) {
    Probs p{0.1, 0.2, 0.3, 0.4};
    Rng rng(13);
    std::vector<double> sums(4);
    for (int i = 0; i < 2000; ++i) {
        auto c = sample_multinomial(1000, p, rng);
        ASSERT_EQ(c[0] + c[1] + c[2] + c[3], 1000u);
        for (int j = 0; j < 4; ++j) {
            sums[j] += static_cast<double>(c[j]);
        }
    }
    for (int j = 0; j < 4; ++j) {
        double mean = sums[j] / 2000;
        double se = std::sqrt(1000 * p[j] * (1 - p[j]) / 2000);
        EXPECT_NEAR(mean, 1000 * p[j], 5 * se);
    }
}

TEST(StatKind, Names) {
    EXPECT_EQ(stat_kind_from_name("mc-g"), StatKind::McG);
    EXPECT_EQ(stat_kind_name(StatKind::GTest), "g");
    EXPECT_FALSE(stat_kind_from_name("g_test"));
    EXPECT_EQ(base_kind(StatKind::McMultinomial), StatKind::Multinomial);
    EXPECT_TRUE(is_monte_carlo(StatKind::McChi2));
    EXPECT_FALSE(is_monte_carlo(StatKind::Chi2));
}

}  // namespace
}  // namespace qut
