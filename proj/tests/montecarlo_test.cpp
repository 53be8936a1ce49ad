// Copyright 2026 The oamzi Authors
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

#include "oamzi/montecarlo.hpp"

#include "gtest/gtest.h"

using namespace oamzi;

namespace {

double sigma(double n, double p) { return std::sqrt(n * p * (1 - p)); }

}  // namespace

TEST(Sampling, deterministic_distribution) {
    OutcomeDistribution d;
    d.p_plus_p45 = 1.0;
    const auto c = sample_outcomes(d, ShotConfig{12345, 99, 1});
    EXPECT_EQ(c.counts[0], 12345u);
    EXPECT_EQ(c.counts[1] + c.counts[2] + c.counts[3] + c.lost, 0u);
}

TEST(Sampling, uniform_concentrates) {
    OutcomeDistribution d{0.25, 0.25, 0.25, 0.25, 0.0};
    const double n = 1e6;
    const auto c = sample_outcomes(d, ShotConfig{1000000, 4242, 1});
    for (auto k : c.counts) {
        EXPECT_LT(std::abs(double(k) - n / 4), 5 * sigma(n, 0.25));
    }
    EXPECT_EQ(c.total(), 1000000u);
}

TEST(Sampling, same_seed_same_counts) {
    const auto d = run(MZIConfig::balanced(2, 0.7)).outcomes;
    const ShotConfig s{50000, 7, 1};
    EXPECT_EQ(sample_outcomes(d, s).counts, sample_outcomes(d, s).counts);
    EXPECT_NE(sample_outcomes(d, s).counts, sample_outcomes(d, ShotConfig{50000, 8, 1}).counts);
}

TEST(Sampling, loss_is_a_discarded_category) {
    OutcomeDistribution d{0.2, 0.2, 0.2, 0.2, 0.2};
    const auto c = sample_outcomes(d, ShotConfig{200000, 3, 1});
    EXPECT_EQ(c.total(), 200000u);
    EXPECT_LT(std::abs(double(c.lost) - 40000), 5 * sigma(200000, 0.2));
}

TEST(Sampling, rejects_unnormalized) {
    OutcomeDistribution d{0.5, 0.5, 0.5, 0.0, 0.0};
    EXPECT_THROW(sample_outcomes(d, ShotConfig{10, 0, 1}), ValidationError);
    OutcomeDistribution ok{1.0, 0.0, 0.0, 0.0, 0.0};
    EXPECT_THROW(sample_outcomes(ok, ShotConfig{0, 0, 1}), ValidationError);
}

TEST(Sampling, frequencies_within_five_sigma) {
    const auto d = run(MZIConfig{3, Complex(0.6, 0.0), Complex(0.0, 0.8), 1.234}).outcomes;
    const double n = 1e6;
    const auto c = sample_outcomes(d, ShotConfig{1000000, 2026, 1});
    const auto p = d.as_array();
    for (int k = 0; k < 4; ++k) {
        EXPECT_LT(std::abs(double(c.counts[k]) - n * p[k]), 5 * sigma(n, p[k]) + 1e-9) << k;
    }
}

TEST(Streams, trials_use_independent_streams) {
    PhotonRng a(5, 0), b(5, 1), c(5, 0);
    const double x = a.uniform();
    EXPECT_NE(x, b.uniform());
    EXPECT_EQ(x, c.uniform());
}

TEST(WhichWayExperiment, perfect_point_never_errs) {
    const auto rep = which_way_experiment(MZIConfig::balanced(2, kPi / 2), ShotConfig{100000, 1, 1});
    EXPECT_EQ(rep.wrong_guesses, 0u);
    EXPECT_EQ(rep.correct_guesses, 100000u);
}

TEST(WhichWayExperiment, no_information_at_zero) {
    const auto rep = which_way_experiment(MZIConfig::balanced(2, 0.0), ShotConfig{100000, 2, 1});
    EXPECT_LT(std::abs(double(rep.correct_guesses) - 50000), 5 * sigma(1e5, 0.5));
    EXPECT_EQ(rep.correct_guesses + rep.wrong_guesses, 100000u);
}

TEST(WhichWayExperiment, sixth_turn) {
    const auto rep = which_way_experiment(MZIConfig::balanced(2, kPi / 6), ShotConfig{100000, 3, 1});
    EXPECT_LT(std::abs(double(rep.correct_guesses) - 75000), 5 * sigma(1e5, 0.75));
}

TEST(WhichWayExperiment, correct_fraction_tracks_likelihood_on_grid) {
    for (int i = 0; i < 20; ++i) {
        const double alpha = kPi * i / 19;
        const MZIConfig c = MZIConfig::balanced(1, alpha);
        const double lk = likelihood(c);
        const auto rep = which_way_experiment(c, ShotConfig{20000, 100u + i, 1});
        const double s = sigma(20000, lk);
        const double dev = std::abs(double(rep.correct_guesses) - 20000 * lk);
        if (s > 0) {
            EXPECT_LT(dev, 5 * s) << "alpha=" << alpha;
        } else {
            EXPECT_LT(dev, 0.5) << "alpha=" << alpha;
        }
    }
}

TEST(WhichWayExperiment, counts_are_consistent_per_trial) {
    const auto rep = which_way_experiment(MZIConfig::balanced(2, 0.9), ShotConfig{1000, 4, 5});
    ASSERT_EQ(rep.trials.size(), 5u);
    for (const auto& t : rep.trials) {
        EXPECT_EQ(t.outcomes.total(), 1000u);
        EXPECT_EQ(t.correct_guesses + t.wrong_guesses, 1000u);
    }
    EXPECT_EQ(rep.photons, 5000u);
}

TEST(ArmJoint, marginal_matches_outcome_distribution) {
    const MZIResult r = run(MZIConfig{2, Complex(0.6, 0.0), Complex(0.0, 0.8), 0.77});
    const ArmPolarizationJoint joint(r.arms);
    const double p45 = r.outcomes.p_plus_p45 + r.outcomes.p_minus_p45;
    const double m45 = r.outcomes.p_plus_m45 + r.outcomes.p_minus_m45;
    EXPECT_NEAR(joint.p[0][0] + joint.p[1][0], p45, 1e-12);
    EXPECT_NEAR(joint.p[0][1] + joint.p[1][1], m45, 1e-12);
}

TEST(PhaseDiscrimination, unit_snr_budget) {
    // Shift of one binomial sigma: success ~ Phi(1) = 0.841.
    const auto rep = phase_discrimination(MZIConfig::balanced(2, kPi / 2), 1e-2 / 3, ShotConfig{90000, 11, 100});
    EXPECT_GE(rep.success_rate(), 0.76);
    EXPECT_LE(rep.success_rate(), 0.92);
    EXPECT_LT(rep.mean_wrong_paths(), 1.0);
    EXPECT_NEAR(rep.slope, 0.5, 1e-12);
}

TEST(PhaseDiscrimination, zero_shift_is_a_coin_flip) {
    const auto rep = phase_discrimination(MZIConfig::balanced(2, kPi / 2), 0.0, ShotConfig{2000, 12, 400});
    EXPECT_LT(std::abs(rep.success_rate() - 0.5), 5 * std::sqrt(0.25 / 400));
}

TEST(PhaseDiscrimination, large_budget_always_succeeds) {
    // 100x the unit-SNR photon count puts the shift at 10 sigma.
    const auto rep = phase_discrimination(MZIConfig::balanced(2, kPi / 2), 1e-2 / 3, ShotConfig{9000000, 13, 3});
    EXPECT_EQ(rep.successes, 3u);
}

TEST(PhaseDiscrimination, negative_slope_is_oriented) {
    // P+ decreases with alpha at alpha0 = pi/2 for l = 0.
    const auto rep = phase_discrimination(MZIConfig::balanced(0, kPi / 2), 0.05, ShotConfig{20000, 14, 50});
    EXPECT_LT(rep.slope, 0.0);
    EXPECT_GT(rep.success_rate(), 0.99);
}

TEST(PhaseDiscrimination, zero_slope_rejected) {
    EXPECT_THROW(phase_discrimination(MZIConfig::balanced(2, 0.0), 1e-3, ShotConfig{10, 1, 1}), DegenerateError);
    MZIConfig exact = MZIConfig::balanced(2, 1.0);
    exact.mode = ElementMode::Exact;
    EXPECT_THROW(phase_discrimination(exact, 1e-3, ShotConfig{10, 1, 1}), ValidationError);
}
