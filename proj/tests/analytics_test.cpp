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

#include "oamzi/analytics.hpp"

#include <random>

#include "gtest/gtest.h"

using namespace oamzi;

namespace {

constexpr double kTol = 1e-12;
const TIEState kRatio3{1.0, 3.0, kInvSqrt2, kInvSqrt2};

}  // namespace

TEST(TIE, p_plus) {
    EXPECT_NEAR(tie_p_plus(kRatio3, 0.0), 1.0, kTol);
    EXPECT_NEAR(tie_p_plus(kRatio3, kPi / 2), 0.5, kTol);
    EXPECT_NEAR(tie_p_plus(kRatio3, kPi), 0.0, kTol);
}

TEST(TIE, sensitivity) {
    EXPECT_NEAR(tie_sensitivity(kRatio3, 0.0), 0.0, kTol);
    EXPECT_NEAR(tie_sensitivity(kRatio3, kPi / 2), 1.0 / 3.0, kTol);
    const TIEState single{2.0, 0.5, 1.0, 0.0};
    for (double len : {0.1, 0.7, 2.3}) {
        EXPECT_NEAR(tie_sensitivity(single, len), std::abs(std::sin(2.0 * len)), kTol);
    }
    EXPECT_THROW(tie_sensitivity(TIEState{0.0, 0.0, 1.0, 0.0}, 1.0), DegenerateError);
}

TEST(TIE, distinguishability) {
    EXPECT_NEAR(tie_distinguishability(kRatio3, 0.0), 0.0, kTol);
    EXPECT_NEAR(tie_distinguishability(kRatio3, kPi / 2), 1.0, kTol);
    const TIEState pure{1.0, 3.0, 1.0, 0.0};
    for (double len : {0.0, 0.4, 1.9}) {
        EXPECT_EQ(tie_distinguishability(pure, len), 0.0);
    }
}

TEST(Photon, l0_sensitivity_equals_distinguishability) {
    for (int i = 0; i <= 100; ++i) {
        const double alpha = 2 * kPi * i / 100;
        const auto f = photon_formulas(0, kInvSqrt2, kInvSqrt2, alpha);
        EXPECT_NEAR(f.sensitivity, f.distinguishability, kTol);
        EXPECT_NEAR(f.sensitivity, std::abs(std::sin(alpha)), kTol);
    }
}

TEST(Photon, operating_point_l2) {
    const auto f = photon_formulas(2, kInvSqrt2, kInvSqrt2, kPi / 2);
    EXPECT_NEAR(f.p_plus, 0.5, kTol);
    EXPECT_NEAR(f.sensitivity, 1.0 / 3.0, kTol);
    EXPECT_NEAR(f.distinguishability, 1.0, kTol);
    EXPECT_NEAR(f.likelihood, 1.0, kTol);
}

TEST(Photon, zero_rotation) {
    for (int l : {0, 1, 2, 9}) {
        const auto f = photon_formulas(l, Complex(0.6, 0.0), Complex(0.0, 0.8), 0.0);
        EXPECT_NEAR(f.p_plus, 1.0, kTol);
        EXPECT_NEAR(f.sensitivity, 0.0, kTol);
        EXPECT_NEAR(f.distinguishability, 0.0, kTol);
        EXPECT_NEAR(f.likelihood, 0.5, kTol);
    }
}

TEST(Photon, validates_inputs) {
    EXPECT_THROW(photon_formulas(-1, 1.0, 0.0, 0.0), ValidationError);
    EXPECT_THROW(photon_formulas(1, 1.0, 1.0, 0.0), ValidationError);
}

TEST(Photon, sensitivity_matches_central_difference) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1, 1);
    const double h = 1e-6;
    for (int i = 0; i < 1000; ++i) {
        const int l = i % 6;
        Complex c1(u(rng), u(rng)), c2(u(rng), u(rng));
        const double n = std::sqrt(std::norm(c1) + std::norm(c2));
        c1 /= n;
        c2 /= n;
        const double alpha = 2 * kPi * i / 1000.0;
        const double fd = (photon_p_plus(l, c1, c2, alpha + h) - photon_p_plus(l, c1, c2, alpha - h)) / (2 * h);
        EXPECT_NEAR(photon_formulas(l, c1, c2, alpha).sensitivity, 2.0 / (l + 1) * std::abs(fd), 1e-6);
    }
}

TEST(Photon, tie_correspondence_and_ranges) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 1000; ++i) {
        const int l = i % 9;
        Complex c1(u(rng), u(rng)), c2(u(rng), u(rng));
        const double n = std::sqrt(std::norm(c1) + std::norm(c2));
        c1 /= n;
        c2 /= n;
        const double alpha = 8 * u(rng);
        const auto f = photon_formulas(l, c1, c2, alpha);
        const TIEState t = tie_equivalent(l, c1, c2);
        EXPECT_NEAR(tie_p_plus(t, alpha), f.p_plus, 1e-15);
        EXPECT_NEAR(tie_sensitivity(t, alpha), f.sensitivity, 1e-15);
        EXPECT_NEAR(tie_distinguishability(t, alpha), f.distinguishability, 1e-15);
        EXPECT_NEAR(f.distinguishability, 2 * f.likelihood - 1, 1e-15);
        EXPECT_GE(f.distinguishability, 0.0);
        EXPECT_LE(f.distinguishability, 1.0);
        EXPECT_GE(f.sensitivity, 0.0);
        EXPECT_LE(f.sensitivity, 1.0);
        EXPECT_GE(f.likelihood, 0.5);
        EXPECT_LE(f.likelihood, 1.0);
    }
}

TEST(Correspondence, wavenumber_ratios) {
    EXPECT_EQ(correspondence(0), ExtendedReal::finite(-1.0));
    EXPECT_EQ(correspondence(3), ExtendedReal::finite(2.0));
    EXPECT_EQ(correspondence(2), ExtendedReal::finite(3.0));
    EXPECT_TRUE(correspondence(1).infinite);
    EXPECT_THROW(correspondence(-2), ValidationError);
}

TEST(StandardBound, perfect_visibility) {
    const auto r = standard_bound_comparator(0.0, 1e-2);
    EXPECT_NEAR(r.n_photons.value, 1.0e4, 1e-6);
    EXPECT_NEAR(r.expected_wrong.value, 5.0e3, 1e-6);
    EXPECT_EQ(r.criterion, "unit-SNR");
}

TEST(StandardBound, reference_point) {
    // n = 1e4 / (1 - D^2), wrong = n (1 - D) / 2.
    const auto r = standard_bound_comparator(0.9007, 1e-2);
    EXPECT_NEAR(r.n_photons.value, 1e4 / (1 - 0.9007 * 0.9007), 1e-6);
    EXPECT_NEAR(r.n_photons.value, 5.3e4, 0.05e4);
    EXPECT_NEAR(r.expected_wrong.value, 2.6e3, 0.05e3);
}

TEST(StandardBound, full_distinguishability_is_unbounded) {
    const auto r = standard_bound_comparator(1.0, 1e-2);
    EXPECT_TRUE(r.n_photons.infinite);
    EXPECT_TRUE(r.expected_wrong.infinite);
    EXPECT_THROW(standard_bound_comparator(0.5, 0.0), ValidationError);
    EXPECT_THROW(standard_bound_comparator(1.2, 1e-2), ValidationError);
}

TEST(StandardBound, saturates_duality_relation) {
    for (int i = 0; i <= 100; ++i) {
        const auto p = DualityPoint::saturated(i / 100.0);
        EXPECT_NEAR(p.distinguishability * p.distinguishability + p.visibility * p.visibility, 1.0, kTol);
    }
}

TEST(Budget, l2_operating_point) {
    const auto r = photon_budget(2, kInvSqrt2, kInvSqrt2, kPi / 2, 1e-2);
    ASSERT_FALSE(r.n_photons.infinite);
    // slope 1/2, P+ = 1/2, dalpha = 1e-2/3: n = (1/4) / (1/600)^2.
    EXPECT_NEAR(r.n_photons.value, 9.0e4, 1e-6);
    // 1 - L = (1 - cos dalpha) / 2.
    EXPECT_NEAR(r.expected_wrong.value, 9.0e4 * (1 - std::cos(1e-2 / 3)) / 2, 1e-9);
    EXPECT_LT(r.expected_wrong.value, 1.0);
    EXPECT_NEAR(r.expected_wrong.value, 0.25, 1e-3);
}

TEST(Budget, l0_operating_point) {
    const auto r = photon_budget(0, kInvSqrt2, kInvSqrt2, kPi / 2, 1e-2);
    EXPECT_NEAR(r.n_photons.value, 1.0e4, 1e-6);
    EXPECT_NEAR(r.expected_wrong.value, 0.25, 1e-3);
}

TEST(Budget, extremum_is_unbounded) {
    const auto r = photon_budget(2, kInvSqrt2, kInvSqrt2, 0.0, 1e-2);
    EXPECT_TRUE(r.n_photons.infinite);
    EXPECT_THROW(photon_budget(2, kInvSqrt2, kInvSqrt2, 1.0, -1e-2), ValidationError);
}
