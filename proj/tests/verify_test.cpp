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

#include "oamzi/verify.hpp"

#include "gtest/gtest.h"

using namespace oamzi;

TEST(Verify, default_suite_passes) {
    const auto results = verify::run_all();
    for (const auto& r : results) {
        EXPECT_TRUE(r.passed) << r.name << " worst=" << r.worst << " tol=" << r.tolerance;
    }
    EXPECT_TRUE(verify::all_passed(results));
    EXPECT_GT(results.size(), 25u);
}

TEST(Verify, corrupted_beamsplitter_trips_unitarity) {
    verify::Options opt;
    opt.combine = [](const PhotonState& a, const PhotonState& b, Port) { return beamsplitter_combine(a, b, Port::Plus); };
    const auto results = verify::run_all(opt);
    EXPECT_FALSE(verify::all_passed(results));
    for (const auto& r : results) {
        const bool is_unitarity = r.name.find("unitarity") != std::string::npos;
        EXPECT_EQ(r.passed, !is_unitarity) << r.name;
    }
}

TEST(Verify, seed_moves_only_monte_carlo_checks) {
    verify::Options a, b;
    a.seed = 1;
    b.seed = 99;
    const auto ra = verify::run_all(a);
    const auto rb = verify::run_all(b);
    ASSERT_EQ(ra.size(), rb.size());
    int differing = 0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        if (ra[i].worst != rb[i].worst) {
            ++differing;
            EXPECT_NE(ra[i].name.find("sigma"), std::string::npos) << ra[i].name;
        }
    }
    EXPECT_GT(differing, 0);
}
