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

// Evaluates the l = 2 operating point with both the state-vector simulator
// and the closed forms, then prints the element ratio reached by the default
// Dove prism with an optimized wave plate.

#include <cstdio>

#include "oamzi/analytics.hpp"
#include "oamzi/elements.hpp"
#include "oamzi/interferometer.hpp"

int main() {
    using namespace oamzi;

    const MZIConfig config = MZIConfig::balanced(2, kPi / 2.0);
    const MZIResult result = run(config);
    const PhotonFigures f = photon_formulas(config.l, config.c1, config.c2, config.alpha);

    std::printf("outcomes (+,+45) (+,-45) (-,+45) (-,-45): %.6f %.6f %.6f %.6f\n", result.outcomes.p_plus_p45,
                result.outcomes.p_plus_m45, result.outcomes.p_minus_p45, result.outcomes.p_minus_m45);
    std::printf("P+ simulated %.15f, closed form %.15f\n", result.outcomes.port_plus(), f.p_plus);
    std::printf("S %.15f  D %.15f  L %.15f\n", f.sensitivity, f.distinguishability, f.likelihood);

    const DoveResponse prism = fresnel_dove(PrismGeometry::standard());
    const WaveplateChoice wp = optimize_waveplate(prism.d_x, prism.d_y);
    std::printf("|d_x| = %.6f, |d_y| = %.6f, best |b/a| = %s\n", std::abs(prism.d_x), std::abs(prism.d_y),
                to_string(wp.ratio).c_str());
    return 0;
}
