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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "oamzi/common.hpp"
#include "oamzi/elements.hpp"
#include "oamzi/state_space.hpp"

namespace oamzi {

/// Mach-Zehnder configuration. The prism + wave-plate pairs are rotated by
/// +alpha/4 in arm A and -alpha/4 in arm B; arm lengths are equal.
struct MZIConfig {
    int l = 0;
    Complex c1{kInvSqrt2};  // amplitude of |R>
    Complex c2{kInvSqrt2};  // amplitude of |L>
    double alpha = 0.0;
    ElementParams element = ElementParams::ideal();
    ElementMode mode = ElementMode::Ideal;
    /// Adds the two plane reflections each arm makes (fold mirror and
    /// splitter reflection) after the element.
    bool mirrors = false;

    /// Balanced circular input c1 = c2 = 1/sqrt2, i.e. |x>.
    static MZIConfig balanced(int l, double alpha) {
        MZIConfig c;
        c.l = l;
        c.alpha = alpha;
        return c;
    }

    void validate() const {
        if (std::abs(l) > kMaxOam) {
            throw ValidationError("OAM index |l| exceeds " + std::to_string(kMaxOam));
        }
        if (!is_finite(c1) || !is_finite(c2) || std::abs(std::norm(c1) + std::norm(c2) - 1.0) > kExactTol) {
            throw ValidationError("input amplitudes must satisfy |c1|^2 + |c2|^2 = 1");
        }
        if (!std::isfinite(alpha)) {
            throw ValidationError("alpha must be finite");
        }
        if (mode == ElementMode::Exact) {
            element.validate();
        }
    }
};

enum class DiagPol { Plus45, Minus45 };

inline const char* to_string(DiagPol p) { return p == DiagPol::Plus45 ? "+45" : "-45"; }

struct DetectionEvent {
    Port port = Port::Plus;
    DiagPol pol = DiagPol::Plus45;

    bool operator==(const DetectionEvent&) const = default;
};

/// The four detection events in a fixed order: (+,+45), (+,-45), (-,+45), (-,-45).
inline constexpr std::array<DetectionEvent, 4> kDetectionEvents{{
    {Port::Plus, DiagPol::Plus45},
    {Port::Plus, DiagPol::Minus45},
    {Port::Minus, DiagPol::Plus45},
    {Port::Minus, DiagPol::Minus45},
}};

inline constexpr std::size_t event_index(DetectionEvent e) {
    return (e.port == Port::Plus ? 0 : 2) + (e.pol == DiagPol::Plus45 ? 0 : 1);
}

struct OutcomeDistribution {
    double p_plus_p45 = 0.0;
    double p_plus_m45 = 0.0;
    double p_minus_p45 = 0.0;
    double p_minus_m45 = 0.0;
    /// Norm deficit from the element's a*I term and losses (exact mode only).
    double loss = 0.0;

    std::array<double, 4> as_array() const { return {p_plus_p45, p_plus_m45, p_minus_p45, p_minus_m45}; }
    double operator[](DetectionEvent e) const { return as_array()[event_index(e)]; }
    double detected() const { return p_plus_p45 + p_plus_m45 + p_minus_p45 + p_minus_m45; }
    double port_plus() const { return p_plus_p45 + p_plus_m45; }
};

/// Polarization states just before the second splitter together with the
/// arm-common OAM phases exp(+-i l alpha / 2) picked up at the Dove flip.
struct ArmStates {
    PolVector psi_a;
    PolVector psi_b;
    Complex phase_a{1.0};
    Complex phase_b{1.0};
};

struct MZIResult {
    OutcomeDistribution outcomes;
    ArmStates arms;
};

namespace detail {

inline double diag_probability(const PhotonState& port_state, DiagPol pol) {
    const PolVector ket = pol == DiagPol::Plus45 ? PolVector::plus45() : PolVector::minus45();
    double p = 0.0;
    for (const auto& [label, v] : port_state.terms()) {
        p += std::norm(inner_product(ket, v));
    }
    return p;
}

}  // namespace detail

inline MZIResult run(const MZIConfig& config) {
    config.validate();
    const PhotonState input = PhotonState::oam_input(config.l, config.c1, config.c2);
    auto [arm_a, arm_b] = beamsplitter_split(input);
    arm_a = joint_apply(config.alpha / 4.0, config.element, arm_a, config.mode);
    arm_b = joint_apply(-config.alpha / 4.0, config.element, arm_b, config.mode);

    MZIResult result;
    ArmStates& arms = result.arms;
    arms.phase_a = std::polar(1.0, config.l * config.alpha / 2.0);
    arms.phase_b = std::polar(1.0, -config.l * config.alpha / 2.0);
    // Arm amplitudes are phase * psi / sqrt2 on the flipped label.
    arms.psi_a = arm_a.at({Path::A, -config.l}) * (std::conj(arms.phase_a) / kInvSqrt2);
    arms.psi_b = arm_b.at({Path::B, -config.l}) * (std::conj(arms.phase_b) / kInvSqrt2);

    if (config.mirrors) {
        arm_a = mirror_apply(mirror_apply(arm_a));
        arm_b = mirror_apply(mirror_apply(arm_b));
    }

    const PhotonState out_plus = beamsplitter_combine(arm_a, arm_b, Port::Plus);
    const PhotonState out_minus = beamsplitter_combine(arm_a, arm_b, Port::Minus);
    OutcomeDistribution& d = result.outcomes;
    d.p_plus_p45 = detail::diag_probability(out_plus, DiagPol::Plus45);
    d.p_plus_m45 = detail::diag_probability(out_plus, DiagPol::Minus45);
    d.p_minus_p45 = detail::diag_probability(out_minus, DiagPol::Plus45);
    d.p_minus_m45 = detail::diag_probability(out_minus, DiagPol::Minus45);
    if (config.mode == ElementMode::Exact) {
        d.loss = 1.0 - d.detected();
    }
    return result;
}

/// Total probability at port +, irrespective of polarization.
inline double p_plus(const MZIConfig& config) { return run(config).outcomes.port_plus(); }

/// +45 is guessed as arm A and -45 as arm B, whichever port fired.
inline Path which_way_guess(DetectionEvent event) {
    return event.pol == DiagPol::Plus45 ? Path::A : Path::B;
}

struct ArmLikelihoods {
    double arm_a;  // |<+45|psi_A>|^2
    double arm_b;  // |<-45|psi_B>|^2
};

inline ArmLikelihoods arm_likelihoods(const ArmStates& arms) {
    return {std::norm(inner_product(PolVector::plus45(), arms.psi_a)),
            std::norm(inner_product(PolVector::minus45(), arms.psi_b))};
}

/// Probability that the +-45 guess names the arm correctly.
inline double likelihood(const MZIConfig& config) {
    if (config.mode != ElementMode::Ideal) {
        throw ValidationError("likelihood is defined for the ideal element only");
    }
    return std::clamp(arm_likelihoods(run(config).arms).arm_a, 0.0, 1.0);
}

/// Optimal (Helstrom) distinguishability of the two arm polarization states
/// for equal priors: sqrt(1 - |<psi_A|psi_B>|^2).
inline double arm_distinguishability(const ArmStates& arms) {
    const double overlap = std::norm(inner_product(arms.psi_a, arms.psi_b)) / (arms.psi_a.norm_sq() * arms.psi_b.norm_sq());
    return std::sqrt(std::max(0.0, 1.0 - overlap));
}

}  // namespace oamzi
