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
#include <cmath>
#include <string>

#include "oamzi/common.hpp"

namespace oamzi {

//---------------------------------------------------------------------------//
// Translational-internal entangled (TIE) two-component states
//---------------------------------------------------------------------------//

/// c1 |k1>|1> + c2 |k2>|2>.
struct TIEState {
    double k1 = 1.0;
    double k2 = 3.0;
    Complex c1{kInvSqrt2};
    Complex c2{kInvSqrt2};

    void validate() const {
        if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > kExactTol) {
            throw ValidationError("TIE amplitudes must satisfy |c1|^2 + |c2|^2 = 1");
        }
    }
};

/// Port + detection probability after an arm-length difference L.
inline double tie_p_plus(const TIEState& s, double length) {
    return 0.5 + (std::norm(s.c1) * std::cos(s.k1 * length) + std::norm(s.c2) * std::cos(s.k2 * length)) / 2.0;
}

inline double tie_p_plus_slope(const TIEState& s, double length) {
    return -(std::norm(s.c1) * s.k1 * std::sin(s.k1 * length) + std::norm(s.c2) * s.k2 * std::sin(s.k2 * length)) /
           2.0;
}

/// (2 / k_max) |dP+/dL| with k_max = max(|k1|, |k2|).
inline double tie_sensitivity(const TIEState& s, double length) {
    const double k_max = std::max(std::abs(s.k1), std::abs(s.k2));
    if (k_max == 0.0) {
        throw DegenerateError("sensitivity is undefined for k1 = k2 = 0");
    }
    return 2.0 / k_max * std::abs(tie_p_plus_slope(s, length));
}

inline double tie_distinguishability(const TIEState& s, double length) {
    return 2.0 * std::abs(s.c1 * s.c2 * std::sin((s.k2 - s.k1) * length / 2.0));
}

//---------------------------------------------------------------------------//
// Photon with OAM l in the Dove-prism interferometer
//---------------------------------------------------------------------------//

struct PhotonFigures {
    double p_plus = 0.0;
    double sensitivity = 0.0;
    double distinguishability = 0.0;
    double likelihood = 0.0;
};

inline void validate_photon_input(int l, Complex c1, Complex c2) {
    if (l < 0) {
        throw ValidationError("closed forms require l >= 0");
    }
    if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > kExactTol) {
        throw ValidationError("input amplitudes must satisfy |c1|^2 + |c2|^2 = 1");
    }
}

inline double photon_p_plus(int l, Complex c1, Complex c2, double alpha) {
    return 0.5 + (std::norm(c1) * std::cos((l - 1) * alpha) + std::norm(c2) * std::cos((l + 1) * alpha)) / 2.0;
}

inline double photon_p_plus_slope(int l, Complex c1, Complex c2, double alpha) {
    return -(std::norm(c1) * (l - 1) * std::sin((l - 1) * alpha) + std::norm(c2) * (l + 1) * std::sin((l + 1) * alpha)) /
           2.0;
}

/// Closed-form P+, S, D and L. S is normalized by 2/(l+1), the largest of
/// |l-1| and l+1 for l >= 0; L = (D + 1)/2. Values are clamped to their
/// ranges against rounding.
inline PhotonFigures photon_formulas(int l, Complex c1, Complex c2, double alpha) {
    validate_photon_input(l, c1, c2);
    PhotonFigures f;
    f.p_plus = std::clamp(photon_p_plus(l, c1, c2, alpha), 0.0, 1.0);
    f.sensitivity = std::min(1.0, std::abs(std::norm(c1) * (l - 1) / double(l + 1) * std::sin((l - 1) * alpha) +
                             std::norm(c2) * std::sin((l + 1) * alpha)));
    f.distinguishability = std::min(1.0, 2.0 * std::abs(c1 * c2 * std::sin(alpha)));
    f.likelihood = (f.distinguishability + 1.0) / 2.0;
    return f;
}

/// TIE wavenumber ratio k2/k1 = (l+1)/(l-1) emulated by charge l; l = 1 is
/// flagged unbounded.
inline ExtendedReal correspondence(int l) {
    if (l < 0) {
        throw ValidationError("correspondence requires l >= 0");
    }
    if (l == 1) {
        return ExtendedReal::unbounded();
    }
    return ExtendedReal::finite(double(l + 1) / double(l - 1));
}

/// TIE state whose quantities at length alpha reproduce the photon ones.
inline TIEState tie_equivalent(int l, Complex c1, Complex c2) { return {double(l - 1), double(l + 1), c1, c2}; }

//---------------------------------------------------------------------------//
// Photon budgets
//---------------------------------------------------------------------------//

inline constexpr const char* kBudgetCriterion = "unit-SNR";

struct DualityPoint {
    double distinguishability = 0.0;
    double visibility = 1.0;

    /// Point on the standard bound D^2 + V^2 = 1.
    static DualityPoint saturated(double d) { return {d, std::sqrt(std::max(0.0, 1.0 - d * d))}; }
};

/// Photons needed so that the mean count shift from the phase step equals one
/// binomial standard deviation, and how many of them are expected to get the
/// path wrong.
struct BudgetReport {
    ExtendedReal n_photons;
    ExtendedReal expected_wrong;
    double operating_alpha = 0.0;
    double phase_shift = 0.0;
    double distinguishability = 0.0;
    std::string criterion = kBudgetCriterion;
};

/// Sinusoidal fringe of visibility V = sqrt(1 - D^2) read at its steepest
/// point. D = 1 leaves no fringe and reports unbounded counts.
inline BudgetReport standard_bound_comparator(double d, double phase_shift) {
    if (!(d >= 0.0 && d <= 1.0)) {
        throw ValidationError("distinguishability must lie in [0, 1]");
    }
    if (!(phase_shift > 0.0)) {
        throw ValidationError("phase shift must be positive");
    }
    BudgetReport r;
    r.operating_alpha = kPi / 2.0;
    r.phase_shift = phase_shift;
    r.distinguishability = d;
    const DualityPoint point = DualityPoint::saturated(d);
    if (d >= 1.0 || point.visibility == 0.0) {
        r.n_photons = ExtendedReal::unbounded();
        r.expected_wrong = ExtendedReal::unbounded();
        return r;
    }
    const double p = 0.5;
    const double slope = point.visibility / 2.0;
    const double n = p * (1.0 - p) / std::pow(slope * phase_shift, 2);
    r.n_photons = ExtendedReal::finite(n);
    r.expected_wrong = ExtendedReal::finite(n * (1.0 - d) / 2.0);
    return r;
}

/// Budget for detecting the step (l+1) * dalpha = phase_shift around
/// operating_alpha. A vanishing fringe slope reports unbounded counts.
inline BudgetReport photon_budget(int l, Complex c1, Complex c2, double operating_alpha, double phase_shift) {
    validate_photon_input(l, c1, c2);
    if (!(phase_shift > 0.0)) {
        throw ValidationError("phase shift must be positive");
    }
    BudgetReport r;
    r.operating_alpha = operating_alpha;
    r.phase_shift = phase_shift;
    const double step = phase_shift / (l + 1);
    const double slope = photon_p_plus_slope(l, c1, c2, operating_alpha);
    const PhotonFigures shifted = photon_formulas(l, c1, c2, operating_alpha + step);
    r.distinguishability = shifted.distinguishability;
    if (std::abs(slope) < kExactTol) {
        r.n_photons = ExtendedReal::unbounded();
        r.expected_wrong = ExtendedReal::unbounded();
        return r;
    }
    const double p = photon_p_plus(l, c1, c2, operating_alpha);
    const double n = p * (1.0 - p) / std::pow(slope * step, 2);
    r.n_photons = ExtendedReal::finite(n);
    r.expected_wrong = ExtendedReal::finite(n * (1.0 - shifted.likelihood));
    return r;
}

}  // namespace oamzi
