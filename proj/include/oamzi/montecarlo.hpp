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

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "oamzi/analytics.hpp"
#include "oamzi/common.hpp"
#include "oamzi/interferometer.hpp"

namespace oamzi {

// Random streams: trial t of a run seeded with s draws from a std::mt19937_64
// seeded with splitmix64(s ^ splitmix64(t)). Uniform doubles take the top 53
// bits of each 64-bit output. Both pieces are fully specified by the C++
// standard, so counts are reproducible across platforms and releases.

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class PhotonRng {
  public:
    PhotonRng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(seed ^ splitmix64(stream))) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

struct ShotConfig {
    std::uint64_t n_photons = 1;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;

    void validate() const {
        if (n_photons < 1) {
            throw ValidationError("n_photons must be at least 1");
        }
        if (trials < 1) {
            throw ValidationError("trials must be at least 1");
        }
    }
};

struct OutcomeCounts {
    std::array<std::uint64_t, 4> counts{};  // kDetectionEvents order
    std::uint64_t lost = 0;

    std::uint64_t port_plus() const { return counts[0] + counts[1]; }
    std::uint64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3] + lost; }
};

namespace detail {

inline void check_normalized(const OutcomeDistribution& dist) {
    const auto p = dist.as_array();
    for (double x : p) {
        if (!(x >= -kExactTol && x <= 1.0 + kExactTol)) {
            throw ValidationError("outcome probabilities must lie in [0, 1]");
        }
    }
    if (!(dist.loss >= -kExactTol) || std::abs(dist.detected() + dist.loss - 1.0) > 1e-9) {
        throw ValidationError("outcome distribution is not normalized (sum + loss != 1)");
    }
}

/// Index into kDetectionEvents, or 4 for the discarded loss channel.
inline std::size_t draw_event(const OutcomeDistribution& dist, PhotonRng& rng) {
    const auto p = dist.as_array();
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] > 0.0) {
            cumulative += p[k];
            last_positive = k;
            if (u < cumulative) {
                return k;
            }
        }
    }
    return dist.loss > 0.0 ? 4 : last_positive;
}

}  // namespace detail

/// Multinomial draw of n_photons detection events from the stream of trial 0.
inline OutcomeCounts sample_outcomes(const OutcomeDistribution& dist, const ShotConfig& shots,
                                     std::uint64_t stream = 0) {
    shots.validate();
    detail::check_normalized(dist);
    PhotonRng rng(shots.seed, stream);
    OutcomeCounts out;
    for (std::uint64_t i = 0; i < shots.n_photons; ++i) {
        const std::size_t k = detail::draw_event(dist, rng);
        if (k == 4) {
            ++out.lost;
        } else {
            ++out.counts[k];
        }
    }
    return out;
}

enum class Sign { Plus, Minus, Inconclusive };

inline const char* to_string(Sign s) {
    switch (s) {
        case Sign::Plus: return "+";
        case Sign::Minus: return "-";
        case Sign::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct TrialSummary {
    OutcomeCounts outcomes;
    std::uint64_t correct_guesses = 0;
    std::uint64_t wrong_guesses = 0;
    Sign true_sign = Sign::Inconclusive;
    Sign detected_sign = Sign::Inconclusive;
};

/// Joint probabilities P(arm, polarization) = |<pol|psi_arm>|^2 / 2. This is
/// a simulator-side construct: an experiment never observes the arm. Its
/// polarization marginal equals that of the four-outcome distribution.
struct ArmPolarizationJoint {
    // [arm A/B][+45/-45]
    std::array<std::array<double, 2>, 2> p{};

    explicit ArmPolarizationJoint(const ArmStates& arms) {
        const PolVector kets[2] = {PolVector::plus45(), PolVector::minus45()};
        for (int pol = 0; pol < 2; ++pol) {
            p[0][pol] = 0.5 * std::norm(inner_product(kets[pol], arms.psi_a));
            p[1][pol] = 0.5 * std::norm(inner_product(kets[pol], arms.psi_b));
        }
    }

    double prob_arm_a_given(DiagPol pol) const {
        const int k = pol == DiagPol::Plus45 ? 0 : 1;
        const double total = p[0][k] + p[1][k];
        return total > 0.0 ? p[0][k] / total : 0.5;
    }
};

namespace detail {

/// Samples n photons, drawing each one's arm from P(arm | polarization), and
/// scores the +-45 which-way guess.
inline TrialSummary sample_trial(const MZIResult& result, std::uint64_t n, PhotonRng& rng) {
    const ArmPolarizationJoint joint(result.arms);
    TrialSummary t;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::size_t k = draw_event(result.outcomes, rng);
        if (k == 4) {
            ++t.outcomes.lost;
            continue;
        }
        ++t.outcomes.counts[k];
        const DetectionEvent event = kDetectionEvents[k];
        const Path arm = rng.uniform() < joint.prob_arm_a_given(event.pol) ? Path::A : Path::B;
        if (which_way_guess(event) == arm) {
            ++t.correct_guesses;
        } else {
            ++t.wrong_guesses;
        }
    }
    return t;
}

inline void require_ideal(const MZIConfig& config) {
    if (config.mode != ElementMode::Ideal) {
        throw ValidationError("Monte Carlo experiments require the ideal element");
    }
}

}  // namespace detail

struct WhichWayReport {
    std::vector<TrialSummary> trials;
    std::uint64_t photons = 0;
    std::uint64_t correct_guesses = 0;
    std::uint64_t wrong_guesses = 0;

    double correct_fraction() const { return photons == 0 ? 0.0 : double(correct_guesses) / double(photons); }
};

inline WhichWayReport which_way_experiment(const MZIConfig& config, const ShotConfig& shots) {
    detail::require_ideal(config);
    shots.validate();
    const MZIResult result = run(config);
    WhichWayReport report;
    for (std::uint64_t t = 0; t < shots.trials; ++t) {
        PhotonRng rng(shots.seed, t);
        TrialSummary s = detail::sample_trial(result, shots.n_photons, rng);
        report.photons += shots.n_photons;
        report.correct_guesses += s.correct_guesses;
        report.wrong_guesses += s.wrong_guesses;
        report.trials.push_back(s);
    }
    return report;
}

struct PhaseDiscriminationReport {
    std::vector<TrialSummary> trials;
    double operating_alpha = 0.0;
    double delta_alpha = 0.0;
    double expected_port_plus = 0.0;  // n * P+(alpha0)
    double slope = 0.0;               // dP+/dalpha at alpha0
    std::uint64_t successes = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t total_wrong_paths = 0;

    double success_rate() const { return trials.empty() ? 0.0 : double(successes) / double(trials.size()); }
    double mean_wrong_paths() const {
        return trials.empty() ? 0.0 : double(total_wrong_paths) / double(trials.size());
    }
};

/// Each trial hides a sign, samples n photons at alpha0 + sign * delta_alpha
/// and estimates the sign from the port + count against n * P+(alpha0),
/// oriented by the sign of the fringe slope.
inline PhaseDiscriminationReport phase_discrimination(const MZIConfig& config, double delta_alpha,
                                                      const ShotConfig& shots) {
    detail::require_ideal(config);
    shots.validate();
    config.validate();
    if (!std::isfinite(delta_alpha)) {
        throw ValidationError("delta_alpha must be finite");
    }
    PhaseDiscriminationReport report;
    report.operating_alpha = config.alpha;
    report.delta_alpha = delta_alpha;
    report.slope = photon_p_plus_slope(config.l, config.c1, config.c2, config.alpha);
    if (std::abs(report.slope) < kExactTol) {
        throw DegenerateError("fringe slope vanishes at the operating point");
    }
    report.expected_port_plus = double(shots.n_photons) * p_plus(config);

    const MZIResult shifted[2] = {
        run([&] { MZIConfig c = config; c.alpha += delta_alpha; return c; }()),
        run([&] { MZIConfig c = config; c.alpha -= delta_alpha; return c; }()),
    };
    for (std::uint64_t t = 0; t < shots.trials; ++t) {
        PhotonRng rng(shots.seed, t);
        const bool positive = rng.uniform() < 0.5;
        TrialSummary s = detail::sample_trial(shifted[positive ? 0 : 1], shots.n_photons, rng);
        s.true_sign = positive ? Sign::Plus : Sign::Minus;
        const double excess = double(s.outcomes.port_plus()) - report.expected_port_plus;
        if (excess == 0.0) {
            s.detected_sign = Sign::Inconclusive;
            ++report.inconclusive;
        } else {
            s.detected_sign = (excess > 0.0) == (report.slope > 0.0) ? Sign::Plus : Sign::Minus;
        }
        if (s.detected_sign == s.true_sign) {
            ++report.successes;
        }
        report.total_wrong_paths += s.wrong_guesses;
        report.trials.push_back(s);
    }
    return report;
}

}  // namespace oamzi
