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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oamzi/analytics.hpp"
#include "oamzi/elements.hpp"
#include "oamzi/interferometer.hpp"
#include "oamzi/modes.hpp"
#include "oamzi/montecarlo.hpp"
#include "oamzi/state_space.hpp"

namespace oamzi {

/// Self-verification of the invariants of every module. Analytic checks use
/// a fixed internal stream; only the Monte Carlo checks follow the seed.
namespace verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;       // largest observed deviation (or statistic)
    double tolerance = 0.0;
    std::string detail;
};

using CombineFn = std::function<PhotonState(const PhotonState&, const PhotonState&, Port)>;

struct Options {
    std::uint64_t seed = 2026;
    /// Beam-splitter implementation under test; replaced only by fault injection.
    CombineFn combine = [](const PhotonState& a, const PhotonState& b, Port p) {
        return beamsplitter_combine(a, b, p);
    };
};

inline constexpr std::uint64_t kAnalyticSeed = 0x0A3D5EEDULL;

namespace detail {

class Sampler {
  public:
    explicit Sampler(std::uint64_t stream) : rng_(kAnalyticSeed, stream) {}

    double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.uniform(); }
    int integer(int lo, int hi) { return lo + int(rng_.uniform() * (hi - lo + 1)); }
    Complex complex() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
    PolVector pol(PolBasis basis) { return {basis, complex(), complex()}; }
    /// Normalized (c1, c2) with arbitrary phases.
    std::pair<Complex, Complex> amplitudes() {
        Complex a = complex();
        Complex b = complex();
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        return {a / n, b / n};
    }

  private:
    PhotonRng rng_;
};

inline CheckResult bounded(std::string name, double worst, double tol, std::string detail = {}) {
    return {std::move(name), worst <= tol, worst, tol, std::move(detail)};
}

inline double pol_distance(const PolVector& u, const PolVector& v) {
    const PolVector d = u - v;
    return d.norm();
}

}  // namespace detail

inline std::vector<CheckResult> run_all(const Options& opt = {}) {
    using detail::bounded;
    std::vector<CheckResult> out;
    const int n_random = 1000;

    {
        detail::Sampler s(1);
        double round_trip = 0.0;
        double norm_drift = 0.0;
        for (int i = 0; i < n_random; ++i) {
            const PolVector v = s.pol(PolBasis::XY);
            const PolVector back = v.in(PolBasis::RL).in(PolBasis::DIAG).in(PolBasis::XY);
            round_trip = std::max(round_trip, detail::pol_distance(v, back) / v.norm());
            for (PolBasis b : {PolBasis::RL, PolBasis::DIAG}) {
                norm_drift = std::max(norm_drift, std::abs(v.in(b).norm() - v.norm()) / v.norm());
            }
        }
        out.push_back(bounded("basis round trip XY->RL->DIAG->XY", round_trip, kExactTol));
        out.push_back(bounded("basis conversion preserves norm", norm_drift, kExactTol));
    }
    {
        detail::Sampler s(2);
        double worst = 0.0;
        for (int i = 0; i < n_random; ++i) {
            const PolVector u = s.pol(PolBasis(s.integer(0, 2)));
            const PolVector v = s.pol(PolBasis(s.integer(0, 2)));
            worst = std::max(worst, std::abs(inner_product(u, v) - std::conj(inner_product(v, u))));
        }
        out.push_back(bounded("inner product conjugate symmetry", worst, 1e-15));
    }
    {
        detail::Sampler s(3);
        double dove = 0.0;
        double hwp = 0.0;
        double joint_norm = 0.0;
        for (int i = 0; i < n_random; ++i) {
            const int l = s.integer(-kMaxOam, kMaxOam);
            const double alpha = s.uniform(-10.0, 10.0);
            auto [c1, c2] = s.amplitudes();
            const PhotonState in = PhotonState::oam_input(l, c1, c2);
            const PhotonState twice = dove_apply(alpha, dove_apply(alpha, in));
            dove = std::max(dove, detail::pol_distance(twice.at({Path::Single, l}), in.at({Path::Single, l})));
            const JonesMatrix sq = hwp_rotated(alpha) * hwp_rotated(alpha);
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) {
                    hwp = std::max(hwp, std::abs(sq.m[r][c] - Complex(r == c ? 1.0 : 0.0)));
                }
            }
            const PhotonState j = joint_apply(alpha, ElementParams::ideal(), in, ElementMode::Ideal);
            joint_norm = std::max(joint_norm, std::abs(total_norm(j) - 1.0));
        }
        out.push_back(bounded("dove prism applied twice is identity", dove, kExactTol));
        out.push_back(bounded("rotated half-wave plate is involutory", hwp, kExactTol));
        out.push_back(bounded("ideal joint element preserves norm", joint_norm, kExactTol));
    }
    {
        detail::Sampler s(4);
        double worst = 0.0;
        for (int i = 0; i < n_random; ++i) {
            const Complex dx = std::polar(s.uniform(0.01, 1.0), s.uniform(-kPi, kPi));
            const Complex dy = std::polar(s.uniform(0.01, 1.0), s.uniform(-kPi, kPi));
            const Complex wx = std::polar(1.0, s.uniform(-kPi, kPi));
            const Complex wy = std::polar(1.0, s.uniform(-kPi, kPi));
            const auto dec = decompose_joint(dx, dy, wx, wy);
            worst = std::max(worst, std::abs(std::norm(dec.a) + std::norm(dec.b) - 1.0));
        }
        out.push_back(bounded("decomposition satisfies |a|^2+|b|^2=1", worst, kExactTol));
    }
    {
        detail::Sampler s(5);
        double worst = 0.0;
        for (int i = 0; i < n_random; ++i) {
            const int l = s.integer(-8, 8);
            PhotonState a;
            PhotonState b;
            a.add({Path::A, l}, s.pol(PolBasis::XY));
            b.add({Path::B, l}, s.pol(PolBasis::RL));
            if (s.uniform(0.0, 1.0) < 0.5) {
                b.add({Path::B, l + 1}, s.pol(PolBasis::DIAG));
            }
            const double in = std::pow(total_norm(a), 2) + std::pow(total_norm(b), 2);
            const double outp = std::pow(total_norm(opt.combine(a, b, Port::Plus)), 2) +
                                std::pow(total_norm(opt.combine(a, b, Port::Minus)), 2);
            worst = std::max(worst, std::abs(outp - in));
        }
        out.push_back(bounded("beam splitter unitarity (norm conservation)", worst, kExactTol));
    }
    {
        const auto resp = fresnel_dove(PrismGeometry::standard());
        const double worst = std::max(std::abs(std::abs(resp.r_s) - 1.0), std::abs(std::abs(resp.r_p) - 1.0));
        out.push_back(bounded("total internal reflection is unimodular", worst, kExactTol));
    }
    {
        detail::Sampler s(6);
        double sums = 0.0;
        double even = 0.0;
        double mirrors = 0.0;
        double exact = 0.0;
        for (int i = 0; i < n_random; ++i) {
            MZIConfig c;
            c.l = s.integer(-10, 10);
            std::tie(c.c1, c.c2) = s.amplitudes();
            c.alpha = s.uniform(-2.0 * kPi, 2.0 * kPi);
            const auto r = run(c);
            sums = std::max(sums, std::abs(r.outcomes.detected() - 1.0));
            MZIConfig neg = c;
            neg.alpha = -c.alpha;
            even = std::max(even, std::abs(p_plus(neg) - r.outcomes.port_plus()));
            MZIConfig m = c;
            m.mirrors = true;
            const auto rm = run(m).outcomes.as_array();
            const auto r0 = r.outcomes.as_array();
            for (int k = 0; k < 4; ++k) {
                mirrors = std::max(mirrors, std::abs(rm[k] - r0[k]));
            }
            MZIConfig e = c;
            e.mode = ElementMode::Exact;
            e.element = ElementParams::from_decomposition(0.0, 1.0);
            const auto re = run(e).outcomes.as_array();
            for (int k = 0; k < 4; ++k) {
                exact = std::max(exact, std::abs(re[k] - r0[k]));
            }
        }
        out.push_back(bounded("four outcome probabilities sum to 1", sums, kExactTol));
        out.push_back(bounded("P+ is even in alpha", even, kExactTol));
        out.push_back(bounded("mirror pair leaves outcomes unchanged", mirrors, kExactTol));
        out.push_back(bounded("exact mode with a=0 reproduces ideal mode", exact, 0.0));
    }
    {
        detail::Sampler s(7);
        double worst = 0.0;
        for (int i = 0; i < n_random; ++i) {
            const int l = s.integer(-kMaxOam + 1, kMaxOam - 1);
            const double alpha = s.uniform(-2.0 * kPi, 2.0 * kPi);
            const PhotonState in = PhotonState::oam_input(l, 1.0, 0.0);
            const PhotonState j = joint_apply(alpha, ElementParams::ideal(), in, ElementMode::Ideal);
            const PolVector expected = PolVector::left() * std::polar(1.0, 2.0 * (l - 1) * alpha);
            worst = std::max(worst, detail::pol_distance(j.at({Path::Single, -l}), expected));
        }
        out.push_back(bounded("joint element on |l>|R> gives exp[i2(l-1)a]|-l>|L>", worst, kExactTol));
    }
    {
        detail::Sampler s(8);
        double worst = 0.0;
        for (int l = 0; l <= 5; ++l) {
            for (int k = 0; k < 10; ++k) {
                auto [c1, c2] = s.amplitudes();
                for (int i = 0; i < 10000; ++i) {
                    const double alpha = -2.0 * kPi + 4.0 * kPi * i / 9999.0;
                    MZIConfig c{l, c1, c2, alpha};
                    worst = std::max(worst, std::abs(p_plus(c) - photon_p_plus(l, c1, c2, alpha)));
                }
            }
        }
        out.push_back(bounded("simulated P+ matches closed form", worst, kExactTol));
    }
    {
        // The +-45 guess is optimal for real non-negative c1, c2 and
        // alpha in [0, pi]; the optimal distinguishability always is.
        detail::Sampler s(9);
        double projective = 0.0;
        double helstrom = 0.0;
        double arms = 0.0;
        for (int l = 0; l <= 5; ++l) {
            for (int k = 0; k < 10; ++k) {
                auto [c1, c2] = s.amplitudes();
                const Complex r1 = std::abs(c1);
                const Complex r2 = std::abs(c2);
                for (int i = 0; i < 1000; ++i) {
                    const double alpha = kPi * i / 999.0;
                    const auto real_run = run(MZIConfig{l, r1, r2, alpha});
                    const auto lk = arm_likelihoods(real_run.arms);
                    const double d_real = photon_formulas(l, r1, r2, alpha).distinguishability;
                    projective = std::max(projective, std::abs(2.0 * lk.arm_a - 1.0 - d_real));
                    arms = std::max(arms, std::abs(lk.arm_a - lk.arm_b));
                    const auto cplx = run(MZIConfig{l, c1, c2, 2.0 * alpha});
                    helstrom = std::max(helstrom, std::abs(arm_distinguishability(cplx.arms) -
                                                           photon_formulas(l, c1, c2, 2.0 * alpha).distinguishability));
                }
            }
        }
        out.push_back(bounded("2L-1 equals distinguishability", projective, kExactTol));
        out.push_back(bounded("|<+45|psi_A>|^2 equals |<-45|psi_B>|^2", arms, kExactTol));
        out.push_back(bounded("arm-state distinguishability equals 2|c1 c2 sin a|", helstrom, 1e-7,
                              "sqrt near D=0 amplifies rounding"));
    }
    {
        detail::Sampler s(10);
        double tie = 0.0;
        double fd = 0.0;
        double ranges = 0.0;
        double dl = 0.0;
        for (int i = 0; i < n_random; ++i) {
            const int l = s.integer(0, 8);
            auto [c1, c2] = s.amplitudes();
            const double alpha = s.uniform(-2.0 * kPi, 2.0 * kPi);
            const auto f = photon_formulas(l, c1, c2, alpha);
            const TIEState t = tie_equivalent(l, c1, c2);
            tie = std::max({tie, std::abs(tie_p_plus(t, alpha) - f.p_plus),
                            std::abs(tie_sensitivity(t, alpha) - f.sensitivity),
                            std::abs(tie_distinguishability(t, alpha) - f.distinguishability)});
            const double h = 1e-6;
            const double slope = (photon_p_plus(l, c1, c2, alpha + h) - photon_p_plus(l, c1, c2, alpha - h)) / (2 * h);
            fd = std::max(fd, std::abs(2.0 / (l + 1) * std::abs(slope) - f.sensitivity));
            auto outside = [](double v, double lo, double hi) { return std::max({0.0, lo - v, v - hi}); };
            ranges = std::max({ranges, outside(f.distinguishability, 0, 1), outside(f.sensitivity, 0, 1),
                               outside(f.likelihood, 0.5, 1)});
            dl = std::max(dl, std::abs(f.distinguishability - (2.0 * f.likelihood - 1.0)));
        }
        out.push_back(bounded("TIE formulas under (k1,k2,L)=(l-1,l+1,a) match photon formulas", tie, 1e-15));
        out.push_back(bounded("sensitivity matches central differences", fd, 1e-6));
        out.push_back(bounded("D, S in [0,1] and L in [1/2,1]", ranges, 0.0));
        out.push_back(bounded("D = 2L - 1", dl, 1e-15));
    }
    {
        double worst = 0.0;
        for (int i = 0; i <= 10000; ++i) {
            const double alpha = 2.0 * kPi * i / 10000.0;
            const auto f = photon_formulas(0, kInvSqrt2, kInvSqrt2, alpha);
            worst = std::max(worst, std::abs(f.sensitivity - f.distinguishability));
        }
        out.push_back(bounded("l=0 balanced: S equals D", worst, kExactTol));
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double d = i / 1000.0;
            const auto p = DualityPoint::saturated(d);
            worst = std::max(worst, std::abs(p.distinguishability * p.distinguishability + p.visibility * p.visibility - 1.0));
        }
        out.push_back(bounded("standard bound points satisfy D^2+V^2=1", worst, kExactTol));
    }
    {
        const BeamMode lg{BeamFamily::LG, 2, 0};
        const GridSpec grid{3.0, 61};
        const double plus3 = rotation_deviation(lg, +1, 2.0 * kPi / 3.0, grid);
        const double minus3 = rotation_deviation(lg, -1, 2.0 * kPi / 3.0, grid);
        const double minus_full = rotation_deviation(lg, -1, 2.0 * kPi, grid);
        out.push_back(bounded("LG(l=2,s=+1) has 3-fold symmetry", plus3, 1e-9));
        out.push_back({"LG(l=2,s=-1) breaks 3-fold symmetry", minus3 > 1e-3, minus3, 1e-3, "must exceed"});
        out.push_back(bounded("LG(l=2,s=-1) has 1-fold symmetry", minus_full, 1e-9));
        const double power = grid_power(lg, GridSpec{6.0, 512});
        out.push_back(bounded("LG unit power on a 512 grid", std::abs(power - 1.0), 1e-3));
        const double bg_power = grid_power(BeamMode{BeamFamily::BG, 2, 0, 1.0, 2.0}, GridSpec{6.0, 512});
        out.push_back(bounded("BG unit power on a 512 grid", std::abs(bg_power - 1.0), 1e-3));
    }
    {
        // Monte Carlo, 5 sigma bands.
        const MZIConfig c = MZIConfig::balanced(2, kPi / 3.0);
        const auto dist = run(c).outcomes;
        const ShotConfig shots{1000000, opt.seed, 1};
        const auto counts = sample_outcomes(dist, shots);
        double worst_sigma = 0.0;
        const auto p = dist.as_array();
        for (int k = 0; k < 4; ++k) {
            const double n = double(shots.n_photons);
            const double sigma = std::sqrt(n * p[k] * (1.0 - p[k]));
            if (sigma > 0.0) {
                worst_sigma = std::max(worst_sigma, std::abs(double(counts.counts[k]) - n * p[k]) / sigma);
            }
        }
        out.push_back(bounded("sampled frequencies within 5 sigma", worst_sigma, 5.0, "in units of sigma"));
        const auto again = sample_outcomes(dist, shots);
        out.push_back({"sampling is deterministic for a fixed seed", again.counts == counts.counts, 0.0, 0.0, {}});

        double worst_guess = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double alpha = kPi * i / 19.0;
            const MZIConfig cfg = MZIConfig::balanced(2, alpha);
            const auto rep = which_way_experiment(cfg, ShotConfig{20000, opt.seed + i, 1});
            const double lk = likelihood(cfg);
            const double n = double(rep.photons);
            const double sigma = std::sqrt(n * lk * (1.0 - lk));
            const double dev = std::abs(double(rep.correct_guesses) - n * lk);
            worst_guess = std::max(worst_guess, sigma > 0.0 ? dev / sigma : (dev > 0.5 ? 1e9 : 0.0));
        }
        out.push_back(bounded("correct-guess fraction matches L within 5 sigma", worst_guess, 5.0,
                              "in units of sigma"));
    }
    return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

}  // namespace verify
}  // namespace oamzi
