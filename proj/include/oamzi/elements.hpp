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
#include <string>

#include "oamzi/common.hpp"
#include "oamzi/state_space.hpp"

namespace oamzi {

//---------------------------------------------------------------------------//
// Jones matrices
//---------------------------------------------------------------------------//

/// 2x2 polarization operator in the XY basis.
struct JonesMatrix {
    std::array<std::array<Complex, 2>, 2> m{};

    static JonesMatrix identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }
    static JonesMatrix diag(Complex d0, Complex d1) { return {{{{d0, 0.0}, {0.0, d1}}}}; }

    PolVector apply(const PolVector& v) const {
        PolVector xy = v.in(PolBasis::XY);
        return {PolBasis::XY, m[0][0] * xy[0] + m[0][1] * xy[1], m[1][0] * xy[0] + m[1][1] * xy[1]};
    }

    JonesMatrix operator*(const JonesMatrix& o) const {
        JonesMatrix r;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
            }
        }
        return r;
    }

    Complex determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

/// Half-wave plate with its fast axis rotated by theta about z:
/// U diag(1,-1) U^dagger with U = exp(-i sigma_y theta).
inline JonesMatrix hwp_rotated(double theta) {
    const double c = std::cos(2.0 * theta);
    const double s = std::sin(2.0 * theta);
    return {{{{c, s}, {s, -c}}}};
}

//---------------------------------------------------------------------------//
// Dove prism and wave plate parameters
//---------------------------------------------------------------------------//

struct Decomposition {
    Complex a;
    Complex b;
    /// Common scale removed by the normalization |a|^2 + |b|^2 = 1. The
    /// physical element is transmission * (a I + b P_HW).
    double transmission = 1.0;
};

/// diag(w_x d_x, w_y d_y) = s * (a I + b diag(1,-1)) with |a|^2 + |b|^2 = 1.
inline Decomposition decompose_joint(Complex d_x, Complex d_y, Complex w_x, Complex w_y) {
    if (std::abs(std::abs(w_x) - 1.0) > kExactTol || std::abs(std::abs(w_y) - 1.0) > kExactTol) {
        throw ValidationError("wave-plate factors must be unimodular (|w_x| = |w_y| = 1)");
    }
    if (d_x == Complex(0.0) && d_y == Complex(0.0)) {
        throw DegenerateError("prism response d_x = d_y = 0 has no a/b decomposition");
    }
    const Complex ex = w_x * d_x;
    const Complex ey = w_y * d_y;
    const Complex a = 0.5 * (ex + ey);
    const Complex b = 0.5 * (ex - ey);
    const double scale = std::sqrt(std::norm(a) + std::norm(b));
    return {a / scale, b / scale, scale};
}

/// Prism and wave-plate response together with the derived a/b pair.
struct ElementParams {
    Complex d_x{1.0};
    Complex d_y{1.0};
    Complex w_x{1.0};
    Complex w_y{-1.0};
    Complex a{0.0};
    Complex b{1.0};
    double transmission = 1.0;

    /// The ideal half-wave element: a = 0, b = 1, no loss.
    static ElementParams ideal() { return {}; }

    static ElementParams from_response(Complex d_x, Complex d_y, Complex w_x, Complex w_y) {
        auto dec = decompose_joint(d_x, d_y, w_x, w_y);
        ElementParams p{d_x, d_y, w_x, w_y, dec.a, dec.b, dec.transmission};
        p.validate();
        return p;
    }

    /// Builds an element directly from (a, b) and a transmission scale. The
    /// diagonal responses are reconstructed as d = |t (a +- b)| with the
    /// phases carried by w.
    static ElementParams from_decomposition(Complex a, Complex b, double transmission = 1.0) {
        const Complex ex = transmission * (a + b);
        const Complex ey = transmission * (a - b);
        auto unit = [](Complex z) { return std::abs(z) == 0.0 ? Complex(1.0) : z / std::abs(z); };
        ElementParams p{std::abs(ex), std::abs(ey), unit(ex), unit(ey), a, b, transmission};
        p.validate();
        return p;
    }

    void validate() const {
        if (std::abs(std::abs(w_x) - 1.0) > kExactTol || std::abs(std::abs(w_y) - 1.0) > kExactTol) {
            throw ValidationError("wave-plate factors must be unimodular (|w_x| = |w_y| = 1)");
        }
        if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kExactTol) {
            throw ValidationError("decomposition must satisfy |a|^2 + |b|^2 = 1");
        }
        for (double m : {std::abs(d_x), std::abs(d_y)}) {
            if (!(m >= 0.0 && m <= 1.0 + kExactTol)) {
                throw ValidationError("prism response must satisfy 0 <= |d| <= 1");
            }
        }
        if (!(transmission > 0.0) || !std::isfinite(transmission)) {
            throw ValidationError("element transmission must be positive");
        }
    }

    /// |b/a|, flagged unbounded when a vanishes.
    ExtendedReal ratio() const {
        if (std::abs(a) == 0.0) {
            return ExtendedReal::unbounded();
        }
        return ExtendedReal::finite(std::abs(b) / std::abs(a));
    }
};

struct WaveplateChoice {
    Complex w_x;
    Complex w_y;
    /// Achieved |b/a|; unbounded when |d_x| = |d_y|.
    ExtendedReal ratio;
};

/// Unimodular wave-plate factors that set arg(w_x d_x) - arg(w_y d_y) = pi,
/// which minimizes |a| to ||d_x| - |d_y|| / 2 before normalization.
inline WaveplateChoice optimize_waveplate(Complex d_x, Complex d_y) {
    const double mx = std::abs(d_x);
    const double my = std::abs(d_y);
    if (mx == 0.0 || my == 0.0) {
        throw ValidationError("optimize_waveplate requires nonzero d_x and d_y");
    }
    WaveplateChoice c;
    c.w_x = std::conj(d_x) / mx;
    c.w_y = -std::conj(d_y) / my;
    if (mx == my) {
        c.ratio = ExtendedReal::unbounded();
    } else {
        c.ratio = ExtendedReal::finite((mx + my) / std::abs(mx - my));
    }
    return c;
}

//---------------------------------------------------------------------------//
// Fresnel model of a Dove prism
//---------------------------------------------------------------------------//

struct PrismGeometry {
    double refractive_index = 1.5168;
    /// External incidence angle on the entrance face (radians).
    double face_incidence_angle = kPi / 4.0;
    /// Internal incidence angle on the base (radians).
    double base_incidence_angle = 3.0 * kPi / 8.0;

    /// The default: BK7-like crown glass in a 45 degree Dove prism.
    static PrismGeometry standard() { return {}; }

    double critical_angle() const { return std::asin(1.0 / refractive_index); }
};

/// Fresnel amplitude coefficients for one interface, n1 -> n2.
struct FresnelInterface {
    Complex t_s;
    Complex t_p;
    Complex r_s;
    Complex r_p;
};

/// Amplitude coefficients at a planar interface for incidence angle theta_i
/// from index n1 into index n2. Beyond the critical angle the transmitted
/// cosine is i*sqrt(sin^2 - 1) (evanescent decay for the exp(-i w t)
/// convention) and |r_s| = |r_p| = 1.
inline FresnelInterface fresnel_interface(double n1, double n2, double theta_i) {
    const double ci = std::cos(theta_i);
    const double st = n1 * std::sin(theta_i) / n2;
    Complex ct;
    if (st <= 1.0) {
        ct = std::sqrt(1.0 - st * st);
    } else {
        ct = Complex(0.0, std::sqrt(st * st - 1.0));
    }
    FresnelInterface f;
    f.r_s = (n1 * ci - n2 * ct) / (n1 * ci + n2 * ct);
    f.r_p = (n2 * ci - n1 * ct) / (n2 * ci + n1 * ct);
    f.t_s = 2.0 * n1 * ci / (n1 * ci + n2 * ct);
    f.t_p = 2.0 * n1 * ci / (n2 * ci + n1 * ct);
    return f;
}

struct DoveResponse {
    Complex d_x;
    Complex d_y;
    /// Total-internal-reflection coefficients at the base.
    Complex r_s;
    Complex r_p;
};

/// Polarization response of a Dove prism: refraction in, total internal
/// reflection at the base, refraction out. x lies along the base and is the
/// s component at every surface; y is the p component.
inline DoveResponse fresnel_dove(const PrismGeometry& geom) {
    const double n = geom.refractive_index;
    if (!(n > 1.0) || !std::isfinite(n)) {
        throw DegenerateError("refractive index must exceed 1; the critical angle is undefined for n <= 1");
    }
    if (!(geom.face_incidence_angle >= 0.0 && geom.face_incidence_angle < kPi / 2.0)) {
        throw ValidationError("face incidence angle must lie in [0, pi/2)");
    }
    if (!(geom.base_incidence_angle > geom.critical_angle() && geom.base_incidence_angle < kPi / 2.0)) {
        throw DegenerateError("base incidence angle does not exceed the critical angle; no total internal reflection");
    }
    const double refracted = std::asin(std::sin(geom.face_incidence_angle) / n);
    const auto entry = fresnel_interface(1.0, n, geom.face_incidence_angle);
    const auto base = fresnel_interface(n, 1.0, geom.base_incidence_angle);
    const auto exit = fresnel_interface(n, 1.0, refracted);
    return {entry.t_s * base.r_s * exit.t_s, entry.t_p * base.r_p * exit.t_p, base.r_s, base.r_p};
}

//---------------------------------------------------------------------------//
// Element actions on photon states
//---------------------------------------------------------------------------//

enum class ElementMode { Ideal, Exact };

/// Dove prism rotated by alpha: |l> -> exp(i 2 l alpha) |-l>. Polarization is
/// left untouched.
inline PhotonState dove_apply(double alpha, const PhotonState& state) {
    PhotonState out;
    for (const auto& [label, v] : state.terms()) {
        out.add({label.path, -label.l}, v * std::polar(1.0, 2.0 * label.l * alpha));
    }
    return out;
}

/// Polarization part of the rotated prism + wave-plate pair.
inline JonesMatrix joint_polarization(double alpha, const ElementParams& params, ElementMode mode) {
    const JonesMatrix hw = hwp_rotated(alpha);
    if (mode == ElementMode::Ideal) {
        return hw;
    }
    const Complex t = params.transmission;
    JonesMatrix m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m.m[i][j] = t * ((i == j ? params.a : Complex(0.0)) + params.b * hw.m[i][j]);
        }
    }
    return m;
}

/// D(alpha) (x) [a I + b P_HW(alpha)]. Ideal mode uses a = 0, b = 1. Exact
/// mode applies the physical operator transmission * (a I + b P_HW), so the
/// output norm may drop below the input norm.
inline PhotonState joint_apply(double alpha, const ElementParams& params, const PhotonState& state,
                               ElementMode mode) {
    const JonesMatrix pol = joint_polarization(alpha, params, mode);
    PhotonState out;
    for (const auto& [label, v] : state.terms()) {
        out.add({label.path, -label.l}, pol.apply(v) * std::polar(1.0, 2.0 * label.l * alpha));
    }
    return out;
}

enum class Port { Plus, Minus };

inline const char* to_string(Port p) { return p == Port::Plus ? "+" : "-"; }

/// Second beam splitter. Port + receives (A + B)/sqrt2, port - receives
/// (A - B)/sqrt2. Arm inputs already carry the first splitter's 1/sqrt2.
inline PhotonState beamsplitter_combine(const PhotonState& arm_a, const PhotonState& arm_b, Port port) {
    const Complex sign = port == Port::Plus ? 1.0 : -1.0;
    PhotonState out;
    for (const auto& [label, v] : arm_a.terms()) {
        out.add({Path::Single, label.l}, v * kInvSqrt2);
    }
    for (const auto& [label, v] : arm_b.terms()) {
        out.add({Path::Single, label.l}, v * (sign * kInvSqrt2));
    }
    return out;
}

/// First beam splitter: the input amplitude divided equally onto paths A, B.
inline std::pair<PhotonState, PhotonState> beamsplitter_split(const PhotonState& input) {
    return {input.scaled(kInvSqrt2).on_path(Path::A), input.scaled(kInvSqrt2).on_path(Path::B)};
}

/// Idealized plane mirror: |l> -> |-l>, R <-> L, global phase pi.
inline PhotonState mirror_apply(const PhotonState& state) {
    PhotonState out;
    for (const auto& [label, v] : state.terms()) {
        PolVector rl = v.in(PolBasis::RL);
        out.add({label.path, -label.l}, PolVector{PolBasis::RL, -rl[1], -rl[0]});
    }
    return out;
}

}  // namespace oamzi
