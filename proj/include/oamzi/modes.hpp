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
#include <cstdint>
#include <string>
#include <vector>

#include "oamzi/common.hpp"

namespace oamzi {

enum class BeamFamily { LG, BG };

inline const char* to_string(BeamFamily f) { return f == BeamFamily::LG ? "lg" : "bg"; }

/// Transverse mode at a fixed plane. Lengths are in the same unit as waist.
struct BeamMode {
    BeamFamily family = BeamFamily::LG;
    int l = 0;
    int p = 0;          // radial index, LG only
    double waist = 1.0;
    double k_r = 1.0;   // radial wavenumber, BG only

    void validate() const {
        if (!(waist > 0.0) || !std::isfinite(waist)) {
            throw ValidationError("beam waist must be positive");
        }
        if (p < 0) {
            throw ValidationError("radial index p must be non-negative");
        }
        if (family == BeamFamily::BG && !(k_r > 0.0 && std::isfinite(k_r))) {
            throw ValidationError("Bessel-Gauss modes need k_r > 0");
        }
    }
};

namespace detail {

inline double lg_normalization(const BeamMode& m) {
    const int al = std::abs(m.l);
    // sqrt(2 p! / (pi (p + |l|)!)) / w
    const double log_ratio = std::lgamma(m.p + 1.0) - std::lgamma(m.p + al + 1.0);
    return std::sqrt(2.0 / kPi * std::exp(log_ratio)) / m.waist;
}

inline double bg_normalization(const BeamMode& m) {
    // int_0^inf J_l(k r)^2 exp(-2 r^2 / w^2) r dr = (w^2 / 4) exp(-x) I_l(x), x = k^2 w^2 / 4
    const double x = m.k_r * m.k_r * m.waist * m.waist / 4.0;
    const double radial = m.waist * m.waist / 4.0 * std::exp(-x) * std::cyl_bessel_i(double(std::abs(m.l)), x);
    return 1.0 / std::sqrt(2.0 * kPi * radial);
}

inline double bessel_j_signed(int l, double z) {
    const double j = std::cyl_bessel_j(double(std::abs(l)), z);
    return (l < 0 && (std::abs(l) % 2 == 1)) ? -j : j;
}

}  // namespace detail

/// Complex scalar amplitude at polar coordinates (r, phi), normalized to unit
/// power over the plane.
///   LG: C (sqrt2 r/w)^|l| L_p^|l|(2 r^2/w^2) exp(-r^2/w^2) exp(i l phi)
///   BG: C J_l(k_r r) exp(-r^2/w^2) exp(i l phi)
inline Complex scalar_amplitude(const BeamMode& mode, double r, double phi) {
    const double w = mode.waist;
    const double gauss = std::exp(-r * r / (w * w));
    double radial = 0.0;
    if (mode.family == BeamFamily::LG) {
        const unsigned al = static_cast<unsigned>(std::abs(mode.l));
        const double rho = std::sqrt(2.0) * r / w;
        radial = detail::lg_normalization(mode) * std::pow(rho, double(al)) *
                 std::assoc_laguerre(static_cast<unsigned>(mode.p), al, rho * rho) * gauss;
    } else {
        radial = detail::bg_normalization(mode) * detail::bessel_j_signed(mode.l, mode.k_r * r) * gauss;
    }
    return std::polar(1.0, mode.l * phi) * radial;
}

/// Complex field envelope (E_x, E_y) of the mode carrying spin s at Cartesian
/// point (x, y): u(x, y) (x^ + i s y^)/sqrt2, so s = +1 is |L>.
inline std::array<Complex, 2> complex_field(const BeamMode& mode, int spin, double x, double y) {
    const Complex u = scalar_amplitude(mode, std::hypot(x, y), std::atan2(y, x));
    return {u * kInvSqrt2, u * Complex(0.0, spin * kInvSqrt2)};
}

/// Real field vector at time t for the exp(-i w t) convention, omega t = phase.
inline std::array<double, 2> real_field(const BeamMode& mode, int spin, double x, double y, double phase = 0.0) {
    const auto e = complex_field(mode, spin, x, y);
    const Complex rot = std::polar(1.0, -phase);
    return {(e[0] * rot).real(), (e[1] * rot).real()};
}

/// |E_x|^2 + |E_y|^2 of the complex envelope, i.e. twice the cycle average of
/// the squared real field.
inline double intensity(const BeamMode& mode, double x, double y) {
    const auto e = complex_field(mode, 1, x, y);
    return std::norm(e[0]) + std::norm(e[1]);
}

struct GridSpec {
    double extent = 3.0;  // half-width in waist units
    int resolution = 41;

    void validate() const {
        if (resolution < 1) {
            throw ValidationError("grid resolution must be positive");
        }
        if (!(extent > 0.0) || !std::isfinite(extent)) {
            throw ValidationError("grid extent must be positive");
        }
    }

    /// Node coordinate k in waist units; nodes span [-extent, extent].
    double coordinate(int k) const {
        if (resolution == 1) {
            return 0.0;
        }
        return -extent + 2.0 * extent * k / (resolution - 1);
    }

    double spacing() const { return resolution == 1 ? 2.0 * extent : 2.0 * extent / (resolution - 1); }
};

struct FieldSample {
    double x;
    double y;
    double ex;
    double ey;
};

/// Square centered grid of t = 0 field vectors, row-major with y outer.
struct FieldGrid {
    double extent = 0.0;
    int resolution = 0;
    std::vector<FieldSample> samples;
};

inline FieldGrid transverse_field(const BeamMode& mode, int spin, const GridSpec& grid) {
    mode.validate();
    grid.validate();
    if (spin != 1 && spin != -1) {
        throw ValidationError("spin must be +1 or -1");
    }
    FieldGrid out{grid.extent, grid.resolution, {}};
    out.samples.reserve(std::size_t(grid.resolution) * std::size_t(grid.resolution));
    for (int j = 0; j < grid.resolution; ++j) {
        const double y = grid.coordinate(j);
        for (int i = 0; i < grid.resolution; ++i) {
            const double x = grid.coordinate(i);
            const auto e = real_field(mode, spin, x * mode.waist, y * mode.waist);
            out.samples.push_back({x, y, e[0], e[1]});
        }
    }
    return out;
}

/// Plane integral of the envelope intensity by the grid's Riemann sum.
inline double grid_power(const BeamMode& mode, const GridSpec& grid) {
    grid.validate();
    const double h = grid.spacing() * mode.waist;
    double sum = 0.0;
    for (int j = 0; j < grid.resolution; ++j) {
        for (int i = 0; i < grid.resolution; ++i) {
            sum += intensity(mode, grid.coordinate(i) * mode.waist, grid.coordinate(j) * mode.waist);
        }
    }
    return sum * h * h;
}

struct SymmetryOrder {
    int folds = 1;
    bool continuous = false;  // l + s = 0

    bool operator==(const SymmetryOrder&) const = default;
};

/// Rotational symmetry of the instantaneous field pattern: |l + s|-fold.
inline SymmetryOrder symmetry_order(int l, int spin) {
    const int order = std::abs(l + spin);
    if (order == 0) {
        return {0, true};
    }
    return {order, false};
}

/// Largest |E(R p) - R E(p)| over the grid nodes for a rotation by angle,
/// with both sides evaluated analytically at t = 0.
inline double rotation_deviation(const BeamMode& mode, int spin, double angle, const GridSpec& grid) {
    mode.validate();
    grid.validate();
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    double worst = 0.0;
    for (int j = 0; j < grid.resolution; ++j) {
        for (int i = 0; i < grid.resolution; ++i) {
            const double x = grid.coordinate(i) * mode.waist;
            const double y = grid.coordinate(j) * mode.waist;
            const auto e = real_field(mode, spin, x, y);
            const auto er = real_field(mode, spin, c * x - s * y, s * x + c * y);
            const double rx = c * e[0] - s * e[1];
            const double ry = s * e[0] + c * e[1];
            worst = std::max(worst, std::hypot(er[0] - rx, er[1] - ry));
        }
    }
    return worst;
}

}  // namespace oamzi
