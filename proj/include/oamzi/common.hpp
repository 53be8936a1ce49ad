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

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oamzi {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Tolerance for exact-algebra checks on short operator chains.
inline constexpr double kExactTol = 1e-12;

/// Raised when an input violates a documented invariant (bad flags,
/// unnormalized amplitudes, nonpositive sizes).
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when the physics is well posed but degenerate at the requested
/// point: zero fringe slope, no total internal reflection, vanishing element.
class DegenerateError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A real value that may be flagged as unbounded. Reports carry this instead
/// of a raw floating-point infinity.
struct ExtendedReal {
    double value = 0.0;
    bool infinite = false;

    static constexpr ExtendedReal finite(double v) { return {v, false}; }
    static constexpr ExtendedReal unbounded() { return {0.0, true}; }

    bool operator==(const ExtendedReal&) const = default;
};

inline std::string to_string(const ExtendedReal& x) {
    if (x.infinite) {
        return "inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x.value);
    return buf;
}

inline bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace oamzi
