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
#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "oamzi/common.hpp"

namespace oamzi {

// Polarization bases. Ket order within each basis:
//   XY   : |x>, |y>
//   RL   : |R> = (|x> - i|y>)/sqrt2, |L> = (|x> + i|y>)/sqrt2
//   DIAG : |+45> = (|x> + |y>)/sqrt2, |-45> = (|x> - |y>)/sqrt2
// Spin s = +1 is L and s = -1 is R.
enum class PolBasis { XY, RL, DIAG };

inline const char* to_string(PolBasis b) {
    switch (b) {
        case PolBasis::XY: return "XY";
        case PolBasis::RL: return "RL";
        case PolBasis::DIAG: return "DIAG";
    }
    return "?";
}

/// Two complex amplitudes in a named polarization basis.
class PolVector {
  public:
    constexpr PolVector() = default;
    constexpr PolVector(PolBasis basis, Complex c0, Complex c1) : basis_(basis), c_{c0, c1} {}

    static constexpr PolVector x() { return {PolBasis::XY, 1.0, 0.0}; }
    static constexpr PolVector y() { return {PolBasis::XY, 0.0, 1.0}; }
    static constexpr PolVector right() { return {PolBasis::RL, 1.0, 0.0}; }
    static constexpr PolVector left() { return {PolBasis::RL, 0.0, 1.0}; }
    static constexpr PolVector plus45() { return {PolBasis::DIAG, 1.0, 0.0}; }
    static constexpr PolVector minus45() { return {PolBasis::DIAG, 0.0, 1.0}; }

    /// Circular-basis state c_R|R> + c_L|L>.
    static constexpr PolVector circular(Complex c_r, Complex c_l) { return {PolBasis::RL, c_r, c_l}; }

    constexpr PolBasis basis() const { return basis_; }
    constexpr Complex operator[](std::size_t k) const { return c_[k]; }

    double norm_sq() const { return std::norm(c_[0]) + std::norm(c_[1]); }
    double norm() const { return std::sqrt(norm_sq()); }
    bool finite() const { return is_finite(c_[0]) && is_finite(c_[1]); }

    PolVector in(PolBasis target) const;

    PolVector operator*(Complex s) const { return {basis_, c_[0] * s, c_[1] * s}; }
    PolVector operator+(const PolVector& o) const {
        PolVector v = o.in(basis_);
        return {basis_, c_[0] + v.c_[0], c_[1] + v.c_[1]};
    }
    PolVector operator-(const PolVector& o) const { return *this + o * Complex(-1.0); }

  private:
    PolBasis basis_ = PolBasis::XY;
    std::array<Complex, 2> c_{};
};

namespace detail {

inline std::array<Complex, 2> to_xy(const PolVector& v) {
    const Complex i(0.0, 1.0);
    switch (v.basis()) {
        case PolBasis::XY:
            return {v[0], v[1]};
        case PolBasis::RL:
            return {(v[0] + v[1]) * kInvSqrt2, (-i * v[0] + i * v[1]) * kInvSqrt2};
        case PolBasis::DIAG:
            return {(v[0] + v[1]) * kInvSqrt2, (v[0] - v[1]) * kInvSqrt2};
    }
    std::abort();
}

inline std::array<Complex, 2> from_xy(std::array<Complex, 2> xy, PolBasis target) {
    const Complex i(0.0, 1.0);
    auto [cx, cy] = xy;
    switch (target) {
        case PolBasis::XY:
            return {cx, cy};
        case PolBasis::RL:
            return {(cx + i * cy) * kInvSqrt2, (cx - i * cy) * kInvSqrt2};
        case PolBasis::DIAG:
            return {(cx + cy) * kInvSqrt2, (cx - cy) * kInvSqrt2};
    }
    std::abort();
}

}  // namespace detail

inline PolVector PolVector::in(PolBasis target) const {
    if (target == basis_) {
        return *this;
    }
    auto c = detail::from_xy(detail::to_xy(*this), target);
    return {target, c[0], c[1]};
}

inline PolVector convert_basis(const PolVector& v, PolBasis target) { return v.in(target); }

/// <u|v>, conjugate-linear in u.
inline Complex inner_product(const PolVector& u, const PolVector& v) {
    PolVector w = v.in(u.basis());
    return std::conj(u[0]) * w[0] + std::conj(u[1]) * w[1];
}

enum class Path { A, B, Single };

inline const char* to_string(Path p) {
    switch (p) {
        case Path::A: return "A";
        case Path::B: return "B";
        case Path::Single: return "single";
    }
    return "?";
}

/// Practical cap on the OAM index carried by a state.
inline constexpr int kMaxOam = 64;

struct ModeLabel {
    Path path = Path::Single;
    int l = 0;

    auto operator<=>(const ModeLabel&) const = default;
};

/// Sparse superposition over (path, l) labels, each carrying a polarization
/// vector. Distinct labels are orthogonal.
class PhotonState {
  public:
    using Terms = std::map<ModeLabel, PolVector>;

    PhotonState() = default;
    PhotonState(std::initializer_list<std::pair<const ModeLabel, PolVector>> terms) {
        for (const auto& [label, v] : terms) {
            add(label, v);
        }
    }

    /// |l> (x) (c1|R> + c2|L>) on a single path.
    static PhotonState oam_input(int l, Complex c1, Complex c2, Path path = Path::Single) {
        PhotonState s;
        s.add({path, l}, PolVector::circular(c1, c2));
        return s;
    }

    /// Adds v to the amplitude stored under label.
    void add(const ModeLabel& label, const PolVector& v) {
        if (std::abs(label.l) > kMaxOam) {
            throw ValidationError("OAM index |l| exceeds " + std::to_string(kMaxOam));
        }
        auto [it, inserted] = terms_.try_emplace(label, v);
        if (!inserted) {
            it->second = it->second + v;
        }
    }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Amplitude under label, or the zero vector when absent.
    PolVector at(const ModeLabel& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? PolVector{} : it->second;
    }

    PhotonState scaled(Complex s) const {
        PhotonState out;
        for (const auto& [label, v] : terms_) {
            out.terms_.emplace(label, v * s);
        }
        return out;
    }

    /// Same amplitudes relabelled onto a single path.
    PhotonState on_path(Path path) const {
        PhotonState out;
        for (const auto& [label, v] : terms_) {
            out.add({path, label.l}, v);
        }
        return out;
    }

    bool finite() const {
        for (const auto& [label, v] : terms_) {
            if (!v.finite()) {
                return false;
            }
        }
        return true;
    }

  private:
    Terms terms_;
};

inline double total_norm(const PhotonState& state) {
    double sum = 0.0;
    for (const auto& [label, v] : state.terms()) {
        sum += v.norm_sq();
    }
    return std::sqrt(sum);
}

}  // namespace oamzi
