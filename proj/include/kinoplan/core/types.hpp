#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <vector>

namespace kinoplan {

using Scalar = double;

// Largest state dimension among the built-in dynamics models. Vectors carry
// their runtime length but are stack-allocated up to this bound.
inline constexpr int kMaxStateDim = 12;

using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxStateDim, 1>;
using State = Vec;
using Control = Vec;

/// Closed interval [lo, hi] for one coordinate.
struct Interval {
    Scalar lo = 0;
    Scalar hi = 0;

    [[nodiscard]] bool contains(Scalar v) const noexcept { return v >= lo && v <= hi; }
    [[nodiscard]] Scalar width() const noexcept { return hi - lo; }
};

/// Axis-aligned box: one interval per dimension.
using Bounds = std::vector<Interval>;

[[nodiscard]] inline bool contains(const Bounds& bounds, const Vec& v) noexcept {
    if (static_cast<int>(bounds.size()) != v.size()) return false;
    for (int i = 0; i < v.size(); ++i) {
        if (!bounds[static_cast<std::size_t>(i)].contains(v[i])) return false;
    }
    return true;
}

[[nodiscard]] inline bool all_finite(const Vec& v) noexcept {
    for (int i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) return false;
    }
    return true;
}

/// Wraps an angle to (-pi, pi].
[[nodiscard]] inline Scalar wrap_angle(Scalar a) noexcept {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    a = std::fmod(a, 2 * pi);
    if (a <= -pi) {
        a += 2 * pi;
    } else if (a > pi) {
        a -= 2 * pi;
    }
    return a;
}

}  // namespace kinoplan
