#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>

#include "flock/vec2.hpp"

namespace flock {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Normalizes an angle into [0, 2*pi).
inline double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod rounding can land exactly on 2*pi
    return r;
}

/// Signed difference a - b wrapped into (-pi, pi]. The boundary maps to +pi.
inline double angle_diff(double a, double b) {
    double d = std::fmod(a - b, kTwoPi);
    if (d <= -std::numbers::pi) d += kTwoPi;
    else if (d > std::numbers::pi) d -= kTwoPi;
    return d;
}

/// Direction of the sum of unit vectors, normalized to [0, 2*pi).
/// Returns nullopt when the resultant vector is (numerically) zero, e.g. {0, pi}.
inline std::optional<double> circular_mean(std::span<const double> headings) {
    if (headings.empty()) return std::nullopt;
    Vec2 sum{0.0, 0.0};
    for (double h : headings) sum += unit_vec(h);
    if (sum.norm() < 1e-9) return std::nullopt;
    return wrap_angle(std::atan2(sum.y, sum.x));
}

}  // namespace flock
