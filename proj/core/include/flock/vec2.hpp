#pragma once

#include <cmath>

namespace flock {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    Vec2& operator*=(double c) { x *= c; y *= c; return *this; }
    Vec2& operator/=(double c) { x /= c; y /= c; return *this; }

    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator*(double c, Vec2 a) { return a *= c; }
    friend Vec2 operator*(Vec2 a, double c) { return a *= c; }
    friend Vec2 operator/(Vec2 a, double c) { return a /= c; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Unit vector pointing along `angle` (radians).
inline Vec2 unit_vec(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace flock
