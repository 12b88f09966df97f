#pragma once

#include <cmath>

namespace fourwis {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

/// Rotate a vector by angle (radians, CCW).
inline Vec2 rotate(const Vec2& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Normalize an angle into [0, 2*pi).
inline double wrap_to_2pi(double a) {
    const double two_pi = 2.0 * M_PI;
    a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;  // fmod rounding at the seam
    return a;
}

/// Normalize an angle into (-pi, pi].
inline double wrap_to_pi(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a <= -M_PI) a += 2.0 * M_PI;
    if (a > M_PI) a -= 2.0 * M_PI;
    return a;
}

/// Smallest signed difference a - b, in (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_to_pi(a - b); }

struct Pose {
    double x = 0.0;      // m
    double y = 0.0;      // m
    double theta = 0.0;  // rad, callers keep it in [0, 2*pi)

    Vec2 position() const { return {x, y}; }
    Vec2 heading_dir() const { return {std::cos(theta), std::sin(theta)}; }
};

/// Express `target` in the frame of `base` (relative pose).
inline Pose relative_pose(const Pose& base, const Pose& target) {
    const Vec2 d = rotate({target.x - base.x, target.y - base.y}, -base.theta);
    return {d.x, d.y, wrap_to_2pi(target.theta - base.theta)};
}

inline double euclidean(const Pose& a, const Pose& b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

}  // namespace fourwis
