#pragma once

#include <cmath>
#include <numbers>

#include "fidland/types.hpp"

namespace fidland {

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Normalize an angle to the half-open interval [-180, 180). +180 maps to -180.
inline double wrap_deg(double a) {
    double w = a - 360.0 * std::floor((a + 180.0) / 360.0);
    // floor rounding can land exactly on +180 for inputs like -180-1e-13
    if (w >= 180.0) w -= 360.0;
    return w;
}

// Compass-style bearing of a world-frame displacement, degrees in [-180, 180).
// 0 = +y, 90 = +x, clockwise positive when viewed from above.
inline double bearing_deg(const Vec3& d) {
    return rad2deg(std::atan2(d.x, d.y));
}

// Elevation of a displacement: 0 = horizontal, -90 = straight down.
inline double elevation_deg(const Vec3& d) {
    return rad2deg(std::atan2(d.z, std::hypot(d.x, d.y)));
}

// Unit heading vector for a compass yaw angle.
inline Vec3 heading_vec(double yaw_deg) {
    return {std::sin(deg2rad(yaw_deg)), std::cos(deg2rad(yaw_deg)), 0.0};
}

// Unit right-hand vector for a compass yaw angle (heading rotated 90 deg cw).
inline Vec3 right_vec(double yaw_deg) {
    return {std::cos(deg2rad(yaw_deg)), -std::sin(deg2rad(yaw_deg)), 0.0};
}

inline double clamp(double v, double lo, double hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

} // namespace fidland
