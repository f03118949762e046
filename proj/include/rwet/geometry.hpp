#pragma once

#include <cmath>

namespace rwet {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  // z-component of the 3D cross product
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
};

// Locations are plain 2D vectors in meters.
using Position2D = Vec2;

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// Normalize an angle in degrees to [0, 360).
inline double normalize_deg(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a < 0.0) a += 360.0;
  if (a >= 360.0) a = 0.0;  // fmod can round back up to 360
  return a;
}

// Direction of v in degrees, in [0, 360). Zero vector maps to 0.
inline double angle_of_deg(const Vec2& v) {
  if (v.x == 0.0 && v.y == 0.0) return 0.0;
  return normalize_deg(rad_to_deg(std::atan2(v.y, v.x)));
}

// Signed smallest rotation from angle `from` to angle `to`, in (-180, 180].
inline double angle_diff_deg(double to, double from) {
  double d = std::fmod(to - from, 360.0);
  if (d > 180.0) d -= 360.0;
  if (d <= -180.0) d += 360.0;
  return d;
}

inline Vec2 unit_from_deg(double deg) {
  double r = deg_to_rad(deg);
  return {std::cos(r), std::sin(r)};
}

}  // namespace rwet
