#pragma once

#include <cmath>

namespace uavplan {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Planar vector (velocity or displacement), SI units.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Planar position in meters (x east, y north).
struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2D operator+(Point2D p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }
  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline double distance(Point2D a, Point2D b) { return (b - a).norm(); }

/// Wraps any finite angle into [0, 2pi).
inline double normalize_angle(double rad) {
  double r = std::fmod(rad, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace uavplan
