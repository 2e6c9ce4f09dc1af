// Planar geometry primitives shared by the whole library: points are
// Eigen::Vector2d, everything else is a free function on them.
#ifndef ALPHAPERIM_GEOMETRY_HPP
#define ALPHAPERIM_GEOMETRY_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alphaperim {

using Vec2 = Eigen::Vector2d;

/// Tolerance for geometric equality in length units. Chained trigonometric
/// round-off stays several orders of magnitude below this.
inline constexpr double kGeomEps = 1e-9;

inline bool is_finite(const Vec2& p) {
  return std::isfinite(p.x()) && std::isfinite(p.y());
}

/// Counter-clockwise perpendicular.
inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }

inline double cross2(const Vec2& u, const Vec2& v) {
  return u.x() * v.y() - u.y() * v.x();
}

struct Segment {
  Vec2 a;
  Vec2 b;
};

/// The two centers of the radius-alpha circles through a chord. When the
/// chord is a diameter (length 2*alpha within kGeomEps) both centers collapse
/// to the midpoint and `degenerate` is set.
struct DiskCenterPair {
  Vec2 plus;   // center on the left of a -> b
  Vec2 minus;  // mirror image across the line (a b)
  bool degenerate = false;
};

/// Centers of the two radius-`alpha` circles passing through `a` and `b`.
/// Requires 0 < |a-b| <= 2*alpha (+ tolerance); throws std::invalid_argument
/// otherwise.
inline DiskCenterPair disk_centers(const Vec2& a, const Vec2& b, double alpha) {
  if (!is_finite(a) || !is_finite(b) || !std::isfinite(alpha)) {
    throw std::invalid_argument("disk_centers: non-finite input");
  }
  if (alpha <= 0.0) {
    throw std::invalid_argument("disk_centers: alpha must be positive");
  }
  const Vec2 d = b - a;
  const double len = d.norm();
  if (len == 0.0) {
    throw std::invalid_argument("disk_centers: endpoints coincide");
  }
  if (len > 2.0 * alpha + kGeomEps) {
    throw std::invalid_argument("disk_centers: chord longer than 2*alpha");
  }
  const Vec2 mid = 0.5 * (a + b);
  if (len >= 2.0 * alpha - kGeomEps) {
    return DiskCenterPair{mid, mid, true};
  }
  const double half = 0.5 * len;
  const double height = std::sqrt(std::max(0.0, alpha * alpha - half * half));
  const Vec2 n = perp(d / len);
  return DiskCenterPair{mid + height * n, mid - height * n, false};
}

/// Acute angle in [0, pi/2] between the undirected lines spanned by u and v.
inline double angle_between_lines(const Vec2& u, const Vec2& v) {
  if (!is_finite(u) || !is_finite(v)) {
    throw std::invalid_argument("angle_between_lines: non-finite direction");
  }
  if (u.squaredNorm() == 0.0 || v.squaredNorm() == 0.0) {
    throw std::invalid_argument("angle_between_lines: zero direction");
  }
  return std::atan2(std::abs(cross2(u, v)), std::abs(u.dot(v)));
}

/// Area of a circular cap of radius `alpha` and height h in [0, 2*alpha],
/// in closed form.
inline double cap_area(double alpha, double h) {
  if (!(alpha > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("cap_area: invalid radius or height");
  }
  if (h < -kGeomEps || h > 2.0 * alpha + kGeomEps) {
    throw std::invalid_argument("cap_area: height outside [0, 2*alpha]");
  }
  const double hc = std::clamp(h, 0.0, 2.0 * alpha);
  const double c = std::clamp(1.0 - hc / alpha, -1.0, 1.0);
  return alpha * alpha * std::acos(c) -
         (alpha - hc) * std::sqrt(std::max(0.0, 2.0 * alpha * hc - hc * hc));
}

/// Length of the minor arc of a radius-`alpha` circle over a chord of length
/// `ell` in [0, 2*alpha]. Always >= ell.
inline double arc_length_for_chord(double alpha, double ell) {
  if (!(alpha > 0.0) || !std::isfinite(ell)) {
    throw std::invalid_argument("arc_length_for_chord: invalid input");
  }
  if (ell < -kGeomEps || ell > 2.0 * alpha + kGeomEps) {
    throw std::invalid_argument("arc_length_for_chord: chord outside [0, 2*alpha]");
  }
  const double x = std::clamp(ell / (2.0 * alpha), 0.0, 1.0);
  return 2.0 * alpha * std::asin(x);
}

/// Distance from p to the segment [a, b].
inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
  return (p - (a + t * d)).norm();
}

inline double point_segment_distance(const Vec2& p, const Segment& s) {
  return point_segment_distance(p, s.a, s.b);
}

}  // namespace alphaperim

#endif  // ALPHAPERIM_GEOMETRY_HPP
