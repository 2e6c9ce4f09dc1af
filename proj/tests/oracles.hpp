// Independent test-side oracles. Everything here is written against the same
// contracts as the library but through different routes (bisection, direct
// quadrature, complex-number rotation, exhaustive enumeration) so the two
// sides can check each other.
#ifndef ALPHAPERIM_TESTS_ORACLES_HPP
#define ALPHAPERIM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "alphaperim/geometry.hpp"

namespace oracle {

// Root of |(half, y)| = alpha in y >= 0 by bisection: the height of the disk
// center above the chord midpoint.
inline double disk_center_height_bisection(double half_chord, double alpha) {
  double lo = 0.0, hi = alpha;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (std::hypot(half_chord, mid) < alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Composite Simpson quadrature of 2 a^2 * integral_0^acos(1 - h/a) sin^2(t) dt.
inline double cap_area_quadrature(double alpha, double h, int panels = 20000) {
  const double upper = std::acos(std::clamp(1.0 - h / alpha, -1.0, 1.0));
  const auto f = [](double t) { return std::sin(t) * std::sin(t); };
  const double step = upper / (2 * panels);
  double sum = f(0.0) + f(upper);
  for (int k = 1; k < 2 * panels; ++k) sum += f(k * step) * (k % 2 == 1 ? 4.0 : 2.0);
  return 2.0 * alpha * alpha * sum * step / 3.0;
}

// Second, independent alpha-edge enumerator. Centers come from the rotation
// construction (angle acos(d / 2 alpha) applied to the chord direction as a
// complex number); emptiness is the shared contract: a point blocks iff it is
// strictly closer than alpha - 1e-9 to the center.
struct EdgePair {
  int i, j;
};

inline std::vector<EdgePair> alpha_edges(const std::vector<alphaperim::Vec2>& pts, double alpha) {
  using C = std::complex<double>;
  const double eps = 1e-9;
  const int n = static_cast<int>(pts.size());
  std::vector<EdgePair> out;
  const auto blocked = [&](const C& center) {
    for (const auto& p : pts) {
      if (std::abs(C(p.x(), p.y()) - center) < alpha - eps) return true;
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const C a(pts[i].x(), pts[i].y());
      const C b(pts[j].x(), pts[j].y());
      const double d = std::abs(b - a);
      if (d == 0.0 || d > 2.0 * alpha + eps) continue;
      bool empty = false;
      if (d >= 2.0 * alpha - eps) {
        empty = !blocked(0.5 * (a + b));
      } else {
        const double theta = std::acos(std::clamp(d / (2.0 * alpha), -1.0, 1.0));
        const C dir = (b - a) / d;
        empty = !blocked(a + alpha * dir * std::polar(1.0, theta)) ||
                !blocked(a + alpha * dir * std::polar(1.0, -theta));
      }
      if (empty) out.push_back({i, j});
    }
  }
  return out;
}

inline std::vector<std::pair<int, int>> to_pairs(const std::vector<EdgePair>& edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.i, e.j);
  std::sort(out.begin(), out.end());
  return out;
}

// Exhaustive Delaunay edges of a point set in general position: the edges of
// every triangle with an empty circumcircle of radius at most `max_radius`.
// Pass infinity for the unrestricted Delaunay edge set.
inline std::vector<std::pair<int, int>> delaunay_edges(const std::vector<alphaperim::Vec2>& pts,
                                                       double max_radius) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const alphaperim::Vec2 d1 = pts[j] - pts[i];
        const alphaperim::Vec2 d2 = pts[k] - pts[i];
        const double det = 2.0 * (d1.x() * d2.y() - d1.y() * d2.x());
        if (std::abs(det) < 1e-14) continue;  // nearly collinear triple
        const double s1 = d1.squaredNorm();
        const double s2 = d2.squaredNorm();
        const alphaperim::Vec2 center =
            pts[i] + alphaperim::Vec2(d2.y() * s1 - d1.y() * s2, d1.x() * s2 - d2.x() * s1) / det;
        const double r2 = (pts[i] - center).squaredNorm();
        if (r2 > max_radius * max_radius) continue;
        bool empty = true;
        for (int m = 0; m < n && empty; ++m) {
          if (m == i || m == j || m == k) continue;
          empty = (pts[m] - center).squaredNorm() >= r2 * (1.0 - 1e-12);
        }
        if (empty) {
          out.emplace_back(i, j);
          out.emplace_back(i, k);
          out.emplace_back(j, k);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Polyline arc length of a closed curve gamma(t), t in [0, 1), with Richardson
// extrapolation; accurate to ~1e-12 relative for smooth boundaries.
template <class Curve>
double closed_curve_length(const Curve& gamma, int segments = 1 << 16) {
  const auto polyline = [&](int m) {
    double len = 0.0;
    alphaperim::Vec2 prev = gamma(0.0);
    for (int k = 1; k <= m; ++k) {
      const alphaperim::Vec2 cur = gamma(static_cast<double>(k % m) / m);
      len += (cur - prev).norm();
      prev = cur;
    }
    return len;
  };
  const double coarse = polyline(segments / 2);
  const double fine = polyline(segments);
  return fine + (fine - coarse) / 3.0;
}

}  // namespace oracle

#endif  // ALPHAPERIM_TESTS_ORACLES_HPP
