#include "alphaperim/alpha_shape.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "alphaperim/delaunay.hpp"
#include "alphaperim/spatial_grid.hpp"

namespace alphaperim {
namespace {

void validate_input(std::span<const Vec2> points, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be positive and finite");
  }
  for (const Vec2& p : points) {
    if (!is_finite(p)) throw std::invalid_argument("non-finite sample point");
  }
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (points[a].x() != points[b].x()) return points[a].x() < points[b].x();
    return points[a].y() < points[b].y();
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      throw std::invalid_argument("duplicate sample points");
    }
  }
}

// A point blocks a disk iff it lies strictly inside it, with the tolerance
// pushed inward so the defining endpoints (at distance exactly alpha) never
// block and both construction paths agree deterministically.
double blocking_radius(double alpha) { return alpha - kGeomEps; }

bool disk_empty_bruteforce(std::span<const Vec2> points, const Vec2& center,
                           double alpha) {
  const double r = blocking_radius(alpha);
  const double r2 = r * r;
  for (const Vec2& p : points) {
    if ((p - center).squaredNorm() < r2) return false;
  }
  return true;
}

// Builds the AlphaEdge for pair (i, j) if at least one circumscribing disk is
// empty according to `empty`.
template <class EmptyFn>
bool try_make_edge(std::span<const Vec2> points, int i, int j, double alpha,
                   const EmptyFn& empty, AlphaEdge& out) {
  const DiskCenterPair centers = disk_centers(points[i], points[j], alpha);
  const bool empty_plus = empty(centers.plus);
  const bool empty_minus = centers.degenerate ? false : empty(centers.minus);
  if (!empty_plus && !empty_minus) return false;
  out = AlphaEdge{i, j, centers, empty_plus, empty_minus};
  return true;
}

}  // namespace

std::vector<AlphaEdge> alpha_edges_bruteforce(std::span<const Vec2> points, double alpha) {
  validate_input(points, alpha);
  const int n = static_cast<int>(points.size());
  const double max_chord = 2.0 * alpha + kGeomEps;
  const double max_chord2 = max_chord * max_chord;
  std::vector<AlphaEdge> edges;
  auto empty = [&](const Vec2& c) { return disk_empty_bruteforce(points, c, alpha); };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((points[j] - points[i]).squaredNorm() > max_chord2) continue;
      AlphaEdge e;
      if (try_make_edge(points, i, j, alpha, empty, e)) edges.push_back(e);
    }
  }
  return edges;
}

std::vector<AlphaEdge> alpha_edges_fast(std::span<const Vec2> points, double alpha) {
  validate_input(points, alpha);
  const int n = static_cast<int>(points.size());
  if (n < 2) return {};

  Vec2 lo = points[0], hi = points[0];
  for (const Vec2& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double span = (hi - lo).norm();

  Delaunay dt;
  try {
    dt = delaunay_triangulation(points, 8.0 * span + 4.0 * alpha + 8.0);
  } catch (const TriangulationError&) {
    // Inputs degenerate beyond the triangulation's tolerance; the contract
    // still holds through the reference path.
    return alpha_edges_bruteforce(points, alpha);
  }

  const double max_chord = 2.0 * alpha + kGeomEps;
  const double max_chord2 = max_chord * max_chord;
  std::vector<std::int64_t> keys;
  keys.reserve(dt.edges.size());
  auto add_candidate = [&](int i, int j) {
    if ((points[j] - points[i]).squaredNorm() > max_chord2) return;
    keys.push_back((static_cast<std::int64_t>(i) << 32) | static_cast<std::uint32_t>(j));
  };
  for (auto [i, j] : dt.edges) add_candidate(i, j);
  for (const auto& cluster : dt.cocircular_clusters) {
    for (std::size_t a = 0; a < cluster.size(); ++a) {
      for (std::size_t b = a + 1; b < cluster.size(); ++b) {
        add_candidate(cluster[a], cluster[b]);
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  const PointGrid grid(points, alpha);
  auto empty = [&](const Vec2& c) { return !grid.any_within(c, blocking_radius(alpha)); };
  std::vector<AlphaEdge> edges;
  for (std::int64_t key : keys) {
    const int i = static_cast<int>(key >> 32);
    const int j = static_cast<int>(key & 0xffffffff);
    AlphaEdge e;
    if (try_make_edge(points, i, j, alpha, empty, e)) edges.push_back(e);
  }
  return edges;
}

AlphaShape make_alpha_shape(std::vector<Vec2> points, double alpha, EdgeAlgorithm algorithm) {
  AlphaShape shape;
  shape.alpha = alpha;
  shape.edges = algorithm == EdgeAlgorithm::fast ? alpha_edges_fast(points, alpha)
                                                 : alpha_edges_bruteforce(points, alpha);
  shape.points = std::move(points);
  return shape;
}

double shape_perimeter(const AlphaShape& shape) {
  double total = 0.0;
  for (const AlphaEdge& e : shape.edges) {
    total += (shape.points[e.j] - shape.points[e.i]).norm();
  }
  return total;
}

double hull_perimeter(const AlphaShape& shape) {
  double total = 0.0;
  for (const AlphaEdge& e : shape.edges) {
    total += arc_length_for_chord(shape.alpha, (shape.points[e.j] - shape.points[e.i]).norm());
  }
  return total;
}

std::vector<int> isolated_points(std::span<const Vec2> points, double alpha) {
  validate_input(points, alpha);
  const int n = static_cast<int>(points.size());
  std::vector<int> isolated;
  if (n == 0) return isolated;
  const PointGrid grid(points, 2.0 * alpha);
  for (int i = 0; i < n; ++i) {
    int within = 0;
    grid.for_each_within(points[i], 2.0 * alpha, [&](int) { ++within; });
    if (within <= 1) isolated.push_back(i);  // only the point itself
  }
  return isolated;
}

EdgeSidedness classify_sidedness(const AlphaEdge& edge) {
  if (!edge.empty_plus && !edge.empty_minus) {
    throw std::invalid_argument("edge has no empty circumscribing disk");
  }
  EdgeSidedness s;
  s.two_sided = edge.empty_plus && edge.empty_minus;
  s.one_sided = !s.two_sided;
  return s;
}

}  // namespace alphaperim
