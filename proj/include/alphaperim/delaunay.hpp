// Incremental Delaunay triangulation of a planar point set, exposing the edge
// set plus the near-cocircular vertex clusters a caller must re-verify by
// brute force when it relies on general position.
#ifndef ALPHAPERIM_DELAUNAY_HPP
#define ALPHAPERIM_DELAUNAY_HPP

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alphaperim/geometry.hpp"

namespace alphaperim {

struct Delaunay {
  /// Unique undirected edges (i < j), sorted ascending.
  std::vector<std::pair<int, int>> edges;
  /// Groups of input vertices that are cocircular within tolerance. Any edge
  /// between members of one group may be a valid Delaunay edge even if absent
  /// from `edges`.
  std::vector<std::vector<int>> cocircular_clusters;
};

class TriangulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Triangulates `points` (pairwise distinct, finite). `far_radius` is the
/// distance at which the three helper vertices are placed; it must exceed the
/// radius of any empty disk the caller intends to certify through this
/// triangulation (plus the data diameter).
Delaunay delaunay_triangulation(std::span<const Vec2> points, double far_radius);

}  // namespace alphaperim

#endif  // ALPHAPERIM_DELAUNAY_HPP
