// Alpha-edges of a planar sample and the two perimeter estimators built on
// them. An alpha-edge is a pair of sample points lying on the boundary of an
// open radius-alpha disk containing no sample point.
#ifndef ALPHAPERIM_ALPHA_SHAPE_HPP
#define ALPHAPERIM_ALPHA_SHAPE_HPP

#include <span>
#include <vector>

#include "alphaperim/geometry.hpp"

namespace alphaperim {

struct AlphaEdge {
  int i = 0;  // i < j
  int j = 0;
  DiskCenterPair centers;
  bool empty_plus = false;
  bool empty_minus = false;  // always false for a degenerate (diameter) chord
};

struct EdgeSidedness {
  bool one_sided = false;  // exactly one circumscribing disk is empty
  bool two_sided = false;  // both are
};

struct AlphaShape {
  double alpha = 0.0;
  std::vector<Vec2> points;
  std::vector<AlphaEdge> edges;  // unique unordered pairs, sorted by (i, j)
};

/// Reference construction: every pair within 2*alpha is tested against every
/// other point. O(n^3)-ish; the ground truth the fast path must match.
std::vector<AlphaEdge> alpha_edges_bruteforce(std::span<const Vec2> points, double alpha);

/// Same edge set, computed by restricting candidates to Delaunay edges (plus
/// brute-force re-verification of near-cocircular clusters) and testing disk
/// emptiness through a bucket grid.
std::vector<AlphaEdge> alpha_edges_fast(std::span<const Vec2> points, double alpha);

enum class EdgeAlgorithm { brute_force, fast };

AlphaShape make_alpha_shape(std::vector<Vec2> points, double alpha,
                            EdgeAlgorithm algorithm = EdgeAlgorithm::fast);

inline Segment edge_segment(const AlphaShape& shape, const AlphaEdge& edge) {
  return Segment{shape.points[edge.i], shape.points[edge.j]};
}

/// Sum of edge lengths, each unordered pair counted once.
double shape_perimeter(const AlphaShape& shape);

/// Perimeter of the alpha-convex hull over the same vertices: each edge
/// contributes the radius-alpha arc over its chord. Always >= shape_perimeter.
double hull_perimeter(const AlphaShape& shape);

/// Indices of points whose nearest neighbor is at distance >= 2*alpha.
std::vector<int> isolated_points(std::span<const Vec2> points, double alpha);

/// Throws std::invalid_argument if the edge has no empty disk.
EdgeSidedness classify_sidedness(const AlphaEdge& edge);

}  // namespace alphaperim

#endif  // ALPHAPERIM_ALPHA_SHAPE_HPP
