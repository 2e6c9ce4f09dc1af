// Measures, on a realized sample, the geometric quantities the estimator's
// accuracy rests on: edge-length and distance-to-boundary extremes, deviation
// angles, Hausdorff distance, the perimeter sandwich bound, and the polygon
// structure of the edge graph.
#ifndef ALPHAPERIM_DIAGNOSTICS_HPP
#define ALPHAPERIM_DIAGNOSTICS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "alphaperim/alpha_shape.hpp"
#include "alphaperim/domain.hpp"

namespace alphaperim {

struct EdgeDiagnostics {
  double max_edge_length = 0.0;
  /// Max over edges of the max distance to the boundary over 16 equal
  /// subdivisions of each edge (17 probe points, endpoints included).
  double max_boundary_dist = 0.0;
  /// Max over edges of the angle between the edge and the boundary tangent at
  /// the projection of the edge midpoint (midpoint rule; an approximation of
  /// the sup over the edge).
  double max_deviation_angle = 0.0;
  bool all_one_sided = true;
  int isolated_count = 0;
};

EdgeDiagnostics edge_diagnostics(const AlphaShape& shape, const Domain& domain);

/// Symmetric Hausdorff distance between the union of edges and the boundary,
/// estimated by sampling `resolution` points per unit length on both objects;
/// the discretization allowance 1/resolution is added to the estimate.
/// Throws std::invalid_argument on an empty edge set.
double hausdorff_to_boundary(const AlphaShape& shape, const Domain& domain,
                             int resolution = 2000);

enum class SandwichStatus { holds, violated, not_evaluated };

struct SandwichReport {
  double hausdorff = 0.0;
  double deviation_angle = 0.0;
  double ratio = 0.0;        // shape perimeter over true perimeter
  double lower_bound = 0.0;  // 1 - H/r
  double upper_bound = 0.0;  // (1 + H/r) / cos(angle)
  SandwichStatus status = SandwichStatus::not_evaluated;
};

/// Checks lower <= ratio <= upper. Evaluated only when the Hausdorff distance
/// is below the rolling radius; otherwise status = not_evaluated.
SandwichReport sandwich_check(const AlphaShape& shape, const Domain& domain,
                              int resolution = 2000);

struct PolygonReport {
  bool all_degree_two = false;
  int cycle_count = 0;  // connected components of the edge graph that are simple cycles
  int boundary_component_count = 0;
  bool component_count_match = false;
  std::map<int, int> degree_histogram;
  bool each_cycle_on_single_component = false;
  bool all_components_covered = false;
};

/// Graph-structure report; never throws (the polygon property only holds with
/// high probability).
PolygonReport polygon_structure(const AlphaShape& shape, const Domain& domain);

struct DiagnosticsBundle {
  EdgeDiagnostics edges;
  double hausdorff = 0.0;
  SandwichReport sandwich;
  PolygonReport polygon;
};

DiagnosticsBundle run_diagnostics(const AlphaShape& shape, const Domain& domain,
                                  int resolution = 2000);

/// Line-oriented key=value serialization.
std::string to_key_value(const DiagnosticsBundle& bundle);
std::string diagnostics_csv_header();
std::string to_csv_row(const DiagnosticsBundle& bundle, const Domain& domain, double alpha,
                       int n, std::uint64_t seed);

}  // namespace alphaperim

#endif  // ALPHAPERIM_DIAGNOSTICS_HPP
