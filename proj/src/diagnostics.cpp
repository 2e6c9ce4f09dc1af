#include "alphaperim/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "alphaperim/numeric_format.hpp"

namespace alphaperim {
namespace {

// Probe points per edge: 16 equal subdivisions, endpoints and midpoint included.
constexpr int kProbeSubdivisions = 16;

double deviation_angle_of_edge(const AlphaShape& shape, const Domain& domain,
                               const AlphaEdge& e) {
  const Vec2& a = shape.points[e.i];
  const Vec2& b = shape.points[e.j];
  try {
    const BoundaryPoint bp = domain.project_to_boundary(0.5 * (a + b));
    return angle_between_lines(b - a, bp.tangent);
  } catch (const ProjectionAmbiguityError& err) {
    throw std::runtime_error("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                             "): " + err.what());
  }
}

double max_deviation_angle(const AlphaShape& shape, const Domain& domain) {
  double worst = 0.0;
  for (const AlphaEdge& e : shape.edges) {
    worst = std::max(worst, deviation_angle_of_edge(shape, domain, e));
  }
  return worst;
}

}  // namespace

EdgeDiagnostics edge_diagnostics(const AlphaShape& shape, const Domain& domain) {
  EdgeDiagnostics diag;
  for (const AlphaEdge& e : shape.edges) {
    const Vec2& a = shape.points[e.i];
    const Vec2& b = shape.points[e.j];
    diag.max_edge_length = std::max(diag.max_edge_length, (b - a).norm());
    for (int k = 0; k <= kProbeSubdivisions; ++k) {
      const double t = static_cast<double>(k) / kProbeSubdivisions;
      diag.max_boundary_dist =
          std::max(diag.max_boundary_dist, domain.distance_to_boundary(a + t * (b - a)));
    }
    diag.max_deviation_angle =
        std::max(diag.max_deviation_angle, deviation_angle_of_edge(shape, domain, e));
    diag.all_one_sided = diag.all_one_sided && classify_sidedness(e).one_sided;
  }
  diag.isolated_count = static_cast<int>(isolated_points(shape.points, shape.alpha).size());
  return diag;
}

double hausdorff_to_boundary(const AlphaShape& shape, const Domain& domain, int resolution) {
  if (shape.edges.empty()) {
    throw std::invalid_argument("hausdorff_to_boundary: empty edge set");
  }
  if (resolution < 1) throw std::invalid_argument("hausdorff_to_boundary: bad resolution");

  // Edges toward the boundary: exact point-to-boundary distances at sampled
  // edge points.
  double sup_edge = 0.0;
  for (const AlphaEdge& e : shape.edges) {
    const Vec2& a = shape.points[e.i];
    const Vec2& b = shape.points[e.j];
    const double len = (b - a).norm();
    const int m = std::max(2, static_cast<int>(std::ceil(len * resolution)) + 1);
    for (int k = 0; k < m; ++k) {
      const double t = static_cast<double>(k) / (m - 1);
      sup_edge = std::max(sup_edge, domain.distance_to_boundary(a + t * (b - a)));
    }
  }

  // Boundary toward the edges: exact point-to-segment distances at sampled
  // boundary points.
  double sup_boundary = 0.0;
  for (int comp = 0; comp < domain.boundary_component_count(); ++comp) {
    const double len = domain.component_length(comp);
    const int m = std::max(8, static_cast<int>(std::ceil(len * resolution)));
    for (int k = 0; k < m; ++k) {
      const Vec2 y = domain.boundary_point(comp, static_cast<double>(k) / m).position;
      double nearest = std::numeric_limits<double>::infinity();
      for (const AlphaEdge& e : shape.edges) {
        nearest = std::min(nearest, point_segment_distance(y, edge_segment(shape, e)));
        if (nearest == 0.0) break;
      }
      sup_boundary = std::max(sup_boundary, nearest);
    }
  }
  return std::max(sup_edge, sup_boundary) + 1.0 / resolution;
}

SandwichReport sandwich_check(const AlphaShape& shape, const Domain& domain, int resolution) {
  SandwichReport report;
  report.hausdorff = hausdorff_to_boundary(shape, domain, resolution);
  report.ratio = shape_perimeter(shape) / domain.exact_perimeter();
  const double r = domain.rolling_r();
  if (report.hausdorff >= r) {
    // Outside the regime of the bound; the deviation angle may not even be
    // well defined here, so nothing further is computed.
    report.deviation_angle = std::numeric_limits<double>::quiet_NaN();
    report.lower_bound = std::numeric_limits<double>::quiet_NaN();
    report.upper_bound = std::numeric_limits<double>::quiet_NaN();
    report.status = SandwichStatus::not_evaluated;
    return report;
  }
  report.deviation_angle = max_deviation_angle(shape, domain);
  report.lower_bound = 1.0 - report.hausdorff / r;
  report.upper_bound = (1.0 + report.hausdorff / r) / std::cos(report.deviation_angle);
  report.status = (report.lower_bound <= report.ratio && report.ratio <= report.upper_bound)
                      ? SandwichStatus::holds
                      : SandwichStatus::violated;
  return report;
}

PolygonReport polygon_structure(const AlphaShape& shape, const Domain& domain) {
  PolygonReport report;
  report.boundary_component_count = domain.boundary_component_count();

  const int n = static_cast<int>(shape.points.size());
  std::vector<int> degree(n, 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const AlphaEdge& e : shape.edges) {
    ++degree[e.i];
    ++degree[e.j];
    parent[find(e.i)] = find(e.j);
  }

  report.all_degree_two = !shape.edges.empty();
  for (int i = 0; i < n; ++i) {
    if (degree[i] == 0) continue;
    ++report.degree_histogram[degree[i]];
    if (degree[i] != 2) report.all_degree_two = false;
  }

  // A component is a simple cycle iff all its vertices have degree 2 and it
  // has as many edges as vertices.
  std::map<int, std::pair<int, int>> comp_stats;  // root -> (vertices, edges)
  std::map<int, bool> comp_all_deg2;
  for (int i = 0; i < n; ++i) {
    if (degree[i] == 0) continue;
    auto& s = comp_stats[find(i)];
    ++s.first;
    auto [it, inserted] = comp_all_deg2.try_emplace(find(i), true);
    it->second = it->second && degree[i] == 2;
  }
  for (const AlphaEdge& e : shape.edges) ++comp_stats[find(e.i)].second;

  std::vector<int> cycle_roots;
  for (const auto& [root, s] : comp_stats) {
    if (comp_all_deg2[root] && s.first == s.second) cycle_roots.push_back(root);
  }
  report.cycle_count = static_cast<int>(cycle_roots.size());
  report.component_count_match =
      report.all_degree_two && report.cycle_count == report.boundary_component_count;

  // Project each cycle's vertices; a clean reconstruction puts every cycle on
  // exactly one boundary component and covers all of them.
  report.each_cycle_on_single_component = !cycle_roots.empty();
  std::vector<bool> covered(domain.boundary_component_count(), false);
  for (int root : cycle_roots) {
    int comp_id = -2;
    bool single = true;
    for (int i = 0; i < n && single; ++i) {
      if (degree[i] == 0 || find(i) != root) continue;
      try {
        const int c = domain.project_to_boundary(shape.points[i]).component_id;
        if (comp_id == -2) comp_id = c;
        single = single && c == comp_id;
      } catch (const ProjectionAmbiguityError&) {
        single = false;
      }
    }
    if (single && comp_id >= 0) {
      covered[comp_id] = true;
    } else {
      report.each_cycle_on_single_component = false;
    }
  }
  report.all_components_covered =
      std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  return report;
}

DiagnosticsBundle run_diagnostics(const AlphaShape& shape, const Domain& domain, int resolution) {
  DiagnosticsBundle bundle;
  bundle.edges = edge_diagnostics(shape, domain);
  bundle.hausdorff = hausdorff_to_boundary(shape, domain, resolution);
  bundle.sandwich = sandwich_check(shape, domain, resolution);
  bundle.polygon = polygon_structure(shape, domain);
  return bundle;
}

namespace {

const char* sandwich_name(SandwichStatus s) {
  switch (s) {
    case SandwichStatus::holds:
      return "holds";
    case SandwichStatus::violated:
      return "violated";
    case SandwichStatus::not_evaluated:
      return "not_evaluated";
  }
  return "?";
}

}  // namespace

std::string to_key_value(const DiagnosticsBundle& b) {
  std::ostringstream os;
  os << "max_edge_length=" << format_double(b.edges.max_edge_length) << '\n'
     << "max_boundary_dist=" << format_double(b.edges.max_boundary_dist) << '\n'
     << "max_deviation_angle=" << format_double(b.edges.max_deviation_angle) << '\n'
     << "all_one_sided=" << (b.edges.all_one_sided ? 1 : 0) << '\n'
     << "isolated_count=" << b.edges.isolated_count << '\n'
     << "hausdorff=" << format_double(b.hausdorff) << '\n'
     << "ratio=" << format_double(b.sandwich.ratio) << '\n'
     << "sandwich_lower=" << format_double(b.sandwich.lower_bound) << '\n'
     << "sandwich_upper=" << format_double(b.sandwich.upper_bound) << '\n'
     << "sandwich=" << sandwich_name(b.sandwich.status) << '\n'
     << "all_degree_two=" << (b.polygon.all_degree_two ? 1 : 0) << '\n'
     << "cycle_count=" << b.polygon.cycle_count << '\n'
     << "boundary_components=" << b.polygon.boundary_component_count << '\n'
     << "component_count_match=" << (b.polygon.component_count_match ? 1 : 0) << '\n'
     << "each_cycle_on_single_component=" << (b.polygon.each_cycle_on_single_component ? 1 : 0)
     << '\n'
     << "all_components_covered=" << (b.polygon.all_components_covered ? 1 : 0) << '\n';
  for (const auto& [deg, count] : b.polygon.degree_histogram) {
    os << "degree_" << deg << "_count=" << count << '\n';
  }
  return os.str();
}

std::string diagnostics_csv_header() {
  return "domain,alpha,n,seed,max_edge_length,max_boundary_dist,max_deviation_angle,"
         "all_one_sided,isolated_count,hausdorff,ratio,sandwich_lower,sandwich_upper,"
         "sandwich,all_degree_two,cycle_count,component_count_match";
}

std::string to_csv_row(const DiagnosticsBundle& b, const Domain& domain, double alpha, int n,
                       std::uint64_t seed) {
  std::ostringstream os;
  os << csv_field(domain.spec_string()) << ',' << format_double(alpha) << ',' << n << ',' << seed << ','
     << format_double(b.edges.max_edge_length) << ',' << format_double(b.edges.max_boundary_dist)
     << ',' << format_double(b.edges.max_deviation_angle) << ','
     << (b.edges.all_one_sided ? 1 : 0) << ',' << b.edges.isolated_count << ','
     << format_double(b.hausdorff) << ',' << format_double(b.sandwich.ratio) << ','
     << format_double(b.sandwich.lower_bound) << ',' << format_double(b.sandwich.upper_bound)
     << ',' << sandwich_name(b.sandwich.status) << ',' << (b.polygon.all_degree_two ? 1 : 0)
     << ',' << b.polygon.cycle_count << ',' << (b.polygon.component_count_match ? 1 : 0);
  return os.str();
}

}  // namespace alphaperim
