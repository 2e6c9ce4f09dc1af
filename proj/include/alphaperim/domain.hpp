// Analytic planar supports satisfying the rolling condition on both sides,
// with closed-form perimeter, membership, boundary projection and exact
// uniform sampling. These are the ground truth for every experiment.
#ifndef ALPHAPERIM_DOMAIN_HPP
#define ALPHAPERIM_DOMAIN_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "alphaperim/geometry.hpp"
#include "alphaperim/rng.hpp"

namespace alphaperim {

enum class DomainKind { disk, annulus, stadium, disjoint_disks };

struct BoundaryPoint {
  Vec2 position{0.0, 0.0};
  Vec2 outward_normal{0.0, 0.0};  // unit, pointing away from the support
  Vec2 tangent{0.0, 0.0};         // outward_normal rotated +90 degrees
  int component_id = 0;
};

/// Raised when the metric projection onto the boundary is not unique.
class ProjectionAmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Domain {
 public:
  static Domain disk(double radius);
  static Domain annulus(double inner_radius, double outer_radius);
  static Domain stadium(double half_length, double cap_radius);
  static Domain disjoint_disks(const Vec2& center1, double radius1, const Vec2& center2,
                               double radius2);

  DomainKind kind() const { return kind_; }

  /// Largest r for which both the support and its complement satisfy the
  /// r-rolling condition.
  double rolling_r() const { return rolling_r_; }

  /// Closed-set membership; boundary points belong to the support.
  bool contains(const Vec2& p) const;

  double exact_perimeter() const;

  double distance_to_boundary(const Vec2& p) const;

  /// Nearest boundary point with tangent frame and component id. Throws
  /// ProjectionAmbiguityError on the measure-zero equidistant locus.
  BoundaryPoint project_to_boundary(const Vec2& p) const;

  /// n independent uniform draws; deterministic given the generator state.
  std::vector<Vec2> sample_uniform(int n, Xoshiro256pp& rng) const;

  int boundary_component_count() const;
  double component_length(int component) const;
  /// Boundary point at arc-length fraction t in [0, 1) along a component.
  BoundaryPoint boundary_point(int component, double t) const;

  /// Canonical spec string, e.g. "annulus:0.25,1".
  std::string spec_string() const;
  /// Parses "disk:R", "annulus:RIN,ROUT", "stadium:HALFLEN,CAPR",
  /// "disks:(X,Y),R,(X,Y),R". Throws std::invalid_argument on bad input.
  static Domain parse(const std::string& spec);

 private:
  struct DiskParams {
    double radius;
  };
  struct AnnulusParams {
    double inner_radius;
    double outer_radius;
  };
  struct StadiumParams {
    double half_length;
    double cap_radius;
  };
  struct DisjointDisksParams {
    Vec2 center1;
    double radius1;
    Vec2 center2;
    double radius2;
  };

  Domain() = default;

  DomainKind kind_ = DomainKind::disk;
  std::variant<DiskParams, AnnulusParams, StadiumParams, DisjointDisksParams> params_;
  double rolling_r_ = 0.0;
};

}  // namespace alphaperim

#endif  // ALPHAPERIM_DOMAIN_HPP
