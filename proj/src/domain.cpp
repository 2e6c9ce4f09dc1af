#include "alphaperim/domain.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "alphaperim/numeric_format.hpp"

namespace alphaperim {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

BoundaryPoint circle_boundary_point(const Vec2& center, double radius, const Vec2& unit_dir,
                                    bool outward_is_radial, int component) {
  BoundaryPoint b;
  b.position = center + radius * unit_dir;
  b.outward_normal = outward_is_radial ? unit_dir : Vec2(-unit_dir);
  b.tangent = perp(b.outward_normal);
  b.component_id = component;
  return b;
}

// Closest point on the segment [-a, a] x {0} (the stadium spine).
Vec2 spine_closest(double half_length, const Vec2& p) {
  return Vec2(std::clamp(p.x(), -half_length, half_length), 0.0);
}

// Inverse-CDF radial draw for the uniform distribution on an annulus.
Vec2 annular_draw(const Vec2& center, double r_in, double r_out, Xoshiro256pp& rng) {
  const double u = rng.uniform01();
  const double v = rng.uniform01();
  const double radius = std::sqrt(u * (r_out * r_out - r_in * r_in) + r_in * r_in);
  const double theta = kTwoPi * v;
  return center + radius * Vec2(std::cos(theta), std::sin(theta));
}

}  // namespace

Domain Domain::disk(double radius) {
  require(radius > 0.0 && std::isfinite(radius), "disk: radius must be positive");
  Domain d;
  d.kind_ = DomainKind::disk;
  d.params_ = DiskParams{radius};
  d.rolling_r_ = radius;
  return d;
}

Domain Domain::annulus(double inner_radius, double outer_radius) {
  require(inner_radius > 0.0 && std::isfinite(inner_radius), "annulus: inner radius must be positive");
  require(outer_radius > inner_radius && std::isfinite(outer_radius),
          "annulus: outer radius must exceed inner radius");
  Domain d;
  d.kind_ = DomainKind::annulus;
  d.params_ = AnnulusParams{inner_radius, outer_radius};
  // The hole bounds the complement roll, the ring width the interior roll.
  d.rolling_r_ = std::min(inner_radius, 0.5 * (outer_radius - inner_radius));
  return d;
}

Domain Domain::stadium(double half_length, double cap_radius) {
  require(half_length > 0.0 && std::isfinite(half_length), "stadium: half length must be positive");
  require(cap_radius > 0.0 && std::isfinite(cap_radius), "stadium: cap radius must be positive");
  Domain d;
  d.kind_ = DomainKind::stadium;
  d.params_ = StadiumParams{half_length, cap_radius};
  d.rolling_r_ = cap_radius;
  return d;
}

Domain Domain::disjoint_disks(const Vec2& center1, double radius1, const Vec2& center2,
                              double radius2) {
  require(radius1 > 0.0 && radius2 > 0.0, "disjoint_disks: radii must be positive");
  require(is_finite(center1) && is_finite(center2), "disjoint_disks: non-finite center");
  const double gap = (center1 - center2).norm() - radius1 - radius2;
  require(gap > 0.0, "disjoint_disks: components must be strictly disjoint");
  Domain d;
  d.kind_ = DomainKind::disjoint_disks;
  d.params_ = DisjointDisksParams{center1, radius1, center2, radius2};
  // The complement must roll through the gap between the components; open
  // balls make tangency at gap/2 legitimate.
  d.rolling_r_ = std::min({radius1, radius2, 0.5 * gap});
  return d;
}

bool Domain::contains(const Vec2& p) const {
  switch (kind_) {
    case DomainKind::disk: {
      const auto& d = std::get<DiskParams>(params_);
      return p.squaredNorm() <= d.radius * d.radius;
    }
    case DomainKind::annulus: {
      const auto& a = std::get<AnnulusParams>(params_);
      const double n2 = p.squaredNorm();
      return n2 >= a.inner_radius * a.inner_radius && n2 <= a.outer_radius * a.outer_radius;
    }
    case DomainKind::stadium: {
      const auto& s = std::get<StadiumParams>(params_);
      return (p - spine_closest(s.half_length, p)).squaredNorm() <= s.cap_radius * s.cap_radius;
    }
    case DomainKind::disjoint_disks: {
      const auto& dd = std::get<DisjointDisksParams>(params_);
      return (p - dd.center1).squaredNorm() <= dd.radius1 * dd.radius1 ||
             (p - dd.center2).squaredNorm() <= dd.radius2 * dd.radius2;
    }
  }
  return false;
}

double Domain::exact_perimeter() const {
  switch (kind_) {
    case DomainKind::disk:
      return kTwoPi * std::get<DiskParams>(params_).radius;
    case DomainKind::annulus: {
      const auto& a = std::get<AnnulusParams>(params_);
      return kTwoPi * (a.inner_radius + a.outer_radius);
    }
    case DomainKind::stadium: {
      const auto& s = std::get<StadiumParams>(params_);
      return kTwoPi * s.cap_radius + 4.0 * s.half_length;
    }
    case DomainKind::disjoint_disks: {
      const auto& dd = std::get<DisjointDisksParams>(params_);
      return kTwoPi * (dd.radius1 + dd.radius2);
    }
  }
  return 0.0;
}

double Domain::distance_to_boundary(const Vec2& p) const {
  switch (kind_) {
    case DomainKind::disk:
      return std::abs(p.norm() - std::get<DiskParams>(params_).radius);
    case DomainKind::annulus: {
      const auto& a = std::get<AnnulusParams>(params_);
      const double len = p.norm();
      return std::min(std::abs(len - a.inner_radius), std::abs(len - a.outer_radius));
    }
    case DomainKind::stadium: {
      const auto& s = std::get<StadiumParams>(params_);
      return std::abs((p - spine_closest(s.half_length, p)).norm() - s.cap_radius);
    }
    case DomainKind::disjoint_disks: {
      const auto& dd = std::get<DisjointDisksParams>(params_);
      return std::min(std::abs((p - dd.center1).norm() - dd.radius1),
                      std::abs((p - dd.center2).norm() - dd.radius2));
    }
  }
  return 0.0;
}

BoundaryPoint Domain::project_to_boundary(const Vec2& p) const {
  switch (kind_) {
    case DomainKind::disk: {
      const auto& d = std::get<DiskParams>(params_);
      const double len = p.norm();
      if (len <= kGeomEps) {
        throw ProjectionAmbiguityError("projection ambiguous at the disk center");
      }
      return circle_boundary_point(Vec2(0, 0), d.radius, p / len, true, 0);
    }
    case DomainKind::annulus: {
      const auto& a = std::get<AnnulusParams>(params_);
      const double len = p.norm();
      if (len <= kGeomEps) {
        throw ProjectionAmbiguityError("projection ambiguous at the annulus center");
      }
      const double d_out = std::abs(len - a.outer_radius);
      const double d_in = std::abs(len - a.inner_radius);
      if (std::abs(d_out - d_in) <= kGeomEps) {
        throw ProjectionAmbiguityError("point equidistant from both annulus circles");
      }
      const Vec2 dir = p / len;
      return d_out < d_in ? circle_boundary_point(Vec2(0, 0), a.outer_radius, dir, true, 0)
                          : circle_boundary_point(Vec2(0, 0), a.inner_radius, dir, false, 1);
    }
    case DomainKind::stadium: {
      const auto& s = std::get<StadiumParams>(params_);
      const Vec2 q = spine_closest(s.half_length, p);
      const Vec2 v = p - q;
      const double len = v.norm();
      if (len <= kGeomEps) {
        throw ProjectionAmbiguityError("projection ambiguous on the stadium spine");
      }
      const Vec2 dir = v / len;
      BoundaryPoint b;
      b.position = q + s.cap_radius * dir;
      b.outward_normal = dir;
      b.tangent = perp(dir);
      b.component_id = 0;
      return b;
    }
    case DomainKind::disjoint_disks: {
      const auto& dd = std::get<DisjointDisksParams>(params_);
      const double len1 = (p - dd.center1).norm();
      const double len2 = (p - dd.center2).norm();
      const double d1 = std::abs(len1 - dd.radius1);
      const double d2 = std::abs(len2 - dd.radius2);
      if (std::abs(d1 - d2) <= kGeomEps) {
        throw ProjectionAmbiguityError("point equidistant from both disk boundaries");
      }
      const bool first = d1 < d2;
      const Vec2& center = first ? dd.center1 : dd.center2;
      const double radius = first ? dd.radius1 : dd.radius2;
      const double len = first ? len1 : len2;
      if (len <= kGeomEps) {
        throw ProjectionAmbiguityError("projection ambiguous at a disk center");
      }
      return circle_boundary_point(center, radius, (p - center) / len, true, first ? 0 : 1);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Vec2> Domain::sample_uniform(int n, Xoshiro256pp& rng) const {
  require(n >= 0, "sample_uniform: negative count");
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n));
  switch (kind_) {
    case DomainKind::disk: {
      const auto& d = std::get<DiskParams>(params_);
      for (int i = 0; i < n; ++i) out.push_back(annular_draw(Vec2(0, 0), 0.0, d.radius, rng));
      break;
    }
    case DomainKind::annulus: {
      const auto& a = std::get<AnnulusParams>(params_);
      for (int i = 0; i < n; ++i) {
        out.push_back(annular_draw(Vec2(0, 0), a.inner_radius, a.outer_radius, rng));
      }
      break;
    }
    case DomainKind::stadium: {
      const auto& s = std::get<StadiumParams>(params_);
      const double rect_area = 4.0 * s.half_length * s.cap_radius;
      const double total = rect_area + M_PI * s.cap_radius * s.cap_radius;
      for (int i = 0; i < n; ++i) {
        if (rng.uniform01() * total < rect_area) {
          out.emplace_back(rng.uniform(-s.half_length, s.half_length),
                           rng.uniform(-s.cap_radius, s.cap_radius));
        } else {
          // One draw in the full cap disk, attached to the matching end.
          const Vec2 q = annular_draw(Vec2(0, 0), 0.0, s.cap_radius, rng);
          out.emplace_back(q.x() >= 0.0 ? s.half_length + q.x() : -s.half_length + q.x(), q.y());
        }
      }
      break;
    }
    case DomainKind::disjoint_disks: {
      const auto& dd = std::get<DisjointDisksParams>(params_);
      const double w1 = dd.radius1 * dd.radius1;
      const double w2 = dd.radius2 * dd.radius2;
      for (int i = 0; i < n; ++i) {
        if (rng.uniform01() * (w1 + w2) < w1) {
          out.push_back(annular_draw(dd.center1, 0.0, dd.radius1, rng));
        } else {
          out.push_back(annular_draw(dd.center2, 0.0, dd.radius2, rng));
        }
      }
      break;
    }
  }
  return out;
}

int Domain::boundary_component_count() const {
  switch (kind_) {
    case DomainKind::disk:
    case DomainKind::stadium:
      return 1;
    case DomainKind::annulus:
    case DomainKind::disjoint_disks:
      return 2;
  }
  return 0;
}

double Domain::component_length(int component) const {
  require(component >= 0 && component < boundary_component_count(),
          "component_length: bad component id");
  switch (kind_) {
    case DomainKind::disk:
      return kTwoPi * std::get<DiskParams>(params_).radius;
    case DomainKind::annulus: {
      const auto& a = std::get<AnnulusParams>(params_);
      return kTwoPi * (component == 0 ? a.outer_radius : a.inner_radius);
    }
    case DomainKind::stadium:
      return exact_perimeter();
    case DomainKind::disjoint_disks: {
      const auto& dd = std::get<DisjointDisksParams>(params_);
      return kTwoPi * (component == 0 ? dd.radius1 : dd.radius2);
    }
  }
  return 0.0;
}

BoundaryPoint Domain::boundary_point(int component, double t) const {
  require(component >= 0 && component < boundary_component_count(), "boundary_point: bad component");
  require(t >= 0.0 && t < 1.0 + kGeomEps, "boundary_point: t outside [0, 1)");
  const double theta = kTwoPi * t;
  const Vec2 dir(std::cos(theta), std::sin(theta));
  switch (kind_) {
    case DomainKind::disk:
      return circle_boundary_point(Vec2(0, 0), std::get<DiskParams>(params_).radius, dir, true, 0);
    case DomainKind::annulus: {
      const auto& a = std::get<AnnulusParams>(params_);
      return component == 0 ? circle_boundary_point(Vec2(0, 0), a.outer_radius, dir, true, 0)
                            : circle_boundary_point(Vec2(0, 0), a.inner_radius, dir, false, 1);
    }
    case DomainKind::stadium: {
      const auto& st = std::get<StadiumParams>(params_);
      const double cap = M_PI * st.cap_radius;
      const double side = 2.0 * st.half_length;
      double s = t * (2.0 * cap + 2.0 * side);
      BoundaryPoint b;
      b.component_id = 0;
      if (s < cap) {  // right cap, from (a, -c) counter-clockwise to (a, c)
        const double ang = -M_PI / 2.0 + s / st.cap_radius;
        const Vec2 u(std::cos(ang), std::sin(ang));
        b.position = Vec2(st.half_length, 0.0) + st.cap_radius * u;
        b.outward_normal = u;
      } else if ((s -= cap) < side) {  // top side, right to left
        b.position = Vec2(st.half_length - s, st.cap_radius);
        b.outward_normal = Vec2(0.0, 1.0);
      } else if ((s -= side) < cap) {  // left cap
        const double ang = M_PI / 2.0 + s / st.cap_radius;
        const Vec2 u(std::cos(ang), std::sin(ang));
        b.position = Vec2(-st.half_length, 0.0) + st.cap_radius * u;
        b.outward_normal = u;
      } else {  // bottom side, left to right
        s -= cap;
        b.position = Vec2(-st.half_length + s, -st.cap_radius);
        b.outward_normal = Vec2(0.0, -1.0);
      }
      b.tangent = perp(b.outward_normal);
      return b;
    }
    case DomainKind::disjoint_disks: {
      const auto& dd = std::get<DisjointDisksParams>(params_);
      return component == 0 ? circle_boundary_point(dd.center1, dd.radius1, dir, true, 0)
                            : circle_boundary_point(dd.center2, dd.radius2, dir, true, 1);
    }
  }
  throw std::logic_error("unreachable");
}

std::string Domain::spec_string() const {
  std::ostringstream os;
  switch (kind_) {
    case DomainKind::disk:
      os << "disk:" << format_double(std::get<DiskParams>(params_).radius);
      break;
    case DomainKind::annulus: {
      const auto& a = std::get<AnnulusParams>(params_);
      os << "annulus:" << format_double(a.inner_radius) << "," << format_double(a.outer_radius);
      break;
    }
    case DomainKind::stadium: {
      const auto& s = std::get<StadiumParams>(params_);
      os << "stadium:" << format_double(s.half_length) << "," << format_double(s.cap_radius);
      break;
    }
    case DomainKind::disjoint_disks: {
      const auto& dd = std::get<DisjointDisksParams>(params_);
      os << "disks:(" << format_double(dd.center1.x()) << "," << format_double(dd.center1.y())
         << ")," << format_double(dd.radius1) << ",(" << format_double(dd.center2.x()) << ","
         << format_double(dd.center2.y()) << ")," << format_double(dd.radius2);
      break;
    }
  }
  return os.str();
}

namespace {

std::vector<double> parse_number_list(const std::string& body, const char* what) {
  std::vector<double> values;
  std::string cleaned;
  for (char c : body) {
    if (c == '(' || c == ')') continue;
    cleaned.push_back(c);
  }
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    std::size_t next = cleaned.find(',', pos);
    if (next == std::string::npos) next = cleaned.size();
    const std::string tok = cleaned.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad number in ") + what + " spec: '" + tok + "'");
    }
    pos = next + 1;
  }
  return values;
}

}  // namespace

Domain Domain::parse(const std::string& spec) {
  std::string s;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("domain spec must look like kind:params, got '" + spec + "'");
  }
  const std::string kind = s.substr(0, colon);
  const std::string body = s.substr(colon + 1);
  const std::vector<double> v = parse_number_list(body, kind.c_str());
  if (kind == "disk") {
    if (v.size() != 1) throw std::invalid_argument("disk spec needs 1 number: disk:R");
    return disk(v[0]);
  }
  if (kind == "annulus") {
    if (v.size() != 2) throw std::invalid_argument("annulus spec needs 2 numbers: annulus:RIN,ROUT");
    return annulus(v[0], v[1]);
  }
  if (kind == "stadium") {
    if (v.size() != 2) {
      throw std::invalid_argument("stadium spec needs 2 numbers: stadium:HALFLEN,CAPR");
    }
    return stadium(v[0], v[1]);
  }
  if (kind == "disks") {
    if (v.size() != 6) {
      throw std::invalid_argument("disks spec needs 6 numbers: disks:(X,Y),R,(X,Y),R");
    }
    return disjoint_disks(Vec2(v[0], v[1]), v[2], Vec2(v[3], v[4]), v[5]);
  }
  throw std::invalid_argument("unknown domain kind '" + kind + "'");
}

}  // namespace alphaperim
