#include "alphaperim/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace alphaperim {
namespace {

// Error-bound constants for the statically filtered predicates (double
// precision, epsilon = 2^-53).
constexpr double kOrientErrBound = 3.3306690738754716e-16;   // (3 + 16 eps) eps
constexpr double kInCircleErrBound = 1.1102230246251565e-15;  // (10 + 96 eps) eps
// Relative cocircularity below this is treated as degenerate and handed to
// the caller for brute-force re-verification.
constexpr double kDegenerateRel = 1e-7;

struct OrientResult {
  double det;
  double err;
};

OrientResult orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double detleft = (a.x() - c.x()) * (b.y() - c.y());
  const double detright = (a.y() - c.y()) * (b.x() - c.x());
  return {detleft - detright,
          kOrientErrBound * (std::abs(detleft) + std::abs(detright))};
}

// Positive iff d lies strictly inside the circumcircle of CCW (a, b, c).
struct InCircleResult {
  double det;
  double err;
  double permanent;
};

InCircleResult incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const double adx = a.x() - d.x(), ady = a.y() - d.y();
  const double bdx = b.x() - d.x(), bdy = b.y() - d.y();
  const double cdx = c.x() - d.x(), cdy = c.y() - d.y();

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;

  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  return {det, kInCircleErrBound * permanent, permanent};
}

struct Tri {
  std::array<int, 3> v;    // CCW
  std::array<int, 3> adj;  // adj[k] faces the edge opposite v[k]; -1 = none
};

class Builder {
 public:
  Builder(std::span<const Vec2> points, double far_radius) : n_(static_cast<int>(points.size())) {
    pts_.assign(points.begin(), points.end());
    Vec2 lo = pts_[0], hi = pts_[0];
    for (const Vec2& p : pts_) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    const Vec2 center = 0.5 * (lo + hi);
    const double span = std::max((hi - lo).norm(), 1.0);
    const double dist = std::max(far_radius, 8.0 * span);
    for (double deg : {90.0, 210.0, 330.0}) {
      const double rad = deg * M_PI / 180.0;
      pts_.push_back(center + dist * Vec2(std::cos(rad), std::sin(rad)));
    }
    tris_.reserve(2 * pts_.size());
    tris_.push_back(Tri{{n_, n_ + 1, n_ + 2}, {-1, -1, -1}});

    for (int idx : insertion_order()) insert(idx);
  }

  Delaunay result() const {
    Delaunay out;
    std::vector<std::int64_t> keys;
    for (const Tri& t : tris_) {
      for (int k = 0; k < 3; ++k) {
        int i = t.v[k], j = t.v[(k + 1) % 3];
        if (i >= n_ || j >= n_) continue;
        if (i > j) std::swap(i, j);
        keys.push_back((static_cast<std::int64_t>(i) << 32) | static_cast<std::uint32_t>(j));
      }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    out.edges.reserve(keys.size());
    for (std::int64_t k : keys) {
      out.edges.emplace_back(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffff));
    }
    out.cocircular_clusters = cocircular_clusters();
    return out;
  }

 private:
  std::vector<int> insertion_order() const {
    // Morton order keeps the walk-based location near-constant per insert.
    Vec2 lo = pts_[0], hi = pts_[0];
    for (int i = 0; i < n_; ++i) {
      lo = lo.cwiseMin(pts_[i]);
      hi = hi.cwiseMax(pts_[i]);
    }
    const Vec2 ext = (hi - lo).cwiseMax(Vec2(1e-300, 1e-300));
    std::vector<std::pair<std::uint32_t, int>> keyed(n_);
    for (int i = 0; i < n_; ++i) {
      auto q = [&](double t) {
        return static_cast<std::uint32_t>(
            std::clamp(t, 0.0, 1.0) * 65535.0);
      };
      std::uint32_t x = q((pts_[i].x() - lo.x()) / ext.x());
      std::uint32_t y = q((pts_[i].y() - lo.y()) / ext.y());
      auto spread = [](std::uint32_t w) {
        w &= 0xffff;
        w = (w | (w << 8)) & 0x00ff00ff;
        w = (w | (w << 4)) & 0x0f0f0f0f;
        w = (w | (w << 2)) & 0x33333333;
        w = (w | (w << 1)) & 0x55555555;
        return w;
      };
      keyed[i] = {spread(x) | (spread(y) << 1), i};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = keyed[i].second;
    return order;
  }

  int sign(const OrientResult& o) const {
    if (o.det > o.err) return 1;
    if (o.det < -o.err) return -1;
    return 0;
  }

  struct Location {
    int tri;
    int on_edge;  // -1 if strictly inside, else edge index opposite v[on_edge]
  };

  // Classifies p against triangle t: returns {found, edge} where edge >= 0
  // marks an on-edge hit and -1 a strict interior. found == false means p is
  // beyond some edge, with `next` set to the neighbor across it.
  struct Classify {
    bool inside;
    int edge;
    int next;
  };

  Classify classify(int t, const Vec2& p) const {
    int zero_edge = -1;
    for (int k = 0; k < 3; ++k) {
      const Vec2& a = pts_[tris_[t].v[(k + 1) % 3]];
      const Vec2& b = pts_[tris_[t].v[(k + 2) % 3]];
      const int s = sign(orient2d(a, b, p));
      if (s < 0) return {false, -1, tris_[t].adj[k]};
      if (s == 0) {
        if (zero_edge >= 0) {
          throw TriangulationError("point indistinguishable from an existing vertex");
        }
        zero_edge = k;
      }
    }
    return {true, zero_edge, -1};
  }

  Location locate(const Vec2& p, int hint) const {
    int t = hint;
    const std::size_t cap = 4 * tris_.size() + 64;
    for (std::size_t steps = 0; steps < cap; ++steps) {
      const Classify c = classify(t, p);
      if (c.inside) return {t, c.edge};
      if (c.next < 0) throw TriangulationError("walked out of the triangulation");
      t = c.next;
    }
    // The walk cycled on a near-degenerate configuration; scan everything.
    for (int s = 0; s < static_cast<int>(tris_.size()); ++s) {
      const Classify c = classify(s, p);
      if (c.inside) return {s, c.edge};
    }
    throw TriangulationError("point location failed");
  }

  void insert(int ip) {
    const Location loc = locate(pts_[ip], hint_);
    if (loc.on_edge < 0) {
      split_inside(loc.tri, ip);
    } else {
      split_on_edge(loc.tri, loc.on_edge, ip);
    }
    legalize_all();
    hint_ = static_cast<int>(tris_.size()) - 1;
  }

  void split_inside(int t, int ip) {
    const Tri old = tris_[t];
    const int t0 = t;
    const int t1 = static_cast<int>(tris_.size());
    const int t2 = t1 + 1;
    tris_[t0] = Tri{{ip, old.v[1], old.v[2]}, {old.adj[0], t1, t2}};
    tris_.push_back(Tri{{ip, old.v[2], old.v[0]}, {old.adj[1], t2, t0}});
    tris_.push_back(Tri{{ip, old.v[0], old.v[1]}, {old.adj[2], t0, t1}});
    relink(old.adj[1], t, t1);
    relink(old.adj[2], t, t2);
    push_suspect(t0, 0);
    push_suspect(t1, 0);
    push_suspect(t2, 0);
  }

  void split_on_edge(int t, int k, int ip) {
    const int u = tris_[t].adj[k];
    if (u < 0) throw TriangulationError("point on the outer helper boundary");
    const Tri told = tris_[t];
    const Tri uold = tris_[u];
    const int A = told.v[k];
    const int B = told.v[(k + 1) % 3];
    const int C = told.v[(k + 2) % 3];
    const int m = opposite_index(u, t);
    const int D = uold.v[m];

    const int tA1 = t;  // (A, B, ip)
    const int tD1 = u;  // (D, C, ip)
    const int tA2 = static_cast<int>(tris_.size());  // (A, ip, C)
    const int tD2 = tA2 + 1;                         // (D, ip, B)

    const int adjB = told.adj[(k + 1) % 3];      // across (C, A)
    const int adjC = told.adj[(k + 2) % 3];      // across (A, B)
    const int uB = uold.adj[index_in(uold, B)];  // across (D, C)
    const int uC = uold.adj[index_in(uold, C)];  // across (B, D)

    tris_[tA1] = Tri{{A, B, ip}, {tD2, tA2, adjC}};
    tris_[tD1] = Tri{{D, C, ip}, {tA2, tD2, uB}};
    tris_.push_back(Tri{{A, ip, C}, {tD1, adjB, tA1}});
    tris_.push_back(Tri{{D, ip, B}, {tA1, uC, tD1}});
    relink(adjB, t, tA2);
    relink(uC, u, tD2);
    push_suspect(tA1, 2);
    push_suspect(tD1, 2);
    push_suspect(tA2, 1);
    push_suspect(tD2, 1);
  }

  static int index_in(const Tri& t, int v) {
    for (int k = 0; k < 3; ++k) {
      if (t.v[k] == v) return k;
    }
    throw TriangulationError("inconsistent adjacency");
  }

  int opposite_index(int u, int t) const {
    for (int k = 0; k < 3; ++k) {
      if (tris_[u].adj[k] == t) return k;
    }
    throw TriangulationError("inconsistent adjacency");
  }

  void relink(int tri, int from, int to) {
    if (tri < 0) return;
    for (int k = 0; k < 3; ++k) {
      if (tris_[tri].adj[k] == from) {
        tris_[tri].adj[k] = to;
        return;
      }
    }
    throw TriangulationError("inconsistent adjacency");
  }

  void push_suspect(int tri, int k) { stack_.push_back({tri, k}); }

  void legalize_all() {
    while (!stack_.empty()) {
      auto [t, k] = stack_.back();
      stack_.pop_back();
      const int u = tris_[t].adj[k];
      if (u < 0) continue;
      const int m = opposite_index(u, t);
      const int d = tris_[u].v[m];
      const Tri& tt = tris_[t];
      const InCircleResult ic = incircle(pts_[tt.v[0]], pts_[tt.v[1]], pts_[tt.v[2]], pts_[d]);
      if (ic.det > ic.err) flip(t, k, u, m);
    }
  }

  // Flips the edge shared by t (apex index k) and u (apex index m). After the
  // flip t = (a, b, d) and u = (a, d, c); both suspect edges face apex a.
  void flip(int t, int k, int u, int m) {
    const Tri told = tris_[t];
    const Tri uold = tris_[u];
    const int a = told.v[k];
    const int b = told.v[(k + 1) % 3];
    const int c = told.v[(k + 2) % 3];
    const int d = uold.v[m];

    const int X = told.adj[(k + 1) % 3];  // across (c, a)
    const int Y = told.adj[(k + 2) % 3];  // across (a, b)
    const int P = uold.adj[index_in(uold, c)];  // across (b, d)
    const int Q = uold.adj[index_in(uold, b)];  // across (d, c)

    tris_[t] = Tri{{a, b, d}, {P, u, Y}};
    tris_[u] = Tri{{a, d, c}, {Q, X, t}};
    relink(P, u, t);
    relink(X, t, u);
    push_suspect(t, 0);
    push_suspect(u, 0);
  }

  std::vector<std::vector<int>> cocircular_clusters() const {
    std::vector<int> parent(tris_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> flagged(tris_.size(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
      for (int k = 0; k < 3; ++k) {
        const int u = tris_[t].adj[k];
        if (u < t) continue;  // each internal edge once
        const int m = opposite_index(u, t);
        const Tri& tt = tris_[t];
        const InCircleResult ic =
            incircle(pts_[tt.v[0]], pts_[tt.v[1]], pts_[tt.v[2]], pts_[tris_[u].v[m]]);
        if (std::abs(ic.det) <= kDegenerateRel * ic.permanent) {
          flagged[t] = flagged[u] = 1;
          parent[find(t)] = find(u);
        }
      }
    }
    std::vector<std::vector<int>> verts_of(tris_.size());
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
      if (!flagged[t]) continue;
      auto& bucket = verts_of[find(t)];
      for (int v : tris_[t].v) {
        if (v < n_) bucket.push_back(v);
      }
    }
    std::vector<std::vector<int>> clusters;
    for (auto& bucket : verts_of) {
      if (bucket.empty()) continue;
      std::sort(bucket.begin(), bucket.end());
      bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
      if (bucket.size() >= 2) clusters.push_back(std::move(bucket));
    }
    return clusters;
  }

  int n_;
  std::vector<Vec2> pts_;
  std::vector<Tri> tris_;
  std::vector<std::pair<int, int>> stack_;
  int hint_ = 0;
};

}  // namespace

Delaunay delaunay_triangulation(std::span<const Vec2> points, double far_radius) {
  for (const Vec2& p : points) {
    if (!is_finite(p)) throw std::invalid_argument("delaunay: non-finite point");
  }
  if (points.size() < 2) return {};
  if (!(far_radius > 0.0) || !std::isfinite(far_radius)) {
    throw std::invalid_argument("delaunay: invalid far_radius");
  }
  Builder builder(points, far_radius);
  return builder.result();
}

}  // namespace alphaperim
