// Uniform bucket grid for fixed-radius point queries. Built once over an
// immutable point set; queries may run concurrently.
#ifndef ALPHAPERIM_SPATIAL_GRID_HPP
#define ALPHAPERIM_SPATIAL_GRID_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "alphaperim/geometry.hpp"

namespace alphaperim {

class PointGrid {
 public:
  PointGrid(std::span<const Vec2> points, double cell_size)
      : points_(points), cell_(cell_size > 0.0 ? cell_size : 1.0) {
    if (points_.empty()) {
      nx_ = ny_ = 0;
      return;
    }
    double min_x = points_[0].x(), max_x = min_x;
    double min_y = points_[0].y(), max_y = min_y;
    for (const Vec2& p : points_) {
      min_x = std::min(min_x, p.x());
      max_x = std::max(max_x, p.x());
      min_y = std::min(min_y, p.y());
      max_y = std::max(max_y, p.y());
    }
    origin_ = Vec2(min_x, min_y);
    nx_ = static_cast<int>(std::floor((max_x - min_x) / cell_)) + 1;
    ny_ = static_cast<int>(std::floor((max_y - min_y) / cell_)) + 1;

    std::vector<int> counts(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
    std::vector<int> cell_of(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      cell_of[i] = cell_index(points_[i]);
      ++counts[cell_of[i] + 1];
    }
    for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
    offsets_ = std::move(counts);
    order_.resize(points_.size());
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < points_.size(); ++i) {
      order_[cursor[cell_of[i]]++] = static_cast<int>(i);
    }
  }

  /// True iff some point lies strictly within `radius` of `center`.
  bool any_within(const Vec2& center, double radius) const {
    bool found = false;
    visit_cells(center, radius, [&](int cell) {
      const double r2 = radius * radius;
      for (int k = offsets_[cell]; k < offsets_[cell + 1]; ++k) {
        if ((points_[order_[k]] - center).squaredNorm() < r2) {
          found = true;
          return false;
        }
      }
      return true;
    });
    return found;
  }

  /// Visits the index of every point strictly within `radius` of `center`.
  template <class F>
  void for_each_within(const Vec2& center, double radius, F&& f) const {
    const double r2 = radius * radius;
    visit_cells(center, radius, [&](int cell) {
      for (int k = offsets_[cell]; k < offsets_[cell + 1]; ++k) {
        const int idx = order_[k];
        if ((points_[idx] - center).squaredNorm() < r2) f(idx);
      }
      return true;
    });
  }

 private:
  int cell_index(const Vec2& p) const {
    int ix = static_cast<int>(std::floor((p.x() - origin_.x()) / cell_));
    int iy = static_cast<int>(std::floor((p.y() - origin_.y()) / cell_));
    ix = std::clamp(ix, 0, nx_ - 1);
    iy = std::clamp(iy, 0, ny_ - 1);
    return iy * nx_ + ix;
  }

  // Visits every grid cell overlapping the disk's bounding box, starting with
  // the cell containing the center (interior emptiness queries exit there
  // almost immediately). Callback returns false to stop.
  template <class Visit>
  void visit_cells(const Vec2& center, double radius, Visit&& visit) const {
    if (nx_ == 0) return;
    const int ix0 = std::clamp(
        static_cast<int>(std::floor((center.x() - radius - origin_.x()) / cell_)), 0, nx_ - 1);
    const int ix1 = std::clamp(
        static_cast<int>(std::floor((center.x() + radius - origin_.x()) / cell_)), 0, nx_ - 1);
    const int iy0 = std::clamp(
        static_cast<int>(std::floor((center.y() - radius - origin_.y()) / cell_)), 0, ny_ - 1);
    const int iy1 = std::clamp(
        static_cast<int>(std::floor((center.y() + radius - origin_.y()) / cell_)), 0, ny_ - 1);
    const int home = cell_index(center);
    if (!visit(home)) return;
    for (int iy = iy0; iy <= iy1; ++iy) {
      for (int ix = ix0; ix <= ix1; ++ix) {
        const int cell = iy * nx_ + ix;
        if (cell == home) continue;
        if (!visit(cell)) return;
      }
    }
  }

  std::span<const Vec2> points_;
  double cell_;
  Vec2 origin_{0.0, 0.0};
  int nx_ = 0, ny_ = 0;
  std::vector<int> offsets_;
  std::vector<int> order_;
};

}  // namespace alphaperim

#endif  // ALPHAPERIM_SPATIAL_GRID_HPP
