#include "cylinder.hpp"

#include <algorithm>
#include <cmath>

#include "shogi/error.hpp"

namespace shogi::detail {

Cylinder::Cylinder(Displacement t, long long lo, long long hi)
    : t_(t), norm_(static_cast<long long>(t.dx) * t.dx + static_cast<long long>(t.dy) * t.dy), lo_(lo), hi_(hi) {
  if (t.is_zero()) throw Error("zero period");
  // Reduced cells satisfy 0 <= c.t < |t|^2; with lo <= c x t <= hi they fill
  // a parallelogram whose corners bound the dense grid.
  double xs[4], ys[4];
  int k = 0;
  for (long long u : {0LL, norm_}) {
    for (long long s : {lo, hi}) {
      xs[k] = static_cast<double>(u * t.dx + s * t.dy) / static_cast<double>(norm_);
      ys[k] = static_cast<double>(u * t.dy - s * t.dx) / static_cast<double>(norm_);
      ++k;
    }
  }
  x0_ = static_cast<int>(std::floor(*std::min_element(xs, xs + 4))) - 1;
  y0_ = static_cast<int>(std::floor(*std::min_element(ys, ys + 4))) - 1;
  width_ = static_cast<int>(std::ceil(*std::max_element(xs, xs + 4))) + 2 - x0_;
  height_ = static_cast<int>(std::ceil(*std::max_element(ys, ys + 4))) + 2 - y0_;
  grid_.assign(static_cast<std::size_t>(width_) * height_, -1);
  for (int x = x0_; x < x0_ + width_; ++x) {
    for (int y = y0_; y < y0_ + height_; ++y) {
      const Cell c{x, y};
      const long long dot = static_cast<long long>(x) * t.dx + static_cast<long long>(y) * t.dy;
      if (dot < 0 || dot >= norm_ || !in_band(c)) continue;
      grid_[static_cast<std::size_t>(x - x0_) * height_ + (y - y0_)] = static_cast<int>(cells_.size());
      cells_.push_back(c);
    }
  }
}

Cell Cylinder::reduce(Cell c) const {
  const long long dot = static_cast<long long>(c.x) * t_.dx + static_cast<long long>(c.y) * t_.dy;
  long long k = dot / norm_;
  if (dot % norm_ != 0 && dot < 0) --k;
  return {static_cast<int>(c.x - k * t_.dx), static_cast<int>(c.y - k * t_.dy)};
}

int Cylinder::index(Cell r) const {
  const int gx = r.x - x0_, gy = r.y - y0_;
  if (gx < 0 || gy < 0 || gx >= width_ || gy >= height_) return -1;
  return grid_[static_cast<std::size_t>(gx) * height_ + gy];
}

}  // namespace shogi::detail
