#pragma once

// Dense indexing of the quotient lattice Z^2 / <t> restricted to a band of
// perpendicular coordinates. Internal to the periodic engine.

#include <optional>
#include <vector>

#include "shogi/pattern.hpp"

namespace shogi::detail {

/// Perpendicular coordinate c x t; constant on translation classes.
inline long long perp(Cell c, Displacement t) {
  return static_cast<long long>(c.x) * t.dy - static_cast<long long>(c.y) * t.dx;
}

/// Largest |e x t| over the eight unit steps e.
inline long long unit_perp_reach(Displacement t) { return std::abs(t.dx) + std::abs(t.dy); }

class Cylinder {
 public:
  /// Classes whose perpendicular coordinate lies in [lo, hi].
  Cylinder(Displacement t, long long lo, long long hi);

  Displacement period() const { return t_; }
  Cell reduce(Cell c) const;
  bool in_band(Cell c) const {
    const long long s = perp(c, t_);
    return s >= lo_ && s <= hi_;
  }
  /// Dense index of a reduced in-band cell; -1 otherwise.
  int index(Cell reduced) const;
  /// Index of the class of an arbitrary cell; -1 when out of band.
  int index_of(Cell any) const { return in_band(any) ? index(reduce(any)) : -1; }
  Cell cell(int index) const { return cells_[index]; }
  int size() const { return static_cast<int>(cells_.size()); }

 private:
  Displacement t_;
  long long norm_;
  long long lo_, hi_;
  int x0_ = 0, y0_ = 0, width_ = 0, height_ = 0;
  std::vector<int> grid_;
  std::vector<Cell> cells_;
};

}  // namespace shogi::detail
