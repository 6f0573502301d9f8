#pragma once

// Brute-force reference on a finite board: the periodic pattern is stamped a
// fixed number of times and every definition is applied literally. Slow by
// design; used for cross-checking the periodic engine.

#include <map>
#include <set>
#include <vector>

#include "shogi/board.hpp"
#include "shogi/control.hpp"
#include "shogi/pattern.hpp"

namespace shogi::oracle {

struct FiniteBoard {
  std::map<Cell, PlacedPiece> occupancy;
  int x_min = 0, x_max = 0, y_min = 0, y_max = 0;  // inclusive
  Displacement period;
  /// Range of c x t over the stamped pieces.
  long long s_min = 0, s_max = 0;
  /// Range of c . t over the stamped pieces. Flood fills stay within it:
  /// past the last copy the finite board no longer looks periodic.
  long long u_min = 0, u_max = 0;

  bool inside(Cell c) const { return c.x >= x_min && c.x <= x_max && c.y >= y_min && c.y <= y_max; }
};

/// Stamps the motif at k*t for |k| <= (copies-1)/2. Throws unless copies is
/// odd and at least 9.
FiniteBoard replicate(const PeriodicPattern& p, int copies);

/// Every board cell some piece can move to.
std::set<Cell> brute_control(const FiniteBoard& b, const KindRegistry& registry = KindRegistry::standard());

/// Region class of every neighborhood cell on the board.
std::map<Cell, RegionClass> brute_partition(const FiniteBoard& b);

/// Cells c of the central copy (0 <= c.t < t.t) whose c x t lies within
/// the stamped band widened by |t.dx| + |t.dy|.
std::vector<Cell> central_window(const FiniteBoard& b);

/// Verdict from the neighborhood cells of `window`. Throws when the window
/// reaches the board edge.
NccStatus brute_ncc(const FiniteBoard& b, const std::vector<Cell>& window,
                    const KindRegistry& registry = KindRegistry::standard());

}  // namespace shogi::oracle
