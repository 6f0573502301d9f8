#pragma once

// Infinite patterns that repeat along one translation vector, stored as a
// finite motif (one piece per translation class) plus the period.

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "shogi/board.hpp"

namespace shogi {

struct Cell {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell operator+(Cell c, Displacement d) { return {c.x + d.dx, c.y + d.dy}; }
constexpr Cell operator-(Cell c, Displacement d) { return {c.x - d.dx, c.y - d.dy}; }
constexpr Displacement operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }

struct CellHash {
  std::size_t operator()(Cell c) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(c.x) << 32) ^
                                  static_cast<unsigned int>(c.y));
  }
};

struct PlacedPiece {
  Cell cell;
  PieceKind kind;
  Orientation orientation = Orientation::Up;
  /// Symmetry-only arrow; never affects movement.
  std::optional<Displacement> decoration;

  friend bool operator==(const PlacedPiece&, const PlacedPiece&) = default;
};

struct PeriodicPattern {
  std::vector<PlacedPiece> motif;
  Displacement period;

  friend bool operator==(const PeriodicPattern&, const PeriodicPattern&) = default;
};

/// Kind-free shape of a pattern.
struct FormCell {
  Cell cell;
  Orientation orientation = Orientation::Up;
  std::optional<Displacement> decoration;

  friend bool operator==(const FormCell&, const FormCell&) = default;
};

struct Form {
  std::vector<FormCell> cells;
  Displacement period;

  friend bool operator==(const Form&, const Form&) = default;
};

/// Representative of `cell`'s class modulo `t`: cell - k*t with
/// k = floor((cell . t) / (t . t)). Throws on zero t.
Cell reduce(Cell cell, Displacement t);

/// Representative period: dx > 0, or dx == 0 and dy > 0.
Displacement canonical_direction(Displacement t);

/// Reduces every motif cell, collapses identical duplicates, shrinks the
/// period to the minimal translation and sorts the motif by cell.
/// Throws "inconsistent motif" for conflicting duplicates, and on an empty
/// motif, zero period or non-unit decoration.
PeriodicPattern canonicalize(PeriodicPattern p);

bool is_canonical(const PeriodicPattern& p);

/// Piece occupying `c` (cell field set to `c`), if any.
std::optional<PlacedPiece> occupant(const PeriodicPattern& p, Cell c);

/// Orientations swapped and decorations rotated by 180 degrees.
PeriodicPattern dual(const PeriodicPattern& p);

Form form_of(const PeriodicPattern& p);
PeriodicPattern instantiate(const Form& f, PieceKind kind);
Form canonicalize(Form f);

}  // namespace shogi
