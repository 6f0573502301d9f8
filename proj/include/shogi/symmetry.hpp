#pragma once

// Lattice isometries acting on periodic patterns and frieze-group
// classification.
//
// Only isometries that send Up/Down pieces to Up/Down pieces are modelled:
// translations, half turns, and mirrors in horizontal or vertical lines
// (with their glides). A half turn or a mirror in a horizontal line swaps
// Up and Down; decorations follow the linear part.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shogi/pattern.hpp"

namespace shogi {

enum class FriezeGroup : std::uint8_t { p1, p11g, p1m1, p11m, p2, p2mg, p2mm };

std::string_view to_string(FriezeGroup g);
std::optional<FriezeGroup> parse_frieze_group(std::string_view label);

/// Row order of the correspondence table: p2mm, p2, p1m1, p11m, p2mg, p1, p11g.
const std::vector<FriezeGroup>& table_group_order();

enum class LinearPart : std::uint8_t {
  Identity,
  HalfTurn,  // (x, y) -> (-x, -y)
  MirrorX,   // (x, y) -> (-x, y): mirror in a vertical line
  MirrorY,   // (x, y) -> (x, -y): mirror in a horizontal line
};

/// The map c -> L(c) + offset. Integer offsets keep cells on cells; mirror
/// axes and rotation centres therefore sit on the half-integer grid.
class Isometry {
 public:
  Isometry(LinearPart linear, Displacement offset) : linear_(linear), offset_(offset) {}

  static Isometry translate(Displacement v) { return {LinearPart::Identity, v}; }
  /// Coordinates must be multiples of 1/2; throws otherwise.
  static Isometry rotate180(double center_x, double center_y);
  static Isometry reflect_h(double axis_y);
  static Isometry reflect_v(double axis_x);
  static Isometry glide_h(double axis_y, int shift);
  static Isometry glide_v(double axis_x, int shift);

  LinearPart linear() const { return linear_; }
  Displacement offset() const { return offset_; }

  Displacement map_vector(Displacement d) const;
  Cell map(Cell c) const;
  bool flips_orientation() const {
    return linear_ == LinearPart::HalfTurn || linear_ == LinearPart::MirrorY;
  }

  /// e.g. "reflect-h y=0.5", "glide-h y=0 shift=2", "rotate180 (1,0.5)".
  std::string describe() const;

  friend bool operator==(const Isometry&, const Isometry&) = default;

 private:
  LinearPart linear_;
  Displacement offset_;
};

/// Image of `p` under `sigma`, canonicalized.
PeriodicPattern apply(const Isometry& sigma, const PeriodicPattern& p);

bool is_symmetry(const PeriodicPattern& p, const Isometry& sigma);

/// Frieze roles relative to the translation axis: h = mirror line parallel
/// to it, v = mirror line perpendicular to it, g = glide that is not a
/// mirror, r = half turn.
struct SymmetryFlags {
  bool h = false;
  bool v = false;
  bool g = false;
  bool r = false;

  friend bool operator==(const SymmetryFlags&, const SymmetryFlags&) = default;
};

struct SymmetryWitness {
  char role;  // 'h', 'v', 'g' or 'r'
  Isometry isometry;

  friend bool operator==(const SymmetryWitness&, const SymmetryWitness&) = default;
};

struct SymmetryReport {
  SymmetryFlags flags;
  /// Ordered h, v, g, r; ascending axis coordinate within a role. Mirror
  /// axes and centres are listed within one period.
  std::vector<SymmetryWitness> witnesses;
};

SymmetryReport detect_symmetries(const PeriodicPattern& p);

/// Decision table over the flags. Throws std::logic_error on an impossible
/// flag combination.
FriezeGroup classify_flags(const SymmetryFlags& flags);

FriezeGroup classify_frieze(const PeriodicPattern& p);

/// Closure of `basic` under the period and the generators of `g`, using the
/// mirror axes y = 0 and x = 0 (glide shift = half the period). Throws on a
/// non-horizontal period for groups other than p1/p2, on an odd period for
/// groups with a glide, and on orbit collisions.
PeriodicPattern generate_from_recipe(const std::vector<PlacedPiece>& basic, FriezeGroup g, Displacement period);

}  // namespace shogi
