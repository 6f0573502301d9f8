#pragma once

// Neighborhood, region partition and control of periodic patterns, and the
// (nearly) complete neighborhood control verdicts.
//
// Everything is computed on the quotient lattice Z^2 / <t>. Sliding moves
// stop before an ally (same orientation) and on an enemy, which they capture.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shogi/board.hpp"
#include "shogi/pattern.hpp"

namespace shogi {

enum class RegionClass : std::uint8_t { Inside, Base, Outside };

std::string_view to_string(RegionClass r);

/// Unbounded ray content: every cell anchor + k*direction, k >= 1.
struct FreeLine {
  Cell anchor;
  Displacement direction;

  friend constexpr auto operator<=>(const FreeLine&, const FreeLine&) = default;
};

/// A t-periodic set of cells, stored as sorted reduced representatives.
struct PeriodicCellSet {
  std::vector<Cell> classes;
  Displacement period;
  std::vector<FreeLine> free_lines;

  bool contains(Cell c) const;
  friend bool operator==(const PeriodicCellSet&, const PeriodicCellSet&) = default;
};

enum class RayEnd : std::uint8_t { BlockedByAlly, CaptureEnemy, FreeInfinite };

std::string_view to_string(RayEnd e);

struct RayResult {
  /// Plane cells reached, in marching order. Includes a captured enemy cell;
  /// for FreeInfinite, the cells inside the pattern's evaluation band.
  std::vector<Cell> cells;
  RayEnd end = RayEnd::FreeInfinite;
  /// Occupied cell that ended the ray, if any.
  std::optional<Cell> stop;
};

enum class Verdict : std::uint8_t { Complete, NearlyComplete, Fails };

struct NccStatus {
  Verdict verdict = Verdict::Fails;
  /// Present iff NearlyComplete: the region class that is exactly uncontrolled.
  std::optional<RegionClass> uncontrolled;
  /// Present iff Fails: a reduced neighborhood cell violating the condition.
  std::optional<Cell> witness;

  /// Complete or NearlyComplete.
  bool satisfies_nearly_complete() const { return verdict != Verdict::Fails; }
  friend bool operator==(const NccStatus&, const NccStatus&) = default;
};

/// `Complete`, `NearlyComplete:<Inside|Base|Outside>` or `Fails@(x,y)`.
std::string to_string(const NccStatus& s);

/// Union of the 8-neighborhoods of all occupied cells.
PeriodicCellSet neighborhood(const PeriodicPattern& p);

/// Base: occupied; Inside: empty and 4-connected to no cell outside the
/// pattern's perpendicular band; Outside: the rest.
std::map<Cell, RegionClass> partition_neighborhood(const PeriodicPattern& p);

/// Marches origin+dir, origin+2*dir, ... for a rider of the given orientation.
/// Throws on a non-unit direction.
RayResult ray_march(const PeriodicPattern& p, Cell origin, Displacement dir, Orientation origin_orientation);

PeriodicCellSet control_of_pattern(const PeriodicPattern& p,
                                   const KindRegistry& registry = KindRegistry::standard());

NccStatus ncc_status(const PeriodicPattern& p, const KindRegistry& registry = KindRegistry::standard());

/// Shape-dependent data (neighborhood, partition) computed once and reused
/// for many kind assignments of the same cells and orientations.
class NeighborhoodAnalysis {
 public:
  explicit NeighborhoodAnalysis(const PeriodicPattern& p);
  explicit NeighborhoodAnalysis(const Form& f);

  /// Canonical shape the analysis was built from (kinds are placeholders).
  const PeriodicPattern& pattern() const;
  PeriodicCellSet neighborhood() const;
  std::map<Cell, RegionClass> partition() const;

  /// Verdict with `kinds[i]` placed on the i-th motif cell of pattern().
  NccStatus evaluate(std::span<const PieceKind> kinds, const KindRegistry& registry) const;
  NccStatus evaluate(PieceKind uniform, const KindRegistry& registry = KindRegistry::standard()) const;

  /// Neighborhood cells controlled, split by region: for each class, whether
  /// all of its cells are controlled (classes with no cells report true).
  std::map<RegionClass, bool> controlled_regions(std::span<const PieceKind> kinds,
                                                 const KindRegistry& registry) const;

  PeriodicCellSet control(std::span<const PieceKind> kinds, const KindRegistry& registry) const;

  struct Impl;

 private:
  friend RayResult ray_march(const PeriodicPattern&, Cell, Displacement, Orientation);

  std::shared_ptr<const Impl> impl_;
};

}  // namespace shogi
