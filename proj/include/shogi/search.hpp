#pragma once

// Bounded exhaustive search over forms with a horizontal period: crystals
// for the correspondence table, special forms, gold/silver dualities and
// moveset substitution experiments.
//
// Enumeration order: period width w = 1, 2, ...; piece count n = 1, 2, ...;
// cell combinations in lexicographic order of (x, y) with 0 <= x < w and
// 0 <= y < box height (at least one cell on y = 0); orientation masks in
// increasing binary order (bit i = Down for the i-th cell); decorations last.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "shogi/board.hpp"
#include "shogi/control.hpp"
#include "shogi/pattern.hpp"
#include "shogi/symmetry.hpp"

namespace shogi {

struct SearchBounds {
  int max_motif_pieces = 4;
  int box_width = 4;
  int box_height = 3;
  int max_period = 4;
  bool allow_up = true;
  bool allow_down = false;
  bool allow_decorations = false;
  std::vector<PieceKind> kinds = table_kind_order();
  /// Stop after this many results; 0 means no limit.
  std::size_t limit = 0;
};

/// Satisfies-nearly-complete flags per kind.
using KindVector = std::map<PieceKind, bool>;

struct CrystalReport {
  Form form;
  FriezeGroup group;
  KindVector vector;
  std::map<PieceKind, NccStatus> details;
};

/// Verdict for each kind with every form cell instantiated to that kind.
/// Throws "unregistered kind".
std::map<PieceKind, NccStatus> ncc_vector(const Form& f, const std::vector<PieceKind>& kinds,
                                          const KindRegistry& registry = KindRegistry::standard());

KindVector satisfies(const std::map<PieceKind, NccStatus>& details);

/// Forms of group exactly `g` whose satisfies flags equal `target` on the
/// target's kinds. With decorations enabled, a form of a larger group is
/// reported once, decorated with the first orbit decoration that lowers its
/// group to `g`.
std::vector<CrystalReport> find_crystal(FriezeGroup g, const KindVector& target, const SearchBounds& b,
                                        const KindRegistry& registry = KindRegistry::standard());

/// Same search space with no orbit or minimal-period pruning and no
/// decorations; results are canonicalized. Reference for differential tests.
std::vector<CrystalReport> find_crystal_naive(FriezeGroup g, const KindVector& target, const SearchBounds& b,
                                              const KindRegistry& registry = KindRegistry::standard());

/// Smallest encoding of a horizontal-period form over x-shifts and the
/// point symmetries that preserve verdicts (half turn when both orientations
/// are allowed; mirrors when every kind is left-right symmetric).
std::vector<int> orbit_key(const Form& f, bool half_turn, bool mirrors);

struct SpecialForm {
  Form form;
  std::map<PieceKind, NccStatus> details;
  /// Per kind: whether each region class is entirely controlled.
  std::map<PieceKind, std::map<RegionClass, bool>> controlled;
};

/// Forms on which every kind of `b.kinds` satisfies the nearly complete
/// condition.
std::vector<SpecialForm> find_special_form(const SearchBounds& b,
                                           const KindRegistry& registry = KindRegistry::standard());

struct DualityExhibit {
  /// (i) gold Complete on `gold_form`, silver NearlyComplete on `silver_form`.
  std::optional<Form> gold_form;
  std::optional<Form> silver_form;
  /// (ii) one placement read twice: gold+rook Complete, silver+bishop
  /// NearlyComplete. Kinds are gold or rook in `gold_rook` and the swapped
  /// kinds in `silver_bishop`.
  std::optional<PeriodicPattern> gold_rook;
  std::optional<PeriodicPattern> silver_bishop;
  std::optional<NccStatus> silver_status;
  std::optional<NccStatus> silver_bishop_status;
};

DualityExhibit find_duality(const SearchBounds& b);

/// Satisfies flags of each fixture (all cells instantiated per kind).
std::map<FriezeGroup, KindVector> satisfies_table(const std::vector<PeriodicPattern>& fixtures,
                                                  const KindRegistry& registry = KindRegistry::standard());

struct TableCell {
  FriezeGroup group;
  PieceKind kind;
  bool before;
  bool after;

  friend bool operator==(const TableCell&, const TableCell&) = default;
};

/// Table cells whose flag changes when `kind` moves according to `moveset`.
/// Fixtures must classify to seven distinct groups. Throws on an
/// unregistered kind.
std::vector<TableCell> fragility_check(const std::vector<PeriodicPattern>& fixtures, PieceKind kind,
                                       const Moveset& moveset,
                                       const KindRegistry& registry = KindRegistry::standard());

}  // namespace shogi
