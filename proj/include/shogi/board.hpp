#pragma once

// Piece kinds, orientations and movesets on the unbounded square lattice.
//
// Coordinates: x grows to the right, y grows upward. An Up piece moves
// "forward" towards +y; a Down piece uses the 180-degree rotated frame.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shogi {

struct Displacement {
  int dx = 0;
  int dy = 0;

  friend constexpr auto operator<=>(const Displacement&, const Displacement&) = default;

  constexpr Displacement operator-() const { return {-dx, -dy}; }
  constexpr bool is_zero() const { return dx == 0 && dy == 0; }
  /// One of the eight king-step vectors.
  constexpr bool is_unit() const {
    return !is_zero() && dx >= -1 && dx <= 1 && dy >= -1 && dy <= 1;
  }
};

constexpr Displacement operator*(int k, Displacement d) { return {k * d.dx, k * d.dy}; }

enum class Orientation : std::uint8_t { Up, Down };

constexpr Orientation flipped(Orientation o) {
  return o == Orientation::Up ? Orientation::Down : Orientation::Up;
}

std::string_view to_string(Orientation o);

/// Identifies a piece kind. Ids 0..7 are the standard shogi pieces; larger
/// ids are custom kinds owned by a KindRegistry.
class PieceKind {
 public:
  constexpr PieceKind() = default;
  constexpr explicit PieceKind(std::uint16_t id) : id_(id) {}

  constexpr std::uint16_t id() const { return id_; }
  constexpr bool is_standard() const { return id_ < 8; }

  friend constexpr auto operator<=>(const PieceKind&, const PieceKind&) = default;

 private:
  std::uint16_t id_ = 0;
};

namespace kinds {
inline constexpr PieceKind Pawn{0};
inline constexpr PieceKind Lance{1};
inline constexpr PieceKind Knight{2};
inline constexpr PieceKind Silver{3};
inline constexpr PieceKind Gold{4};
inline constexpr PieceKind Bishop{5};
inline constexpr PieceKind Rook{6};
inline constexpr PieceKind King{7};
}  // namespace kinds

/// The eight standard kinds in the column order of the correspondence table
/// (knight, pawn, lance, bishop, silver, gold, rook, king).
const std::vector<PieceKind>& table_kind_order();

/// Step (jump) targets and ride (slide) directions of a piece, expressed in
/// the piece's own Up frame. Both lists are kept sorted and duplicate-free.
class Moveset {
 public:
  Moveset() = default;

  /// Throws shogi::Error when a step is (0,0) or a ride is not a unit vector.
  static Moveset make(std::vector<Displacement> steps, std::vector<Displacement> rides);

  const std::vector<Displacement>& steps() const { return steps_; }
  const std::vector<Displacement>& rides() const { return rides_; }

  /// Both dx and dy negated.
  Moveset rotated180() const;
  /// dy negated.
  Moveset mirrored_updown() const;
  /// dx negated.
  Moveset mirrored_leftright() const;

  friend bool operator==(const Moveset&, const Moveset&) = default;

 private:
  std::vector<Displacement> steps_;
  std::vector<Displacement> rides_;
};

/// Up-frame moveset of one of the eight standard kinds.
Moveset standard_moveset(PieceKind kind);

/// True iff negating dy of every step and ride leaves the moveset unchanged.
bool has_horizontal_mirror_symmetry(const Moveset& m);

/// Owns the kind namespace: the eight standard kinds plus any registered
/// custom kinds. Registries are values; a registry shared by concurrent
/// evaluators must not be mutated.
class KindRegistry {
 public:
  /// Registry holding exactly the standard kinds.
  KindRegistry();

  static const KindRegistry& standard();

  /// Adds a custom kind. `letter` is its pattern-file letter (0 = none).
  /// Throws on duplicate name or letter.
  PieceKind register_custom(std::string name, Moveset moveset, char letter = 0);

  /// Copy of this registry in which `kind` moves according to `moveset`.
  KindRegistry with_moveset(PieceKind kind, Moveset moveset) const;

  bool contains(PieceKind kind) const { return kind.id() < entries_.size(); }
  const Moveset& moveset(PieceKind kind) const;
  const Moveset& oriented_moveset(PieceKind kind, Orientation o) const;
  const std::string& name(PieceKind kind) const;
  char letter(PieceKind kind) const;

  std::optional<PieceKind> find_by_name(std::string_view name) const;
  std::optional<PieceKind> find_by_letter(char letter) const;

  std::vector<PieceKind> all_kinds() const;
  std::vector<PieceKind> custom_kinds() const;

  /// True if every registered kind moves the same as its x-mirror image.
  bool all_leftright_symmetric() const;

 private:
  struct Entry {
    std::string name;
    char letter = 0;
    Moveset up;
    Moveset down;
  };
  const Entry& entry(PieceKind kind) const;

  std::vector<Entry> entries_;
};

/// Moveset of a registered kind in the given orientation.
Moveset oriented_moveset(PieceKind kind, Orientation o,
                         const KindRegistry& registry = KindRegistry::standard());

}  // namespace shogi
