#include "shogi/board.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "shogi/error.hpp"

namespace shogi {

namespace {

void sort_unique(std::vector<Displacement>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Displacement> transformed(const std::vector<Displacement>& v, int sx, int sy) {
  std::vector<Displacement> out;
  out.reserve(v.size());
  for (auto d : v) out.push_back({sx * d.dx, sy * d.dy});
  return out;
}

struct StandardInfo {
  const char* name;
  char letter;
};

constexpr std::array<StandardInfo, 8> kStandard{{
    {"pawn", 'P'},
    {"lance", 'L'},
    {"knight", 'N'},
    {"silver", 'S'},
    {"gold", 'G'},
    {"bishop", 'B'},
    {"rook", 'R'},
    {"king", 'K'},
}};

}  // namespace

std::string_view to_string(Orientation o) { return o == Orientation::Up ? "Up" : "Down"; }

const std::vector<PieceKind>& table_kind_order() {
  static const std::vector<PieceKind> order{kinds::Knight, kinds::Pawn,  kinds::Lance,
                                            kinds::Bishop, kinds::Silver, kinds::Gold,
                                            kinds::Rook,   kinds::King};
  return order;
}

Moveset Moveset::make(std::vector<Displacement> steps, std::vector<Displacement> rides) {
  for (auto d : steps)
    if (d.is_zero()) throw Error("malformed moveset: (0,0) step");
  for (auto d : rides)
    if (!d.is_unit()) throw Error("malformed moveset: ride direction must be a unit vector");
  Moveset m;
  m.steps_ = std::move(steps);
  m.rides_ = std::move(rides);
  sort_unique(m.steps_);
  sort_unique(m.rides_);
  return m;
}

Moveset Moveset::rotated180() const {
  return make(transformed(steps_, -1, -1), transformed(rides_, -1, -1));
}

Moveset Moveset::mirrored_updown() const {
  return make(transformed(steps_, 1, -1), transformed(rides_, 1, -1));
}

Moveset Moveset::mirrored_leftright() const {
  return make(transformed(steps_, -1, 1), transformed(rides_, -1, 1));
}

Moveset standard_moveset(PieceKind kind) {
  switch (kind.id()) {
    case kinds::Pawn.id():
      return Moveset::make({{0, 1}}, {});
    case kinds::Lance.id():
      return Moveset::make({}, {{0, 1}});
    case kinds::Knight.id():
      return Moveset::make({{-1, 2}, {1, 2}}, {});
    case kinds::Silver.id():
      return Moveset::make({{0, 1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}}, {});
    case kinds::Gold.id():
      return Moveset::make({{0, 1}, {1, 1}, {-1, 1}, {1, 0}, {-1, 0}, {0, -1}}, {});
    case kinds::Bishop.id():
      return Moveset::make({}, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    case kinds::Rook.id():
      return Moveset::make({}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    case kinds::King.id():
      return Moveset::make(
          {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}, {});
    default:
      throw Error("unregistered kind");
  }
}

bool has_horizontal_mirror_symmetry(const Moveset& m) { return m.mirrored_updown() == m; }

KindRegistry::KindRegistry() {
  for (std::uint16_t id = 0; id < kStandard.size(); ++id) {
    Moveset up = standard_moveset(PieceKind{id});
    Moveset down = up.rotated180();
    entries_.push_back({kStandard[id].name, kStandard[id].letter, std::move(up), std::move(down)});
  }
}

const KindRegistry& KindRegistry::standard() {
  static const KindRegistry registry;
  return registry;
}

PieceKind KindRegistry::register_custom(std::string name, Moveset moveset, char letter) {
  if (name.empty()) throw Error("custom kind needs a name");
  if (find_by_name(name)) throw Error("duplicate kind name: " + name);
  if (letter != 0) {
    if (!std::isupper(static_cast<unsigned char>(letter)))
      throw Error("kind letter must be an uppercase ASCII letter");
    if (find_by_letter(letter)) throw Error(std::string("duplicate kind letter: ") + letter);
  }
  Moveset down = moveset.rotated180();
  entries_.push_back({std::move(name), letter, std::move(moveset), std::move(down)});
  return PieceKind{static_cast<std::uint16_t>(entries_.size() - 1)};
}

KindRegistry KindRegistry::with_moveset(PieceKind kind, Moveset moveset) const {
  KindRegistry copy = *this;
  if (!copy.contains(kind)) throw Error("unregistered kind");
  auto& e = copy.entries_[kind.id()];
  e.down = moveset.rotated180();
  e.up = std::move(moveset);
  return copy;
}

const KindRegistry::Entry& KindRegistry::entry(PieceKind kind) const {
  if (!contains(kind)) throw Error("unregistered kind");
  return entries_[kind.id()];
}

const Moveset& KindRegistry::moveset(PieceKind kind) const { return entry(kind).up; }

const Moveset& KindRegistry::oriented_moveset(PieceKind kind, Orientation o) const {
  const auto& e = entry(kind);
  return o == Orientation::Up ? e.up : e.down;
}

const std::string& KindRegistry::name(PieceKind kind) const { return entry(kind).name; }

char KindRegistry::letter(PieceKind kind) const { return entry(kind).letter; }

std::optional<PieceKind> KindRegistry::find_by_name(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == name) return PieceKind{static_cast<std::uint16_t>(i)};
  return std::nullopt;
}

std::optional<PieceKind> KindRegistry::find_by_letter(char letter) const {
  if (letter == 0) return std::nullopt;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].letter == letter) return PieceKind{static_cast<std::uint16_t>(i)};
  return std::nullopt;
}

std::vector<PieceKind> KindRegistry::all_kinds() const {
  std::vector<PieceKind> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.emplace_back(static_cast<std::uint16_t>(i));
  return out;
}

std::vector<PieceKind> KindRegistry::custom_kinds() const {
  std::vector<PieceKind> out;
  for (std::size_t i = kStandard.size(); i < entries_.size(); ++i)
    out.emplace_back(static_cast<std::uint16_t>(i));
  return out;
}

bool KindRegistry::all_leftright_symmetric() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.up.mirrored_leftright() == e.up; });
}

Moveset oriented_moveset(PieceKind kind, Orientation o, const KindRegistry& registry) {
  return registry.oriented_moveset(kind, o);
}

}  // namespace shogi
