#pragma once

// Plain-text pattern files.
//
//   # comment
//   period: <dx> <dy>
//   origin: <x> <y>                       (bottom-left grid cell, default 0 0)
//   kind: <letter> <name> steps=<(dx,dy);...> rides=<(dx,dy);...>
//   grid:
//   <row, top row first, tokens separated by one space>
//   decor: <x> <y> <n|ne|e|se|s|sw|w|nw>
//
// Grid tokens are `..` or a kind letter followed by `^` (Up) or `v` (Down).

#include <optional>
#include <string>
#include <string_view>

#include "shogi/board.hpp"
#include "shogi/pattern.hpp"

namespace shogi {

struct PatternDocument {
  PeriodicPattern pattern;
  /// Standard kinds plus any `kind:` definitions of the file.
  KindRegistry kinds;
};

/// Throws ParseError. The returned pattern is canonical.
PatternDocument parse_pattern(std::string_view text,
                              const KindRegistry& base = KindRegistry::standard());

/// Byte-stable text of a canonical pattern (LF endings, no trailing spaces).
std::string serialize_pattern(const PeriodicPattern& p,
                              const KindRegistry& kinds = KindRegistry::standard());

PatternDocument load_pattern_file(const std::string& path,
                                  const KindRegistry& base = KindRegistry::standard());
void save_pattern_file(const std::string& path, const PeriodicPattern& p,
                       const KindRegistry& kinds = KindRegistry::standard());

std::string_view direction_name(Displacement unit);
std::optional<Displacement> parse_direction(std::string_view name);

}  // namespace shogi
