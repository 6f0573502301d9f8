#pragma once

// Text and SVG pictures of a periodic pattern.
//
// ASCII: one line per row, top row first, three-character tokens separated by
// single spaces. A token is the piece (`K^`, `Gv`, ...) or the region letter
// (`i` inside, `b` base, `o` outside, `:` neighborhood when the partition
// layer is off, `.` otherwise) followed by `.`, then `*` when the cell is
// controlled or `.`.
//
// SVG: 32 units per cell, x to the right, rows emitted top first (y flipped).

#include <string>

#include "shogi/board.hpp"
#include "shogi/pattern.hpp"

namespace shogi::cli {

struct RenderSpec {
  enum class Format { Ascii, Svg };
  Format format = Format::Ascii;
  bool pieces = true;
  bool neighborhood = false;
  bool partition = false;
  bool control = false;
  int periods = 3;
};

/// Throws shogi::Error on periods < 1.
std::string render(const PeriodicPattern& p, const KindRegistry& kinds, const RenderSpec& spec);

}  // namespace shogi::cli
