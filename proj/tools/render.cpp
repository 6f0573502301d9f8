#include "render.hpp"

#include <algorithm>
#include <sstream>

#include "shogi/control.hpp"
#include "shogi/error.hpp"

namespace shogi::cli {

namespace {

constexpr int kUnit = 32;

struct Scene {
  int x_min, x_max, y_min, y_max;
  PeriodicPattern pattern;
  std::map<Cell, RegionClass> partition;  // reduced cells
  PeriodicCellSet control;

  std::optional<RegionClass> region(Cell c) const {
    auto it = partition.find(reduce(c, pattern.period));
    if (it == partition.end()) return std::nullopt;
    return it->second;
  }

  bool controlled(Cell c) const {
    if (control.contains(c)) return true;
    const Displacement t = pattern.period;
    const int reach = (x_max - x_min) + (y_max - y_min) + 2;
    for (const auto& line : control.free_lines) {
      const Cell anchor = reduce(line.anchor, t);
      for (int k = 1; k <= reach; ++k)
        if (reduce(c - k * line.direction, t) == anchor) return true;
    }
    return false;
  }
};

Scene build(const PeriodicPattern& input, const KindRegistry& kinds, const RenderSpec& spec) {
  if (spec.periods < 1) throw Error("periods must be at least 1");
  Scene s{0, 0, 0, 0, canonicalize(input), {}, {}};
  const Displacement t = s.pattern.period;
  bool first = true;
  for (int k = 0; k < spec.periods; ++k)
    for (const auto& piece : s.pattern.motif) {
      const Cell c = piece.cell + k * t;
      if (first) {
        s.x_min = s.x_max = c.x;
        s.y_min = s.y_max = c.y;
        first = false;
      }
      s.x_min = std::min(s.x_min, c.x);
      s.x_max = std::max(s.x_max, c.x);
      s.y_min = std::min(s.y_min, c.y);
      s.y_max = std::max(s.y_max, c.y);
    }
  s.x_min -= 2;
  s.x_max += 2;
  s.y_min -= 2;
  s.y_max += 2;
  if (spec.neighborhood || spec.partition) s.partition = partition_neighborhood(s.pattern);
  if (spec.control) s.control = control_of_pattern(s.pattern, kinds);
  return s;
}

char letter_of(const KindRegistry& kinds, PieceKind k) {
  const char c = kinds.letter(k);
  return c == 0 ? '?' : c;
}

char region_letter(RegionClass r) {
  switch (r) {
    case RegionClass::Inside:
      return 'i';
    case RegionClass::Base:
      return 'b';
    case RegionClass::Outside:
      return 'o';
  }
  return '?';
}

std::string ascii(const Scene& s, const KindRegistry& kinds, const RenderSpec& spec) {
  std::ostringstream out;
  for (int y = s.y_max; y >= s.y_min; --y) {
    for (int x = s.x_min; x <= s.x_max; ++x) {
      const Cell c{x, y};
      std::string token = "...";
      const auto piece = occupant(s.pattern, c);
      const auto region = s.region(c);
      if (spec.pieces && piece) {
        token[0] = letter_of(kinds, piece->kind);
        token[1] = piece->orientation == Orientation::Up ? '^' : 'v';
      } else if (region && spec.partition) {
        token[0] = region_letter(*region);
      } else if (region && spec.neighborhood) {
        token[0] = ':';
      }
      if (spec.control && s.controlled(c)) token[2] = '*';
      if (x > s.x_min) out << ' ';
      out << token;
    }
    out << '\n';
  }
  return out.str();
}

std::string fill_of(RegionClass r) {
  switch (r) {
    case RegionClass::Inside:
      return "#9ecbff";
    case RegionClass::Base:
      return "#c8a27a";
    case RegionClass::Outside:
      return "#bfe8bf";
  }
  return "#ffffff";
}

std::string svg(const Scene& s, const KindRegistry& kinds, const RenderSpec& spec) {
  const int w = (s.x_max - s.x_min + 1) * kUnit;
  const int h = (s.y_max - s.y_min + 1) * kUnit;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << ' ' << h << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
  for (int y = s.y_max; y >= s.y_min; --y) {
    for (int x = s.x_min; x <= s.x_max; ++x) {
      const Cell c{x, y};
      const int px = (x - s.x_min) * kUnit;
      const int py = (s.y_max - y) * kUnit;
      std::string fill = "none";
      if (const auto region = s.region(c)) {
        if (spec.partition)
          fill = fill_of(*region);
        else if (spec.neighborhood)
          fill = "#e6e6e6";
      }
      out << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << kUnit << "\" height=\"" << kUnit
          << "\" fill=\"" << fill << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
  }
  for (int y = s.y_max; y >= s.y_min; --y) {
    for (int x = s.x_min; x <= s.x_max; ++x) {
      const Cell c{x, y};
      const int px = (x - s.x_min) * kUnit;
      const int py = (s.y_max - y) * kUnit;
      const auto piece = occupant(s.pattern, c);
      if (spec.pieces && piece) {
        const bool up = piece->orientation == Orientation::Up;
        const int cx = px + 16, cy = py + 16;
        out << "<g>";
        if (up)
          out << "<polygon points=\"" << px + 16 << ',' << py + 3 << ' ' << px + 27 << ',' << py + 9 << ' ' << px + 29
              << ',' << py + 29 << ' ' << px + 3 << ',' << py + 29 << ' ' << px + 5 << ',' << py + 9 << "\"";
        else
          out << "<polygon points=\"" << px + 16 << ',' << py + 29 << ' ' << px + 5 << ',' << py + 23 << ' ' << px + 3
              << ',' << py + 3 << ' ' << px + 29 << ',' << py + 3 << ' ' << px + 27 << ',' << py + 23 << "\"";
        out << " fill=\"#f5deb3\" stroke=\"#000000\" stroke-width=\"1\"/>";
        out << "<text x=\"" << cx << "\" y=\"" << cy + 5 << "\" font-family=\"monospace\" font-size=\"14\""
            << " text-anchor=\"middle\"";
        if (!up) out << " transform=\"rotate(180 " << cx << ' ' << cy << ")\"";
        out << ">" << letter_of(kinds, piece->kind) << "</text>";
        if (piece->decoration) {
          const Displacement d = *piece->decoration;
          out << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << cx + 12 * d.dx << "\" y2=\""
              << cy - 12 * d.dy << "\" stroke=\"#c00000\" stroke-width=\"2\"/>";
        }
        out << "</g>\n";
      }
      if (spec.control && s.controlled(c))
        out << "<circle cx=\"" << px + 16 << "\" cy=\"" << py + 16 << "\" r=\"6\" fill=\"#2e8b57\""
            << " fill-opacity=\"0.8\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const PeriodicPattern& p, const KindRegistry& kinds, const RenderSpec& spec) {
  const Scene s = build(p, kinds, spec);
  return spec.format == RenderSpec::Format::Ascii ? ascii(s, kinds, spec) : svg(s, kinds, spec);
}

}  // namespace shogi::cli
