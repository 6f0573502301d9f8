#include "shogi/pattern_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "shogi/error.hpp"

namespace shogi {

namespace {

constexpr std::array<std::pair<std::string_view, Displacement>, 8> kDirections{{
    {"n", {0, 1}},
    {"ne", {1, 1}},
    {"e", {1, 0}},
    {"se", {1, -1}},
    {"s", {0, -1}},
    {"sw", {-1, -1}},
    {"w", {-1, 0}},
    {"nw", {-1, 1}},
}};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

int parse_int(std::string_view s, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    fail(line_no, "malformed token '" + std::string(s) + "'");
  return value;
}

// "(dx,dy);(dx,dy)" or empty.
std::vector<Displacement> parse_displacements(std::string_view s, std::size_t line_no) {
  std::vector<Displacement> out;
  while (!s.empty()) {
    std::size_t end = s.find(';');
    std::string_view item = s.substr(0, end);
    if (item.size() < 5 || item.front() != '(' || item.back() != ')')
      fail(line_no, "malformed token '" + std::string(item) + "'");
    item = item.substr(1, item.size() - 2);
    std::size_t comma = item.find(',');
    if (comma == std::string_view::npos) fail(line_no, "malformed token '" + std::string(item) + "'");
    out.push_back({parse_int(item.substr(0, comma), line_no), parse_int(item.substr(comma + 1), line_no)});
    if (end == std::string_view::npos) break;
    s.remove_prefix(end + 1);
  }
  return out;
}

std::string format_displacements(const std::vector<Displacement>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += "(" + std::to_string(v[i].dx) + "," + std::to_string(v[i].dy) + ")";
  }
  return out;
}

bool header_is(std::string_view line, std::string_view key) {
  return line.size() >= key.size() && line.substr(0, key.size()) == key;
}

}  // namespace

std::string_view direction_name(Displacement unit) {
  for (const auto& [name, d] : kDirections)
    if (d == unit) return name;
  throw Error("not a unit direction");
}

std::optional<Displacement> parse_direction(std::string_view name) {
  for (const auto& [n, d] : kDirections)
    if (n == name) return d;
  return std::nullopt;
}

PatternDocument parse_pattern(std::string_view text, const KindRegistry& base) {
  PatternDocument doc{{}, base};
  std::optional<Displacement> period;
  Cell origin{0, 0};
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> decors;
  bool in_grid = false;
  bool saw_grid = false;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;

    if (header_is(line, "period:")) {
      auto tok = split_ws(line.substr(7));
      if (tok.size() != 2) fail(line_no, "period needs two integers");
      period = Displacement{parse_int(tok[0], line_no), parse_int(tok[1], line_no)};
      if (period->is_zero()) fail(line_no, "zero period");
      in_grid = false;
    } else if (header_is(line, "origin:")) {
      auto tok = split_ws(line.substr(7));
      if (tok.size() != 2) fail(line_no, "origin needs two integers");
      origin = {parse_int(tok[0], line_no), parse_int(tok[1], line_no)};
      in_grid = false;
    } else if (header_is(line, "kind:")) {
      auto tok = split_ws(line.substr(5));
      if (tok.size() != 4 || tok[0].size() != 1 || !header_is(tok[2], "steps=") ||
          !header_is(tok[3], "rides="))
        fail(line_no, "malformed kind definition");
      try {
        auto m = Moveset::make(parse_displacements(tok[2].substr(6), line_no),
                               parse_displacements(tok[3].substr(6), line_no));
        doc.kinds.register_custom(std::string(tok[1]), std::move(m), tok[0][0]);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
      in_grid = false;
    } else if (header_is(line, "grid:")) {
      if (saw_grid) fail(line_no, "duplicate grid");
      if (!trim(line.substr(5)).empty()) fail(line_no, "grid rows start on the next line");
      in_grid = saw_grid = true;
    } else if (header_is(line, "decor:")) {
      auto tok = split_ws(line.substr(6));
      if (tok.size() != 3) fail(line_no, "decor needs x y dir");
      decors.emplace_back(line_no, std::move(tok));
      in_grid = false;
    } else if (in_grid) {
      rows.emplace_back(line_no, split_ws(line));
    } else {
      fail(line_no, "malformed token '" + std::string(line) + "'");
    }
  }

  if (!period) throw ParseError("missing period");
  if (!saw_grid || rows.empty()) throw ParseError("missing grid");

  const std::size_t width = rows.front().second.size();
  const int height = static_cast<int>(rows.size());
  std::vector<PlacedPiece> motif;
  for (int r = 0; r < height; ++r) {
    const auto& [line_no, tokens] = rows[r];
    if (tokens.size() != width) fail(line_no, "ragged grid row");
    for (std::size_t c = 0; c < tokens.size(); ++c) {
      std::string_view tok = tokens[c];
      if (tok == "..") continue;
      if (tok.size() != 2 || (tok[1] != '^' && tok[1] != 'v'))
        fail(line_no, "malformed token '" + std::string(tok) + "'");
      auto kind = doc.kinds.find_by_letter(tok[0]);
      if (!kind) fail(line_no, "unknown kind letter '" + std::string(1, tok[0]) + "'");
      const Cell cell{origin.x + static_cast<int>(c), origin.y + (height - 1 - r)};
      motif.push_back({cell, *kind, tok[1] == '^' ? Orientation::Up : Orientation::Down, std::nullopt});
    }
  }

  for (const auto& [line_no, tok] : decors) {
    const Cell cell{parse_int(tok[0], line_no), parse_int(tok[1], line_no)};
    auto dir = parse_direction(tok[2]);
    if (!dir) fail(line_no, "malformed token '" + std::string(tok[2]) + "'");
    auto it = std::find_if(motif.begin(), motif.end(), [&](const PlacedPiece& p) { return p.cell == cell; });
    if (it == motif.end()) fail(line_no, "decor names an empty cell");
    it->decoration = *dir;
  }

  try {
    doc.pattern = canonicalize(PeriodicPattern{std::move(motif), *period});
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return doc;
}

std::string serialize_pattern(const PeriodicPattern& p, const KindRegistry& kinds) {
  if (p.motif.empty()) throw Error("empty motif");
  int min_x = p.motif.front().cell.x, max_x = min_x;
  int min_y = p.motif.front().cell.y, max_y = min_y;
  std::vector<PieceKind> custom;
  for (const auto& piece : p.motif) {
    min_x = std::min(min_x, piece.cell.x);
    max_x = std::max(max_x, piece.cell.x);
    min_y = std::min(min_y, piece.cell.y);
    max_y = std::max(max_y, piece.cell.y);
    if (kinds.letter(piece.kind) == 0) throw Error("kind has no file letter: " + kinds.name(piece.kind));
    if (!piece.kind.is_standard()) custom.push_back(piece.kind);
  }
  std::sort(custom.begin(), custom.end());
  custom.erase(std::unique(custom.begin(), custom.end()), custom.end());

  std::ostringstream out;
  out << "period: " << p.period.dx << ' ' << p.period.dy << '\n';
  out << "origin: " << min_x << ' ' << min_y << '\n';
  for (PieceKind k : custom) {
    const Moveset& m = kinds.moveset(k);
    out << "kind: " << kinds.letter(k) << ' ' << kinds.name(k) << " steps=" << format_displacements(m.steps())
        << " rides=" << format_displacements(m.rides()) << '\n';
  }
  out << "grid:\n";
  for (int y = max_y; y >= min_y; --y) {
    for (int x = min_x; x <= max_x; ++x) {
      if (x > min_x) out << ' ';
      auto it = std::find_if(p.motif.begin(), p.motif.end(),
                             [&](const PlacedPiece& piece) { return piece.cell == Cell{x, y}; });
      if (it == p.motif.end()) {
        out << "..";
      } else {
        out << kinds.letter(it->kind) << (it->orientation == Orientation::Up ? '^' : 'v');
      }
    }
    out << '\n';
  }
  for (const auto& piece : p.motif)
    if (piece.decoration)
      out << "decor: " << piece.cell.x << ' ' << piece.cell.y << ' ' << direction_name(*piece.decoration) << '\n';
  return out.str();
}

PatternDocument load_pattern_file(const std::string& path, const KindRegistry& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pattern(buf.str(), base);
}

void save_pattern_file(const std::string& path, const PeriodicPattern& p, const KindRegistry& kinds) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize_pattern(p, kinds);
}

}  // namespace shogi
