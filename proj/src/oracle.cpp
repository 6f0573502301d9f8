#include "shogi/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "shogi/error.hpp"

namespace shogi::oracle {

namespace {

long long cross(Cell c, Displacement t) { return 1LL * c.x * t.dy - 1LL * c.y * t.dx; }

bool in_motif_band(const FiniteBoard& b, Cell c) {
  const long long s = cross(c, b.period);
  return s >= b.s_min && s <= b.s_max;
}

const PlacedPiece* at(const FiniteBoard& b, Cell c) {
  auto it = b.occupancy.find(c);
  return it == b.occupancy.end() ? nullptr : &it->second;
}

std::set<Cell> neighborhood_cells(const FiniteBoard& b) {
  std::set<Cell> out;
  for (const auto& [c, piece] : b.occupancy)
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        if ((dx || dy) && b.inside({c.x + dx, c.y + dy})) out.insert({c.x + dx, c.y + dy});
  return out;
}

}  // namespace

FiniteBoard replicate(const PeriodicPattern& input, int copies) {
  if (copies < 9 || copies % 2 == 0) throw Error("copies must be odd and at least 9");
  const PeriodicPattern p = canonicalize(input);
  const Displacement t = p.period;
  FiniteBoard b;
  b.period = t;
  const int half = (copies - 1) / 2;
  bool first = true;
  for (int k = -half; k <= half; ++k) {
    for (const auto& piece : p.motif) {
      PlacedPiece q = piece;
      q.cell = {piece.cell.x + k * t.dx, piece.cell.y + k * t.dy};
      const long long s = cross(q.cell, t);
      const long long u = 1LL * q.cell.x * t.dx + 1LL * q.cell.y * t.dy;
      if (first) {
        b.u_min = b.u_max = u;
        b.x_min = b.x_max = q.cell.x;
        b.y_min = b.y_max = q.cell.y;
        b.s_min = b.s_max = s;
        first = false;
      }
      b.x_min = std::min(b.x_min, q.cell.x);
      b.x_max = std::max(b.x_max, q.cell.x);
      b.y_min = std::min(b.y_min, q.cell.y);
      b.y_max = std::max(b.y_max, q.cell.y);
      b.s_min = std::min(b.s_min, s);
      b.s_max = std::max(b.s_max, s);
      b.u_min = std::min(b.u_min, u);
      b.u_max = std::max(b.u_max, u);
      b.occupancy.emplace(q.cell, q);
    }
  }
  // Knight jumps reach two rows; rays and fills only need a little more.
  const int pad = 4;
  const long long limit = 1LL << 28;
  if (std::abs(1LL * b.x_min) > limit || std::abs(1LL * b.x_max) > limit || std::abs(1LL * b.y_min) > limit ||
      std::abs(1LL * b.y_max) > limit)
    throw Error("board bounds overflow");
  b.x_min -= pad;
  b.x_max += pad;
  b.y_min -= pad;
  b.y_max += pad;
  return b;
}

std::set<Cell> brute_control(const FiniteBoard& b, const KindRegistry& registry) {
  std::set<Cell> out;
  for (const auto& [c, piece] : b.occupancy) {
    const Moveset m = oriented_moveset(piece.kind, piece.orientation, registry);
    for (auto s : m.steps()) {
      const Cell target{c.x + s.dx, c.y + s.dy};
      if (!b.inside(target)) continue;
      const PlacedPiece* other = at(b, target);
      if (other && other->orientation == piece.orientation) continue;
      out.insert(target);
    }
    for (auto d : m.rides()) {
      Cell cur = c;
      while (true) {
        cur = {cur.x + d.dx, cur.y + d.dy};
        if (!b.inside(cur)) break;
        const PlacedPiece* other = at(b, cur);
        if (other && other->orientation == piece.orientation) break;
        out.insert(cur);
        if (other) break;
      }
    }
  }
  return out;
}

std::map<Cell, RegionClass> brute_partition(const FiniteBoard& b) {
  std::map<Cell, RegionClass> out;
  std::map<Cell, bool> escaped;  // per visited empty cell: its component escapes
  for (Cell start : neighborhood_cells(b)) {
    if (at(b, start)) {
      out[start] = RegionClass::Base;
      continue;
    }
    auto known = escaped.find(start);
    if (known == escaped.end()) {
      // Breadth-first fill over empty board cells; leaving the motif band
      // means the component is not enclosed.
      std::vector<Cell> seen{start};
      std::set<Cell> visited{start};
      std::deque<Cell> queue{start};
      bool escape = false;
      while (!queue.empty()) {
        const Cell c = queue.front();
        queue.pop_front();
        if (!in_motif_band(b, c)) escape = true;
        const Cell next[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (Cell n : next) {
          const long long u = 1LL * n.x * b.period.dx + 1LL * n.y * b.period.dy;
          if (!b.inside(n) || u < b.u_min || u > b.u_max || at(b, n) || visited.count(n)) continue;
          visited.insert(n);
          seen.push_back(n);
          queue.push_back(n);
        }
      }
      for (Cell c : seen) escaped[c] = escape;
      known = escaped.find(start);
    }
    out[start] = known->second ? RegionClass::Outside : RegionClass::Inside;
  }
  return out;
}

std::vector<Cell> central_window(const FiniteBoard& b) {
  const Displacement t = b.period;
  const long long tt = 1LL * t.dx * t.dx + 1LL * t.dy * t.dy;
  const long long m = std::abs(t.dx) + std::abs(t.dy);
  std::vector<Cell> out;
  for (int x = b.x_min; x <= b.x_max; ++x)
    for (int y = b.y_min; y <= b.y_max; ++y) {
      const long long u = 1LL * x * t.dx + 1LL * y * t.dy;
      const long long s = cross({x, y}, t);
      if (u >= 0 && u < tt && s >= b.s_min - m && s <= b.s_max + m) out.push_back({x, y});
    }
  return out;
}

NccStatus brute_ncc(const FiniteBoard& b, const std::vector<Cell>& window, const KindRegistry& registry) {
  for (Cell c : window)
    if (c.x <= b.x_min || c.x >= b.x_max || c.y <= b.y_min || c.y >= b.y_max)
      throw Error("window touches the board edge");
  const std::set<Cell> control = brute_control(b, registry);
  const std::map<Cell, RegionClass> region = brute_partition(b);

  std::vector<Cell> cells;  // window neighborhood cells in (x, y) order
  for (Cell c : window)
    if (region.count(c)) cells.push_back(c);
  std::sort(cells.begin(), cells.end());

  std::vector<Cell> uncontrolled;
  for (Cell c : cells)
    if (!control.count(c)) uncontrolled.push_back(c);
  if (uncontrolled.empty()) return {Verdict::Complete, std::nullopt, std::nullopt};
  if (uncontrolled.size() == cells.size()) return {Verdict::Fails, std::nullopt, uncontrolled.front()};

  const RegionClass r = region.at(uncontrolled.front());
  for (Cell c : cells) {
    const bool free = !control.count(c);
    const bool member = region.at(c) == r;
    if (free != member) return {Verdict::Fails, std::nullopt, c};
  }
  return {Verdict::NearlyComplete, r, std::nullopt};
}

}  // namespace shogi::oracle
