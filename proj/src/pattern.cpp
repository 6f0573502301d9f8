#include "shogi/pattern.hpp"

#include <algorithm>
#include <numeric>

#include "shogi/error.hpp"

namespace shogi {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool piece_less(const PlacedPiece& a, const PlacedPiece& b) { return a.cell < b.cell; }

// Reduces all cells modulo t and sorts; conflicting duplicates throw.
std::vector<PlacedPiece> reduced_motif(std::vector<PlacedPiece> motif, Displacement t) {
  for (auto& piece : motif) piece.cell = reduce(piece.cell, t);
  std::sort(motif.begin(), motif.end(), piece_less);
  std::vector<PlacedPiece> out;
  out.reserve(motif.size());
  for (const auto& piece : motif) {
    if (!out.empty() && out.back().cell == piece.cell) {
      if (!(out.back() == piece)) throw Error("inconsistent motif");
      continue;
    }
    out.push_back(piece);
  }
  return out;
}

bool invariant_under(const std::vector<PlacedPiece>& reduced, Displacement t, Displacement shift) {
  std::vector<PlacedPiece> moved = reduced;
  for (auto& piece : moved) piece.cell = reduce(piece.cell + shift, t);
  std::sort(moved.begin(), moved.end(), piece_less);
  return moved == reduced;
}

}  // namespace

Cell reduce(Cell cell, Displacement t) {
  if (t.is_zero()) throw Error("zero period");
  const long long dot = static_cast<long long>(cell.x) * t.dx + static_cast<long long>(cell.y) * t.dy;
  const long long norm = static_cast<long long>(t.dx) * t.dx + static_cast<long long>(t.dy) * t.dy;
  const long long k = floor_div(dot, norm);
  return {static_cast<int>(cell.x - k * t.dx), static_cast<int>(cell.y - k * t.dy)};
}

Displacement canonical_direction(Displacement t) {
  if (t.dx < 0 || (t.dx == 0 && t.dy < 0)) return -t;
  return t;
}

PeriodicPattern canonicalize(PeriodicPattern p) {
  if (p.period.is_zero()) throw Error("zero period");
  if (p.motif.empty()) throw Error("empty motif");
  for (const auto& piece : p.motif)
    if (piece.decoration && !piece.decoration->is_unit())
      throw Error("decoration must be a unit vector");

  Displacement t = canonical_direction(p.period);
  auto motif = reduced_motif(std::move(p.motif), t);

  // Any translation symmetry is collinear with t, so only t/m can shrink it.
  const int g = std::gcd(std::abs(t.dx), std::abs(t.dy));
  for (int m = g; m > 1; --m) {
    if (g % m != 0) continue;
    const Displacement shorter{t.dx / m, t.dy / m};
    if (invariant_under(motif, t, shorter)) {
      t = shorter;
      motif = reduced_motif(std::move(motif), t);
      break;
    }
  }
  return {std::move(motif), t};
}

bool is_canonical(const PeriodicPattern& p) {
  try {
    return canonicalize(p) == p;
  } catch (const Error&) {
    return false;
  }
}

std::optional<PlacedPiece> occupant(const PeriodicPattern& p, Cell c) {
  const Cell r = reduce(c, p.period);
  auto it = std::lower_bound(p.motif.begin(), p.motif.end(), r,
                             [](const PlacedPiece& piece, Cell key) { return piece.cell < key; });
  if (it == p.motif.end() || it->cell != r) return std::nullopt;
  PlacedPiece out = *it;
  out.cell = c;
  return out;
}

PeriodicPattern dual(const PeriodicPattern& p) {
  PeriodicPattern out = p;
  for (auto& piece : out.motif) {
    piece.orientation = flipped(piece.orientation);
    if (piece.decoration) piece.decoration = -*piece.decoration;
  }
  return out;
}

Form form_of(const PeriodicPattern& p) {
  Form f;
  f.period = p.period;
  f.cells.reserve(p.motif.size());
  for (const auto& piece : p.motif) f.cells.push_back({piece.cell, piece.orientation, piece.decoration});
  return f;
}

PeriodicPattern instantiate(const Form& f, PieceKind kind) {
  PeriodicPattern p;
  p.period = f.period;
  p.motif.reserve(f.cells.size());
  for (const auto& c : f.cells) p.motif.push_back({c.cell, kind, c.orientation, c.decoration});
  return p;
}

Form canonicalize(Form f) { return form_of(canonicalize(instantiate(f, kinds::King))); }

}  // namespace shogi
