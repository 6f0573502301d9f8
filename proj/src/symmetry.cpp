#include "shogi/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "shogi/error.hpp"

namespace shogi {

namespace {

constexpr std::array<std::pair<FriezeGroup, std::string_view>, 7> kLabels{{
    {FriezeGroup::p1, "p1"},
    {FriezeGroup::p11g, "p11g"},
    {FriezeGroup::p1m1, "p1m1"},
    {FriezeGroup::p11m, "p11m"},
    {FriezeGroup::p2, "p2"},
    {FriezeGroup::p2mg, "p2mg"},
    {FriezeGroup::p2mm, "p2mm"},
}};

int doubled(double v) {
  const double twice = 2.0 * v;
  const double rounded = std::round(twice);
  if (std::abs(twice - rounded) > 1e-9) throw Error("non-cell-preserving isometry parameter");
  return static_cast<int>(rounded);
}

// Renders v/2 as "3", "-0.5", "1.5".
std::string half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  std::string s = std::to_string(twice / 2);
  if (twice < 0 && twice / 2 == 0) s = "-0";
  return s + ".5";
}

PlacedPiece image(const Isometry& sigma, const PlacedPiece& piece) {
  PlacedPiece out = piece;
  out.cell = sigma.map(piece.cell);
  if (sigma.flips_orientation()) out.orientation = flipped(piece.orientation);
  if (piece.decoration) out.decoration = sigma.map_vector(*piece.decoration);
  return out;
}

// True when sigma maps every motif piece onto an identical piece of p.
bool maps_onto(const PeriodicPattern& p, const Isometry& sigma) {
  for (const auto& piece : p.motif) {
    const PlacedPiece moved = image(sigma, piece);
    auto hit = occupant(p, moved.cell);
    if (!hit || !(*hit == moved)) return false;
  }
  return true;
}

long long dot(Displacement a, Displacement b) {
  return static_cast<long long>(a.dx) * b.dx + static_cast<long long>(a.dy) * b.dy;
}

Displacement as_vector(Cell c) { return {c.x, c.y}; }

// Offset of a witness in sortable "axis coordinate" order.
std::pair<int, int> sort_key(const Isometry& iso) {
  const Displacement b = iso.offset();
  switch (iso.linear()) {
    case LinearPart::MirrorY:
      return {b.dy, b.dx};
    case LinearPart::MirrorX:
      return {b.dx, b.dy};
    default:
      return {b.dx, b.dy};
  }
}

}  // namespace

std::string_view to_string(FriezeGroup g) {
  for (const auto& [group, label] : kLabels)
    if (group == g) return label;
  return "?";
}

std::optional<FriezeGroup> parse_frieze_group(std::string_view label) {
  for (const auto& [group, l] : kLabels)
    if (l == label) return group;
  return std::nullopt;
}

const std::vector<FriezeGroup>& table_group_order() {
  static const std::vector<FriezeGroup> order{FriezeGroup::p2mm, FriezeGroup::p2,   FriezeGroup::p1m1,
                                              FriezeGroup::p11m, FriezeGroup::p2mg, FriezeGroup::p1,
                                              FriezeGroup::p11g};
  return order;
}

Isometry Isometry::rotate180(double cx, double cy) { return {LinearPart::HalfTurn, {doubled(cx), doubled(cy)}}; }
Isometry Isometry::reflect_h(double axis_y) { return {LinearPart::MirrorY, {0, doubled(axis_y)}}; }
Isometry Isometry::reflect_v(double axis_x) { return {LinearPart::MirrorX, {doubled(axis_x), 0}}; }
Isometry Isometry::glide_h(double axis_y, int shift) {
  if (shift == 0) throw Error("glide shift must be nonzero");
  return {LinearPart::MirrorY, {shift, doubled(axis_y)}};
}
Isometry Isometry::glide_v(double axis_x, int shift) {
  if (shift == 0) throw Error("glide shift must be nonzero");
  return {LinearPart::MirrorX, {doubled(axis_x), shift}};
}

Displacement Isometry::map_vector(Displacement d) const {
  switch (linear_) {
    case LinearPart::Identity:
      return d;
    case LinearPart::HalfTurn:
      return -d;
    case LinearPart::MirrorX:
      return {-d.dx, d.dy};
    case LinearPart::MirrorY:
      return {d.dx, -d.dy};
  }
  return d;
}

Cell Isometry::map(Cell c) const {
  const Displacement v = map_vector({c.x, c.y});
  return {v.dx + offset_.dx, v.dy + offset_.dy};
}

std::string Isometry::describe() const {
  const Displacement b = offset_;
  switch (linear_) {
    case LinearPart::Identity:
      return "translate (" + std::to_string(b.dx) + "," + std::to_string(b.dy) + ")";
    case LinearPart::HalfTurn:
      return "rotate180 (" + half(b.dx) + "," + half(b.dy) + ")";
    case LinearPart::MirrorY:
      if (b.dx == 0) return "reflect-h y=" + half(b.dy);
      return "glide-h y=" + half(b.dy) + " shift=" + std::to_string(b.dx);
    case LinearPart::MirrorX:
      if (b.dy == 0) return "reflect-v x=" + half(b.dx);
      return "glide-v x=" + half(b.dx) + " shift=" + std::to_string(b.dy);
  }
  return "?";
}

PeriodicPattern apply(const Isometry& sigma, const PeriodicPattern& p) {
  PeriodicPattern out;
  out.period = sigma.map_vector(p.period);
  out.motif.reserve(p.motif.size());
  for (const auto& piece : p.motif) out.motif.push_back(image(sigma, piece));
  return canonicalize(std::move(out));
}

bool is_symmetry(const PeriodicPattern& p, const Isometry& sigma) {
  return apply(sigma, p) == canonicalize(p);
}

SymmetryReport detect_symmetries(const PeriodicPattern& input) {
  const PeriodicPattern p = canonicalize(input);
  const Displacement t = p.period;
  const long long tt = dot(t, t);
  SymmetryReport report;
  std::vector<SymmetryWitness> h, v, g, r;

  for (LinearPart a : {LinearPart::HalfTurn, LinearPart::MirrorX, LinearPart::MirrorY}) {
    const Isometry linear{a, {0, 0}};
    const Displacement at = linear.map_vector(t);
    if (at != t && at != -t) continue;  // diagonal period: mirrors cannot preserve the axis

    // sigma must send the first piece onto some motif piece; offsets modulo t.
    const Cell c0 = linear.map(p.motif.front().cell);
    for (const auto& target : p.motif) {
      const Displacement b = target.cell - c0;
      const Isometry sigma{a, b};
      if (!maps_onto(p, sigma)) continue;

      if (a == LinearPart::HalfTurn || at == -t) {
        // Half turns and perpendicular mirrors: two per period.
        const Displacement b0 = as_vector(reduce(Cell{b.dx, b.dy}, t));
        auto& bucket = a == LinearPart::HalfTurn ? r : v;
        const char role = a == LinearPart::HalfTurn ? 'r' : 'v';
        bucket.push_back({role, Isometry{a, b0}});
        bucket.push_back({role, Isometry{a, {b0.dx + t.dx, b0.dy + t.dy}}});
        continue;
      }
      // Mirror line parallel to t: sigma^2 is the translation (Ab + b) = k t.
      const Displacement square = linear.map_vector(b);
      const Displacement sum{square.dx + b.dx, square.dy + b.dy};
      const long long k = dot(sum, t) / tt;
      const long long half_k = k % 2 == 0 ? k / 2 : (k - 1) / 2;
      const Displacement normalized{static_cast<int>(b.dx - half_k * t.dx), static_cast<int>(b.dy - half_k * t.dy)};
      if (k % 2 == 0)
        h.push_back({'h', Isometry{a, normalized}});
      else
        g.push_back({'g', Isometry{a, normalized}});
    }
  }

  auto finish = [&](std::vector<SymmetryWitness>& bucket) {
    std::sort(bucket.begin(), bucket.end(), [](const SymmetryWitness& x, const SymmetryWitness& y) {
      return sort_key(x.isometry) < sort_key(y.isometry);
    });
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    report.witnesses.insert(report.witnesses.end(), bucket.begin(), bucket.end());
  };
  report.flags = {!h.empty(), !v.empty(), !g.empty(), !r.empty()};
  finish(h);
  finish(v);
  finish(g);
  finish(r);
  return report;
}

FriezeGroup classify_flags(const SymmetryFlags& f) {
  const bool consistent = !(f.h && f.g) && (!(f.h && f.v) || f.r) && (!(f.v && f.g) || f.r) &&
                          (!(f.h && f.r) || f.v) && (!(f.g && f.r) || f.v) && (!(f.v && f.r) || f.h || f.g);
  if (!consistent) throw std::logic_error("inconsistent symmetry flags");
  if (f.h && f.v) return FriezeGroup::p2mm;
  if (f.h) return FriezeGroup::p11m;
  if (f.v && f.r) return FriezeGroup::p2mg;
  if (f.v) return FriezeGroup::p1m1;
  if (f.r) return FriezeGroup::p2;
  if (f.g) return FriezeGroup::p11g;
  return FriezeGroup::p1;
}

FriezeGroup classify_frieze(const PeriodicPattern& p) { return classify_flags(detect_symmetries(p).flags); }

PeriodicPattern generate_from_recipe(const std::vector<PlacedPiece>& basic, FriezeGroup g, Displacement period) {
  if (basic.empty()) throw Error("empty motif");
  if (period.is_zero()) throw Error("zero period");
  const bool needs_axis = g != FriezeGroup::p1 && g != FriezeGroup::p2;
  if (needs_axis && period.dy != 0) throw Error("incompatible period: mirror groups need a horizontal period");
  const bool needs_glide = g == FriezeGroup::p11g || g == FriezeGroup::p2mg;
  if (needs_glide && period.dx % 2 != 0) throw Error("incompatible period: a glide needs an even period");

  std::vector<Isometry> generators;
  switch (g) {
    case FriezeGroup::p1:
      break;
    case FriezeGroup::p11g:
      generators.push_back(Isometry::glide_h(0, period.dx / 2));
      break;
    case FriezeGroup::p1m1:
      generators.push_back(Isometry::reflect_v(0));
      break;
    case FriezeGroup::p11m:
      generators.push_back(Isometry::reflect_h(0));
      break;
    case FriezeGroup::p2:
      generators.push_back(Isometry::rotate180(0, 0));
      break;
    case FriezeGroup::p2mg:
      generators.push_back(Isometry::reflect_v(0));
      generators.push_back(Isometry::glide_h(0, period.dx / 2));
      break;
    case FriezeGroup::p2mm:
      generators.push_back(Isometry::reflect_h(0));
      generators.push_back(Isometry::reflect_v(0));
      break;
  }

  std::vector<PlacedPiece> orbit;
  auto add = [&](PlacedPiece piece) {
    piece.cell = reduce(piece.cell, period);
    for (const auto& existing : orbit) {
      if (existing.cell != piece.cell) continue;
      if (!(existing == piece)) throw Error("collision: orbit pieces disagree on one cell");
      return false;
    }
    orbit.push_back(piece);
    return true;
  };
  for (const auto& piece : basic) add(piece);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& sigma : generators) add(image(sigma, orbit[i]));
  return canonicalize(PeriodicPattern{std::move(orbit), period});
}

}  // namespace shogi
