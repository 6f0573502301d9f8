#pragma once

// Shared helpers for the unit tests and the acceptance runner.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "shogi/control.hpp"
#include "shogi/oracle.hpp"
#include "shogi/pattern.hpp"
#include "shogi/pattern_io.hpp"
#include "shogi/symmetry.hpp"

namespace testing_support {

using namespace shogi;

inline std::string fixture_dir() { return std::string(SHOGI_SOURCE_DIR) + "/fixtures/crystals"; }
inline std::string source_path(const std::string& rel) { return std::string(SHOGI_SOURCE_DIR) + "/" + rel; }

inline std::vector<PeriodicPattern> load_crystals() {
  std::vector<PeriodicPattern> out;
  for (FriezeGroup g : table_group_order())
    out.push_back(load_pattern_file(fixture_dir() + "/" + std::string(to_string(g)) + ".pat").pattern);
  return out;
}

inline PlacedPiece piece(int x, int y, PieceKind k, Orientation o = Orientation::Up) {
  return {{x, y}, k, o, std::nullopt};
}

struct RandomPatternOptions {
  int max_pieces = 6;
  int max_component = 5;  // |t.dx|, |t.dy|
  int box = 4;            // cells drawn from [0, box) x [0, box)
  bool mixed_orientations = true;
  bool horizontal_only = false;
  std::vector<PieceKind> kinds = table_kind_order();
};

inline Displacement random_period(std::mt19937& rng, const RandomPatternOptions& o) {
  std::uniform_int_distribution<int> comp(-o.max_component, o.max_component);
  while (true) {
    Displacement t{comp(rng), o.horizontal_only ? 0 : comp(rng)};
    if (!t.is_zero()) return t;
  }
}

/// Canonical pattern with distinct translation classes.
inline PeriodicPattern random_pattern(std::mt19937& rng, const RandomPatternOptions& o = {}) {
  const Displacement t = random_period(rng, o);
  std::uniform_int_distribution<int> count(1, o.max_pieces);
  std::uniform_int_distribution<int> coord(0, o.box - 1);
  std::uniform_int_distribution<std::size_t> kind(0, o.kinds.size() - 1);
  std::bernoulli_distribution coin(0.5);
  const Orientation base = coin(rng) ? Orientation::Up : Orientation::Down;
  PeriodicPattern p;
  p.period = t;
  std::set<Cell> used;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const Cell c{coord(rng), coord(rng)};
    if (!used.insert(reduce(c, t)).second) continue;
    const Orientation o2 = o.mixed_orientations ? (coin(rng) ? Orientation::Up : Orientation::Down) : base;
    p.motif.push_back({c, o.kinds[kind(rng)], o2, std::nullopt});
  }
  return canonicalize(p);
}

/// Same pattern with every decoration chosen at random (possibly none).
inline PeriodicPattern randomly_decorated(std::mt19937& rng, PeriodicPattern p) {
  std::uniform_int_distribution<int> pick(0, 11);
  for (auto& piece : p.motif) {
    const int d = pick(rng);
    if (d >= 8) continue;
    static const Displacement dirs[8] = {{0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}};
    piece.decoration = dirs[d];
  }
  return canonicalize(p);
}

/// Mirror image in the line x = 0 (orientation kept).
inline PeriodicPattern mirrored_x(const PeriodicPattern& p) { return apply(Isometry::reflect_v(0), p); }

struct OracleComparison {
  bool neighborhood = false;
  bool partition = false;
  bool control = false;
  bool verdict = false;
  bool stable = false;
  std::string detail;

  bool all() const { return neighborhood && partition && control && verdict && stable; }
};

/// Periodic engine versus the finite-board oracle on the central window,
/// plus the 9-versus-11 copies stability check.
inline OracleComparison compare_with_oracle(const PeriodicPattern& input,
                                            const KindRegistry& registry = KindRegistry::standard()) {
  OracleComparison r;
  const PeriodicPattern p = canonicalize(input);
  const oracle::FiniteBoard b9 = oracle::replicate(p, 9);
  const std::vector<Cell> window = oracle::central_window(b9);
  const std::set<Cell> window_set(window.begin(), window.end());

  const auto brute_part = oracle::brute_partition(b9);
  std::map<Cell, RegionClass> oracle_part;
  for (const auto& [c, cls] : brute_part)
    if (window_set.count(c)) oracle_part.emplace(c, cls);
  const auto engine_part = partition_neighborhood(p);
  r.partition = oracle_part == engine_part;

  std::set<Cell> oracle_nbhd, engine_nbhd;
  for (const auto& [c, _] : oracle_part) oracle_nbhd.insert(c);
  for (Cell c : neighborhood(p).classes) engine_nbhd.insert(c);
  r.neighborhood = oracle_nbhd == engine_nbhd;

  const auto brute_ctrl = oracle::brute_control(b9, registry);
  std::set<Cell> oracle_ctrl, engine_ctrl;
  for (Cell c : window)
    if (brute_ctrl.count(c)) oracle_ctrl.insert(c);
  for (Cell c : control_of_pattern(p, registry).classes)
    if (window_set.count(c)) engine_ctrl.insert(c);
  r.control = oracle_ctrl == engine_ctrl;

  const NccStatus engine = ncc_status(p, registry);
  const NccStatus brute9 = oracle::brute_ncc(b9, window, registry);
  r.verdict = engine == brute9;

  const oracle::FiniteBoard b11 = oracle::replicate(p, 11);
  const NccStatus brute11 = oracle::brute_ncc(b11, oracle::central_window(b11), registry);
  const auto ctrl11 = oracle::brute_control(b11, registry);
  std::set<Cell> oracle_ctrl11;
  for (Cell c : window)
    if (ctrl11.count(c)) oracle_ctrl11.insert(c);
  const auto part11 = oracle::brute_partition(b11);
  bool same_partition = true;
  for (const auto& [c, cls] : oracle_part) {
    auto it = part11.find(c);
    same_partition = same_partition && it != part11.end() && it->second == cls;
  }
  r.stable = brute11 == brute9 && oracle_ctrl11 == oracle_ctrl && same_partition;

  if (!r.all())
    r.detail = serialize_pattern(p) + "engine=" + to_string(engine) + " oracle=" + to_string(brute9) +
               " oracle11=" + to_string(brute11);
  return r;
}

}  // namespace testing_support
