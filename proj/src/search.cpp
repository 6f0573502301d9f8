#include "shogi/search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "shogi/error.hpp"

namespace shogi {

namespace {

constexpr std::array<Displacement, 8> kDirections{{{0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}}};

struct Slot {
  int x, y;
  Orientation o;
};

int encode(int x, int y, Orientation o, int w) { return (y * w + x) * 2 + (o == Orientation::Down ? 1 : 0); }

std::vector<int> key_of(const std::vector<Slot>& slots, int w) {
  std::vector<int> k;
  k.reserve(slots.size());
  for (const auto& s : slots) k.push_back(encode(s.x, s.y, s.o, w));
  std::sort(k.begin(), k.end());
  return k;
}

int mod(int a, int w) { return ((a % w) + w) % w; }

// Minimal key over x-shifts of `slots` after the point map (sx, sy, flip).
void min_over_shifts(std::vector<Slot> slots, int w, int sx, int sy, bool flip, std::vector<int>& best) {
  int min_y = 0;
  bool first = true;
  for (auto& s : slots) {
    s.x = mod(sx * s.x, w);
    s.y = sy * s.y;
    if (flip) s.o = flipped(s.o);
    if (first || s.y < min_y) min_y = s.y;
    first = false;
  }
  for (auto& s : slots) s.y -= min_y;
  for (int shift = 0; shift < w; ++shift) {
    std::vector<Slot> moved = slots;
    for (auto& s : moved) s.x = (s.x + shift) % w;
    std::vector<int> k = key_of(moved, w);
    if (best.empty() || k < best) best = std::move(k);
  }
}

std::vector<Slot> slots_of(const Form& f) {
  std::vector<Slot> slots;
  for (const auto& c : f.cells) slots.push_back({c.cell.x, c.cell.y, c.orientation});
  return slots;
}

// Calls visit(form) for each undecorated form in enumeration order until it
// returns false. With `prune`, forms whose minimal period is shorter than w
// and forms that are not the smallest of their orbit are skipped.
void enumerate_forms(const SearchBounds& b, bool prune, bool half_turn, bool mirrors,
                     const std::function<bool(const Form&)>& visit) {
  if (b.max_motif_pieces <= 0 || b.box_height <= 0 || (!b.allow_up && !b.allow_down)) return;
  const int max_w = std::min(b.max_period, b.box_width);
  const int h = b.box_height;
  for (int w = 1; w <= max_w; ++w) {
    const int ncells = w * h;
    std::vector<Cell> cells;
    for (int x = 0; x < w; ++x)
      for (int y = 0; y < h; ++y) cells.push_back({x, y});
    std::vector<int> grid(ncells);
    for (int n = 1; n <= std::min(b.max_motif_pieces, ncells); ++n) {
      std::vector<int> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i;
      while (true) {
        bool touches_floor = false;
        for (int i : idx) touches_floor |= cells[i].y == 0;
        if (touches_floor) {
          const unsigned masks = 1u << n;
          for (unsigned mask = 0; mask < masks; ++mask) {
            if (!b.allow_down && mask != 0) break;
            if (!b.allow_up && mask != masks - 1) continue;
            std::vector<Slot> slots(n);
            for (int i = 0; i < n; ++i)
              slots[i] = {cells[idx[i]].x, cells[idx[i]].y, (mask >> i) & 1u ? Orientation::Down : Orientation::Up};
            if (prune) {
              std::fill(grid.begin(), grid.end(), 0);
              for (const auto& s : slots) grid[s.y * w + s.x] = s.o == Orientation::Up ? 1 : 2;
              bool shorter = false;
              for (int d = 1; d < w && !shorter; ++d) {
                if (w % d != 0) continue;
                bool same = true;
                for (int y = 0; y < h && same; ++y)
                  for (int x = 0; x < w && same; ++x) same = grid[y * w + x] == grid[y * w + (x + d) % w];
                shorter = same;
              }
              if (shorter) continue;
              const std::vector<int> own = key_of(slots, w);
              std::vector<int> best;
              min_over_shifts(slots, w, 1, 1, false, best);
              if (half_turn) min_over_shifts(slots, w, -1, -1, true, best);
              if (mirrors) {
                min_over_shifts(slots, w, -1, 1, false, best);
                if (half_turn) min_over_shifts(slots, w, 1, -1, true, best);
              }
              if (best != own) continue;
            }
            Form f;
            f.period = {w, 0};
            for (const auto& s : slots) f.cells.push_back({{s.x, s.y}, s.o, std::nullopt});
            if (!visit(f)) return;
          }
        }
        // Next combination.
        int i = n - 1;
        while (i >= 0 && idx[i] == ncells - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
}

bool pruning_mirrors(const std::vector<PieceKind>& kinds, const KindRegistry& registry) {
  for (auto k : kinds)
    if (registry.moveset(k).mirrored_leftright() != registry.moveset(k)) return false;
  return true;
}

std::vector<PieceKind> keys_of(const KindVector& v) {
  std::vector<PieceKind> out;
  for (const auto& [k, _] : v) out.push_back(k);
  return out;
}

// Verdicts on an analysis, stopping at the first flag that differs from
// `target`. Returns false on mismatch.
bool matches(const NeighborhoodAnalysis& a, const KindVector& target, const KindRegistry& registry,
             std::map<PieceKind, NccStatus>* details) {
  for (const auto& [kind, want] : target) {
    const NccStatus s = a.evaluate(kind, registry);
    if (s.satisfies_nearly_complete() != want) return false;
    if (details) details->emplace(kind, s);
  }
  return true;
}

Form undecorated(const PeriodicPattern& p) {
  Form f = form_of(p);
  for (auto& c : f.cells) c.decoration.reset();
  return f;
}

// Decorates the orbit of one piece under a subset of the pattern's
// symmetries; returns the first decorated form classifying to `g`.
std::optional<Form> lower_by_decoration(const Form& f, FriezeGroup g) {
  const PeriodicPattern p = canonicalize(instantiate(f, kinds::King));
  const SymmetryReport report = detect_symmetries(p);
  std::vector<Isometry> gens;
  for (const auto& w : report.witnesses)
    if (std::find(gens.begin(), gens.end(), w.isometry) == gens.end()) gens.push_back(w.isometry);
  const std::size_t subsets = std::size_t{1} << gens.size();
  std::set<std::vector<std::pair<Cell, Displacement>>> tried;
  for (std::size_t i = 0; i < p.motif.size(); ++i) {
    for (auto d : kDirections) {
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::pair<Cell, Displacement>> orbit{{p.motif[i].cell, d}};
        bool ok = true;
        for (std::size_t j = 0; j < orbit.size() && ok; ++j) {
          for (std::size_t s = 0; s < gens.size() && ok; ++s) {
            if (!((mask >> s) & 1u)) continue;
            const Cell c = reduce(gens[s].map(orbit[j].first), p.period);
            const Displacement e = gens[s].map_vector(orbit[j].second);
            auto hit = std::find_if(orbit.begin(), orbit.end(), [&](const auto& q) { return q.first == c; });
            if (hit == orbit.end())
              orbit.push_back({c, e});
            else if (hit->second != e)
              ok = false;
          }
        }
        if (!ok) continue;
        std::sort(orbit.begin(), orbit.end());
        if (!tried.insert(orbit).second) continue;
        PeriodicPattern decorated = p;
        for (auto& piece : decorated.motif)
          for (const auto& [c, e] : orbit)
            if (piece.cell == c) piece.decoration = e;
        decorated = canonicalize(decorated);
        if (classify_frieze(decorated) == g) return form_of(decorated);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::map<PieceKind, NccStatus> ncc_vector(const Form& f, const std::vector<PieceKind>& kinds,
                                          const KindRegistry& registry) {
  std::map<PieceKind, NccStatus> out;
  if (kinds.empty()) return out;
  for (auto k : kinds)
    if (!registry.contains(k)) throw Error("unregistered kind");
  const NeighborhoodAnalysis a(f);
  for (auto k : kinds) out.emplace(k, a.evaluate(k, registry));
  return out;
}

KindVector satisfies(const std::map<PieceKind, NccStatus>& details) {
  KindVector out;
  for (const auto& [k, s] : details) out.emplace(k, s.satisfies_nearly_complete());
  return out;
}

std::vector<int> orbit_key(const Form& f, bool half_turn, bool mirrors) {
  const Form c = canonicalize(f);
  if (c.period.dy != 0) throw Error("orbit keys need a horizontal period");
  const int w = c.period.dx;
  std::vector<int> best;
  const std::vector<Slot> slots = slots_of(c);
  min_over_shifts(slots, w, 1, 1, false, best);
  if (half_turn) min_over_shifts(slots, w, -1, -1, true, best);
  if (mirrors) {
    min_over_shifts(slots, w, -1, 1, false, best);
    if (half_turn) min_over_shifts(slots, w, 1, -1, true, best);
  }
  best.insert(best.begin(), w);
  return best;
}

std::vector<CrystalReport> find_crystal(FriezeGroup g, const KindVector& target, const SearchBounds& b,
                                        const KindRegistry& registry) {
  std::vector<CrystalReport> out;
  const bool half_turn = b.allow_up && b.allow_down;
  const bool mirrors = pruning_mirrors(keys_of(target), registry);
  enumerate_forms(b, true, half_turn, mirrors, [&](const Form& f) {
    const NeighborhoodAnalysis a(f);
    std::map<PieceKind, NccStatus> details;
    if (!matches(a, target, registry, &details)) return true;
    const FriezeGroup found = classify_frieze(a.pattern());
    std::optional<Form> hit;
    if (found == g)
      hit = f;
    else if (b.allow_decorations)
      hit = lower_by_decoration(f, g);
    if (!hit) return true;
    out.push_back({*hit, g, satisfies(details), std::move(details)});
    return b.limit == 0 || out.size() < b.limit;
  });
  return out;
}

std::vector<CrystalReport> find_crystal_naive(FriezeGroup g, const KindVector& target, const SearchBounds& b,
                                              const KindRegistry& registry) {
  std::vector<CrystalReport> out;
  enumerate_forms(b, false, false, false, [&](const Form& f) {
    const PeriodicPattern p = canonicalize(instantiate(f, kinds::King));
    std::map<PieceKind, NccStatus> details;
    for (const auto& [kind, want] : target) {
      PeriodicPattern q = p;
      for (auto& piece : q.motif) piece.kind = kind;
      const NccStatus s = ncc_status(q, registry);
      if (s.satisfies_nearly_complete() != want) return true;
      details.emplace(kind, s);
    }
    if (classify_frieze(p) != g) return true;
    out.push_back({undecorated(p), g, satisfies(details), std::move(details)});
    return true;
  });
  return out;
}

std::vector<SpecialForm> find_special_form(const SearchBounds& b, const KindRegistry& registry) {
  std::vector<SpecialForm> out;
  if (b.kinds.empty()) return out;
  KindVector all;
  for (auto k : b.kinds) all.emplace(k, true);
  const bool half_turn = b.allow_up && b.allow_down;
  enumerate_forms(b, true, half_turn, pruning_mirrors(b.kinds, registry), [&](const Form& f) {
    const NeighborhoodAnalysis a(f);
    SpecialForm s;
    if (!matches(a, all, registry, &s.details)) return true;
    s.form = f;
    for (auto k : b.kinds) {
      const std::vector<PieceKind> ks(a.pattern().motif.size(), k);
      s.controlled.emplace(k, a.controlled_regions(ks, registry));
    }
    out.push_back(std::move(s));
    return b.limit == 0 || out.size() < b.limit;
  });
  return out;
}

DualityExhibit find_duality(const SearchBounds& b) {
  const KindRegistry& registry = KindRegistry::standard();
  DualityExhibit ex;
  const bool half_turn = b.allow_up && b.allow_down;

  // (i): prefer one form carrying both halves.
  std::optional<Form> gold_only;
  std::optional<Form> silver_only;
  enumerate_forms(b, true, half_turn, true, [&](const Form& f) {
    const NeighborhoodAnalysis a(f);
    const bool gold = a.evaluate(kinds::Gold, registry).verdict == Verdict::Complete;
    const bool silver = a.evaluate(kinds::Silver, registry).verdict == Verdict::NearlyComplete;
    if (gold && silver) {
      ex.gold_form = f;
      ex.silver_form = f;
      return false;
    }
    if (gold && !gold_only) gold_only = f;
    if (silver && !silver_only) silver_only = f;
    return true;
  });
  if (!ex.gold_form && gold_only && silver_only) {
    ex.gold_form = gold_only;
    ex.silver_form = silver_only;
  }

  // (ii): each cell is either a gold/silver cell or a rook/bishop cell.
  enumerate_forms(b, true, half_turn, true, [&](const Form& f) {
    const NeighborhoodAnalysis a(f);
    const std::size_t n = a.pattern().motif.size();
    if (n < 2 || n > 16) return true;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<PieceKind> gr(n), sb(n);
      for (std::size_t i = 0; i < n; ++i) {
        const bool slider = (mask >> i) & 1u;
        gr[i] = slider ? kinds::Rook : kinds::Gold;
        sb[i] = slider ? kinds::Bishop : kinds::Silver;
      }
      if (a.evaluate(gr, registry).verdict != Verdict::Complete) continue;
      const NccStatus s = a.evaluate(sb, registry);
      if (s.verdict != Verdict::NearlyComplete) continue;
      PeriodicPattern c = a.pattern(), d = a.pattern();
      for (std::size_t i = 0; i < n; ++i) {
        c.motif[i].kind = gr[i];
        d.motif[i].kind = sb[i];
      }
      ex.gold_rook = c;
      ex.silver_bishop = d;
      ex.silver_bishop_status = s;
      return false;
    }
    return true;
  });
  if (ex.silver_form) ex.silver_status = NeighborhoodAnalysis(*ex.silver_form).evaluate(kinds::Silver, registry);
  return ex;
}

std::map<FriezeGroup, KindVector> satisfies_table(const std::vector<PeriodicPattern>& fixtures,
                                                  const KindRegistry& registry) {
  std::map<FriezeGroup, KindVector> table;
  for (const auto& p : fixtures) {
    const FriezeGroup g = classify_frieze(p);
    if (table.count(g)) throw Error("two fixtures classify to " + std::string(to_string(g)));
    table.emplace(g, satisfies(ncc_vector(form_of(canonicalize(p)), table_kind_order(), registry)));
  }
  return table;
}

std::vector<TableCell> fragility_check(const std::vector<PeriodicPattern>& fixtures, PieceKind kind,
                                       const Moveset& moveset, const KindRegistry& registry) {
  if (!registry.contains(kind)) throw Error("unregistered kind");
  const auto before = satisfies_table(fixtures, registry);
  if (before.size() != 7) throw Error("fixtures must cover the seven frieze groups");
  const auto after = satisfies_table(fixtures, registry.with_moveset(kind, moveset));
  std::vector<TableCell> changed;
  for (FriezeGroup g : table_group_order())
    for (PieceKind k : table_kind_order()) {
      const bool x = before.at(g).at(k), y = after.at(g).at(k);
      if (x != y) changed.push_back({g, k, x, y});
    }
  return changed;
}

}  // namespace shogi
