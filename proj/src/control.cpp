#include "shogi/control.hpp"

#include <algorithm>

#include "cylinder.hpp"
#include "shogi/error.hpp"

namespace shogi {

namespace {

constexpr Displacement kUnitSteps[8] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}};
constexpr Displacement kOrthogonal[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

struct Band {
  long long lo, hi;
};

Band motif_band(const PeriodicPattern& p) {
  Band b{detail::perp(p.motif.front().cell, p.period), detail::perp(p.motif.front().cell, p.period)};
  for (const auto& piece : p.motif) {
    const long long s = detail::perp(piece.cell, p.period);
    b.lo = std::min(b.lo, s);
    b.hi = std::max(b.hi, s);
  }
  return b;
}

std::vector<PieceKind> kinds_of(const PeriodicPattern& p) {
  std::vector<PieceKind> out;
  out.reserve(p.motif.size());
  for (const auto& piece : p.motif) out.push_back(piece.kind);
  return out;
}

}  // namespace

std::string_view to_string(RegionClass r) {
  switch (r) {
    case RegionClass::Inside:
      return "Inside";
    case RegionClass::Base:
      return "Base";
    case RegionClass::Outside:
      return "Outside";
  }
  return "?";
}

std::string_view to_string(RayEnd e) {
  switch (e) {
    case RayEnd::BlockedByAlly:
      return "BlockedByAlly";
    case RayEnd::CaptureEnemy:
      return "CaptureEnemy";
    case RayEnd::FreeInfinite:
      return "FreeInfinite";
  }
  return "?";
}

std::string to_string(const NccStatus& s) {
  switch (s.verdict) {
    case Verdict::Complete:
      return "Complete";
    case Verdict::NearlyComplete:
      return "NearlyComplete:" + std::string(to_string(*s.uncontrolled));
    case Verdict::Fails:
      return "Fails@(" + std::to_string(s.witness->x) + "," + std::to_string(s.witness->y) + ")";
  }
  return "?";
}

bool PeriodicCellSet::contains(Cell c) const {
  return std::binary_search(classes.begin(), classes.end(), reduce(c, period));
}

struct NeighborhoodAnalysis::Impl {
  PeriodicPattern pattern;
  Band band;
  long long margin;
  detail::Cylinder cyl;
  std::vector<int> occupant;        // per cylinder index: motif index or -1
  std::vector<int> neighborhood;    // cylinder indices, sorted by cell
  std::vector<RegionClass> region;  // per cylinder index, valid on neighborhood

  explicit Impl(PeriodicPattern canonical)
      : pattern(std::move(canonical)),
        band(motif_band(pattern)),
        margin(detail::unit_perp_reach(pattern.period)),
        cyl(pattern.period, band.lo - margin, band.hi + margin) {
    occupant.assign(cyl.size(), -1);
    for (std::size_t i = 0; i < pattern.motif.size(); ++i)
      occupant[cyl.index(pattern.motif[i].cell)] = static_cast<int>(i);

    std::vector<char> in_nbhd(cyl.size(), 0);
    for (const auto& piece : pattern.motif)
      for (auto e : kUnitSteps) in_nbhd[cyl.index_of(piece.cell + e)] = 1;
    for (int i = 0; i < cyl.size(); ++i)
      if (in_nbhd[i]) neighborhood.push_back(i);

    classify_regions();
  }

  bool in_motif_band(Cell c) const {
    const long long s = detail::perp(c, pattern.period);
    return s >= band.lo && s <= band.hi;
  }

  // Empty components that reach beyond the motif band are unbounded.
  void classify_regions() {
    region.assign(cyl.size(), RegionClass::Outside);
    std::vector<int> component(cyl.size(), -1);
    std::vector<char> escapes;
    std::vector<int> stack;
    for (int start : neighborhood) {
      if (occupant[start] >= 0) {
        region[start] = RegionClass::Base;
        continue;
      }
      if (component[start] < 0) {
        const int id = static_cast<int>(escapes.size());
        bool escaped = !in_motif_band(cyl.cell(start));
        component[start] = id;
        stack.assign(1, start);
        while (!stack.empty()) {
          const Cell c = cyl.cell(stack.back());
          stack.pop_back();
          for (auto e : kOrthogonal) {
            const Cell n = c + e;
            if (!in_motif_band(n)) {
              escaped = true;
              continue;
            }
            const int j = cyl.index(cyl.reduce(n));
            if (occupant[j] >= 0 || component[j] >= 0) continue;
            component[j] = id;
            stack.push_back(j);
          }
        }
        escapes.push_back(escaped);
      }
      region[start] = escapes[component[start]] ? RegionClass::Outside : RegionClass::Inside;
    }
  }

  // Calls visit(plane_cell, index) for every cell the rider reaches.
  template <class Visit>
  RayEnd march(Cell origin, Displacement d, Orientation o, Visit&& visit, std::optional<Cell>* stop) const {
    Cell cur = origin;
    // More steps than band classes means a class repeats without a hit.
    for (int n = 0; n <= cyl.size(); ++n) {
      cur = cur + d;
      const int idx = cyl.index_of(cur);
      if (idx < 0) return RayEnd::FreeInfinite;
      const int who = occupant[idx];
      if (who >= 0) {
        if (stop) *stop = cur;
        if (pattern.motif[who].orientation == o) return RayEnd::BlockedByAlly;
        visit(cur, idx);
        return RayEnd::CaptureEnemy;
      }
      visit(cur, idx);
    }
    return RayEnd::FreeInfinite;
  }

  void mark_control(std::span<const PieceKind> kinds, const KindRegistry& registry, std::vector<char>& mark,
                    std::vector<Cell>* far, std::vector<FreeLine>* lines) const {
    if (kinds.size() != pattern.motif.size()) throw Error("kind assignment does not match motif size");
    mark.assign(cyl.size(), 0);
    for (std::size_t i = 0; i < pattern.motif.size(); ++i) {
      const auto& piece = pattern.motif[i];
      const Moveset& m = registry.oriented_moveset(kinds[i], piece.orientation);
      for (auto s : m.steps()) {
        const Cell target = piece.cell + s;
        const int idx = cyl.index_of(target);
        if (idx < 0) {
          if (far) far->push_back(cyl.reduce(target));
          continue;
        }
        const int who = occupant[idx];
        if (who >= 0 && pattern.motif[who].orientation == piece.orientation) continue;
        mark[idx] = 1;
      }
      for (auto d : m.rides()) {
        const RayEnd end = march(piece.cell, d, piece.orientation, [&](Cell, int idx) { mark[idx] = 1; }, nullptr);
        if (end == RayEnd::FreeInfinite && lines) lines->push_back({piece.cell, d});
      }
    }
  }

  NccStatus verdict_from(const std::vector<char>& mark) const {
    std::vector<int> uncontrolled;
    bool any_controlled = false;
    for (int i : neighborhood) {
      if (mark[i])
        any_controlled = true;
      else
        uncontrolled.push_back(i);
    }
    if (uncontrolled.empty()) return {Verdict::Complete, std::nullopt, std::nullopt};
    if (!any_controlled) return {Verdict::Fails, std::nullopt, cyl.cell(uncontrolled.front())};

    const RegionClass r = region[uncontrolled.front()];
    std::optional<int> mismatch;
    for (int i : neighborhood) {
      if ((mark[i] == 0) != (region[i] == r)) {
        mismatch = i;
        break;
      }
    }
    if (!mismatch) return {Verdict::NearlyComplete, r, std::nullopt};
    return {Verdict::Fails, std::nullopt, cyl.cell(*mismatch)};
  }
};

NeighborhoodAnalysis::NeighborhoodAnalysis(const PeriodicPattern& p)
    : impl_(std::make_shared<const Impl>(canonicalize(p))) {}

NeighborhoodAnalysis::NeighborhoodAnalysis(const Form& f) : NeighborhoodAnalysis(instantiate(f, kinds::King)) {}

const PeriodicPattern& NeighborhoodAnalysis::pattern() const { return impl_->pattern; }

PeriodicCellSet NeighborhoodAnalysis::neighborhood() const {
  PeriodicCellSet out{{}, impl_->pattern.period, {}};
  for (int i : impl_->neighborhood) out.classes.push_back(impl_->cyl.cell(i));
  return out;
}

std::map<Cell, RegionClass> NeighborhoodAnalysis::partition() const {
  std::map<Cell, RegionClass> out;
  for (int i : impl_->neighborhood) out.emplace(impl_->cyl.cell(i), impl_->region[i]);
  return out;
}

NccStatus NeighborhoodAnalysis::evaluate(std::span<const PieceKind> kinds, const KindRegistry& registry) const {
  std::vector<char> mark;
  impl_->mark_control(kinds, registry, mark, nullptr, nullptr);
  return impl_->verdict_from(mark);
}

NccStatus NeighborhoodAnalysis::evaluate(PieceKind uniform, const KindRegistry& registry) const {
  const std::vector<PieceKind> kinds(impl_->pattern.motif.size(), uniform);
  return evaluate(kinds, registry);
}

std::map<RegionClass, bool> NeighborhoodAnalysis::controlled_regions(std::span<const PieceKind> kinds,
                                                                     const KindRegistry& registry) const {
  std::vector<char> mark;
  impl_->mark_control(kinds, registry, mark, nullptr, nullptr);
  std::map<RegionClass, bool> out{
      {RegionClass::Inside, true}, {RegionClass::Base, true}, {RegionClass::Outside, true}};
  for (int i : impl_->neighborhood)
    if (!mark[i]) out[impl_->region[i]] = false;
  return out;
}

PeriodicCellSet NeighborhoodAnalysis::control(std::span<const PieceKind> kinds, const KindRegistry& registry) const {
  std::vector<char> mark;
  std::vector<Cell> far;
  std::vector<FreeLine> lines;
  impl_->mark_control(kinds, registry, mark, &far, &lines);
  PeriodicCellSet out{std::move(far), impl_->pattern.period, std::move(lines)};
  for (int i = 0; i < impl_->cyl.size(); ++i)
    if (mark[i]) out.classes.push_back(impl_->cyl.cell(i));
  std::sort(out.classes.begin(), out.classes.end());
  out.classes.erase(std::unique(out.classes.begin(), out.classes.end()), out.classes.end());
  std::sort(out.free_lines.begin(), out.free_lines.end());
  out.free_lines.erase(std::unique(out.free_lines.begin(), out.free_lines.end()), out.free_lines.end());
  return out;
}

PeriodicCellSet neighborhood(const PeriodicPattern& p) { return NeighborhoodAnalysis(p).neighborhood(); }

std::map<Cell, RegionClass> partition_neighborhood(const PeriodicPattern& p) {
  return NeighborhoodAnalysis(p).partition();
}

RayResult ray_march(const PeriodicPattern& p, Cell origin, Displacement dir, Orientation origin_orientation) {
  if (!dir.is_unit()) throw Error("ray direction must be a unit vector");
  NeighborhoodAnalysis analysis(p);
  RayResult out;
  out.end = analysis.impl_->march(
      origin, dir, origin_orientation, [&](Cell c, int) { out.cells.push_back(c); }, &out.stop);
  return out;
}

PeriodicCellSet control_of_pattern(const PeriodicPattern& p, const KindRegistry& registry) {
  NeighborhoodAnalysis analysis(p);
  return analysis.control(kinds_of(analysis.pattern()), registry);
}

NccStatus ncc_status(const PeriodicPattern& p, const KindRegistry& registry) {
  NeighborhoodAnalysis analysis(p);
  return analysis.evaluate(kinds_of(analysis.pattern()), registry);
}

}  // namespace shogi
