#include <gtest/gtest.h>

#include <stdexcept>

#include "shogi/error.hpp"
#include "shogi/symmetry.hpp"
#include "support.hpp"

using namespace shogi;
using namespace testing_support;

namespace {

const SymmetryFlags kNone{};

SymmetryFlags flags(bool h, bool v, bool g, bool r) { return {h, v, g, r}; }

}  // namespace

TEST(Isometry, MapsCells) {
  EXPECT_EQ(Isometry::translate({2, -1}).map({1, 1}), (Cell{3, 0}));
  EXPECT_EQ(Isometry::rotate180(0.5, 0).map({0, 0}), (Cell{1, 0}));
  EXPECT_EQ(Isometry::reflect_h(0.5).map({3, 0}), (Cell{3, 1}));
  EXPECT_EQ(Isometry::reflect_v(0).map({2, 5}), (Cell{-2, 5}));
  EXPECT_EQ(Isometry::glide_h(0, 2).map({1, 3}), (Cell{3, -3}));
  EXPECT_THROW(Isometry::rotate180(0.25, 0), Error);
}

TEST(Isometry, OrientationAndDecorationFollowTheLinearPart) {
  const PeriodicPattern p{{{{0, 0}, kinds::Pawn, Orientation::Up, Displacement{1, 1}}}, {5, 0}};
  const PeriodicPattern h = apply(Isometry::reflect_h(0), p);
  EXPECT_EQ(h.motif[0].orientation, Orientation::Down);
  EXPECT_EQ(h.motif[0].decoration, (Displacement{1, -1}));
  const PeriodicPattern v = apply(Isometry::reflect_v(0), p);
  EXPECT_EQ(v.motif[0].orientation, Orientation::Up);
  EXPECT_EQ(v.motif[0].decoration, (Displacement{-1, 1}));
  const PeriodicPattern r = apply(Isometry::rotate180(0, 0), p);
  EXPECT_EQ(r.motif[0].orientation, Orientation::Down);
  EXPECT_EQ(r.motif[0].decoration, (Displacement{-1, -1}));
}

TEST(Isometry, Involutions) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const PeriodicPattern p = randomly_decorated(rng, random_pattern(rng));
    for (const Isometry& s : {Isometry::rotate180(1.5, -0.5), Isometry::reflect_h(0.5), Isometry::reflect_v(-1)})
      EXPECT_EQ(apply(s, apply(s, p)), p);
    EXPECT_EQ(dual(dual(p)), p);
  }
}

TEST(Detect, UpRowHasOnlyVerticalMirrors) {
  const PeriodicPattern p = canonicalize({{piece(0, 0, kinds::King)}, {1, 0}});
  EXPECT_EQ(detect_symmetries(p).flags, flags(false, true, false, false));
  EXPECT_EQ(classify_frieze(p), FriezeGroup::p1m1);
  EXPECT_TRUE(is_symmetry(p, Isometry::reflect_v(0)));
  EXPECT_TRUE(is_symmetry(p, Isometry::reflect_v(0.5)));
  EXPECT_FALSE(is_symmetry(p, Isometry::reflect_h(0)));
}

TEST(Detect, AlternatingRow) {
  const PeriodicPattern p =
      canonicalize({{piece(0, 0, kinds::King), piece(1, 0, kinds::King, Orientation::Down)}, {2, 0}});
  const SymmetryReport r = detect_symmetries(p);
  EXPECT_EQ(r.flags, flags(false, true, true, true));
  EXPECT_EQ(classify_frieze(p), FriezeGroup::p2mg);
  EXPECT_TRUE(is_symmetry(p, Isometry::glide_h(0, 1)));
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses.front().role, 'v');
}

TEST(Detect, VerticalPairIsFullySymmetric) {
  const PeriodicPattern p =
      canonicalize({{piece(0, 0, kinds::King), piece(0, 1, kinds::King, Orientation::Down)}, {1, 0}});
  EXPECT_EQ(detect_symmetries(p).flags, flags(true, true, false, true));
  EXPECT_EQ(classify_frieze(p), FriezeGroup::p2mm);
  EXPECT_TRUE(is_symmetry(p, Isometry::reflect_h(0.5)));
}

TEST(Detect, DiagonalPeriodOnlyAdmitsHalfTurns) {
  const PeriodicPattern p =
      canonicalize({{piece(0, 0, kinds::King), piece(1, 0, kinds::King, Orientation::Down)}, {2, 2}});
  const SymmetryFlags f = detect_symmetries(p).flags;
  EXPECT_FALSE(f.h || f.v || f.g);
  EXPECT_TRUE(f.r);
  EXPECT_EQ(classify_frieze(p), FriezeGroup::p2);
}

TEST(Detect, WitnessesAreSymmetries) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const PeriodicPattern p = randomly_decorated(rng, random_pattern(rng));
    const SymmetryReport r = detect_symmetries(p);
    for (const auto& w : r.witnesses) EXPECT_TRUE(is_symmetry(p, w.isometry)) << w.isometry.describe();
    const auto has = [&](char role) {
      for (const auto& w : r.witnesses)
        if (w.role == role) return true;
      return false;
    };
    EXPECT_EQ(has('h'), r.flags.h);
    EXPECT_EQ(has('v'), r.flags.v);
    EXPECT_EQ(has('g'), r.flags.g);
    EXPECT_EQ(has('r'), r.flags.r);
  }
}

TEST(ClassifyFlags, DecisionTable) {
  EXPECT_EQ(classify_flags(kNone), FriezeGroup::p1);
  EXPECT_EQ(classify_flags(flags(false, false, true, false)), FriezeGroup::p11g);
  EXPECT_EQ(classify_flags(flags(false, true, false, false)), FriezeGroup::p1m1);
  EXPECT_EQ(classify_flags(flags(true, false, false, false)), FriezeGroup::p11m);
  EXPECT_EQ(classify_flags(flags(false, false, false, true)), FriezeGroup::p2);
  EXPECT_EQ(classify_flags(flags(false, true, true, true)), FriezeGroup::p2mg);
  EXPECT_EQ(classify_flags(flags(true, true, false, true)), FriezeGroup::p2mm);
}

TEST(ClassifyFlags, ImpossibleCombinationsThrow) {
  EXPECT_THROW(classify_flags(flags(true, true, false, false)), std::logic_error);
  EXPECT_THROW(classify_flags(flags(false, true, true, false)), std::logic_error);
  EXPECT_THROW(classify_flags(flags(true, false, true, true)), std::logic_error);
}

TEST(Labels, RoundTrip) {
  for (FriezeGroup g : table_group_order()) EXPECT_EQ(parse_frieze_group(to_string(g)), g);
  EXPECT_FALSE(parse_frieze_group("p3"));
  EXPECT_EQ(table_group_order().size(), 7u);
  EXPECT_EQ(table_group_order().front(), FriezeGroup::p2mm);
  EXPECT_EQ(table_group_order().back(), FriezeGroup::p11g);
}

TEST(Recipe, EveryGroupFromAnAsymmetricMotif) {
  const std::vector<PlacedPiece> basic{{{1, 1}, kinds::Pawn, Orientation::Up, Displacement{1, 0}}};
  for (FriezeGroup g : table_group_order()) {
    const PeriodicPattern p = generate_from_recipe(basic, g, {6, 0});
    EXPECT_EQ(classify_frieze(p), g) << to_string(g);
  }
}

TEST(Recipe, RandomMotifsNeverOvershootTheGroup) {
  std::mt19937 rng(7);
  int exact = 0;
  for (int i = 0; i < 200; ++i) {
    const std::vector<PlacedPiece> basic{
        {{int(rng() % 3) + 1, int(rng() % 3) + 1}, kinds::Knight, Orientation::Up, Displacement{1, 1}}};
    for (FriezeGroup g : table_group_order()) {
      try {
        const PeriodicPattern p = generate_from_recipe(basic, g, {8, 0});
        exact += classify_frieze(p) == g;
      } catch (const Error&) {
      }
    }
  }
  EXPECT_GT(exact, 1000);
}

TEST(Recipe, Errors) {
  const std::vector<PlacedPiece> basic{piece(1, 1, kinds::Pawn)};
  EXPECT_THROW(generate_from_recipe(basic, FriezeGroup::p1m1, {2, 1}), Error);
  EXPECT_THROW(generate_from_recipe(basic, FriezeGroup::p11g, {5, 0}), Error);
  EXPECT_THROW(generate_from_recipe({piece(0, 0, kinds::Pawn)}, FriezeGroup::p11m, {4, 0}), Error);
  EXPECT_NO_THROW(generate_from_recipe(basic, FriezeGroup::p2, {2, 1}));
}

TEST(Dual, PreservesTheGroup) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const PeriodicPattern p = randomly_decorated(rng, random_pattern(rng));
    EXPECT_EQ(classify_frieze(dual(p)), classify_frieze(p));
    EXPECT_EQ(classify_frieze(mirrored_x(p)), classify_frieze(p));
    EXPECT_EQ(classify_frieze(apply(Isometry::translate({1, 2}), p)), classify_frieze(p));
  }
}

TEST(Fixtures, ClassifyAsNamed) {
  const auto crystals = load_crystals();
  for (std::size_t i = 0; i < crystals.size(); ++i)
    EXPECT_EQ(classify_frieze(crystals[i]), table_group_order()[i]);
}
