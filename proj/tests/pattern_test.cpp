#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "shogi/error.hpp"
#include "shogi/pattern.hpp"
#include "shogi/pattern_io.hpp"
#include "support.hpp"

using namespace shogi;
using namespace testing_support;

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce({5, 0}, {2, 0}), (Cell{1, 0}));
  EXPECT_EQ(reduce({3, 3}, {1, 1}), (Cell{0, 0}));
  EXPECT_EQ(reduce({0, 0}, {3, -2}), (Cell{0, 0}));
  EXPECT_EQ(reduce({-1, 0}, {2, 0}), (Cell{1, 0}));
  EXPECT_THROW(reduce({1, 1}, {0, 0}), Error);
}

TEST(Reduce, LandsInTheCanonicalStrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int i = 0; i < 2000; ++i) {
    const Displacement t{d(rng) % 6, d(rng) % 6};
    if (t.is_zero()) continue;
    const Cell c{d(rng), d(rng)};
    const Cell r = reduce(c, t);
    const long long u = 1LL * r.x * t.dx + 1LL * r.y * t.dy;
    const long long tt = 1LL * t.dx * t.dx + 1LL * t.dy * t.dy;
    EXPECT_GE(u, 0);
    EXPECT_LT(u, tt);
    const Displacement diff = c - r;
    // diff is an integer multiple of t
    EXPECT_EQ(1LL * diff.dx * t.dy - 1LL * diff.dy * t.dx, 0);
  }
}

TEST(Canonicalize, ShrinksToTheMinimalPeriod) {
  const PeriodicPattern p{{piece(0, 0, kinds::Pawn), piece(1, 0, kinds::Pawn)}, {2, 0}};
  const PeriodicPattern c = canonicalize(p);
  EXPECT_EQ(c.period, (Displacement{1, 0}));
  ASSERT_EQ(c.motif.size(), 1u);
  EXPECT_EQ(c.motif[0], piece(0, 0, kinds::Pawn));
  // same occupancy as the input on a window
  for (int x = -6; x <= 6; ++x)
    for (int y = -2; y <= 2; ++y) EXPECT_EQ(occupant(p, {x, y}).has_value(), occupant(c, {x, y}).has_value());
}

TEST(Canonicalize, ReductionOnly) {
  const PeriodicPattern c = canonicalize({{piece(5, 0, kinds::King)}, {2, 0}});
  EXPECT_EQ(c.period, (Displacement{2, 0}));
  ASSERT_EQ(c.motif.size(), 1u);
  EXPECT_EQ(c.motif[0].cell, (Cell{1, 0}));
}

TEST(Canonicalize, IdempotentAndDirectionNormalized) {
  const PeriodicPattern c = canonicalize({{piece(0, 0, kinds::Gold), piece(2, 1, kinds::Rook)}, {-3, 0}});
  EXPECT_EQ(c.period, (Displacement{3, 0}));
  EXPECT_EQ(canonicalize(c), c);
  EXPECT_TRUE(is_canonical(c));
}

TEST(Canonicalize, Errors) {
  EXPECT_THROW(canonicalize(PeriodicPattern{{}, {1, 0}}), Error);
  EXPECT_THROW(canonicalize({{piece(0, 0, kinds::King)}, {0, 0}}), Error);
  EXPECT_THROW(canonicalize({{piece(0, 0, kinds::King), piece(2, 0, kinds::Gold)}, {2, 0}}), Error);
  PlacedPiece bad = piece(0, 0, kinds::King);
  bad.decoration = Displacement{2, 0};
  EXPECT_THROW(canonicalize({{bad}, {3, 0}}), Error);
  // identical duplicates collapse
  EXPECT_EQ(canonicalize({{piece(0, 0, kinds::King), piece(3, 0, kinds::King)}, {3, 0}}).motif.size(), 1u);
}

TEST(Canonicalize, PreservesOccupancyOnRandomPatterns) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    PeriodicPattern raw;
    raw.period = random_period(rng, {});
    std::uniform_int_distribution<int> coord(-6, 6);
    std::set<Cell> used;
    for (int k = 0; k < 4; ++k) {
      const Cell c{coord(rng), coord(rng)};
      if (used.insert(reduce(c, raw.period)).second) raw.motif.push_back(piece(c.x, c.y, kinds::Silver));
    }
    const PeriodicPattern c = canonicalize(raw);
    EXPECT_EQ(canonicalize(c), c);
    for (int x = -8; x <= 8; ++x)
      for (int y = -8; y <= 8; ++y) {
        bool in_raw = false;
        for (const auto& q : raw.motif) in_raw |= reduce(q.cell, raw.period) == reduce({x, y}, raw.period);
        EXPECT_EQ(in_raw, occupant(c, {x, y}).has_value());
      }
  }
}

TEST(Occupant, Examples) {
  const PeriodicPattern p = canonicalize({{piece(0, 0, kinds::Pawn)}, {3, 0}});
  const auto hit = occupant(p, {3, 0});
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->cell, (Cell{3, 0}));
  EXPECT_EQ(hit->kind, kinds::Pawn);
  EXPECT_FALSE(occupant(p, {1, 0}));

  const PeriodicPattern diag = canonicalize({{piece(0, 0, kinds::Lance)}, {1, 1}});
  const auto far = occupant(diag, {5, 5});
  ASSERT_TRUE(far);
  EXPECT_EQ(far->cell, (Cell{5, 5}));
  EXPECT_EQ(far->kind, kinds::Lance);
}

TEST(Occupant, IsPeriodic) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const PeriodicPattern p = random_pattern(rng);
    for (int x = -5; x <= 5; ++x)
      for (int y = -5; y <= 5; ++y) {
        const auto a = occupant(p, {x, y});
        const auto b = occupant(p, Cell{x, y} + p.period);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
          EXPECT_EQ(a->kind, b->kind);
          EXPECT_EQ(a->orientation, b->orientation);
        }
      }
  }
}

TEST(Dual, FlipsOrientationsAndIsAnInvolution) {
  const PeriodicPattern up = canonicalize({{piece(0, 0, kinds::Gold), piece(1, 1, kinds::Pawn)}, {3, 0}});
  const PeriodicPattern d = dual(up);
  for (const auto& q : d.motif) EXPECT_EQ(q.orientation, Orientation::Down);
  EXPECT_EQ(dual(d), up);

  PlacedPiece arrow = piece(0, 0, kinds::King);
  arrow.decoration = Displacement{1, 1};
  EXPECT_EQ(dual(canonicalize({{arrow}, {2, 0}})).motif[0].decoration, (Displacement{-1, -1}));
}

TEST(FormConversion, RoundTrip) {
  const PeriodicPattern p = canonicalize({{piece(0, 0, kinds::King), piece(1, 0, kinds::King, Orientation::Down)}, {2, 0}});
  EXPECT_EQ(instantiate(form_of(p), kinds::King), p);
  EXPECT_EQ(canonicalize(form_of(p)), form_of(p));
}

TEST(PatternFile, ParsesAKingRow) {
  const auto doc = parse_pattern("period: 3 0\ngrid:\nK^ .. ..\n");
  ASSERT_EQ(doc.pattern.motif.size(), 1u);
  EXPECT_EQ(doc.pattern.motif[0], piece(0, 0, kinds::King));
  EXPECT_EQ(doc.pattern.period, (Displacement{3, 0}));
}

TEST(PatternFile, GridRowsAreTopFirstAndOriginIsBottomLeft) {
  const auto doc = parse_pattern("# two rows\nperiod: 5 0\norigin: 1 2\ngrid:\nGv ..\n.. S^\ndecor: 1 3 ne\n");
  ASSERT_EQ(doc.pattern.motif.size(), 2u);
  EXPECT_EQ(doc.pattern.motif[0].cell, (Cell{1, 3}));
  EXPECT_EQ(doc.pattern.motif[0].kind, kinds::Gold);
  EXPECT_EQ(doc.pattern.motif[0].orientation, Orientation::Down);
  EXPECT_EQ(doc.pattern.motif[0].decoration, (Displacement{1, 1}));
  EXPECT_EQ(doc.pattern.motif[1].cell, (Cell{2, 2}));
  EXPECT_EQ(doc.pattern.motif[1].kind, kinds::Silver);
}

TEST(PatternFile, Errors) {
  auto message = [](const std::string& text) {
    try {
      parse_pattern(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("period: 3 0\ngrid:\nQ^\n").find("unknown kind letter"), std::string::npos);
  EXPECT_NE(message("period: 0 0\ngrid:\nK^\n").find("zero period"), std::string::npos);
  EXPECT_NE(message("period: 3 x\ngrid:\nK^\n").find("malformed token"), std::string::npos);
  EXPECT_NE(message("period: 3 0\ngrid:\nK^ ..\nK^\n").find("ragged grid row"), std::string::npos);
  EXPECT_NE(message("period: 3 0\ngrid:\nK^ .. .. Gv\n").find("inconsistent motif"), std::string::npos);
  EXPECT_NE(message("period: 3 0\ngrid:\nK*\n").find("malformed token"), std::string::npos);
  EXPECT_NE(message("grid:\nK^\n").find("missing period"), std::string::npos);
  EXPECT_NE(message("period: 3 0\n").find("missing grid"), std::string::npos);
  EXPECT_NE(message("period: 3 0\nhello\ngrid:\nK^\n").find("malformed token"), std::string::npos);
  EXPECT_NE(message("period: 3 0\ngrid:\nK^\ndecor: 0 0 up\n").find("malformed token"), std::string::npos);
}

TEST(PatternFile, CustomKinds) {
  const auto doc = parse_pattern(
      "period: 2 0\nkind: C reverse-chariot steps= rides=(0,1);(0,-1)\ngrid:\nC^ K^\n");
  const auto chariot = doc.kinds.find_by_name("reverse-chariot");
  ASSERT_TRUE(chariot);
  EXPECT_EQ(doc.pattern.motif[0].kind, *chariot);
  EXPECT_EQ(doc.kinds.moveset(*chariot).rides().size(), 2u);
  const std::string text = serialize_pattern(doc.pattern, doc.kinds);
  EXPECT_EQ(text, "period: 2 0\norigin: 0 0\nkind: C reverse-chariot steps= rides=(0,-1);(0,1)\ngrid:\nC^ K^\n");
  const auto again = parse_pattern(text);
  EXPECT_EQ(again.pattern, doc.pattern);
}

TEST(PatternFile, SerializeIsByteStable) {
  PlacedPiece a = piece(0, 0, kinds::Gold, Orientation::Down);
  a.decoration = Displacement{-1, 0};
  const PeriodicPattern p = canonicalize({{a, piece(2, 1, kinds::Rook)}, {4, 0}});
  EXPECT_EQ(serialize_pattern(p), "period: 4 0\norigin: 0 0\ngrid:\n.. .. R^\nGv .. ..\ndecor: 0 0 w\n");
}

TEST(PatternFile, RoundTripOnRandomPatterns) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const PeriodicPattern p = randomly_decorated(rng, random_pattern(rng));
    EXPECT_EQ(parse_pattern(serialize_pattern(p)).pattern, p) << serialize_pattern(p);
  }
}

TEST(PatternFile, FixturesRoundTripByteForByte) {
  for (const auto& entry : std::filesystem::directory_iterator(fixture_dir())) {
    std::ifstream in(entry.path(), std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto doc = parse_pattern(buf.str());
    EXPECT_EQ(serialize_pattern(doc.pattern, doc.kinds), buf.str()) << entry.path();
    EXPECT_EQ(parse_pattern(serialize_pattern(doc.pattern)).pattern, doc.pattern);
  }
}

TEST(PatternFile, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "shogi_pattern_test.pat";
  const PeriodicPattern p = canonicalize({{piece(0, 0, kinds::Knight, Orientation::Down)}, {1, 2}});
  save_pattern_file(path.string(), p);
  EXPECT_EQ(load_pattern_file(path.string()).pattern, p);
  std::filesystem::remove(path);
  EXPECT_THROW(load_pattern_file(path.string()), Error);
}

TEST(Directions, NamesRoundTrip) {
  for (const char* name : {"n", "ne", "e", "se", "s", "sw", "w", "nw"}) {
    const auto d = parse_direction(name);
    ASSERT_TRUE(d);
    EXPECT_EQ(direction_name(*d), name);
  }
  EXPECT_FALSE(parse_direction("north"));
}
