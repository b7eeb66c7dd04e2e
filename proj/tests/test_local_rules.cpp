#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "cactus/local_rules.hpp"
#include "cactus/verify.hpp"
#include "fixtures.hpp"

using namespace cactus;
using fixtures::stair;
using fixtures::stairs;

namespace {

std::vector<Staircase> slice(const std::vector<Staircase>& v, std::size_t from,
                             std::size_t count) {
  return {v.begin() + from, v.begin() + from + count};
}

Decoration swapped(Decoration d) {
  if (d == Decoration::plus) return Decoration::minus;
  if (d == Decoration::minus) return Decoration::plus;
  return d;
}

}  // namespace

TEST(LocalRule, SymmetricExample) {
  EXPECT_EQ(local_rule(stair("110"), stair("211"), stair("221"),
                       WeylKind::symmetric(3)),
            stair("210"));
}

TEST(LocalRule, HyperoctahedralExample) {
  EXPECT_EQ(local_rule(stair("20"), stair("21"), stair("20"),
                       WeylKind::hyperoctahedral(2)),
            stair("21"));
}

TEST(LocalRule, EqualSidesReturnKappa) {
  for (const auto& a : enumerate_alternating(2, 3))
    for (const auto& k : a.staircases())
      for (const auto& l : a.staircases()) {
        EXPECT_EQ(local_rule(k, l, l, WeylKind::symmetric(3)), k);
      }
}

TEST(LocalRule, RankMismatchThrows) {
  EXPECT_THROW(local_rule(stair("10"), stair("100"), stair("10"),
                          WeylKind::symmetric(2)),
               ShapeError);
}

TEST(PromotionDiagram, ReproducesWorkedRows) {
  auto d = promotion_diagram(fixtures::promotion_input());
  EXPECT_EQ(slice(d.middle, 1, 9),
            stairs({"100", "200", "20-1", "21-1", "20-1", "21-1", "11-1",
                    "110", "100"}));
  EXPECT_EQ(d.bottom, stairs({"000", "100", "10-1", "11-1", "10-1", "11-1",
                              "10-1", "100", "10-1", "100", "000"}));
  EXPECT_EQ(format_word(word_from_alternating(promote(
                fixtures::promotion_input()))),
            "(e1,-e3)(e2,-e2)(e2,-e2)(e3,-e3)(e3,-e1)");
}

TEST(PromotionDiagram, PaddedRectangleDiffers) {
  auto d = promotion_diagram(pad_zeros(fixtures::promotion_input(), 4));
  EXPECT_EQ(slice(d.top, 5, 2), stairs({"200-1", "20-1-1"}));
  EXPECT_EQ(slice(d.middle, 4, 2), stairs({"210-1", "21-1-1"}));
  EXPECT_EQ(slice(d.bottom, 3, 2), stairs({"110-1", "11-1-1"}));
}

TEST(PromotionDiagram, SquaresSatisfyTheLocalRule) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& a : enumerate_alternating(4, n)) {
      auto d = promotion_diagram(a);
      WeylKind w = WeylKind::symmetric(n);
      std::size_t len = d.top.size();
      // middle[i] sits under top[i+1]; bottom[i] under middle[i+1].
      for (std::size_t i = 1; i + 2 < len; ++i)
        EXPECT_EQ(d.middle[i + 1],
                  local_rule(d.middle[i], d.top[i + 1], d.top[i + 2], w));
      for (std::size_t i = 0; i + 3 < len; ++i)
        EXPECT_EQ(d.bottom[i + 1],
                  local_rule(d.bottom[i], d.middle[i + 1], d.middle[i + 2], w));
    }
}

TEST(HalfPromotion, LengthOne) {
  auto h = half_promote(fixtures::alt({"00", "10", "1-1"}));
  EXPECT_EQ(h.staircases(), stairs({"00", "10", "1-1"}));
  EXPECT_TRUE(h.straight());
}

TEST(Promotion, PreservesShape) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& a : enumerate_alternating(4, n))
      EXPECT_EQ(promote(a).shape(), a.shape());
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& o : enumerate_oscillating(5, n))
      EXPECT_EQ(promote(o).shape(), o.shape());
}

TEST(Promotion, PermutationOfPromotedExample) {
  auto a = fixtures::promotion_input();
  EXPECT_EQ(format_one_line(perm_of(a)), "54123");
  EXPECT_EQ(format_one_line(perm_of(promote(a))), "23514");
}

TEST(Promotion, OscillatingLengthThree) {
  auto o = parse_oscillating("0;1;2;1", 1);
  auto p = promote(o);
  EXPECT_EQ(format_oscillating(p), "0;1;0;1");
  EXPECT_EQ(format_oscillating(promote(parse_oscillating("0;1;0;1", 1))),
            "0;1;2;1");
}

TEST(Promotion, EmptyShapeOrderDividesLength) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t r = 1; r <= 8; ++r)
      for (const auto& o : enumerate_oscillating(r, n, true)) {
        auto p = o;
        for (std::size_t k = 0; k < r; ++k) p = promote(p);
        EXPECT_EQ(p, o) << format_oscillating(o);
      }
}

TEST(Promotion, EmptyShapeVariantAgrees) {
  EXPECT_EQ(promote_empty_shape_variant(fixtures::promotion_input()),
            promote(fixtures::promotion_input()));
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& a : enumerate_alternating(4, n, true))
      EXPECT_EQ(promote_empty_shape_variant(a), promote(a))
          << format_alternating(a);
  auto one = fixtures::alt({"0", "1", "0"});
  EXPECT_EQ(promote_empty_shape_variant(one), one);
  EXPECT_THROW(promote_empty_shape_variant(fixtures::evacuation_input()),
               TableauError);
}

TEST(Evacuation, OscillatingExample) {
  EXPECT_EQ(format_oscillating(evacuate(fixtures::oscillating_nine())),
            "0;1;11;111;211;221;321;311;31;21");
}

TEST(Evacuation, AlternatingDiagramRows) {
  auto d = evacuation_diagram(fixtures::evacuation_input());
  std::vector<std::pair<std::size_t, std::vector<std::string>>> want = {
      {0, {"000", "100", "10-1", "20-1", "20-2", "20-1", "2-1-1", "3-1-1",
           "2-1-1", "20-1", "20-2", "30-2", "30-3", "31-3", "21-3"}},
      {2, {"100", "200", "20-1", "200", "20-1", "30-1", "20-1", "21-1",
           "21-2", "31-2", "31-3", "32-3", "22-3"}},
      {2, {"000", "100", "10-1", "100", "10-1", "20-1", "10-1", "11-1",
           "11-2", "21-2", "21-3", "22-3", "21-3"}},
      {4, {"100", "110", "11-1", "21-1", "11-1", "21-1", "21-2", "31-2",
           "31-3", "32-3", "31-3"}},
      {4, {"000", "100", "10-1", "20-1", "10-1", "20-1", "20-2", "30-2",
           "30-3", "31-3", "30-3"}},
      {6, {"100", "200", "100", "200", "20-1", "30-1", "30-2", "31-2",
           "30-2"}},
      {6, {"000", "100", "000", "100", "10-1", "20-1", "20-2", "21-2",
           "20-2"}},
      {8, {"100", "200", "20-1", "30-1", "30-2", "31-2", "30-2"}},
      {8, {"000", "100", "10-1", "20-1", "20-2", "21-2", "20-2"}},
      {10, {"100", "200", "20-1", "21-1", "20-1"}},
      {10, {"000", "100", "10-1", "11-1", "10-1"}},
      {12, {"100", "110", "100"}},
      {12, {"000", "100", "10-1"}},
      {14, {"100"}},
      {14, {"000"}},
  };
  ASSERT_EQ(d.rows.size(), want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    EXPECT_EQ(d.rows[k].offset, want[k].first) << "row " << k;
    EXPECT_EQ(d.rows[k].entries, stairs(want[k].second)) << "row " << k;
  }
}

TEST(Evacuation, AlternatingRightColumn) {
  EXPECT_EQ(evacuate(fixtures::evacuation_input()),
            fixtures::alt({"000", "100", "10-1", "100", "10-1", "20-1",
                           "20-2", "30-2", "20-2", "30-2", "30-3", "31-3",
                           "21-3", "22-3", "21-3"}));
}

TEST(Evacuation, IsAnInvolution) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& o : enumerate_oscillating(5, n))
      EXPECT_EQ(evacuate(evacuate(o)), o) << format_oscillating(o);
    for (const auto& a : enumerate_alternating(4, n))
      EXPECT_EQ(evacuate(evacuate(a)), a) << format_alternating(a);
  }
}

TEST(Cactus, FullIntervalIsEvacuation) {
  for (const auto& a : enumerate_alternating(3, 3))
    EXPECT_EQ(cactus_apply(a, 1, 3), evacuate(a));
  for (const auto& o : enumerate_oscillating(4, 2))
    EXPECT_EQ(cactus_apply(o, 1, 4), evacuate(o));
}

TEST(Cactus, GeneratorsAreInvolutions) {
  for (const auto& a : enumerate_alternating(4, 2))
    for (std::size_t q = 1; q <= 4; ++q)
      for (std::size_t p = 1; p <= q; ++p)
        EXPECT_EQ(cactus_apply(cactus_apply(a, p, q), p, q), a);
}

TEST(Cactus, PromotionFactorization) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& a : enumerate_alternating(4, n))
      EXPECT_EQ(cactus_apply(cactus_apply(a, 2, 4), 1, 4), promote(a))
          << format_alternating(a);
    for (const auto& o : enumerate_oscillating(4, n))
      EXPECT_EQ(cactus_apply(cactus_apply(o, 2, 4), 1, 4), promote(o))
          << format_oscillating(o);
  }
}

TEST(Cactus, RejectsBadInterval) {
  auto a = fixtures::promotion_input();
  EXPECT_THROW(cactus_apply(a, 0, 2), std::out_of_range);
  EXPECT_THROW(cactus_apply(a, 3, 2), std::out_of_range);
  EXPECT_THROW(cactus_apply(a, 1, 6), std::out_of_range);
  EXPECT_EQ(cactus_apply(a, 2, 2), a);
}

TEST(Decorations, WorkedFigureMarks) {
  auto d = evacuation_diagram(fixtures::evacuation_input());
  auto marks = decorate_evacuation_diagram(d);
  std::sort(marks.begin(), marks.end());
  std::vector<DecoratedCell> want = {{1, 9, Decoration::minus},
                                     {3, 5, Decoration::minus},
                                     {7, 8, Decoration::times},
                                     {12, 14, Decoration::plus}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(marks, want);
  EXPECT_THROW(decorated_evacuation_diagram(fixtures::evacuation_input()),
               TableauError);
}

TEST(Decorations, ReadBackThePermutation) {
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t n : {r, r + 1})
      for (const auto& a : enumerate_alternating(r, n, true)) {
        auto d = decorated_evacuation_diagram(a);
        EXPECT_EQ(permutation_from_decorations(d, r), perm_of(a))
            << format_alternating(a);
      }
}

TEST(Decorations, EvacuationMirrorsAndSwapsSigns) {
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t n : {r, r + 1})
      for (const auto& a : enumerate_alternating(r, n, true)) {
        auto d = decorated_evacuation_diagram(a);
        std::vector<DecoratedCell> mirrored;
        for (const auto& c : d.decorations)
          mirrored.push_back(
              {2 * r + 1 - c.column, 2 * r + 1 - c.row, swapped(c.mark)});
        auto e = decorated_evacuation_diagram(evacuate(a)).decorations;
        std::sort(mirrored.begin(), mirrored.end());
        std::sort(e.begin(), e.end());
        EXPECT_EQ(e, mirrored) << format_alternating(a);
      }
}

TEST(Render, PromotionDiagramLayout) {
  std::string text = render_promotion_diagram(
      promotion_diagram(fixtures::promotion_input()));
  auto first = text.substr(0, text.find('\n'));
  EXPECT_NE(first.find("2,-1,-1"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}
