#include <gtest/gtest.h>

#include <set>

#include "cactus/tableaux.hpp"
#include "cactus/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cactus;
using fixtures::alt;

TEST(OscillatingWord, SingleLetterRepeated) {
  auto o = oscillating_from_word({1, 1, -1}, 1);
  EXPECT_EQ(format_oscillating(o), "0;1;2;1");
  EXPECT_EQ(word_from_oscillating(o), (SymplecticWord{1, 1, -1}));
}

TEST(OscillatingWord, LengthNineExample) {
  auto o = oscillating_from_word({1, 2, 1, -2, 2, -1, 1, 3, -3}, 3);
  EXPECT_EQ(o, fixtures::oscillating_nine());
  EXPECT_EQ(o.length(), 9u);
  EXPECT_EQ(o.shape(), (Partition{2, 1}));
}

TEST(OscillatingWord, AddThenRemove) {
  EXPECT_EQ(format_oscillating(oscillating_from_word({1, -1}, 1)), "0;1;0");
}

TEST(OscillatingWord, RejectsNonHighestWeight) {
  EXPECT_THROW(oscillating_from_word({2}, 2), TableauError);
  EXPECT_THROW(oscillating_from_word({-1}, 1), TableauError);
  EXPECT_THROW(oscillating_from_word({3}, 2), TableauError);
}

TEST(OscillatingTableau, Validation) {
  EXPECT_THROW(parse_oscillating("1;0", 1), TableauError);
  EXPECT_THROW(parse_oscillating("0;2", 1), TableauError);
  EXPECT_THROW(parse_oscillating("0;1;11", 1), TableauError);
  EXPECT_NO_THROW(parse_oscillating("0;1;11", 2));
}

TEST(AlternatingWord, GL2Example) {
  auto a = alternating_from_word({{1, 2}, {2, 1}}, 2);
  EXPECT_EQ(a, alt({"00", "10", "1-1", "10", "00"}));
  EXPECT_EQ(word_from_alternating(a), (AdjointWord{{1, 2}, {2, 1}}));
}

TEST(AlternatingWord, RankOne) {
  EXPECT_EQ(alternating_from_word({{1, 1}}, 1), alt({"0", "1", "0"}));
}

TEST(AlternatingWord, PromotionInput) {
  auto a = alternating_from_word({{1, 3}, {1, 2}, {2, 2}, {2, 1}, {3, 1}}, 3);
  EXPECT_EQ(a, fixtures::promotion_input());
  EXPECT_EQ(format_word(word_from_alternating(a)),
            "(e1,-e3)(e1,-e2)(e2,-e2)(e2,-e1)(e3,-e1)");
}

TEST(AlternatingTableau, Validation) {
  EXPECT_THROW(alt({"00", "10"}), TableauError);
  EXPECT_THROW(alt({"10", "10", "00"}), TableauError);
  EXPECT_THROW(alt({"00", "10", "20"}), TableauError);
  EXPECT_THROW(alt({"00", "10", "10"}), TableauError);
  EXPECT_THROW(AlternatingTableau({Staircase{0, 0}, Staircase{1, 0, 0},
                                   Staircase{0, 0, 0}}),
               TableauError);
}

TEST(StaircaseTableau, AcceptsEitherSign) {
  EXPECT_NO_THROW(StaircaseTableau(fixtures::stairs({"00", "10", "20", "2-1"})));
  EXPECT_THROW(StaircaseTableau(fixtures::stairs({"00", "11"})), TableauError);
}

TEST(StripPad, RemovesZeros) {
  auto a = fixtures::promotion_input();
  auto padded = pad_zeros(a, 5);
  EXPECT_EQ(padded.rank(), 5u);
  EXPECT_EQ(strip_zeros(padded, 3), a);
  for (std::size_t i = 0; i < a.staircases().size(); ++i) {
    EXPECT_EQ(padded[i].positive_part(), a[i].positive_part());
    EXPECT_EQ(padded[i].negative_part(), a[i].negative_part());
  }
  EXPECT_THROW(strip_zeros(a, 2), TableauError);
  EXPECT_THROW(pad_zeros(a, 2), TableauError);
}

TEST(StripPad, RankThirteenExampleStripsToRankThree) {
  auto big = fixtures::partial_permutation_input();
  EXPECT_EQ(big.rank(), 13u);
  EXPECT_EQ(strip_zeros(big, 3), fixtures::evacuation_input());
}

TEST(StripPad, PadThenStripIsIdentity) {
  for (const auto& a : enumerate_alternating(3, 2))
    for (std::size_t n = 2; n <= 5; ++n)
      EXPECT_EQ(strip_zeros(pad_zeros(a, n), 2), a);
}

TEST(MaxExtent, OverSequence) {
  EXPECT_EQ(max_extent(fixtures::evacuation_input().staircases()), 3u);
  EXPECT_EQ(max_extent(fixtures::gl2_eight().staircases()), 2u);
}

TEST(TextForm, TableauRoundTrip) {
  auto a = fixtures::evacuation_input();
  EXPECT_EQ(parse_alternating(format_alternating(a)), a);
  auto o = fixtures::oscillating_nine();
  EXPECT_EQ(parse_oscillating(format_oscillating(o), 3), o);
}

TEST(Enumerate, OneSymplecticLengthThree) {
  auto all = enumerate_oscillating(3, 1);
  ASSERT_EQ(all.size(), 3u);
  std::set<std::string> seen;
  for (const auto& o : all) seen.insert(format_oscillating(o));
  EXPECT_EQ(seen, (std::set<std::string>{"0;1;0;1", "0;1;2;1", "0;1;2;3"}));
}

TEST(Enumerate, GL2LengthTwo) {
  EXPECT_EQ(enumerate_alternating(2, 2).size(), 6u);
}

TEST(Enumerate, EmptyShapeOscillatingCountsBoundedCrossingMatchings) {
  for (int r = 0; r <= 8; ++r)
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t want = 0;
      for (const auto& m : oracle::perfect_matchings(r))
        if (oracle::max_crossing_brute(m) <= n) ++want;
      EXPECT_EQ(enumerate_oscillating(r, n, true).size(), want)
          << "r=" << r << " n=" << n;
    }
}

TEST(Enumerate, EmptyShapeAlternatingCountsBoundedLisPermutations) {
  for (std::size_t r = 1; r <= 6; ++r)
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<int> p(r);
      for (std::size_t i = 0; i < r; ++i) p[i] = static_cast<int>(i + 1);
      std::size_t want = 0;
      do {
        if (oracle::lis_brute(p) <= n) ++want;
      } while (std::next_permutation(p.begin(), p.end()));
      EXPECT_EQ(enumerate_alternating(r, n, true).size(), want)
          << "r=" << r << " n=" << n;
    }
}

TEST(Enumerate, MaxExtentFilter) {
  for (const auto& a : enumerate_alternating(3, 4, false, 2))
    EXPECT_LE(max_extent(a.staircases()), 2u);
}
