#include <gtest/gtest.h>

#include <vector>

#include "cactus/shapes.hpp"
#include "cactus/verify.hpp"
#include "fixtures.hpp"

using namespace cactus;
using fixtures::stair;

TEST(Dominant, SortsDescendingForSymmetric) {
  std::vector<Int> v{1, 2, 0};
  EXPECT_EQ(dominant(v, WeylKind::symmetric(3)), (Staircase{2, 1, 0}));
}

TEST(Dominant, SortsAbsoluteValuesForHyperoctahedral) {
  std::vector<Int> v{2, -1};
  EXPECT_EQ(dominant(v, WeylKind::hyperoctahedral(2)), (Staircase{2, 1}));
}

TEST(Dominant, FixesZero) {
  std::vector<Int> v{0, 0, 0};
  EXPECT_EQ(dominant(v, WeylKind::symmetric(3)), Staircase::zero(3));
  EXPECT_EQ(dominant(v, WeylKind::hyperoctahedral(3)), Staircase::zero(3));
}

TEST(Dominant, RejectsRankMismatch) {
  std::vector<Int> v{1, 0};
  EXPECT_THROW(dominant(v, WeylKind::symmetric(3)), ShapeError);
}

TEST(SplitStaircase, SeparatesSigns) {
  EXPECT_EQ(split_staircase(stair("21-3")),
            std::make_pair(Partition{2, 1}, Partition{3}));
  EXPECT_EQ(split_staircase(stair("31-3")),
            std::make_pair(Partition{3, 1}, Partition{3}));
  EXPECT_EQ(split_staircase(Staircase::zero(3)),
            std::make_pair(Partition(), Partition()));
}

TEST(SplitStaircase, NegativePartReadsFromTheEnd) {
  EXPECT_EQ(stair("10-1-2").negative_part(), (Partition{2, 1}));
}

TEST(AssembleStaircase, InvertsSplit) {
  EXPECT_EQ(assemble_staircase({2, 1}, {3}, 3), stair("21-3"));
  EXPECT_EQ(assemble_staircase({}, {}, 4), Staircase::zero(4));
  EXPECT_THROW(assemble_staircase({2, 1}, {3}, 2), ShapeError);
}

TEST(AssembleStaircase, RoundTripsEveryStaircaseOfSmallRank) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& a : enumerate_alternating(2, n)) {
      for (const auto& s : a.staircases()) {
        auto [pos, neg] = split_staircase(s);
        EXPECT_EQ(assemble_staircase(pos, neg, n), s);
      }
    }
}

TEST(Extent, CountsNonzeroEntries) {
  EXPECT_EQ(extent(stair("21-3")), 3u);
  EXPECT_EQ(extent(Staircase::zero(2)), 0u);
  EXPECT_EQ(extent(stair("10-1")), 2u);
}

TEST(JoinMeet, ComponentwiseMaxAndMin) {
  EXPECT_EQ(join({2, 1}, {1, 1, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(meet({2, 1}, {1, 1, 1}), (Partition{1, 1}));
  for (const auto& p : partitions_up_to(5)) {
    EXPECT_EQ(join(p, p), p);
    EXPECT_EQ(meet(p, p), p);
  }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate({2, 1}), (Partition{2, 1}));
  EXPECT_EQ(conjugate({3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate({}), Partition());
}

TEST(Conjugate, IsAnInvolutionUpToSizeEight) {
  for (const auto& p : partitions_up_to(8)) {
    EXPECT_EQ(conjugate(conjugate(p)), p);
    EXPECT_EQ(conjugate(p).size(), p.size());
  }
}

TEST(Cells, AddAndRemove) {
  EXPECT_EQ(add_cell({2, 1}, 1), (Partition{2, 2}));
  EXPECT_EQ(add_cell({2, 1}, 2), (Partition{2, 1, 1}));
  EXPECT_THROW(add_cell({2, 2}, 1), ShapeError);
  EXPECT_EQ(remove_cell({2, 1}, 0), (Partition{1, 1}));
  EXPECT_THROW(remove_cell({2, 2}, 0), ShapeError);
  EXPECT_EQ(added_cell_row({2, 1}, {2, 2}), 1);
  EXPECT_EQ(added_cell_row({2, 1}, {3, 2}), -1);
}

TEST(Partition, RejectsIncreasingParts) {
  EXPECT_THROW(Partition({1, 2}), ShapeError);
  EXPECT_THROW(Partition({1, -1}), ShapeError);
  EXPECT_EQ(Partition({2, 0, 0}), (Partition{2}));
}

TEST(Staircase, RejectsIncreasingEntries) {
  EXPECT_THROW(Staircase({0, 1}), ShapeError);
}

TEST(TextForm, PartitionRoundTrip) {
  EXPECT_EQ(format_partition({}), "0");
  EXPECT_EQ(format_partition({2, 1, 1}), "211");
  EXPECT_EQ(format_partition({12, 3}), "12,3");
  EXPECT_EQ(format_partition({12}), "12,0");
  for (const auto& p : partitions_up_to(7))
    EXPECT_EQ(parse_partition(format_partition(p)), p);
  EXPECT_EQ(parse_partition("12,0"), (Partition{12}));
  EXPECT_THROW(parse_partition("x"), ShapeError);
  EXPECT_THROW(parse_partition(""), ShapeError);
  EXPECT_THROW(parse_partition("12"), ShapeError);
}

TEST(TextForm, StaircaseRoundTrip) {
  EXPECT_EQ(format_staircase(stair("21-3")), "2,1,-3");
  EXPECT_EQ(parse_staircase(" 2, 1 ,-3 "), stair("21-3"));
  EXPECT_THROW(parse_staircase("2,a"), ShapeError);
  EXPECT_THROW(parse_staircase("0,1"), ShapeError);
}
