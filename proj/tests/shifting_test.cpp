#include <gtest/gtest.h>

#include "lcif/mlcif.hpp"
#include "lcif/sampling.hpp"
#include "lcif/shifting.hpp"
#include "lcif/sicheck.hpp"
#include "test_util.hpp"

namespace lcif {
namespace {

using testing::family;

TEST(IjShift, Examples) {
  GroundContext ctx(5, 2);
  EXPECT_EQ(ij_shift(family(ctx, {{2, 3}}), 1, 2), family(ctx, {{1, 3}}));
  auto blocked = family(ctx, {{1, 3}, {2, 3}});
  EXPECT_EQ(ij_shift(blocked, 1, 2), blocked);
}

TEST(IjShift, RejectsBadPairs) {
  GroundContext ctx(5, 2);
  auto f = family(ctx, {{1, 2}});
  EXPECT_THROW(ij_shift(f, 2, 2), DomainError);
  EXPECT_THROW(ij_shift(f, 3, 2), DomainError);
  EXPECT_THROW(ij_shift(f, 0, 2), DomainError);
  EXPECT_THROW(ij_shift(f, 1, 6), DomainError);
}

TEST(IjShift, FixesStar) {
  GroundContext ctx(5, 2);
  auto star = named_family("star", ctx);
  for (int i = 1; i < 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) EXPECT_EQ(ij_shift(star, i, j), star);
  }
}

TEST(IjShift, PreservesSizeAndIntersection) {
  GroundContext ctx(7, 3);
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    auto f = random_intersecting_family(ctx, rng, 3 + t % 10);
    for (int i = 1; i < 7; ++i) {
      for (int j = i + 1; j <= 7; ++j) {
        auto g = ij_shift(f, i, j);
        EXPECT_EQ(g.size(), f.size());
        EXPECT_TRUE(is_intersecting_family(g));
      }
    }
  }
}

TEST(Compress, SingleSetFallsToMinimum) {
  GroundContext ctx(5, 2);
  auto [f, report] = compress(family(ctx, {{2, 3}}));
  EXPECT_EQ(f, family(ctx, {{1, 2}}));
  EXPECT_EQ(report.input_size, 1u);
  EXPECT_EQ(report.output_size, 1u);
  EXPECT_EQ(report.rounds, 2u);
  ASSERT_EQ(report.applied.size(), 2u);
  EXPECT_EQ(report.applied[0].i, 1);
  EXPECT_EQ(report.applied[0].j, 2);
  EXPECT_EQ(report.applied[1].i, 2);
  EXPECT_EQ(report.applied[1].j, 3);
}

TEST(Compress, StarIsAlreadyCompressed) {
  GroundContext ctx(5, 2);
  auto star = named_family("star", ctx);
  auto [f, report] = compress(star);
  EXPECT_EQ(f, star);
  EXPECT_EQ(report.rounds, 1u);
  EXPECT_TRUE(report.applied.empty());
}

TEST(Compress, RandomIntersectingFamilies) {
  GroundContext ctx(7, 3);
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    auto f = random_intersecting_family(ctx, rng, 1 + t % 20);
    long weight = element_weight(f);
    auto [g, report] = compress(f, [&](const SetFamily& step_family,
                                       const ShiftStep& step) {
      EXPECT_LT(step.weight_after, weight);
      EXPECT_EQ(step.weight_after, element_weight(step_family));
      weight = step.weight_after;
    });
    EXPECT_EQ(g.size(), f.size());
    EXPECT_EQ(report.input_size, report.output_size);
    EXPECT_TRUE(is_intersecting_family(g));
    EXPECT_TRUE(is_left_compressed_downclosed(g));
    EXPECT_TRUE(is_left_compressed_shiftstable(g));
    EXPECT_EQ(compress(g).family, g);
  }
}

}  // namespace
}  // namespace lcif
