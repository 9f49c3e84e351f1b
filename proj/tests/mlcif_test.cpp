#include <gtest/gtest.h>

#include "lcif/genfam.hpp"
#include "lcif/mlcif.hpp"
#include "lcif/sampling.hpp"
#include "lcif/sicheck.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace lcif {
namespace {

using testing::family;
using testing::generators;

long choose(int n, int k) {
  long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

TEST(NamedFamily, Examples) {
  GroundContext ctx(5, 2);
  EXPECT_EQ(named_family("star", ctx).size(), 4u);
  EXPECT_EQ(named_family("a23", ctx), family(ctx, {{1, 2}, {1, 3}, {2, 3}}));
  GroundContext hm_ctx(7, 3);
  EXPECT_EQ(named_family("hm", hm_ctx),
            build_family(generators(hm_ctx, {{1, 4}, {2, 3, 4}})));
  EXPECT_THROW(named_family("fano", ctx), DomainError);
}

// The membership descriptions agree with their generator forms.
TEST(NamedFamily, GeneratorForms) {
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}, {7, 3}, {8, 3},
                      {9, 4}, {10, 4}, {11, 5}}) {
    GroundContext ctx(n, k);
    EXPECT_EQ(named_family("star", ctx), build_family(generators(ctx, {{1}})));
    EXPECT_EQ(named_family("a23", ctx),
              build_family(generators(ctx, {{2, 3}})));
    std::vector<Element> block;
    for (int x = 2; x <= k + 1; ++x) block.push_back(x);
    EXPECT_EQ(named_family("hm", ctx),
              build_family(generators(ctx, {{1, k + 1}, block})));
    EXPECT_EQ(static_cast<long>(named_family("star", ctx).size()),
              choose(n - 1, k - 1));
  }
}

TEST(Maximality, Examples) {
  GroundContext ctx(5, 2);
  EXPECT_TRUE(is_maximal_intersecting(named_family("star", ctx)).is_maximal);
  auto v = is_maximal_intersecting(family(ctx, {{1, 2}, {1, 3}}));
  EXPECT_FALSE(v.is_maximal);
  ASSERT_TRUE(v.blocker.has_value());
  EXPECT_EQ(*v.blocker, KSet(ctx, {1, 4}));
  EXPECT_TRUE(
      is_maximal_intersecting(named_family("hm", GroundContext(7, 3)))
          .is_maximal);
  EXPECT_THROW(is_maximal_intersecting(family(ctx, {{1, 2}, {3, 4}})),
               PreconditionError);
}

TEST(GeneratorBound, Examples) {
  GroundContext ctx(10, 3);
  EXPECT_TRUE(lemma31_check(GeneratorSet(ctx, {2, 3, 5}), ctx));
  EXPECT_FALSE(lemma31_check(GeneratorSet(ctx, {2, 3, 7}), ctx));
  for (const auto& g : oracle::subsets(8, 1, 3)) {
    if (g.front() > 3) continue;
    GeneratorSet gs(ctx, g);
    EXPECT_EQ(lemma31_check(gs, ctx),
              type_of(gs, ctx).type_index == static_cast<int>(g.size()));
  }
}

TEST(GreedyExtend, Examples) {
  GroundContext ctx(5, 2);
  // {1,4} precedes {2,3} lexicographically, so the scan settles on the star.
  auto ext = greedy_extend(family(ctx, {{1, 2}}));
  EXPECT_EQ(ext, named_family("star", ctx));
  EXPECT_EQ(greedy_extend(named_family("star", ctx)), named_family("star", ctx));
  EXPECT_EQ(greedy_extend(named_family("a23", ctx)), named_family("a23", ctx));
  GroundContext hm_ctx(7, 3);
  EXPECT_EQ(greedy_extend(named_family("hm", hm_ctx)),
            named_family("hm", hm_ctx));
}

TEST(GreedyExtend, RejectsInvalidInput) {
  GroundContext ctx(5, 2);
  EXPECT_THROW(greedy_extend(family(ctx, {{2, 3}})), PreconditionError);
  EXPECT_THROW(greedy_extend(family(ctx, {{1, 2}, {1, 3}, {1, 4}, {2, 3},
                                          {2, 4}, {3, 4}})),
               PreconditionError);
  EXPECT_THROW(greedy_extend(SetFamily(ctx)), DomainError);
}

TEST(GreedyExtend, ExtensiveIdempotentSaturated) {
  GroundContext ctx(7, 3);
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    auto f = random_lcif(ctx, rng);
    auto g = greedy_extend(f);
    EXPECT_TRUE(g.includes(f));
    EXPECT_TRUE(is_left_compressed_downclosed(g));
    EXPECT_TRUE(is_intersecting_family(g));
    EXPECT_FALSE(find_addable_closure(g).has_value());
    EXPECT_EQ(greedy_extend(g), g);
    auto audit = extend_and_audit(f);
    EXPECT_EQ(audit.finding.has_value(), !audit.maximality.is_maximal);
  }
}

TEST(EnumerateMlcif, RefusesOverBudget) {
  EXPECT_THROW(enumerate_mlcif(GroundContext(8, 3)), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_mlcif(GroundContext(5, 2), 10));
  EXPECT_THROW(enumerate_mlcif(GroundContext(5, 2), 9), BudgetExceeded);
}

class EnumerateMlcifTest
    : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(EnumerateMlcifTest, MatchesBruteForceCatalogue) {
  auto [n, k] = GetParam();
  GroundContext ctx(n, k);
  auto cat = enumerate_mlcif(ctx);
  auto brute = oracle::mlcif_bruteforce(n, k);
  std::vector<oracle::Family> got;
  for (const auto& e : cat.families) got.push_back(testing::to_oracle(e.family));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, brute);

  auto has = [&](const SetFamily& f) {
    return std::any_of(cat.families.begin(), cat.families.end(),
                       [&](const MlcifEntry& e) { return e.family == f; });
  };
  EXPECT_TRUE(has(named_family("star", ctx)));
  EXPECT_TRUE(has(named_family("a23", ctx)));
  if (k >= 3) {
    EXPECT_TRUE(has(named_family("hm", ctx)));
  }

  for (std::size_t i = 0; i < cat.families.size(); ++i) {
    const auto& e = cat.families[i];
    EXPECT_TRUE(is_intersecting_family(e.family));
    EXPECT_TRUE(is_left_compressed_downclosed(e.family));
    EXPECT_TRUE(is_maximal_intersecting(e.family).is_maximal);
    EXPECT_EQ(build_family(e.generators), e.family);
    EXPECT_TRUE(check_collection(e.generators).passes);
    EXPECT_EQ(build_family(e.reduced), e.family);
    EXPECT_TRUE(check_collection(e.reduced).passes);
    for (const auto& g : e.reduced) {
      EXPECT_TRUE(lemma31_check(g, ctx)) << to_string(g);
      auto t = type_of(g, ctx);
      EXPECT_LT(g[t.type_index - 1], k + t.type_index);
    }
    if (i > 0) {
      const auto& prev = cat.families[i - 1].generators;
      EXPECT_TRUE(std::lexicographical_compare(
          prev.begin(), prev.end(), e.generators.begin(), e.generators.end()));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallContexts, EnumerateMlcifTest,
                         ::testing::Values(std::pair{4, 2}, std::pair{5, 2},
                                           std::pair{6, 2}, std::pair{6, 3},
                                           std::pair{7, 3}));

}  // namespace
}  // namespace lcif
