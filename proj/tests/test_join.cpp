#include <gtest/gtest.h>

#include <random>

#include "lefcalc/catalog.hpp"
#include "lefcalc/join.hpp"
#include "lefcalc/random.hpp"
#include "oracles.hpp"

using namespace lefcalc;

namespace {

LefschetzLadder veronese() { return catalog_get("veronese_p2").ladder; }
LefschetzLadder gr25() { return catalog_get("gr25").ladder; }

}  // namespace

TEST(JoinPrimitives, VeroneseDiagonals) {
  auto jp = join_primitives(veronese(), veronese());
  EXPECT_EQ(jp.right_diagonals, (std::vector<Rank>{0, 1, 2, 1}));
  EXPECT_EQ(jp.left_diagonals, (std::vector<Rank>{0, 1, 2, 1}));
  EXPECT_EQ(jp.right_grid.cells.size(), 4u);
  for (const auto& [pos, c] : jp.right_grid.cells) EXPECT_EQ(c.rank, RankExpr(1));
}

TEST(JoinPrimitives, ProjectiveSpacesHaveOneCell) {
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int m2 = 1; m2 <= 4; ++m2) {
      auto jp = join_primitives(proj_space(m1, 5), proj_space(m2, 5));
      for (int d = 0; d < m1 + m2; ++d)
        EXPECT_EQ(jp.right_diagonals[static_cast<std::size_t>(d)], d == m1 + m2 - 1 ? 1 : 0);
    }
}

TEST(JoinPrimitives, RankOneFactorIsOneColumn) {
  auto l = make_symmetric_ladder("a", 6, {2, 0, 3});
  auto jp = join_primitives(l, proj_space(1, 1));
  EXPECT_EQ(jp.right_grid.cols, 1);
  EXPECT_EQ(jp.right_diagonals, (std::vector<Rank>{0, 2, 0, 3}));
}

TEST(Join, ProjectiveBundles) {
  auto j = categorical_join(proj_space(3, 3), proj_space(2, 3));
  EXPECT_TRUE(j.ladder.same_shape(proj_space(5, 6)));
  EXPECT_TRUE(all_pass(j.diagnostics));
}

TEST(Join, Veronese) {
  auto j = categorical_join(veronese(), veronese());
  EXPECT_EQ(j.ladder.ambient_rank, 12);
  EXPECT_EQ(j.ladder.right, (std::vector<Rank>{0, 1, 2, 1}));
  EXPECT_EQ(total_rank(j.ladder), 12);
  EXPECT_EQ(j.ladder.length(), 4);
  EXPECT_TRUE(all_pass(j.diagnostics));
}

TEST(Join, Gr25) {
  auto j = categorical_join(gr25(), gr25());
  EXPECT_EQ(j.ladder.ambient_rank, 20);
  EXPECT_EQ(j.ladder.length(), 10);
  EXPECT_EQ(center_rank(j.ladder), 4);
  EXPECT_EQ(total_rank(j.ladder), 2 * 100 - 10 * 8 - 10 * 8);
  EXPECT_TRUE(all_pass(j.diagnostics));
  // block decoration: O(x)O, O(x)U^v, U^v(x)O, U^v(x)U^v at the top
  ASSERT_TRUE(j.ladder.right_blocks.contains(9));
  EXPECT_EQ(j.ladder.right_blocks.at(9).size(), 4u);
}

TEST(ResolvedJoin, Examples) {
  auto p = resolved_join_presentation(proj_space(1, 2), proj_space(1, 2));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(rank_of(p), RankExpr(2));

  auto v = resolved_join_presentation(veronese(), veronese());
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(rank_of(v.components[0].expr), RankExpr(12));
  EXPECT_EQ(rank_of(v.components[1].expr), RankExpr(3));
  EXPECT_EQ(rank_of(v.components[2].expr), RankExpr(3));
  EXPECT_EQ(rank_of(v), RankExpr(18));

  auto g = resolved_join_presentation(gr25(), gr25());
  RankExpr eps1, eps2;
  for (const auto& c : g.components) {
    if (c.origin == "eps1!") eps1 += rank_of(c.expr);
    if (c.origin == "eps2!") eps2 += rank_of(c.expr);
  }
  EXPECT_EQ(rank_of(g.components[0].expr), RankExpr(40));
  EXPECT_EQ(eps1, RankExpr(80));
  EXPECT_EQ(eps2, RankExpr(80));
  EXPECT_EQ(rank_of(g), RankExpr(200));
}

TEST(JiAlternate, Examples) {
  auto v = ji_alternate_check(veronese(), veronese(), 3);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.lhs, "1");
  auto g = ji_alternate_check(gr25(), gr25(), 1);
  EXPECT_TRUE(g.pass);
  EXPECT_EQ(g.lhs, "4");
  auto a = make_symmetric_ladder("a", 9, {1, 2, 3});
  auto b = make_symmetric_ladder("b", 9, {2, 0, 5});
  auto top = ji_alternate_check(a, b, 5);
  EXPECT_TRUE(top.pass);
  EXPECT_EQ(top.lhs, "15");
  EXPECT_THROW(ji_alternate_check(a, b, 0), InvalidInput);
  EXPECT_THROW(ji_alternate_check(a, b, 6), InvalidInput);
}

TEST(IteratedJoin, ThreePoints) {
  auto j = iterated_join({proj_space(1, 2), proj_space(1, 2), proj_space(1, 2)});
  EXPECT_TRUE(j.ladder.same_shape(proj_space(3, 6)));
  EXPECT_TRUE(all_pass(j.diagnostics));
}

TEST(IteratedJoin, RankOneFactorAddsOneToLength) {
  auto l = make_symmetric_ladder("a", 7, {1, 0, 2});
  auto j = iterated_join({l, proj_space(1, 1)});
  EXPECT_EQ(j.ladder.length(), l.length() + 1);
}

TEST(IteratedJoin, FoldRankMatchesTwoStepCount) {
  auto a = make_symmetric_ladder("a", 5, {1, 1});
  auto b = make_symmetric_ladder("b", 4, {0, 2});
  auto c = make_symmetric_ladder("c", 6, {3});
  auto j = iterated_join({a, b, c});
  auto step = [](const std::vector<Rank>& p1, const std::vector<Rank>& p2) {
    // 2 r1 r2 - r1 S2 - r2 S1, with S = total minus center
    Rank r1 = oracle::total(p1), r2 = oracle::total(p2);
    Rank s1 = r1 - oracle::center(p1), s2 = r2 - oracle::center(p2);
    return 2 * r1 * r2 - r1 * s2 - r2 * s1;
  };
  auto ab = oracle::join_primitives(a.right, b.right);
  EXPECT_EQ(oracle::total(ab), step(a.right, b.right));
  EXPECT_EQ(total_rank(j.ladder), step(ab, c.right));
  EXPECT_EQ(j.ladder.right, oracle::join_primitives(ab, c.right));
}

TEST(JoinProperty, MatchesBruteForceOnRandomPairs) {
  std::mt19937_64 rng(7);
  int asymmetric = 0;
  for (int k = 0; k < 300; ++k) {
    RandomLadderOptions opt;
    opt.symmetric = k % 2 == 0;
    auto a = random_moderate_ladder(rng, opt, "a");
    auto b = random_moderate_ladder(rng, opt, "b");
    asymmetric += a.left != a.right;
    auto j = categorical_join(a, b);
    EXPECT_EQ(j.ladder.right, oracle::join_primitives(a.right, b.right));
    EXPECT_EQ(j.ladder.left, oracle::join_primitives(a.left, b.left));
    EXPECT_TRUE(all_pass(j.diagnostics)) << show_shape(a) << " ; " << show_shape(b);
  }
  EXPECT_GT(asymmetric, 20);
}
