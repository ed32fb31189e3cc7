#include <gtest/gtest.h>

#include "support/boards.hpp"
#include "twist/classifier.hpp"

#include <map>

using namespace twist;
using namespace twist::testing;

namespace {

GroupDescriptor of(const TwistGraph &g) { return classify(g, g.home()); }

PuzzleState fp_solved(const TwistGraph &g) { return solved_state(g, g.home()); }

} // namespace

TEST(Classifier, CaseExamples) {
  EXPECT_EQ(of(preset("fifteen_plus_four")).kind, GroupCase::TwistBipartiteParity);
  EXPECT_EQ(of(preset("fifteen_plus_four")).n, 19u);
  EXPECT_EQ(of(board("theta5", 3, {{"e1", 1}, {"e2", 1}, {"e4", 1}})).kind,
            GroupCase::Theta5Mod3);
  EXPECT_EQ(of(board("theta5", 3, {{"e1", 1}})).kind, GroupCase::Theta5Plain);
  EXPECT_EQ(of(board("theta7", 2, {{"inf-center", 1}})).kind, GroupCase::Theta7Parity);
  EXPECT_EQ(of(board("theta7", 3, {{"inf-center", 1}})).kind, GroupCase::Theta7Plain);
  EXPECT_EQ(of(board("k4", 2, {{"v0v1", 1}})).kind, GroupCase::FullGenSym);
  EXPECT_EQ(of(board("k33", 3, {{"a0b0", 1}})).kind, GroupCase::EvenPermFullRot);
  EXPECT_EQ(of(board("cycle:4", 3, {{"e0", 1}})).kind, GroupCase::Cyclic);
  EXPECT_EQ(of(preset("figure8")).kind, GroupCase::OracleFallback);
  EXPECT_EQ(of(preset("grid:4x4")).kind, GroupCase::EvenPermFullRot);
  EXPECT_EQ(of(preset("grid:2x1")).kind, GroupCase::OracleFallback);
}

TEST(Classifier, OrderExamples) {
  EXPECT_EQ(of(board("theta5", 3, {{"e1", 1}, {"e2", 1}, {"e4", 1}})).order, 324);
  EXPECT_EQ(of(board("theta5", 3, {{"e1", 1}})).order, 972);
  EXPECT_EQ(of(board("theta7", 2, {{"inf-center", 1}})).order, 3840);
  EXPECT_EQ(of(board("k4", 2, {{"v0v1", 1}})).order, 48);
  EXPECT_EQ(of(board("k33", 3, {{"a0b0", 1}})).order, 14580);
  EXPECT_EQ(of(board("cycle:4", 3, {{"e0", 1}})).order, 9);
  BigInt fp = 1;
  for (int i = 2; i <= 19; ++i)
    fp *= i;
  for (int i = 0; i < 19; ++i)
    fp *= 4;
  EXPECT_EQ(of(preset("fifteen_plus_four")).order, fp / 2);
}

TEST(Classifier, ReductionFeedsTheCase) {
  // Twists all even with m = 4: the effective modulus is 2.
  GroupDescriptor d = of(board("k4", 4, {{"v0v1", 2}}));
  EXPECT_EQ(d.reduction.d, 2);
  EXPECT_EQ(d.m, 2);
  EXPECT_EQ(d.kind, GroupCase::FullGenSym);
  EXPECT_EQ(d.order, 48);
  GroupDescriptor w = of(board("k4", 5));
  EXPECT_EQ(w.m, 1);
  EXPECT_EQ(w.order, 6);
}

TEST(Classifier, MultiEdgeExceptionalBoardsFallBack) {
  TwistGraph t5 = board("theta5", 3, {{"e1", 1}});
  std::vector<EdgeSpec> specs;
  for (const auto &e : t5.edges())
    specs.push_back({e.id, t5.vertex(e.tail).id, t5.vertex(e.head).id, e.twist});
  specs.push_back({"extra", "left", "top", 2});
  TwistGraph doubled(3, t5.vertices(), specs, "left");
  GroupDescriptor d = of(doubled);
  EXPECT_EQ(d.kind, GroupCase::OracleFallback);
  ASSERT_TRUE(d.fallback_set);
  EXPECT_EQ(d.order, d.fallback_set->size());
}

TEST(Classifier, FallbackCapRaisesUndecided) {
  EXPECT_THROW(classify(preset("figure8"), 0, 4), Undecided);
}

TEST(Classifier, DescriptorInvariants) {
  for (const auto &g : {preset("fifteen_plus_four"), board("theta5", 3, {{"e1", 1}}),
                        board("theta7", 2, {{"inf-center", 1}}), preset("figure8"),
                        board("cycle:5", 2, {{"e1", 1}})}) {
    GroupDescriptor d = of(g);
    EXPECT_EQ(d.exceptional.has_value(), is_exceptional(d.kind));
    EXPECT_EQ(d.fallback_set.has_value(), d.kind == GroupCase::OracleFallback);
    EXPECT_EQ(d.order, group_order(d));
  }
}

TEST(Classifier, FifteenPlusFourClaims) {
  TwistGraph g = preset("fifteen_plus_four");
  GroupDescriptor d = of(g);
  PuzzleState s = fp_solved(g);
  EXPECT_TRUE(is_solvable(d, g, s));
  EXPECT_FALSE(is_solvable(d, g, rotate_tile(g, s, 7, 1)));
  EXPECT_FALSE(is_solvable(d, g, swap_tiles(s, 7, 8)));
  EXPECT_TRUE(is_solvable(d, g, rotate_tile(g, swap_tiles(s, 7, 8), 7, 1)));
  EXPECT_TRUE(is_solvable(d, g, scramble(g, s, 500, 17)));
}

TEST(Classifier, WilsonGrid) {
  TwistGraph g = preset("grid:4x4");
  PuzzleState s = solved_state(g, g.home());
  EXPECT_FALSE(is_solvable(g, g.home(), swap_tiles(s, 0, 1)));
  EXPECT_TRUE(is_solvable(g, g.home(), swap_tiles(swap_tiles(s, 0, 1), 2, 3)));
}

TEST(Classifier, SolvabilityHoldsAwayFromHome) {
  TwistGraph g = board("theta7", 2, {{"inf-center", 1}});
  GroupDescriptor d = of(g);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PuzzleState s = scramble(g, fp_solved(g), 31, seed);
    EXPECT_TRUE(is_solvable(d, g, s));
    PuzzleState bad = rotate_tile(g, s, s.blank == 0 ? 1 : 0, 1);
    EXPECT_FALSE(is_solvable(d, g, bad));
  }
}

TEST(Classifier, NonDefaultHome) {
  TwistGraph g = board("theta5", 3, {{"e1", 1}, {"e2", 1}, {"e4", 1}});
  for (std::size_t home = 0; home < g.vertex_count(); ++home) {
    GroupDescriptor d = classify(g, home);
    EXPECT_EQ(d.kind, GroupCase::Theta5Mod3);
    EXPECT_EQ(d.order, 324);
  }
}

TEST(Classifier, PglTable) {
  auto table = pgl25_table();
  EXPECT_EQ(table.size(), 120u);
  bool odd = false;
  for (const auto &p : table)
    odd |= permutation_sign(p) == -1;
  EXPECT_TRUE(odd);
  // z + 1 and 1/z are in it.
  std::vector<std::uint32_t> shift{1, 2, 3, 4, 0, 5}, invert{5, 1, 3, 2, 4, 0};
  EXPECT_TRUE(std::binary_search(table.begin(), table.end(), shift));
  EXPECT_TRUE(std::binary_search(table.begin(), table.end(), invert));
}

TEST(Classifier, PglTableMatchesTheta7Closure) {
  TwistGraph g = preset("theta7");
  GroupDescriptor d = classify(g, g.vertex_index("center"));
  // Sites in vertex order: inf, 0, 1, 2, 3, 4 -> PGL labels 5, 0, 1, 2, 3, 4.
  const std::uint32_t label[6] = {5, 0, 1, 2, 3, 4};
  std::vector<std::vector<std::uint32_t>> relabelled;
  for (const auto &[rank, q] : d.exceptional->permutations) {
    auto s = permutation_unrank(rank, 6);
    std::vector<std::uint32_t> p(6);
    for (std::size_t i = 0; i < 6; ++i)
      p[label[i]] = label[s[i]];
    relabelled.push_back(p);
  }
  std::sort(relabelled.begin(), relabelled.end());
  EXPECT_EQ(relabelled, pgl25_table());
}

TEST(Classifier, A4Quotient) {
  GroupDescriptor d = of(board("theta5", 3, {{"e1", 1}, {"e2", 1}, {"e4", 1}}));
  auto q = a4_quotient(d);
  ASSERT_EQ(q.size(), 12u);
  int zeros = 0;
  std::map<std::vector<std::uint32_t>, Residue> table(q.begin(), q.end());
  for (const auto &[s, v] : q) {
    bool involution = true;
    for (std::size_t i = 0; i < s.size(); ++i)
      involution &= s[s[i]] == i;
    EXPECT_EQ(involution, v == 0);
    zeros += v == 0;
    for (const auto &[t, w] : q) {
      std::vector<std::uint32_t> st(s.size());
      for (std::size_t i = 0; i < s.size(); ++i)
        st[i] = s[t[i]];
      EXPECT_EQ(table.at(st), (v + w) % 3);
    }
  }
  EXPECT_EQ(zeros, 4);
  for (std::size_t i = 0; i < d.generator_elements.size(); ++i) {
    const auto &e = d.generator_elements[i];
    EXPECT_EQ(table.at(e.sigma()), e.eta(3));
  }
  EXPECT_THROW(a4_quotient(of(preset("k4"))), std::invalid_argument);
}

TEST(Classifier, GaugedBoardsClassifyAlike) {
  TwistGraph g = board("theta7", 4, {{"inf-center", 1}, {"1-2", 2}});
  GroupDescriptor base = of(g);
  Gauge psi{{0, 1, 2, 3, 0, 1, 2}};
  TwistGraph h = gauge_transform(g, psi);
  GroupDescriptor other = of(h);
  EXPECT_EQ(base.kind, other.kind);
  EXPECT_EQ(base.order, other.order);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    PuzzleState s = scramble(g, fp_solved(g), 20, seed);
    s = rotate_tile(g, s, (s.blank + 1 + seed % 6) % 7, static_cast<std::int64_t>(seed % 4));
    EXPECT_EQ(is_solvable(base, g, s), is_solvable(other, h, gauge_state(h, s, psi)));
  }
}
