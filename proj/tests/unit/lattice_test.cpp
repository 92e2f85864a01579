#include <fuzzytop/lattice.hpp>

#include <gtest/gtest.h>

using namespace fuzzytop;

namespace {

FiniteFrame diamond() { return FiniteFrame::from_edges({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Counts maps that preserve bottom, top, binary meets and joins, by trying every function.
std::size_t brute_force_hom_count(const FiniteFrame& a, const FiniteFrame& b) {
  std::size_t n = a.size(), m = b.size(), count = 0;
  ElemMap f(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      if (f[a.bottom] != b.bottom || f[a.top] != b.top) return;
      for (Elem x = 0; x < Elem(n); ++x)
        for (Elem y = 0; y < Elem(n); ++y)
          if (f[a.meet(x, y)] != b.meet(f[x], f[y]) || f[a.join(x, y)] != b.join(f[x], f[y])) return;
      ++count;
      return;
    }
    for (Elem t = 0; t < Elem(m); ++t) {
      f[i] = t;
      go(i + 1);
    }
  };
  go(0);
  return count;
}

}  // namespace

TEST(Frame, ChainsAndDiamondAreFrames) {
  EXPECT_TRUE(check_frame(chain_frame(2)).ok());
  EXPECT_TRUE(check_frame(chain_frame(5)).ok());
  EXPECT_TRUE(check_frame(diamond()).ok());
}

TEST(Frame, NonDistributiveLatticesAreRejected) {
  // M3: three incomparable atoms
  auto m3 = FiniteFrame::from_edges({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  EXPECT_TRUE(check_frame(m3).has("distributivity"));
  // N5: 0 < a < c < 1 and 0 < b < 1
  auto n5 = FiniteFrame::from_edges({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
  EXPECT_TRUE(check_frame(n5).has("distributivity"));
}

TEST(Frame, OneElementFrameIsRejected) {
  auto one = FiniteFrame::from_edges({"*"}, {});
  EXPECT_TRUE(check_frame(one).has("top differs from bottom"));
}

TEST(Frame, MeetAndJoinTablesOfDiamond) {
  auto d = diamond();
  EXPECT_EQ(d.meet(1, 2), 0);
  EXPECT_EQ(d.join(1, 2), 3);
  EXPECT_EQ(d.join_all({}), d.bottom);
  EXPECT_EQ(d.meet_all({}), d.top);
}

TEST(FrameHoms, EnumerationMatchesBruteForce) {
  std::vector<FiniteFrame> fs{chain_frame(2), chain_frame(3), chain_frame(4), diamond()};
  for (auto& a : fs)
    for (auto& b : fs) {
      auto homs = enumerate_frame_homs(a, b);
      EXPECT_EQ(homs.size(), brute_force_hom_count(a, b));
      for (auto& h : homs) EXPECT_TRUE(is_frame_hom(a, b, h));
    }
  // diamond into the two-element chain: one hom per prime filter, and the diamond has two
  EXPECT_EQ(enumerate_frame_homs(diamond(), chain_frame(2)).size(), 2u);
}

TEST(Birkhoff, JoinIrreduciblesOfChainAndDiamond) {
  EXPECT_EQ(join_irreducibles(chain_frame(4)).ids.size(), 3u);
  auto j = join_irreducibles(diamond());
  ASSERT_EQ(j.ids.size(), 2u);
  EXPECT_FALSE(j.poset.leq(0, 1));
  EXPECT_FALSE(j.poset.leq(1, 0));
}

TEST(Birkhoff, DownsetsOfJoinIrreduciblesRecoverTheFrame) {
  for (auto f : {chain_frame(3), chain_frame(5), diamond(), frame_product(diamond(), chain_frame(3)).frame}) {
    auto j = join_irreducibles(f);
    auto d = downset_frame(j.poset);
    ASSERT_EQ(d.frame.size(), f.size());
    auto b = birkhoff_map(f, j, d);
    EXPECT_TRUE(bijective(b, f.size()));
    EXPECT_TRUE(is_frame_hom(f, d.frame, b));
  }
}

TEST(Coproduct, SizesOfSmallTensorProducts) {
  // downsets of a product of chains: 3 (x) 3 has J = 2 x 2, six downsets
  EXPECT_EQ(frame_coproduct(chain_frame(3), chain_frame(3)).frame.size(), 6u);
  EXPECT_EQ(frame_coproduct(chain_frame(2), chain_frame(4)).frame.size(), 4u);
  // diamond = 2 x 2, so its tensor square is the Boolean algebra on four atoms
  EXPECT_EQ(frame_coproduct(diamond(), diamond()).frame.size(), 16u);
}

TEST(Coproduct, InjectionsAreFrameHoms) {
  auto c = frame_coproduct(chain_frame(3), diamond());
  EXPECT_TRUE(check_frame(c.frame).ok());
  EXPECT_TRUE(is_frame_hom(chain_frame(3), c.frame, c.inj_a));
  EXPECT_TRUE(is_frame_hom(diamond(), c.frame, c.inj_b));
  EXPECT_EQ(c.tensor(chain_frame(3).top, diamond().top), c.frame.top);
  EXPECT_EQ(c.tensor(chain_frame(3).bottom, diamond().top), c.frame.bottom);
}

TEST(Product, ComponentwiseOrder) {
  auto p = frame_product(chain_frame(2), chain_frame(2));
  EXPECT_EQ(p.frame.size(), 4u);
  EXPECT_TRUE(find_isomorphism(p.frame, diamond()).has_value());
  EXPECT_FALSE(find_isomorphism(p.frame, chain_frame(4)).has_value());
}

TEST(GradedFrame, CrispGradingIsAGradedFrame) {
  EXPECT_TRUE(check_graded_frame(crisp_graded(diamond())).ok());
  EXPECT_TRUE(check_graded_frame(crisp_graded(chain_frame(4))).ok());
}

TEST(GradedFrame, GradeBreakingReflexivityIsCaught) {
  auto g = crisp_graded(chain_frame(3));
  g.R(1, 1) = TruthValue(1, 2);
  EXPECT_FALSE(check_graded_frame(g).ok());
}
