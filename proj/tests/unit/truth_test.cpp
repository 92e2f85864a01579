#include <fuzzytop/truth.hpp>

#include <gtest/gtest.h>

using namespace fuzzytop;

namespace {
TruthValue v(const char* s) { return TruthValue::parse(s); }
}

TEST(TruthValue, ParsesFractionsIntegersAndDecimalsExactly) {
  EXPECT_EQ(v("2/4"), TruthValue(1, 2));
  EXPECT_EQ(v("2/4").str(), "1/2");
  EXPECT_EQ(v("0.35"), TruthValue(7, 20));
  EXPECT_EQ(v(".5"), TruthValue(1, 2));
  EXPECT_EQ(v(" 1 "), TruthValue::one());
  EXPECT_EQ(v("0").str(), "0");
}

TEST(TruthValue, RejectsMalformedAndOutOfRange) {
  for (const char* s : {"", "x", "1/0", "3/2", "-1/2", "1.", "2", "1/2/3", "0.5.5"})
    EXPECT_THROW(v(s), invalid_value) << s;
  EXPECT_THROW(TruthValue(5, 4), invalid_value);
}

TEST(GodelArrow, TableOnThreeChain) {
  // rows a, columns b over {0, 1/2, 1}: 1 where a <= b, otherwise b
  const char* vals[] = {"0", "1/2", "1"};
  const char* table[3][3] = {{"1", "1", "1"}, {"0", "1", "1"}, {"0", "1/2", "1"}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_EQ(godel_arrow(v(vals[a]), v(vals[b])), v(table[a][b])) << a << "," << b;
}

TEST(GodelArrow, IsTheResiduumOfMin) {
  // c <= (a -> b) iff min(c, a) <= b, checked on a grid of sixths
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j)
      for (int k = 0; k <= 6; ++k) {
        TruthValue a(i, 6), b(j, 6), c(k, 6);
        EXPECT_EQ(c <= godel_arrow(a, b), meet(c, a) <= b);
      }
}

TEST(Families, EmptyInfimumIsOneAndEmptySupremumIsZero) {
  EXPECT_EQ(inf_family(std::span<const TruthValue>{}), TruthValue::one());
  EXPECT_EQ(sup_family(std::span<const TruthValue>{}), TruthValue::zero());
  EXPECT_EQ(inf_family({v("1/3"), v("1/4"), v("1")}), v("1/4"));
  EXPECT_EQ(sup_family({v("1/3"), v("1/4"), v("0")}), v("1/3"));
}

TEST(ValueChain, UniformChainAndLookup) {
  auto c = make_chain(5);
  ASSERT_EQ(c.size(), 5u);
  EXPECT_TRUE(c.uniform());
  EXPECT_EQ(c[2], v("1/2"));
  EXPECT_EQ(c.index_of(v("3/4")), 3);
  EXPECT_EQ(c.index_of(v("1/3")), -1);
  EXPECT_THROW(make_chain(1), invalid_chain);
}

TEST(ValueChain, FromValuesAddsEndpointsAndDeduplicates) {
  auto c = ValueChain::from_values({v("1/3"), v("1/3"), v("2/3")});
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(c.uniform());
  auto d = ValueChain::from_values({v("1/5")});
  EXPECT_EQ(d.size(), 3u);
  EXPECT_FALSE(d.uniform());
}
