#include <fuzzytop/fuzzyset.hpp>

#include <gtest/gtest.h>

using namespace fuzzytop;

namespace {
TruthValue v(const char* s) { return TruthValue::parse(s); }
FuzzySubset fs(std::initializer_list<const char*> xs) {
  std::vector<TruthValue> m;
  for (auto x : xs) m.push_back(v(x));
  return FuzzySubset(m);
}
}  // namespace

TEST(GradedInclusion, InfimumOfPointwiseArrows) {
  EXPECT_EQ(graded_inclusion(fs({"1/2", "1"}), fs({"1", "1/3"})), v("1/3"));
  EXPECT_EQ(graded_inclusion(fs({"1/2", "0"}), fs({"1/2", "1/3"})), v("1"));
  EXPECT_EQ(graded_inclusion(fs({"1", "1"}), fs({"0", "1"})), v("0"));
  // the empty carrier includes itself fully
  EXPECT_EQ(graded_inclusion(FuzzySubset::empty(0), FuzzySubset::empty(0)), v("1"));
}

TEST(GradedInclusion, CarrierMismatchThrows) {
  EXPECT_THROW(graded_inclusion(fs({"1"}), fs({"1", "0"})), carrier_mismatch);
}

TEST(Operations, UnionAndIntersectionArePointwise) {
  auto a = fs({"1/2", "1", "0"}), b = fs({"1/3", "1/4", "1"});
  EXPECT_EQ(set_union(a, b), fs({"1/2", "1", "1"}));
  EXPECT_EQ(intersection(a, b), fs({"1/3", "1/4", "0"}));
  EXPECT_EQ(union_of({}, 3), FuzzySubset::empty(3));
}

TEST(AlphaCuts, CrispStrictAndFuzzy) {
  auto a = fs({"1/2", "1", "0", "1/4"});
  EXPECT_EQ(alpha_cut(a, v("1/2")), (std::vector<int>{0, 1}));
  EXPECT_EQ(strict_alpha_cut(a, v("1/2")), (std::vector<int>{1}));
  EXPECT_EQ(fuzzy_alpha_cut(a, v("1/2")), fs({"1/2", "1", "0", "0"}));
  EXPECT_EQ(support(a), (std::vector<int>{0, 1, 3}));
}

TEST(Maps, PreimageAndImage) {
  std::vector<int> f{1, 1, 0};
  auto b = fs({"1/3", "2/3"});
  EXPECT_EQ(preimage(f, b), fs({"2/3", "2/3", "1/3"}));
  EXPECT_EQ(image(f, fs({"1/4", "1/2", "1"}), 2), fs({"1", "1/2"}));
}

TEST(ProperFunctions, IdentityIsProperAndComposesNeutrally) {
  auto a = fs({"1", "1/2", "0"});
  auto id = identity_proper(a);
  EXPECT_TRUE(check_proper(id).ok());
  auto twice = compose_proper(id, id);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) EXPECT_EQ(twice(x, y), id(x, y));
  auto b = fs({"1/3", "1", "1"});
  EXPECT_EQ(proper_preimage(id, b), intersection(a, b));
}
