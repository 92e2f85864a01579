#include <fuzzytop/space.hpp>

#include <gtest/gtest.h>

using namespace fuzzytop;

namespace {
TruthValue v(const char* s) { return TruthValue::parse(s); }
FuzzySubset fs(std::initializer_list<const char*> xs) {
  std::vector<TruthValue> m;
  for (auto x : xs) m.push_back(v(x));
  return FuzzySubset(m);
}
FuzzyTopSpace two_point() { return generate_topology({"a", "b"}, {fs({"1/2", "1"}), fs({"1", "0"})}); }
}  // namespace

TEST(Generate, ClosesUnderIntersectionAndUnion) {
  auto s = two_point();
  // subbasis, their meet (1/2,0), their join (1,1), and the empty set
  std::vector<FuzzySubset> want{fs({"0", "0"}), fs({"1/2", "0"}), fs({"1/2", "1"}), fs({"1", "0"}), fs({"1", "1"})};
  EXPECT_EQ(s.opens, want);
  EXPECT_TRUE(check_space(s).ok());
}

TEST(CheckSpace, MissingUnionIsReported) {
  FuzzyTopSpace s{{"a", "b"}, {fs({"0", "0"}), fs({"1", "0"}), fs({"0", "1"}), fs({"1", "1"}), fs({"1/2", "1/2"})}};
  s.normalize();
  EXPECT_FALSE(check_space(s).ok());
}

TEST(CheckSpace, StratifiedSpaceNeedsConstants) {
  auto s = two_point();
  s.flavor = Flavor::stratified;
  s.chain = make_chain(3);
  EXPECT_FALSE(check_space(s).ok());
  auto t = generate_topology({"a", "b"}, {fs({"1/2", "1"}), fs({"1", "0"}), fs({"1/2", "1/2"})});
  t.flavor = Flavor::stratified;
  t.chain = make_chain(3);
  EXPECT_TRUE(check_space(t).ok());
}

TEST(SpaceFrame, OpensUnderPointwiseOrder) {
  auto f = space_frame(two_point());
  EXPECT_EQ(f.size(), 5u);
  EXPECT_TRUE(check_frame(f).ok());
}

TEST(Continuity, IdentityAndConstantMaps) {
  auto s = two_point();
  EXPECT_TRUE(check_fuzzy_continuous({0, 1}, s, s).ok());
  // the constant map at b pulls (1/2,1) back to the constant 1, which is open, but (1/2,0) back to 0
  // and (1,0) back to 0; the constant map at a pulls (1/2,1) back to the constant 1/2, which is not
  EXPECT_TRUE(check_fuzzy_continuous({1, 1}, s, s).ok());
  EXPECT_FALSE(check_fuzzy_continuous({0, 0}, s, s).ok());
}

TEST(Separation, KolmogorovAndCompactness) {
  auto s = two_point();
  s.flavor = Flavor::n_valued;
  s.chain = make_chain(3);
  EXPECT_TRUE(kolmogorov(s));
  EXPECT_TRUE(compact(s));
  FuzzyTopSpace indiscrete{{"a", "b"}, {fs({"0", "0"}), fs({"1", "1"})}, Flavor::n_valued, make_chain(3)};
  EXPECT_FALSE(kolmogorov(indiscrete));
  EXPECT_THROW(compact(two_point()), flavor_error);
}

TEST(Flavor, NamesRoundTrip) {
  for (auto f : {Flavor::plain, Flavor::stratified, Flavor::n_valued, Flavor::graded})
    EXPECT_EQ(parse_flavor(flavor_name(f)), f);
  EXPECT_THROW(parse_flavor("fuzzy"), flavor_error);
}
