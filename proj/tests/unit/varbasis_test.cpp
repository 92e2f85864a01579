#include <fuzzytop/varbasis.hpp>

#include <gtest/gtest.h>

using namespace fuzzytop;

namespace {
TruthValue v(const char* s) { return TruthValue::parse(s); }
FuzzySubset fs(std::initializer_list<const char*> xs) {
  std::vector<TruthValue> m;
  for (auto x : xs) m.push_back(v(x));
  return FuzzySubset(m);
}
LTopSpace sample() {
  LTopSpace s{{{"a", "b", "c"}, make_chain(4), fs({"1", "2/3", "1/3"})},
              {fs({"0", "0", "0"}), fs({"1", "2/3", "1/3"}), fs({"1/3", "1/3", "0"}), fs({"1", "0", "0"}),
               fs({"1/3", "0", "0"}), fs({"1", "1/3", "0"})}};
  s.normalize();
  return s;
}
}  // namespace

TEST(LSpace, OpensBelowMembershipAndClosed) {
  EXPECT_TRUE(check_L_space(sample()).ok());
  auto s = sample();
  s.opens.push_back(fs({"1", "1", "0"}));
  EXPECT_TRUE(check_L_space(s).has("opens lie below the membership"));
}

TEST(LSystem, ExtOfJIsTheSpace) {
  auto s = sample();
  auto d = j_L(s);
  EXPECT_TRUE(check_L_system(d).ok());
  EXPECT_EQ(ext_L(d), s);
}

TEST(LAlphaCuts, StrictCutIsCrisp) {
  auto c = alpha_subspace_strict(sample(), v("1/2"));
  ASSERT_EQ(c.points, (std::vector<std::string>{"a", "b"}));
  // thresholds of the opens above 1/2: {}, {a}, {a,b}
  EXPECT_EQ(c.opens, (std::vector<FuzzySubset>{fs({"0", "0"}), fs({"1", "0"}), fs({"1", "1"})}));
  EXPECT_TRUE(check_space(c).ok());
}

TEST(LAlphaCuts, FuzzyCutDropsLowMembership) {
  auto c = alpha_subspace_fuzzy(sample(), v("1/2"));
  EXPECT_EQ(c.obj.membership, fs({"1", "2/3", "0"}));
  EXPECT_TRUE(check_L_space(c).ok());
  auto d = alpha_subsystem_fuzzy(j_L(sample()), v("1/2"));
  EXPECT_TRUE(check_L_system(d).ok());
  auto e = alpha_subsystem_strict(j_L(sample()), v("1/2"));
  EXPECT_TRUE(check_system(e).ok());
  EXPECT_EQ(e.npoints(), 2u);
}

TEST(LSystemMaps, IdentityIsAMorphism) {
  auto d = j_L(sample());
  EXPECT_TRUE(check_L_system_map(identity_L_map(d), d, d).ok());
  auto id = identity_fuzz(sample().obj);
  EXPECT_TRUE(check_fuzztop_morphism(id, sample(), sample()).ok());
}
