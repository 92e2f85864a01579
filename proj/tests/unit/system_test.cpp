#include <fuzzytop/system.hpp>

#include <gtest/gtest.h>

using namespace fuzzytop;

namespace {
TruthValue v(const char* s) { return TruthValue::parse(s); }
FuzzySubset fs(std::initializer_list<const char*> xs) {
  std::vector<TruthValue> m;
  for (auto x : xs) m.push_back(v(x));
  return FuzzySubset(m);
}
FuzzyTopSystem one_point(std::initializer_list<const char*> row) {
  auto d = FuzzyTopSystem::zeros({"x"}, chain_frame(int(row.size())));
  Elem a = 0;
  for (auto r : row) d.gr(0, a++) = v(r);
  return d;
}
FuzzyTopSpace two_point() { return generate_topology({"a", "b"}, {fs({"1/2", "1"}), fs({"1", "0"})}); }
}  // namespace

TEST(CheckSystem, MonotoneRowOnAChainIsASystem) {
  EXPECT_TRUE(check_system(one_point({"0", "1/2", "1"})).ok());
  EXPECT_TRUE(check_system_subsets(one_point({"0", "1/2", "1"})).ok());
}

TEST(CheckSystem, ClauseFailuresCarryWitnesses) {
  auto r = check_system(one_point({"0", "1", "1/2"}));
  EXPECT_TRUE(r.has("top is satisfied to degree 1"));
  EXPECT_TRUE(r.has("meet clause"));
  EXPECT_TRUE(check_system(one_point({"1/3", "1/2", "1"})).has("bottom is satisfied to degree 0"));
}

TEST(Ext, ColumnsBecomeOpens) {
  auto d = one_point({"0", "1/2", "1"});
  auto s = ext(d);
  EXPECT_EQ(s.opens, (std::vector<FuzzySubset>{fs({"0"}), fs({"1/2"}), fs({"1"})}));
  EXPECT_TRUE(check_space(s).ok());
}

TEST(J, SpaceToSystemAndBack) {
  auto s = two_point();
  auto d = j(s);
  EXPECT_TRUE(check_system(d).ok());
  EXPECT_TRUE(is_spatial(d));
  EXPECT_EQ(ext(d), s);
}

TEST(Quotient, MergesEqualColumns) {
  auto d = one_point({"0", "1", "1"});
  EXPECT_FALSE(is_spatial(d));
  auto q = quotient(d);
  EXPECT_EQ(q.sys.nelems(), 2u);
  EXPECT_EQ(q.class_of[1], q.class_of[2]);
  EXPECT_TRUE(is_spatial(q.sys));
  EXPECT_TRUE(check_system(q.sys).ok());
}

TEST(Spectrum, ChainIntoChain) {
  // frame homs 3 -> 3 fix the ends and send the middle anywhere
  auto d = spectrum(chain_frame(3), make_chain(3));
  EXPECT_EQ(d.npoints(), 3u);
  EXPECT_TRUE(check_system(d).ok());
  EXPECT_TRUE(is_localic(d));
}

TEST(OccurringChain, CollectsGrades) {
  auto c = occurring_chain(one_point({"0", "1/3", "1"}));
  EXPECT_EQ(c.size(), 3u);
  EXPECT_TRUE(c.contains(v("1/3")));
}

TEST(SumAndProduct, SizesAndValidity) {
  auto a = j(two_point());
  auto b = one_point({"0", "1/2", "1"});
  auto sum = system_sum({a, b});
  EXPECT_EQ(sum.sys.npoints(), a.npoints() + b.npoints());
  EXPECT_EQ(sum.sys.nelems(), a.nelems() * b.nelems());
  EXPECT_TRUE(check_system(sum.sys).ok());
  auto prod = system_product(a, b);
  EXPECT_EQ(prod.sys.npoints(), a.npoints() * b.npoints());
  EXPECT_TRUE(check_system(prod.sys).ok());
  EXPECT_TRUE(check_tensor_law(prod, a, b).ok());
}

TEST(SystemMaps, IdentityAndComposition) {
  auto d = j(two_point());
  auto id = identity_system_map(d);
  EXPECT_TRUE(check_system_map(id, d, d).ok());
  EXPECT_TRUE(check_system_map(compose(id, id), d, d).ok());
}

TEST(Graded, JgCarriesGradedInclusion) {
  auto g = j_g(two_point());
  EXPECT_TRUE(check_graded_system(g).ok());
  // (1,0) is included in (1/2,1) to degree 1 -> 1/2 = 1/2
  auto space = two_point();
  auto& s = space.opens;
  auto i = Elem(std::find(s.begin(), s.end(), fs({"1", "0"})) - s.begin());
  auto k = Elem(std::find(s.begin(), s.end(), fs({"1/2", "1"})) - s.begin());
  EXPECT_EQ(g.R(i, k), v("1/2"));
}
