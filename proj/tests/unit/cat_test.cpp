#include <fuzzytop/cat.hpp>

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
FuzzyTopSpace three_point() { return generate_topology({"p", "q", "r"}, {fs({"1", "1/2", "0"}), fs({"0", "1", "1"})}); }
}  // namespace

TEST(SmallFrames, OnePerDistributiveLatticeUpToIsomorphism) {
  // distributive lattices with 2, 3, 4, 5 elements: 1, 1, 2, 3
  EXPECT_EQ(small_frames(4).size(), 4u);
  EXPECT_EQ(small_frames(5).size(), 7u);
  for (auto& f : small_frames(5)) EXPECT_TRUE(check_frame(f).ok());
}

TEST(CoproductUniversal, HoldsOnSmallTriples) {
  auto fs4 = small_frames(4);
  for (auto& a : fs4)
    for (auto& b : fs4) EXPECT_TRUE(check_coproduct_universal(a, b, fs4.back()).ok());
}

TEST(Functors, JPreservesIdentitiesAndComposition) {
  auto C = top_category();
  auto D = sys_category();
  std::vector<FuzzyTopSpace> objs{two_point(), three_point()};
  std::vector<Arrow<FuzzyTopSpace, PointMap>> arrows;
  std::vector<Composable<FuzzyTopSpace, PointMap>> pairs;
  for (auto& s : objs)
    for (auto& t : objs)
      for (auto& f : continuous_maps(s, t)) arrows.push_back({s, t, f});
  ASSERT_FALSE(arrows.empty());
  for (auto& f : arrows)
    for (auto& g : arrows)
      if (f.dst == g.src) pairs.push_back({f, g});
  EXPECT_TRUE(check_functor_laws(j_functor(), C, D, objs, arrows, pairs).ok());
  EXPECT_TRUE(check_functor_laws(compose_functors(ext_functor(), j_functor()), C, C, objs, arrows, pairs).ok());
}

TEST(Functors, ABrokenFunctorIsCaught) {
  auto broken = j_functor();
  broken.mor = [](const PointMap&, const FuzzyTopSpace& s, const FuzzyTopSpace& t) {
    return j_map(PointMap(s.size(), 0), s, t);
  };
  std::vector<FuzzyTopSpace> objs{two_point()};
  EXPECT_FALSE(check_functor_laws(broken, top_category(), sys_category(), objs, {}, {}).ok());
}

TEST(Adjunctions, JExtOnSmallInstances) {
  std::vector<FuzzyTopSpace> spaces{two_point(), three_point()};
  std::vector<FuzzyTopSystem> systems{j(two_point())};
  auto d = FuzzyTopSystem::zeros({"x", "y"}, chain_frame(3));
  d.gr(0, 1) = v("1/2");
  d.gr(0, 2) = d.gr(1, 1) = d.gr(1, 2) = v("1");
  ASSERT_TRUE(check_system(d).ok());
  systems.push_back(d);
  EXPECT_TRUE(check_adjunction(j_ext_adjunction(), top_category(), sys_category(), spaces, systems).ok());
}

TEST(Adjunctions, FmSWithTheOccurringChain) {
  auto d = j(two_point());
  auto chain = occurring_chain(d);
  std::vector<FuzzyTopSystem> systems{d};
  std::vector<FiniteFrame> frames{chain_frame(3), d.frame};
  EXPECT_TRUE(check_adjunction(fm_s_adjunction(chain), sys_category(), loc_category(), systems, frames).ok());
}

TEST(Isomorphisms, HomeomorphismAndSystemIso) {
  auto s = two_point();
  EXPECT_TRUE(homeomorphism({0, 1}, s, s).ok());
  EXPECT_FALSE(homeomorphism({1, 1}, s, s).ok());
  auto d = j(s);
  EXPECT_TRUE(system_iso(identity_system_map(d), d, d).ok());
}

TEST(Equivalence, SpatialQuotientIsFixedByJExt) {
  auto d = FuzzyTopSystem::zeros({"x"}, chain_frame(3));
  d.gr(0, 1) = d.gr(0, 2) = v("1");
  auto q = quotient(d).sys;
  auto adj = j_ext_adjunction();
  auto r = check_equivalence<FuzzyTopSpace, PointMap, FuzzyTopSystem, SystemMap>(adj, top_category(), sys_category(), {},
                                                                               {q}, {}, system_iso);
  EXPECT_TRUE(r.ok()) << r;
}
