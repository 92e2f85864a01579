#include <fuzzytop/mvn.hpp>

#include <gtest/gtest.h>

using namespace fuzzytop;

namespace {

// Filters by trying every subset, with order and product taken on the coordinate vectors directly.
std::set<std::vector<int>> brute_force_filters(const LnAlgebra& A, bool prime_only) {
  int m = int(A.size()), n = A.n;
  auto below = [&](int a, int b) {
    for (std::size_t x = 0; x < A.xsize; ++x)
      if (A.vec[a][x] > A.vec[b][x]) return false;
    return true;
  };
  auto product = [&](int a, int b) {
    std::vector<int> v(A.xsize);
    for (std::size_t x = 0; x < A.xsize; ++x) v[x] = std::max(0, A.vec[a][x] + A.vec[b][x] - (n - 1));
    return A.find(v);
  };
  auto lub = [&](int a, int b) {
    std::vector<int> v(A.xsize);
    for (std::size_t x = 0; x < A.xsize; ++x) v[x] = std::max(A.vec[a][x], A.vec[b][x]);
    return A.find(v);
  };
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    auto in = [&](int a) { return bool(mask >> a & 1); };
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = 0; b < m && ok; ++b) {
        if (in(a) && below(a, b) && !in(b)) ok = false;
        if (in(a) && in(b) && !in(product(a, b))) ok = false;
      }
    if (!ok) continue;
    if (prime_only) {
      if (mask == (1u << m) - 1) continue;
      for (int a = 0; a < m && ok; ++a)
        for (int b = 0; b < m && ok; ++b)
          if (in(lub(a, b)) && !in(a) && !in(b)) ok = false;
      if (!ok) continue;
    }
    std::vector<int> f;
    for (int a = 0; a < m; ++a)
      if (in(a)) f.push_back(a);
    out.insert(f);
  }
  return out;
}

std::set<std::vector<int>> as_sets(const std::vector<NFilter>& fs) {
  std::set<std::vector<int>> out;
  for (auto& f : fs) out.insert(f.elems);
  return out;
}

std::size_t bell(std::size_t k) {
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (auto r : row) next.push_back(next.back() + r);
    row = next;
  }
  return row.front();
}

}  // namespace

TEST(ChainAlgebra, SatisfiesAllAxiomsForSmallN) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(check_lnc(chain_algebra(n)).ok()) << n;
}

TEST(ChainAlgebra, LukasiewiczOperations) {
  auto A = chain_algebra(5);
  // 3/4 (+) 1/2 = 1, 3/4 * 1/2 = 1/4, not 1/4 = 3/4
  EXPECT_EQ(A.plus(A.constants[3], A.constants[2]), A.constants[4]);
  EXPECT_EQ(A.times(A.constants[3], A.constants[2]), A.constants[1]);
  EXPECT_EQ(A.neg(A.constants[1]), A.constants[3]);
}

TEST(CheckLnc, MinMaxTablesOnThreeElementsFail) {
  // oplus = max and * = min with the usual negation: x = 1, y = 1/2 gives
  // (x* (+) y)* (+) y = 1/2 but (y* (+) x)* (+) x = 1
  std::vector<int> mx, mn;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      mx.push_back(std::max(a, b));
      mn.push_back(std::min(a, b));
    }
  auto K = algebra_from_tables(3, {"0", "1/2", "1"}, mx, mn, {2, 1, 0}, {0, 1, 2});
  EXPECT_FALSE(check_lnc(K).ok());
}

TEST(CheckLnc, MalformedTablesThrow) {
  EXPECT_THROW(algebra_from_tables(3, {"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, {1, 0}, {0, 1}), structural_error);
  EXPECT_THROW(algebra_from_tables(2, {"0", "1"}, {0, 1, 1, 5}, {0, 0, 0, 1}, {1, 0}, {0, 1}), structural_error);
}

TEST(Filters, EnumerationMatchesBruteForce) {
  for (auto A : {chain_algebra(3), chain_algebra(4), power_algebra(3, 2), power_algebra(2, 3), function_algebra(4, 2, {{1, 3}})}) {
    EXPECT_EQ(as_sets(enumerate_nfilters(A)), brute_force_filters(A, false)) << A.size();
    EXPECT_EQ(as_sets(prime_filters(A)), brute_force_filters(A, true)) << A.size();
  }
}

TEST(Filters, ThreeChainHasOnlyThePrimeFilterOfOne) {
  auto A = chain_algebra(3);
  auto ps = prime_filters(A);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].elems, std::vector<int>{A.one()});
}

TEST(Homs, CountsOnPowers) {
  // homomorphisms of n^X into n are the |X| projections
  EXPECT_EQ(enumerate_homs(power_algebra(3, 2)).size(), 2u);
  EXPECT_EQ(enumerate_homs(power_algebra(4, 2)).size(), 2u);
  EXPECT_EQ(enumerate_homs(chain_algebra(5)).size(), 1u);
  EXPECT_TRUE(bijection_check(power_algebra(4, 2)).ok());
}

TEST(Terms, CharacteristicTermsOnAChain) {
  auto A = chain_algebra(4);
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) EXPECT_EQ(t_term(A, r, A.constants[k]), r == k ? A.one() : A.zero());
  EXPECT_EQ(s_term(A, 2, A.one()), A.constants[2]);
  EXPECT_EQ(s_term(A, 2, A.constants[2]), A.zero());
  EXPECT_TRUE(check_term_laws(power_algebra(3, 2)).ok());
}

TEST(Subalgebras, CountedByPartitionsForThreeChain) {
  // with every constant present, subalgebras of 3^X match partitions of X
  for (std::size_t x = 1; x <= 3; ++x) EXPECT_EQ(enumerate_subalgebras(3, x).size(), bell(x)) << x;
}

TEST(BooleanSystems, SpectrumOfAnAlgebraIsValid) {
  auto A = power_algebra(3, 2);
  auto d = s_B(A);
  EXPECT_EQ(d.npoints(), 2u);
  EXPECT_TRUE(check_fbsys(d).ok());
  auto s = ext_B(d);
  EXPECT_TRUE(check_space(s).ok());
  EXPECT_TRUE(is_boolean_space(s));
  auto u = fbs_unit(d);
  EXPECT_TRUE(check_fb_map(u.map, d, u.other).ok());
}

TEST(BooleanSystems, ContinuousMapsNeedOpenConstants) {
  FuzzyTopSpace s{{"a"}, {FuzzySubset::empty(1), FuzzySubset::full(1)}, Flavor::n_valued, make_chain(3)};
  EXPECT_THROW(cont_algebra(s), precondition_error);
}
