#pragma once

#include "cat.hpp"
#include "io.hpp"
#include "logic.hpp"
#include "mvn.hpp"
#include "random.hpp"
#include "system.hpp"
#include "varbasis.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

// Randomized and exhaustive law suites over generated instances.
namespace fuzzytop::laws {

struct Options {
  std::uint64_t seed = gen::default_seed;
  std::optional<std::size_t> instances;  // overrides each suite's default count
};

struct SuiteResult {
  std::string name;
  Report report;
  std::size_t instances = 0, checks = 0, skipped = 0;
  std::vector<std::string> notes;

  bool ok() const { return report.ok(); }
};

// First witness per law, tagged with where it came from.
inline void absorb(Report& into, const Report& r, const std::string& where) {
  for (auto& f : r.failures) into.fail_once(f.law, where + (f.witness.empty() ? "" : ": " + f.witness));
}

namespace detail {

template <class T>
std::vector<T> pick(gen::Rng& g, std::vector<T> xs, std::size_t k) {
  for (std::size_t i = 0; i < xs.size() && i < k; ++i) std::swap(xs[i], xs[i + std::size_t(gen::below(g, int(xs.size() - i)))]);
  if (xs.size() > k) xs.resize(k);
  return xs;
}

// A few arrows between neighbouring objects and endomorphisms, with composable pairs.
template <class O, class M>
void sample_arrows(const Category<O, M>& C, const std::vector<O>& objs, gen::Rng& g, std::size_t per,
                   std::vector<Arrow<O, M>>& arrows, std::vector<Composable<O, M>>& pairs) {
  auto k = objs.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto &a = objs[i], &b = objs[(i + 1) % k], &c = objs[(i + 2) % k];
    try {
      auto fs = pick(g, C.homs(a, b), per);
      auto gs = pick(g, C.homs(b, c), per);
      auto es = pick(g, C.homs(a, a), per);
      for (auto& f : fs) arrows.push_back({a, b, f});
      for (auto& e : es) arrows.push_back({a, a, e});
      for (auto& f : fs)
        for (auto& h : gs) pairs.push_back({{a, b, f}, {b, c, h}});
      for (auto& e : es)
        for (auto& f : fs) pairs.push_back({{a, a, e}, {a, b, f}});
    } catch (const budget_exceeded&) {
    }
  }
}

inline std::string triple(const TruthValue& a, const TruthValue& b, const TruthValue& c) { return cat(a, ",", b, ",", c); }

inline std::size_t arrow_laws(const TruthValue& a, const TruthValue& b, const TruthValue& c, Report& r) {
  auto one = TruthValue::one();
  auto w = triple(a, b, c);
  if (godel_arrow(a, a) != one) r.fail_once("a -> a = 1", w);
  if (meet(godel_arrow(a, b), godel_arrow(b, c)) > godel_arrow(a, c)) r.fail_once("(a -> b) ^ (b -> c) <= a -> c", w);
  if (a <= b && godel_arrow(b, c) > godel_arrow(a, c)) r.fail_once("antitone in the first argument", w);
  if (b <= c && godel_arrow(a, b) > godel_arrow(a, c)) r.fail_once("monotone in the second argument", w);
  if (meet(godel_arrow(a, b), godel_arrow(a, c)) != godel_arrow(a, meet(b, c))) r.fail_once("(a -> b) ^ (a -> c) = a -> (b ^ c)", w);
  if (meet(godel_arrow(a, b), godel_arrow(c, b)) != godel_arrow(join(a, c), b)) r.fail_once("inf (a_i -> b) = (sup a_i) -> b", w);
  if ((a <= b) != (godel_arrow(a, b) == one)) r.fail_once("a <= b iff a -> b = 1", w);
  if (meet(a, godel_arrow(a, b)) > b) r.fail_once("a ^ (a -> b) <= b", w);
  // Residuation: c <= a -> b iff a ^ c <= b.
  if ((c <= godel_arrow(a, b)) != (meet(a, c) <= b)) r.fail_once("c <= a -> b iff a ^ c <= b", w);
  return 9;
}

// Largest z in the candidate values with T1 ^ z <= T2 pointwise.
inline TruthValue inclusion_oracle(const FuzzySubset& t1, const FuzzySubset& t2) {
  std::vector<TruthValue> cand{TruthValue::one()};
  for (auto& v : t2.m) cand.push_back(v);
  TruthValue best;
  for (auto& z : cand) {
    bool ok = true;
    for (std::size_t x = 0; x < t1.size(); ++x) ok = ok && meet(t1[x], z) <= t2[x];
    if (ok) best = join(best, z);
  }
  return best;
}

inline std::size_t inclusion_laws(const std::vector<FuzzySubset>& ts, Report& r) {
  auto n = ts.front().size();
  auto one = TruthValue::one();
  auto X = FuzzySubset::full(n);
  std::size_t checks = 0;
  auto gi = [](const FuzzySubset& a, const FuzzySubset& b) { return graded_inclusion(a, b); };
  auto w = [&](std::size_t i, std::size_t j) { return ts[i].str() + " " + ts[j].str(); };
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (gi(ts[i], ts[i]) != one) r.fail_once("gr(T <= T) = 1", ts[i].str());
    if (gi(ts[i], X) != one) r.fail_once("gr(T <= X) = 1", ts[i].str());
    checks += 2;
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const auto &a = ts[i], &b = ts[j];
      if (gi(a, b) != inclusion_oracle(a, b)) r.fail_once("graded inclusion is the largest z with T1 ^ z <= T2", w(i, j));
      if (gi(a, b) == one && gi(b, a) == one && !(a == b)) r.fail_once("mutual inclusion to degree 1 gives equality", w(i, j));
      if (gi(intersection(a, b), a) != one || gi(intersection(a, b), b) != one) r.fail_once("gr(T1 ^ T2 <= T_i) = 1", w(i, j));
      if (gi(a, set_union(a, b)) != one || gi(b, set_union(a, b)) != one) r.fail_once("gr(T_i <= union) = 1", w(i, j));
      for (std::size_t x = 0; x < n; ++x)
        if (meet(a[x], gi(a, b)) > b[x]) r.fail_once("T1(x) ^ gr(T1 <= T2) <= T2(x)", cat(w(i, j), " at ", x));
      checks += 5;
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const auto& c = ts[k];
        auto wk = w(i, j) + " " + c.str();
        if (meet(gi(a, b), gi(b, c)) > gi(a, c)) r.fail_once("gr(T1 <= T2) ^ gr(T2 <= T3) <= gr(T1 <= T3)", wk);
        if (meet(gi(a, b), gi(a, c)) != gi(a, intersection(b, c))) r.fail_once("gr(T1 <= T2) ^ gr(T1 <= T3) = gr(T1 <= T2 ^ T3)", wk);
        if (meet(gi(a, c), gi(b, c)) != gi(set_union(a, b), c)) r.fail_once("inf gr(T_i <= T) = gr(union <= T)", wk);
        if (gi(intersection(a, set_union(b, c)), set_union(intersection(a, b), intersection(a, c))) != one)
          r.fail_once("gr(T ^ union T_i <= union (T ^ T_i)) = 1", wk);
        checks += 4;
      }
    }
  }
  // The whole family and the empty family.
  auto u = union_of(ts, n);
  for (auto& t : ts) {
    TruthValue inf = one;
    for (auto& s : ts) inf = meet(inf, gi(s, t));
    if (inf != gi(u, t)) r.fail_once("inf gr(T_i <= T) = gr(union <= T)", "whole family");
    if (gi(FuzzySubset::empty(n), t) != one) r.fail_once("inf gr(T_i <= T) = gr(union <= T)", "empty family");
    checks += 2;
  }
  return checks;
}

// Brute-force prime filters of a function algebra, using only pointwise arithmetic on the
// coordinate vectors.
inline std::set<std::vector<int>> prime_filters_oracle(const LnAlgebra& A) {
  auto m = A.size();
  int n = A.n;
  const auto& v = A.vec;
  auto leq = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < v[a].size(); ++i)
      if (v[a][i] > v[b][i]) return false;
    return true;
  };
  auto index = [&](const std::vector<int>& u) { return std::size_t(std::lower_bound(v.begin(), v.end(), u) - v.begin()); };
  auto op = [&](std::size_t a, std::size_t b, bool product) {
    std::vector<int> u(v[a].size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = product ? std::max(0, v[a][i] + v[b][i] - (n - 1)) : std::max(v[a][i], v[b][i]);
    return index(u);
  };
  std::vector<std::uint32_t> up(m, 0);
  std::vector<std::vector<std::size_t>> prod(m, std::vector<std::size_t>(m)), jn(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (leq(a, b)) up[a] |= 1u << b;
      prod[a][b] = op(a, b, true);
      jn[a][b] = op(a, b, false);
    }
  std::set<std::vector<int>> out;
  std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      if (!(s >> a & 1)) continue;
      if (up[a] & ~s) ok = false;
      for (std::size_t b = 0; b < m && ok; ++b)
        if ((s >> b & 1) && !(s >> prod[a][b] & 1)) ok = false;
    }
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m && ok; ++b)
        if ((s >> jn[a][b] & 1) && !(s >> a & 1) && !(s >> b & 1)) ok = false;
    if (!ok) continue;
    std::vector<int> f;
    for (std::size_t a = 0; a < m; ++a)
      if (s >> a & 1) f.push_back(int(a));
    out.insert(f);
  }
  return out;
}

// Downsets of J(A) x J(B), counted over all subsets.
inline std::size_t tensor_size_oracle(const FiniteFrame& a, const FiniteFrame& b) {
  auto ja = join_irreducibles(a).poset, jb = join_irreducibles(b).poset;
  auto na = ja.size(), nb = jb.size(), k = na * nb;
  if (k > 20) throw budget_exceeded("product poset too large to count");
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    bool down = true;
    for (std::size_t p = 0; p < k && down; ++p) {
      if (!(s >> p & 1)) continue;
      for (std::size_t q = 0; q < k && down; ++q)
        if (ja.leq(Elem(q / nb), Elem(p / nb)) && jb.leq(Elem(q % nb), Elem(p % nb)) && !(s >> q & 1)) down = false;
    }
    count += down;
  }
  return count;
}

}  // namespace detail

// ---- suites ----

inline SuiteResult suite_arrow(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  auto c5 = make_chain(5);
  for (auto& a : c5)
    for (auto& b : c5)
      for (auto& c : c5) s.checks += detail::arrow_laws(a, b, c, s.report);
  for (std::size_t i = 0; i < n; ++i) {
    auto a = gen::rational(g), b = gen::rational(g), c = gen::rational(g);
    s.checks += detail::arrow_laws(a, b, c, s.report);
    // Larger families for the sup law.
    std::vector<TruthValue> fam{a, c};
    for (int k = gen::below(g, 4); k > 0; --k) fam.push_back(gen::rational(g));
    TruthValue inf = TruthValue::one();
    for (auto& x : fam) inf = meet(inf, godel_arrow(x, b));
    if (inf != godel_arrow(sup_family(fam), b)) s.report.fail_once("inf (a_i -> b) = (sup a_i) -> b", cat(fam.size(), " members"));
    ++s.checks;
  }
  s.instances = n + 125;
  s.notes.push_back("all 125 triples over the 5-element chain and " + std::to_string(n) + " random rational triples");
  return s;
}

inline SuiteResult suite_inclusion(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  for (std::size_t i = 0; i < n; ++i) {
    auto size = std::size_t(gen::between(g, 1, 6));
    std::vector<FuzzySubset> ts;
    bool coarse = gen::coin(g);
    auto chain = gen::random_chain(g, 2);
    for (int k = 0; k < 3; ++k) ts.push_back(coarse ? gen::random_subset(g, size, chain) : gen::random_subset(g, size));
    if (gen::coin(g, 1, 4)) ts[1] = ts[0];
    s.checks += detail::inclusion_laws(ts, s.report);
  }
  s.instances = n;
  return s;
}

inline SuiteResult suite_system_axioms(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  std::size_t valid = 0, exhaustive = 0, perturbed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = gen::random_system(g, 5, 4, 12);
    if (gen::coin(g)) {
      ++perturbed;
      auto c = occurring_chain(d);
      d.gr(std::size_t(gen::below(g, int(d.npoints()))), Elem(gen::below(g, int(d.nelems())))) = gen::value_in(g, c);
    }
    bool binary = check_system(d).ok();
    valid += binary;
    // Exhaustive at every size generated here (|A| <= 12), which covers |A| <= 8 and more.
    exhaustive += d.nelems() <= 8;
    bool full = check_system_subsets(d).ok();
    if (binary && !full) s.report.fail_once("binary and empty clauses imply the subset clauses", cat("instance ", i));
    if (full && !binary) s.report.fail_once("subset clauses imply the binary and empty clauses", cat("instance ", i));
    ++s.checks;
  }
  s.instances = n;
  s.notes.push_back(cat(valid, " instances valid, ", perturbed, " perturbed, all checked over every subset (",
                           exhaustive, " with |A| <= 8)"));
  return s;
}

inline SuiteResult suite_j_ext(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  std::vector<FuzzyTopSpace> spaces;
  std::vector<FuzzyTopSystem> systems;
  for (std::size_t i = 0; i < n; ++i) {
    spaces.push_back(gen::random_space(g, 4, 3));
    systems.push_back(gen::random_system(g, 4, 3, 8));
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto back = ext(j(spaces[i]));
    if (back.points != spaces[i].points || back.opens != spaces[i].opens) s.report.fail_once("Ext(J(S)) = S", cat("space ", i));
    ++s.checks;
  }
  auto C = top_category();
  auto D = sys_category();
  std::vector<Arrow<FuzzyTopSpace, PointMap>> ca;
  std::vector<Arrow<FuzzyTopSystem, SystemMap>> da;
  std::vector<Composable<FuzzyTopSpace, PointMap>> cp;
  std::vector<Composable<FuzzyTopSystem, SystemMap>> dp;
  auto k = std::min<std::size_t>(n, 12);
  detail::sample_arrows(C, std::vector(spaces.begin(), spaces.begin() + std::ptrdiff_t(k)), g, 2, ca, cp);
  detail::sample_arrows(D, std::vector(systems.begin(), systems.begin() + std::ptrdiff_t(k)), g, 2, da, dp);
  s.report.merge(check_adjunction(j_ext_adjunction(), C, D, spaces, systems, ca, da, {true, 24}));
  s.checks += 2 * n + ca.size() + da.size() + 24;
  s.instances = 2 * n;
  s.notes.push_back(cat(ca.size(), " continuous maps and ", da.size(), " system maps for naturality"));
  return s;
}

inline SuiteResult suite_spatial(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  std::vector<FuzzyTopSystem> qs;
  std::vector<FuzzyTopSpace> spaces;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = gen::random_system(g, 5, 4, 12);
    auto q = quotient(d);
    absorb(s.report, check_system(q.sys), cat("quotient ", i));
    if (!is_spatial(q.sys)) s.report.fail_once("quotient is spatial", cat("system ", i));
    for (Elem a = 0; a < Elem(d.nelems()); ++a)
      if (!(q.sys.column(q.class_of[a]) == d.column(a))) s.report.fail_once("class keeps the column", cat("system ", i));
    qs.push_back(std::move(q.sys));
    spaces.push_back(gen::random_space(g, 4, 3));
    s.checks += 3;
  }
  std::function<Report(const PointMap&, const FuzzyTopSpace&, const FuzzyTopSpace&)> c_iso = homeomorphism;
  std::function<Report(const SystemMap&, const FuzzyTopSystem&, const FuzzyTopSystem&)> d_iso = system_iso;
  s.report.merge(check_equivalence<FuzzyTopSpace, PointMap, FuzzyTopSystem, SystemMap>(
      j_ext_adjunction(), top_category(), sys_category(), spaces, qs, c_iso, d_iso, {},
      [](const FuzzyTopSystem& d) { return is_spatial(d); }, "any space", "spatial systems"));
  s.checks += 2 * n;
  s.instances = 2 * n;
  return s;
}

inline SuiteResult suite_fm_s(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  auto D = sys_category();
  auto L = loc_category();
  std::size_t universal = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = gen::random_system(g, 4, 3, 8);
    auto chain = occurring_chain(d);
    auto adj = fm_s_adjunction(chain);
    auto unit = adj.unit(d);
    auto sa = spectrum(d.frame, chain);
    absorb(s.report, check_transfer(unit, d, sa), cat("system ", i, " unit"));
    bool small = d.nelems() <= 6;
    universal += small;
    std::vector<FiniteFrame> frames{d.frame};
    if (small) frames.push_back(gen::random_frame(g, 2, 6).frame());
    absorb(s.report, check_adjunction(adj, D, L, std::vector{d}, frames, {}, {}, {small, 4}), cat("system ", i));
    s.checks += 3 + (small ? 2 : 0);
  }
  s.instances = n;
  s.notes.push_back(cat(universal, " instances with at most 6 frame elements checked for unique factorization"));
  return s;
}

inline SuiteResult suite_coproduct(std::size_t, gen::Rng&) {
  SuiteResult s;
  auto frames = small_frames(4);
  for (std::size_t a = 0; a < frames.size(); ++a)
    for (std::size_t b = 0; b < frames.size(); ++b) {
      auto cp = frame_coproduct(frames[a], frames[b]);
      if (cp.frame.size() != detail::tensor_size_oracle(frames[a], frames[b]))
        s.report.fail_once("coproduct size = downsets of J(A) x J(B)", cat(frames[a].size(), " x ", frames[b].size()));
      ++s.checks;
      for (std::size_t c = 0; c < frames.size(); ++c) {
        absorb(s.report, check_coproduct_universal(frames[a], frames[b], frames[c]),
               cat("|A|=", frames[a].size(), " |B|=", frames[b].size(), " |C|=", frames[c].size()));
        ++s.checks;
      }
    }
  auto c3 = chain_frame(3);
  auto size = frame_coproduct(c3, c3).frame.size();
  auto oracle = detail::tensor_size_oracle(c3, c3);
  if (size != 6 || oracle != 6) s.report.fail("3-chain (x) 3-chain has 6 elements", cat(size, " computed, ", oracle, " by downset count"));
  s.instances = frames.size() * frames.size() * frames.size();
  s.notes.push_back(cat(frames.size(), " frames up to isomorphism with at most 4 elements, all triples"));
  s.notes.push_back(cat("3-chain (x) 3-chain: ", size, " elements"));
  return s;
}

inline SuiteResult suite_sum_product(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = gen::random_system(g, 3, 3, 8), e = gen::random_system(g, 3, 3, 8);
    std::vector<FuzzyTopSystem> parts{d, e};
    if (gen::coin(g, 1, 4)) parts.push_back(gen::random_system(g, 2, 2, 4));
    auto sum = system_sum(parts);
    absorb(s.report, check_system(sum.sys), cat("sum ", i));
    auto p = system_product(d, e);
    absorb(s.report, check_system(p.sys), cat("product ", i));
    absorb(s.report, check_tensor_law(p, d, e), cat("product ", i));
    absorb(s.report, check_decomposition_independence(p, d, e), cat("product ", i));
    s.checks += 4;
  }
  s.instances = n;
  return s;
}

inline SuiteResult suite_mvn(std::size_t, gen::Rng&) {
  SuiteResult s;
  for (int n = 2; n <= 6; ++n) {
    auto A = chain_algebra(n);
    absorb(s.report, check_lnc(A), cat("chain ", n));
    absorb(s.report, check_term_laws(A), cat("chain ", n));
    s.checks += 2;
    ++s.instances;
  }
  std::size_t subs = 0;
  for (std::size_t x = 1; x <= 2; ++x)
    for (auto& A : enumerate_subalgebras(3, x)) {
      absorb(s.report, check_lnc(A), cat("subalgebra of 3^", x, " with ", A.size(), " elements"));
      absorb(s.report, check_term_laws(A), cat("subalgebra of 3^", x, " with ", A.size(), " elements"));
      s.checks += 2;
      ++subs;
    }
  s.instances += subs;
  s.notes.push_back(cat("chains of 2..6 elements and ", subs, " subalgebras of 3^X, |X| <= 2"));
  return s;
}

inline SuiteResult suite_spectrum(std::size_t, gen::Rng&) {
  SuiteResult s;
  for (int n = 2; n <= 4; ++n)
    for (std::size_t x = 1; x <= 2; ++x)
      for (auto& A : enumerate_subalgebras(n, x)) {
        auto where = cat("subalgebra of ", n, "^", x, " with ", A.size(), " elements");
        absorb(s.report, bijection_check(A), where);
        std::set<std::vector<int>> mine;
        for (auto& p : prime_filters(A)) mine.insert(p.elems);
        if (mine != detail::prime_filters_oracle(A)) s.report.fail_once("prime filters agree with brute-force enumeration", where);
        s.checks += 2;
        ++s.instances;
      }
  auto primes = prime_filters(chain_algebra(3));
  auto c3 = chain_algebra(3);
  if (primes.size() != 1 || primes[0].elems != std::vector<int>{c3.one()})
    s.report.fail("the 3-chain has the single prime filter {1}", primes.empty() ? "none" : filter_str(c3, primes[0]));
  s.notes.push_back("3-chain prime filters: " + (primes.empty() ? std::string("none") : filter_str(c3, primes[0])));
  return s;
}

inline SuiteResult suite_boolean(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  std::size_t unit_iso = 0, counit_iso = 0, restricted = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = gen::random_fbsys(g, 4, 2, 27);
    auto where = cat("instance ", i, " (n=", d.alg.n, ", |A|=", d.nelems(), ", ", d.npoints(), " points)");
    absorb(s.report, check_fbsys(d), where);
    auto sp = ext_B(d);
    if (!compact(sp)) s.report.fail_once("Ext_B is compact", where);
    if (!kolmogorov(sp)) s.report.fail_once("Ext_B is Kolmogorov", where);
    if (!zero_dimensional(sp)) s.report.fail_once("Ext_B is zero-dimensional", where);
    s.checks += 4;

    auto u = fbs_unit(d);
    auto ur = check_homeo(u.map, d, u.other);
    unit_iso += ur.ok();
    absorb(s.report, ur, where + " unit D -> S_B(Lag D)");
    auto c = fbs_counit(d);
    Report cr;
    if (std::count(c.map.f2.begin(), c.map.f2.end(), -1)) cr.fail("every extent is continuous", "some extent is not");
    else cr = check_homeo(c.map, c.other, d);
    counit_iso += cr.ok();
    absorb(s.report, cr, where + " counit J_B(Ext_B D) -> D");
    s.checks += 2;

    // On the images of S_B and J_B the two maps are isomorphisms.
    auto sb = s_B(d.alg);
    auto jb = j_B(sp);
    auto su = fbs_unit(sb);
    auto sc = fbs_counit(jb);
    bool ok = check_homeo(su.map, sb, su.other).ok() && !std::count(sc.map.f2.begin(), sc.map.f2.end(), -1) &&
              check_homeo(sc.map, sc.other, jb).ok();
    if (!ok) s.report.fail_once("double-dual maps are isomorphisms on S_B(A) and J_B(S)", where);
    restricted += ok;
    s.checks += 2;
  }
  s.instances = n;
  s.notes.push_back(cat("Ext_B compact, Kolmogorov and zero-dimensional on every instance checked"));
  s.notes.push_back(cat("unit D -> S_B(Lag D) an isomorphism on ", unit_iso, " of ", n, " instances"));
  s.notes.push_back(cat("counit J_B(Ext_B D) -> D an isomorphism on ", counit_iso, " of ", n, " instances"));
  s.notes.push_back(cat("both maps isomorphisms on S_B(A) and J_B(Ext_B D) for ", restricted, " of ", n, " instances"));
  s.notes.push_back("smallest counterexample: one point, A = 3^2, the point satisfying a to degree a(0): "
                    "A has two homomorphisms into the 3-chain, so the unit misses one of them");
  return s;
}

inline SuiteResult suite_soundness(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  for (std::size_t i = 0; i < n; ++i) {
    auto I = gen::random_interpretation(g, 4, gen::coin(g, 1, 4));
    auto res = check_rule_soundness(I, {gen::random_rule_sample(g, 4)});
    absorb(s.report, res.report, cat("sample ", i));
    s.checks += res.checked;
    s.skipped += res.skipped;
  }
  s.instances = n;
  s.notes.push_back(cat(s.skipped, " rule instances skipped for side conditions (variable capture, y free in phi)"));
  return s;
}

inline SuiteResult suite_metatheorems(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  for (std::size_t i = 0; i < n; ++i) {
    auto I = gen::random_interpretation(g, 4);
    auto res = check_metatheorems(I, {gen::random_meta_sample(g, I, 4)});
    absorb(s.report, res.report, cat("sample ", i));
    s.checks += res.checked;
    s.skipped += res.skipped;
  }
  s.instances = n;
  s.notes.push_back(cat(s.skipped, " formula substitutions skipped because the term is not free for the variable"));
  return s;
}

inline SuiteResult suite_classical(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  for (std::size_t i = 0; i < n; ++i) {
    auto I = gen::random_interpretation(g, 4, true);
    auto f = gen::random_formula(g, 4);
    auto env = gen::random_environment(g, I);
    auto want = classical_sat(env, f, I) ? TruthValue::one() : TruthValue::zero();
    if (grade_sat(env, f, I) != want) s.report.fail_once("graded satisfaction matches classical satisfaction", to_string(f));
    ++s.checks;
  }
  s.instances = n;
  return s;
}

inline SuiteResult suite_lindenbaum(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  for (std::size_t i = 0; i < n;) {
    auto I = gen::random_interpretation(g, 3);
    std::vector<Formula> fs;
    for (int k = gen::between(g, 1, 3); k > 0; --k) fs.push_back(gen::random_formula(g, 2));
    try {
      auto L = lindenbaum(I, fs);
      auto where = cat("theory ", i);
      absorb(s.report, check_graded_system(L.sys), where);
      if (!is_spatial(L.sys.base)) s.report.fail_once("Lindenbaum system is spatial", where);
      absorb(s.report, check_space(ext_g(L.sys.base)), where + " ext_g");
      s.checks += 3;
      ++i;
    } catch (const budget_exceeded&) {
      ++s.skipped;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto sp = gen::random_space(g, 4, 3);
    sp.flavor = Flavor::graded;
    absorb(s.report, check_prop_theory(theory_from_space(sp)), cat("space ", i));
    ++s.checks;
  }
  s.instances = 2 * n;
  if (s.skipped) s.notes.push_back(cat(s.skipped, " theories redrawn for exceeding the class budget"));
  return s;
}

inline SuiteResult suite_derivation(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  for (std::size_t i = 0; i < n; ++i) {
    auto rd = gen::random_derivation(g, 3, 3);
    auto res = check_derivation(rd.premises, rd.tree, &rd.interp);
    auto where = cat("tree ", i, ": ", to_string(rd.tree.conclusion));
    absorb(s.report, res.report, where);
    if (res.bound > sequent_grade(rd.tree.conclusion, rd.interp)) s.report.fail_once("propagated bound <= semantic grade", where);
    s.checks += 2;
  }
  s.instances = n;
  return s;
}

inline SuiteResult suite_functors(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  auto k = std::max<std::size_t>(n, 3);
  auto c3 = make_chain(3);
  std::vector<FuzzyTopSpace> spaces, uspaces;
  std::vector<FuzzyTopSystem> systems;
  std::vector<FiniteFrame> frames;
  std::vector<GradedFuzzyTopSystem> gsystems;
  std::vector<GradedFrame> gframes;
  std::vector<FBSysN> fbs;
  std::vector<LnAlgebra> algs;
  for (std::size_t i = 0; i < k; ++i) {
    spaces.push_back(gen::random_space(g, 3, 2));
    uspaces.push_back(gen::random_nvalued_space(g, 3, 3, 2));
    systems.push_back(gen::random_system(g, 3, 3, 6, &c3));
    frames.push_back(gen::random_frame(g, 3, 6).frame());
    gsystems.push_back(j_g(spaces.back()));
    gframes.push_back(space_graded_frame(uspaces.back()));
    for (;;) {
      auto d = gen::random_fbsys(g, 3, 2, 9);
      if (d.alg.n != 3) continue;
      fbs.push_back(d);
      algs.push_back(d.alg);
      break;
    }
  }
  auto run = [&](const auto& F, const auto& C, const auto& D, const auto& objs) {
    using CO = typename std::decay_t<decltype(objs)>::value_type;
    using CM = std::decay_t<decltype(C.id(objs.front()))>;
    std::vector<Arrow<CO, CM>> arrows;
    std::vector<Composable<CO, CM>> pairs;
    detail::sample_arrows(C, objs, g, 2, arrows, pairs);
    absorb(s.report, check_functor_laws(F, C, D, objs, arrows, pairs), F.name);
    s.checks += objs.size() + arrows.size() + pairs.size();
    s.notes.push_back(cat(F.name, ": ", objs.size(), " objects, ", arrows.size(), " arrows, ", pairs.size(), " composable pairs"));
  };
  auto top = top_category();
  auto sys = sys_category();
  auto loc = loc_category();
  auto gsys = gsys_category();
  auto gloc = gloc_category();
  auto fb = fbsys_category();
  auto alg = lnalg_op_category();
  run(j_functor(), top, sys, spaces);
  run(ext_functor(), sys, top, systems);
  run(fm_functor(), sys, loc, systems);
  run(s_functor(c3), loc, sys, frames);
  run(j_g_functor(), top, gsys, spaces);
  run(ext_g_functor(), gsys, top, gsystems);
  run(fm_g_functor(), gsys, gloc, gsystems);
  run(s_g_functor(c3), gloc, gsys, gframes);
  run(j_B_functor(), top, fb, uspaces);
  run(ext_B_functor(), fb, top, fbs);
  run(lag_functor(), fb, alg, fbs);
  run(s_B_functor(), alg, fb, algs);
  s.instances = 8 * k;
  return s;
}

inline SuiteResult suite_graded(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  std::vector<FuzzyTopSpace> spaces;
  std::vector<GradedFuzzyTopSystem> qs;
  for (std::size_t i = 0; i < n; ++i) {
    auto sp = gen::random_space(g, 4, 3);
    sp.flavor = Flavor::graded;
    absorb(s.report, check_graded_frame(space_graded_frame(sp)), cat("space ", i));
    absorb(s.report, check_graded_system(j_g(sp)), cat("space ", i, " J_g"));
    auto back = ext_g(j_g(sp).base);
    if (back.opens != sp.opens) s.report.fail_once("Ext_g(J_g(S)) = S", cat("space ", i));
    spaces.push_back(sp);
    auto q = quotient_g(gen::random_system(g, 4, 3, 8));
    absorb(s.report, check_graded_system(q.sys), cat("graded quotient ", i));
    if (!is_spatial(q.sys.base)) s.report.fail_once("graded quotient is spatial", cat("system ", i));
    qs.push_back(q.sys);
    s.checks += 5;
  }
  auto C = top_category();
  auto D = gsys_category();
  auto k = std::min<std::size_t>(n, 8);
  std::vector<Arrow<FuzzyTopSpace, PointMap>> ca;
  std::vector<Arrow<GradedFuzzyTopSystem, SystemMap>> da;
  std::vector<Composable<FuzzyTopSpace, PointMap>> cp;
  std::vector<Composable<GradedFuzzyTopSystem, SystemMap>> dp;
  detail::sample_arrows(C, std::vector(spaces.begin(), spaces.begin() + std::ptrdiff_t(k)), g, 2, ca, cp);
  detail::sample_arrows(D, std::vector(qs.begin(), qs.begin() + std::ptrdiff_t(k)), g, 2, da, dp);
  s.report.merge(check_adjunction(j_g_ext_g_adjunction(), C, D, spaces, qs, ca, da, {true, 16}), "J_g -| Ext_g");
  std::function<Report(const PointMap&, const FuzzyTopSpace&, const FuzzyTopSpace&)> c_iso = homeomorphism;
  std::function<Report(const SystemMap&, const GradedFuzzyTopSystem&, const GradedFuzzyTopSystem&)> d_iso = graded_system_iso;
  s.report.merge(check_equivalence<FuzzyTopSpace, PointMap, GradedFuzzyTopSystem, SystemMap>(
                     j_g_ext_g_adjunction(), C, D, spaces, qs, c_iso, d_iso, {},
                     [](const GradedFuzzyTopSystem& d) { return is_spatial(d.base); }, "any space", "spatial graded systems"),
                 "spatial equivalence");
  auto L = gloc_category();
  for (std::size_t i = 0; i < k; ++i) {
    auto chain = occurring_chain(qs[i].base);
    std::vector<GradedFrame> gf{qs[i].graded_frame()};
    absorb(s.report, check_adjunction(fm_g_s_g_adjunction(chain), D, L, std::vector{qs[i]}, gf, {}, {}, {qs[i].base.nelems() <= 6, 2}),
           cat("fm_g -| S_g, system ", i));
  }
  s.checks += 2 * n + ca.size() + da.size() + k;
  s.instances = 2 * n;
  return s;
}

inline SuiteResult suite_composite(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  auto c3 = make_chain(3);
  auto top = top_category();
  std::vector<FuzzyTopSpace> spaces;
  std::vector<FiniteFrame> frames;
  std::vector<LnAlgebra> algs;
  for (std::size_t i = 0; i < n; ++i) {
    spaces.push_back(gen::random_nvalued_space(g, 3, 3, 2));
    frames.push_back(gen::random_frame(g, 3, 6).frame());
    for (;;) {
      auto A = gen::random_lnc_algebra(g, 3, 2, 9);
      if (A.n != 3) continue;
      algs.push_back(A);
      break;
    }
  }
  auto outer = fm_s_adjunction(c3);
  auto comp = compose_adjunctions(outer, j_ext_adjunction(), top, loc_category());
  absorb(s.report, check_adjunction(comp, top, loc_category(), spaces, frames, {}, {}, {true, 16}), comp.name);
  auto comp_b = compose_adjunctions(lag_s_B_adjunction(), j_B_ext_B_adjunction(), top, lnalg_op_category());
  absorb(s.report, check_adjunction(comp_b, top, lnalg_op_category(), spaces, algs, {}, {}, {true, 16}), comp_b.name);
  s.checks = 4 * n + 32;
  s.instances = 3 * n;
  s.notes.push_back(comp.name + " and " + comp_b.name + " over the 3-chain");
  return s;
}

inline SuiteResult suite_varbasis(std::size_t n, gen::Rng& g) {
  SuiteResult s;
  for (std::size_t i = 0; i < n; ++i) {
    auto sp = gen::random_l_space(g, 4, 3);
    auto w = cat("space ", i);
    absorb(s.report, check_L_space(sp), w);
    auto d = j_L(sp);
    absorb(s.report, check_L_system(d), w + " J_L");
    if (!(ext_L(d) == sp)) s.report.fail_once("Ext_L(J_L(S)) = S", w);
    absorb(s.report, check_fuzztopsys_morphism(identity_fuzz_map(d), d, d), w + " identity");
    auto alpha = gen::value_in(g, sp.obj.chain);
    absorb(s.report, check_space(alpha_subspace_strict(sp, alpha)), cat(w, " strict cut at ", alpha));
    absorb(s.report, check_L_space(alpha_subspace_fuzzy(sp, alpha)), cat(w, " fuzzy cut at ", alpha));

    auto e = gen::random_l_system(g, 4, 3, 8);
    auto we = cat("system ", i);
    absorb(s.report, check_L_system(e), we);
    absorb(s.report, check_L_space(ext_L(e)), we + " Ext_L");
    auto je = j_F(ext_F(e));
    absorb(s.report, check_fuzztopsys_morphism(fuzz_counit(e), je, e), we + " counit");
    absorb(s.report, check_L_system_map(identity_L_map(e), e, e), we + " identity");
    auto beta = gen::value_in(g, e.obj.chain);
    absorb(s.report, check_system(alpha_subsystem_strict(e, beta)), cat(we, " strict cut at ", beta));
    absorb(s.report, check_L_system(alpha_subsystem_fuzzy(e, beta)), cat(we, " fuzzy cut at ", beta));
    auto f = gen::random_frame(g, 3, 6).frame();
    absorb(s.report, check_L_system(s_L(f, e.obj.chain)), we + " S_L");
    s.checks += 13;
  }
  s.instances = 2 * n;
  return s;
}

// ---- registry ----

struct Suite {
  std::string name;
  std::string summary;
  std::size_t default_instances;
  std::function<SuiteResult(std::size_t, gen::Rng&)> run;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"arrow", "Goedel arrow laws on rational triples", 10000, suite_arrow},
      {"inclusion", "graded inclusion laws on fuzzy-subset triples", 1000, suite_inclusion},
      {"system-axioms", "binary clauses against the subset clauses", 200, suite_system_axioms},
      {"j-ext", "J -| Ext on random spaces and systems", 100, suite_j_ext},
      {"spatial", "quotients are spatial and J(Ext(Q)) = Q", 100, suite_spatial},
      {"fm-s", "fm -| S with the occurring-values chain", 100, suite_fm_s},
      {"coproduct", "frame coproduct universal property, exhaustive to 4 elements", 0, suite_coproduct},
      {"sum-product", "sums and products of systems", 100, suite_sum_product},
      {"mvn", "MV and n-valued axioms, characteristic terms", 0, suite_mvn},
      {"spectrum", "prime filters against homomorphisms into the chain", 0, suite_spectrum},
      {"boolean", "Ext_B of n-valued Boolean systems and the double-dual maps", 50, suite_boolean},
      {"soundness", "rules of inference on graded sequents", 500, suite_soundness},
      {"metatheorems", "local determination and substitution", 500, suite_metatheorems},
      {"classical", "0/1 predicates against classical satisfaction", 1000, suite_classical},
      {"lindenbaum", "Lindenbaum systems and theories of spaces", 50, suite_lindenbaum},
      {"derivation", "propagated bounds of random derivations", 100, suite_derivation},
      {"functors", "functor laws for every functor pair", 12, suite_functors},
      {"graded", "graded frames, systems and adjunctions", 40, suite_graded},
      {"composite", "composite adjunctions", 20, suite_composite},
      {"varbasis", "L-valued spaces, systems and alpha-cuts", 50, suite_varbasis},
  };
  return all;
}

inline std::vector<std::string> group(const std::string& name) {
  if (name == "all") {
    std::vector<std::string> out;
    for (auto& s : suites()) out.push_back(s.name);
    return out;
  }
  if (name == "logic") return {"soundness", "metatheorems", "classical", "lindenbaum", "derivation"};
  for (auto& s : suites())
    if (s.name == name) return {name};
  return {};
}

inline gen::Rng suite_rng(std::uint64_t seed, const std::string& name) {
  std::vector<std::uint32_t> key{std::uint32_t(seed), std::uint32_t(seed >> 32)};
  for (char c : name) key.push_back(std::uint32_t(static_cast<unsigned char>(c)));
  std::seed_seq seq(key.begin(), key.end());
  return gen::Rng(seq);
}

inline SuiteResult run_suite(const Suite& s, const Options& opt) {
  auto g = suite_rng(opt.seed, s.name);
  auto r = s.run(opt.instances.value_or(s.default_instances), g);
  r.name = s.name;
  return r;
}

// Empty when the name is unknown.
inline std::vector<SuiteResult> run(const std::string& name, const Options& opt = {}) {
  std::vector<SuiteResult> out;
  for (auto& n : group(name))
    for (auto& s : suites())
      if (s.name == n) out.push_back(run_suite(s, opt));
  return out;
}

inline io::json to_json(const std::vector<SuiteResult>& rs, std::uint64_t seed) {
  io::json arr = io::json::array();
  bool ok = true;
  for (auto& r : rs) {
    auto rep = io::to_json(r.report);
    arr.push_back({{"suite", r.name},
                   {"ok", r.ok()},
                   {"instances", r.instances},
                   {"checks", r.checks},
                   {"skipped", r.skipped},
                   {"notes", r.notes},
                   {"failures", rep["failures"]}});
    ok = ok && r.ok();
  }
  return {{"kind", "laws"}, {"seed", seed}, {"ok", ok}, {"suites", arr}};
}

}  // namespace fuzzytop::laws
