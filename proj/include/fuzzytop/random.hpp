#pragma once

#include "lattice.hpp"
#include "logic.hpp"
#include "mvn.hpp"
#include "space.hpp"
#include "system.hpp"
#include "truth.hpp"
#include "varbasis.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

// Seeded instance generators. Draws use the raw engine output (not the library distributions)
// so that a seed produces the same instances with every standard library.
namespace fuzzytop::gen {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t default_seed = 20240611;

inline int below(Rng& g, int n) { return n <= 1 ? 0 : int(g() % std::uint64_t(n)); }
inline int between(Rng& g, int lo, int hi) { return lo + below(g, hi - lo + 1); }
inline bool coin(Rng& g, int num = 1, int den = 2) { return below(g, den) < num; }

template <class T>
const T& choose(Rng& g, const std::vector<T>& xs) {
  return xs[below(g, int(xs.size()))];
}

inline TruthValue rational(Rng& g, int max_den = 12) {
  int d = between(g, 1, max_den);
  return TruthValue(below(g, d + 1), d);
}

inline TruthValue value_in(Rng& g, const ValueChain& c) { return c[below(g, int(c.size()))]; }

// 0, 1 and up to `extra` further values with denominators at most max_den.
inline ValueChain random_chain(Rng& g, int extra = 3, int max_den = 10) {
  std::vector<TruthValue> vs{TruthValue::zero(), TruthValue::one()};
  int k = between(g, 0, extra);
  for (int i = 0; i < k; ++i) vs.push_back(rational(g, max_den));
  return ValueChain::from_values(vs);
}

inline FuzzySubset random_subset(Rng& g, std::size_t n, const ValueChain& c) {
  auto t = FuzzySubset::empty(n);
  for (std::size_t x = 0; x < n; ++x) t[x] = value_in(g, c);
  return t;
}

inline FuzzySubset random_subset(Rng& g, std::size_t n, int max_den = 12) {
  auto t = FuzzySubset::empty(n);
  for (std::size_t x = 0; x < n; ++x) t[x] = rational(g, max_den);
  return t;
}

// Random order on k elements: a DAG on the index order, transitively closed.
inline FinitePoset random_poset(Rng& g, int k, const std::string& prefix = "p") {
  std::vector<std::pair<Elem, Elem>> edges;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (coin(g, 1, 3)) edges.emplace_back(a, b);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(prefix + std::to_string(i));
  return FinitePoset::from_edges(std::move(names), edges);
}

// Downsets of a random poset on 1..max_irr elements, retried until at most max_size elements.
struct RandomFrame {
  FinitePoset irreducibles;
  DownsetFrame downsets;
  const FiniteFrame& frame() const { return downsets.frame; }
};

inline RandomFrame random_frame(Rng& g, int max_irr = 4, std::size_t max_size = 12) {
  for (;;) {
    auto p = random_poset(g, between(g, 1, max_irr));
    auto d = downset_frame(p);
    if (d.frame.size() <= max_size) return {std::move(p), std::move(d)};
  }
}

// A system on a random frame. Each point picks a chain p1 < ... < pm of join-irreducibles and
// values v1 < ... < vm = 1; a downset D is satisfied to the largest vi with pi in D. That is a
// frame hom into the chain, so every clause holds by construction.
inline FuzzyTopSystem random_system(Rng& g, int max_points = 5, int max_irr = 4, std::size_t max_size = 12,
                                    const ValueChain* chain = nullptr) {
  auto rf = random_frame(g, max_irr, max_size);
  const auto& P = rf.irreducibles;
  auto c = chain ? *chain : random_chain(g);
  std::vector<TruthValue> positive(c.begin() + 1, c.end());
  int npts = between(g, 1, max_points);
  auto d = FuzzyTopSystem::zeros(default_point_names(std::size_t(npts)), rf.frame());
  for (int x = 0; x < npts; ++x) {
    std::vector<Elem> ch{Elem(below(g, int(P.size())))};
    while (coin(g)) {
      std::vector<Elem> above;
      for (Elem q = 0; q < Elem(P.size()); ++q)
        if (P.lt(ch.back(), q)) above.push_back(q);
      if (above.empty()) break;
      ch.push_back(choose(g, above));
    }
    auto m = std::min(ch.size(), positive.size());
    ch.resize(m);
    std::vector<TruthValue> vals;
    std::set<std::size_t> picked{positive.size() - 1};
    while (picked.size() < m) picked.insert(std::size_t(below(g, int(positive.size()) - 1)));
    for (auto i : picked) vals.push_back(positive[i]);
    for (Elem e = 0; e < Elem(d.nelems()); ++e) {
      TruthValue v;
      for (std::size_t i = 0; i < m; ++i)
        if (rf.downsets.sets[e] >> ch[i] & 1) v = join(v, vals[i]);
      d.gr(std::size_t(x), e) = v;
    }
  }
  return d;
}

// Topology generated by a few random subsets with values in a chain.
inline FuzzyTopSpace random_space(Rng& g, int max_points = 4, int max_subbasis = 3, const ValueChain* chain = nullptr) {
  auto c = chain ? *chain : random_chain(g, 2);
  auto n = std::size_t(between(g, 1, max_points));
  std::vector<FuzzySubset> sub;
  int k = between(g, 0, max_subbasis);
  for (int i = 0; i < k; ++i) sub.push_back(random_subset(g, n, c));
  auto s = generate_topology(default_point_names(n), sub);
  s.chain = c;
  return s;
}

// Space over the uniform n-chain with every constant open.
inline FuzzyTopSpace random_nvalued_space(Rng& g, int n = 3, int max_points = 3, int max_subbasis = 2) {
  auto c = make_chain(n);
  auto sp = random_space(g, max_points, max_subbasis, &c);
  auto sub = sp.opens;
  for (auto& v : c) sub.push_back(FuzzySubset::constant(sp.size(), v));
  auto out = generate_topology(sp.points, sub);
  out.flavor = Flavor::n_valued;
  out.chain = c;
  return out;
}

// Opens below a random membership, closed under binary meets and joins.
inline LTopSpace random_l_space(Rng& g, int max_points = 4, int max_subbasis = 3) {
  auto c = random_chain(g, 2);
  auto n = std::size_t(between(g, 1, max_points));
  FuzzObject obj{default_point_names(n), c, random_subset(g, n, c)};
  std::set<FuzzySubset> tau{FuzzySubset::empty(n), obj.membership};
  int k = between(g, 0, max_subbasis);
  for (int i = 0; i < k; ++i) tau.insert(intersection(random_subset(g, n, c), obj.membership));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<FuzzySubset> cur(tau.begin(), tau.end());
    for (auto& a : cur)
      for (auto& b : cur) grew |= tau.insert(intersection(a, b)).second | tau.insert(set_union(a, b)).second;
  }
  return {std::move(obj), {tau.begin(), tau.end()}};
}

// A random system with every grade capped by a random membership.
inline LTopSystem random_l_system(Rng& g, int max_points = 4, int max_irr = 3, std::size_t max_size = 8) {
  auto c = random_chain(g, 2);
  auto base = random_system(g, max_points, max_irr, max_size, &c);
  FuzzObject obj{base.points, c, random_subset(g, base.npoints(), c)};
  for (std::size_t x = 0; x < base.npoints(); ++x)
    for (Elem a = 0; a < Elem(base.nelems()); ++a) base.gr(x, a) = meet(base.gr(x, a), obj.membership[x]);
  return {std::move(obj), std::move(base)};
}

// A subalgebra of some n-chain power, and a valid n-valued Boolean system over it whose points
// are distinct homomorphisms into the chain.
inline LnAlgebra random_lnc_algebra(Rng& g, int max_n = 4, std::size_t max_x = 2, std::size_t max_size = 27) {
  for (;;) {
    int n = between(g, 2, max_n);
    auto xs = std::size_t(between(g, 1, int(max_x)));
    auto subs = enumerate_subalgebras(n, xs);
    std::vector<LnAlgebra> small;
    for (auto& a : subs)
      if (a.size() <= max_size) small.push_back(a);
    if (!small.empty()) return choose(g, small);
  }
}

inline FBSysN random_fbsys(Rng& g, int max_n = 4, std::size_t max_x = 2, std::size_t max_size = 27) {
  auto A = random_lnc_algebra(g, max_n, max_x, max_size);
  auto homs = enumerate_homs(A);
  std::vector<LnHom> rows;
  for (auto& h : homs)
    if (coin(g)) rows.push_back(h);
  if (rows.empty()) rows.push_back(choose(g, homs));
  FBSysN d{default_point_names(rows.size()), A, {}};
  for (auto& r : rows) d.sat.insert(d.sat.end(), r.begin(), r.end());
  return d;
}

// ---- logic ----

// Signature used by the random formulas: p, q unary, r binary, s nullary, f unary, constant c.
// Variables x and w occur only free; y and z may also be bound.
struct LogicShape {
  std::vector<std::string> free_only{"x", "w"};
  std::vector<std::string> bindable{"y", "z"};
  std::vector<std::string> all_vars() const {
    auto v = free_only;
    v.insert(v.end(), bindable.begin(), bindable.end());
    return v;
  }
};

inline Interpretation random_interpretation(Rng& g, int max_domain = 4, bool two_valued = false,
                                            const ValueChain* chain = nullptr) {
  Interpretation I;
  int n = between(g, 1, max_domain);
  for (int i = 0; i < n; ++i) I.domain.push_back("d" + std::to_string(i));
  auto c = chain ? *chain : (two_valued ? make_chain(2) : random_chain(g, 3, 6));
  I.constants["c"] = below(g, n);
  Interpretation::Function f{1, {}};
  for (int i = 0; i < n; ++i) f.table.push_back(below(g, n));
  I.functions["f"] = f;
  for (auto [name, arity] : {std::pair{"p", 1}, {"q", 1}, {"r", 2}, {"s", 0}}) {
    Interpretation::Predicate p{arity, std::vector<TruthValue>(I.tuples(arity))};
    for (auto& v : p.table) v = value_in(g, c);
    I.predicates[name] = p;
  }
  return I;
}

inline Term random_term(Rng& g, int depth, const LogicShape& sh = {}) {
  int k = below(g, depth > 0 ? 6 : 5);
  if (k < 4) return Term::v(sh.all_vars()[k]);
  if (k == 4) return Term::c("c");
  return Term::f("f", {random_term(g, depth - 1, sh)});
}

inline Formula random_formula(Rng& g, int depth, const LogicShape& sh = {}) {
  int k = below(g, depth > 0 ? 10 : 6);
  switch (k) {
    case 0: return coin(g, 1, 3) ? f_bot() : f_top();
    case 1: return f_pred("p", {random_term(g, 1, sh)});
    case 2: return f_pred("q", {random_term(g, 1, sh)});
    case 3: return f_pred("r", {random_term(g, 1, sh), random_term(g, 1, sh)});
    case 4: return coin(g) ? f_pred("s", {}) : f_eq(random_term(g, 1, sh), random_term(g, 1, sh));
    case 5: return f_pred(coin(g) ? "p" : "q", {Term::v(choose(g, sh.bindable))});
    case 6:
    case 7: return f_and(random_formula(g, depth - 1, sh), random_formula(g, depth - 1, sh));
    case 8: {
      std::vector<Formula> fs;
      int m = below(g, 4);
      for (int i = 0; i < m; ++i) fs.push_back(random_formula(g, depth - 1, sh));
      return f_or(std::move(fs));
    }
    default: return f_exists(choose(g, sh.bindable), random_formula(g, depth - 1, sh));
  }
}

inline std::vector<std::string> random_var_tuple(Rng& g, const std::vector<std::string>& pool, bool distinct) {
  std::vector<std::string> out;
  int k = between(g, 1, 2);
  for (int i = 0; i < k; ++i) {
    auto v = choose(g, pool);
    if (distinct && std::find(out.begin(), out.end(), v) != out.end()) continue;
    out.push_back(v);
  }
  return out;
}

inline RuleSample random_rule_sample(Rng& g, int depth = 4, const LogicShape& sh = {}) {
  RuleSample s;
  s.phi = random_formula(g, depth, sh);
  s.psi = random_formula(g, depth, sh);
  s.chi = random_formula(g, depth, sh);
  int m = below(g, 4);
  for (int i = 0; i < m; ++i) s.family.push_back(random_formula(g, depth - 1, sh));
  auto all = sh.all_vars();
  s.x = choose(g, all);
  s.y = choose(g, sh.bindable);
  s.xs = random_var_tuple(g, all, true);
  while (s.ys.size() < s.xs.size()) s.ys.push_back(choose(g, all));
  return s;
}

inline Environment random_environment(Rng& g, const Interpretation& I, const LogicShape& sh = {}) {
  Environment e;
  for (auto& v : sh.all_vars()) e.vals[v] = below(g, int(I.domain.size()));
  return e;
}

inline MetaSample random_meta_sample(Rng& g, const Interpretation& I, int depth = 4, const LogicShape& sh = {}) {
  MetaSample m;
  m.phi = random_formula(g, depth, sh);
  m.t = random_term(g, 2, sh);
  m.by = random_term(g, 2, sh);
  m.x = choose(g, sh.all_vars());
  m.s = random_environment(g, I, sh);
  m.s2 = random_environment(g, I, sh);
  return m;
}

// ---- derivations ----

namespace detail {

struct ProofGen {
  Rng& g;
  LogicShape sh;
  int fdepth = 2;

  Formula formula() { return random_formula(g, fdepth, sh); }
  ProofNode leaf(const std::string& rule, Sequent s) { return {rule, std::move(s), {}, std::nullopt}; }

  // Proof of lhs |- rhs with both sides given.
  ProofNode fixed(const Formula& lhs, const Formula& rhs, int d) {
    using K = Formula::Kind;
    if (lhs == rhs && coin(g)) return leaf("refl", {lhs, rhs});
    if (d > 0) {
      int k = below(g, 4);
      if (k == 0) {
        auto mid = formula();
        return {"cut", {lhs, rhs}, {fixed(lhs, mid, d - 1), fixed(mid, rhs, d - 1)}, std::nullopt};
      }
      if (k == 1 && rhs.kind == K::conj)
        return {"and-intro", {lhs, rhs}, {fixed(lhs, rhs.subs[0], d - 1), fixed(lhs, rhs.subs[1], d - 1)}, std::nullopt};
      if (k == 2 && lhs.kind == K::disj) {
        ProofNode n{"or-elim", {lhs, rhs}, {}, std::nullopt};
        for (auto& s : lhs.subs) n.premises.push_back(fixed(s, rhs, d - 1));
        return n;
      }
    }
    return leaf("premise", {lhs, rhs});
  }

  // Proof with the given left side and a right side of the generator's choosing.
  ProofNode from(const Formula& lhs, int d) {
    using K = Formula::Kind;
    for (;;) {
      int k = below(g, d > 0 ? 12 : 7);
      switch (k) {
        case 0: return leaf("premise", {lhs, formula()});
        case 1: return leaf("refl", {lhs, lhs});
        case 2: return leaf("top", {lhs, f_top()});
        case 3:
          if (lhs.kind != K::conj) continue;
          return coin(g) ? leaf("and-l", {lhs, lhs.subs[0]}) : leaf("and-r", {lhs, lhs.subs[1]});
        case 4: {
          std::vector<Formula> fs{lhs};
          for (int i = below(g, 3); i > 0; --i) fs.insert(fs.begin() + below(g, int(fs.size()) + 1), formula());
          return leaf("or-intro", {lhs, f_or(fs)});
        }
        case 5: {
          if (lhs.kind != K::conj || lhs.subs[1].kind != K::disj) continue;
          std::vector<Formula> fs;
          for (auto& s : lhs.subs[1].subs) fs.push_back(f_and(lhs.subs[0], s));
          return leaf("dist", {lhs, f_or(fs)});
        }
        case 6: {
          if (lhs.kind != K::conj || lhs.subs[1].kind != K::exists || is_free_in(lhs.subs[1].name, lhs.subs[0])) continue;
          auto& ex = lhs.subs[1];
          return leaf("frobenius", {lhs, f_exists(ex.name, f_and(lhs.subs[0], ex.subs[0]))});
        }
        case 7:
        case 8: {
          auto first = from(lhs, d - 1);
          auto mid = first.conclusion.rhs;
          auto second = from(mid, d - 1);
          auto rhs = second.conclusion.rhs;
          return {"cut", {lhs, rhs}, {std::move(first), std::move(second)}, std::nullopt};
        }
        case 9: {
          auto a = from(lhs, d - 1), b = from(lhs, d - 1);
          Sequent c{lhs, f_and(a.conclusion.rhs, b.conclusion.rhs)};
          return {"and-intro", c, {std::move(a), std::move(b)}, std::nullopt};
        }
        case 10: {
          auto y = choose(g, sh.bindable);
          auto body = formula();
          auto t = Term::v(choose(g, sh.all_vars()));
          if (!free_for(t, y, body)) continue;
          auto prem = fixed(lhs, subst_formula(body, t, y), d - 1);
          return {"exists-intro", {lhs, f_exists(y, body)}, {std::move(prem)}, t};
        }
        default: {
          if (lhs.kind != K::top) continue;
          auto v = Term::v(choose(g, sh.all_vars()));
          return leaf("eq-refl", {lhs, f_eq(v, v)});
        }
      }
    }
  }

  ProofNode top(int d) {
    int k = below(g, 5);
    if (k == 0) {
      // exists-elim: from exists y phi |- psi infer phi[t/y] |- psi
      auto y = choose(g, sh.bindable);
      auto phi = formula();
      auto t = Term::v(choose(g, sh.all_vars()));
      if (free_for(t, y, phi)) {
        auto prem = fixed(f_exists(y, phi), formula(), d - 1);
        auto rhs = prem.conclusion.rhs;
        return {"exists-elim", {subst_formula(phi, t, y), rhs}, {std::move(prem)}, t};
      }
    }
    if (k == 1) {
      std::vector<std::string> xs{choose(g, sh.free_only)}, ys{choose(g, sh.all_vars())};
      auto phi = formula();
      std::map<std::string, Term> m{{xs[0], Term::v(ys[0])}};
      if (free_for(m.at(xs[0]), xs[0], phi)) return leaf("eq-subst", {f_and(tuple_eq(xs, ys), phi), subst_formula(phi, m)});
    }
    if (k == 2) {
      std::vector<Formula> fs;
      for (int i = below(g, 3); i > 0; --i) fs.push_back(formula());
      return fixed(f_or(fs), formula(), d);
    }
    return from(formula(), d);
  }
};

inline void collect_premises(const ProofNode& n, std::vector<Sequent>& out) {
  if (n.rule == "premise") out.push_back(n.conclusion);
  for (auto& p : n.premises) collect_premises(p, out);
}

}  // namespace detail

struct RandomDerivation {
  Interpretation interp;
  std::vector<GradedSequent> premises;
  ProofNode tree;
};

// A random tree of rule applications and an interpretation; each premise gets a grade no
// larger than its grade in that interpretation.
inline RandomDerivation random_derivation(Rng& g, int depth = 3, int max_domain = 3) {
  RandomDerivation out;
  out.interp = random_interpretation(g, max_domain);
  detail::ProofGen pg{g, {}, 2};
  out.tree = pg.top(depth);
  std::vector<Sequent> leaves;
  detail::collect_premises(out.tree, leaves);
  for (auto& s : leaves) {
    auto actual = sequent_grade(s, out.interp);
    auto gr = coin(g) ? actual : meet(actual, rational(g, 6));
    out.premises.push_back({s, gr});
  }
  return out;
}

}  // namespace fuzzytop::gen
