#pragma once

#include "lattice.hpp"
#include "mvn.hpp"
#include "report.hpp"
#include "space.hpp"
#include "system.hpp"

#include <functional>
#include <numeric>
#include <string>
#include <vector>

// Functor laws, adjunctions and equivalences checked on concrete finite instances.
namespace fuzzytop {

template <class O, class M>
struct Category {
  std::string name;
  std::function<M(const O&)> id;
  std::function<M(const M&, const M&)> compose;                    // (g, f) -> g after f
  std::function<Report(const M&, const O&, const O&)> check;       // is m a morphism src -> dst
  std::function<std::vector<M>(const O&, const O&)> homs;          // every morphism src -> dst
  std::function<bool(const M&, const M&)> equal = [](const M& a, const M& b) { return a == b; };
};

template <class O, class M>
struct Arrow {
  O src, dst;
  M map;
};

// f: a -> b followed by g: b -> c.
template <class O, class M>
struct Composable {
  Arrow<O, M> f, g;
};

template <class CO, class CM, class DO, class DM>
struct FunctorInstance {
  std::string name;
  std::function<DO(const CO&)> obj;
  std::function<DM(const CM&, const CO&, const CO&)> mor;
};

template <class CO, class CM, class DO, class DM>
Report check_functor_laws(const FunctorInstance<CO, CM, DO, DM>& F, const Category<CO, CM>& C, const Category<DO, DM>& D,
                          const std::vector<CO>& objects, const std::vector<Arrow<CO, CM>>& arrows,
                          const std::vector<Composable<CO, CM>>& pairs) {
  Report r;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& a = objects[i];
    auto fa = F.obj(a);
    if (!D.equal(F.mor(C.id(a), a, a), D.id(fa))) r.fail_once(F.name + "(id) = id", cat("object ", i));
  }
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& f = arrows[i];
    auto m = D.check(F.mor(f.map, f.src, f.dst), F.obj(f.src), F.obj(f.dst));
    if (!m.ok()) r.fail_once(F.name + " sends morphisms to morphisms", cat("arrow ", i, ": ", m.failures.front().law));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [f, g] = pairs[i];
    auto lhs = F.mor(C.compose(g.map, f.map), f.src, g.dst);
    auto rhs = D.compose(F.mor(g.map, g.src, g.dst), F.mor(f.map, f.src, f.dst));
    if (!D.equal(lhs, rhs)) r.fail_once(F.name + "(g.f) = " + F.name + "(g)." + F.name + "(f)", cat("pair ", i));
  }
  return r;
}

// F -| G with F: C -> D.
template <class CO, class CM, class DO, class DM>
struct Adjunction {
  std::string name;
  FunctorInstance<CO, CM, DO, DM> left;
  FunctorInstance<DO, DM, CO, CM> right;
  std::function<CM(const CO&)> unit;    // c -> G F c
  std::function<DM(const DO&)> counit;  // F G d -> d
};

struct AdjunctionOptions {
  bool universal = true;             // search hom sets for the factorization
  std::size_t universal_limit = 64;  // object pairs examined by the search
};

template <class CO, class CM, class DO, class DM>
Report check_adjunction(const Adjunction<CO, CM, DO, DM>& adj, const Category<CO, CM>& C, const Category<DO, DM>& D,
                        const std::vector<CO>& cobjs, const std::vector<DO>& dobjs,
                        const std::vector<Arrow<CO, CM>>& carrows = {}, const std::vector<Arrow<DO, DM>>& darrows = {},
                        AdjunctionOptions opt = {}) {
  Report r;
  const auto &F = adj.left, &G = adj.right;
  auto first = [](const Report& m) { return m.failures.front().law + " [" + m.failures.front().witness + "]"; };

  for (std::size_t i = 0; i < cobjs.size(); ++i) {
    const auto& c = cobjs[i];
    auto fc = F.obj(c);
    auto gfc = G.obj(fc);
    auto eta = adj.unit(c);
    auto m = C.check(eta, c, gfc);
    if (!m.ok()) {
      r.fail_once("unit component is a morphism", cat("object ", i, ": ", first(m)));
      continue;
    }
    auto tri = D.compose(adj.counit(fc), F.mor(eta, c, gfc));
    if (!D.equal(tri, D.id(fc))) r.fail_once("counit_F . F(unit) = id", cat("object ", i));
  }
  for (std::size_t i = 0; i < dobjs.size(); ++i) {
    const auto& d = dobjs[i];
    auto gd = G.obj(d);
    auto fgd = F.obj(gd);
    auto eps = adj.counit(d);
    auto m = D.check(eps, fgd, d);
    if (!m.ok()) {
      r.fail_once("counit component is a morphism", cat("object ", i, ": ", first(m)));
      continue;
    }
    auto tri = C.compose(G.mor(eps, fgd, d), adj.unit(gd));
    if (!C.equal(tri, C.id(gd))) r.fail_once("G(counit) . unit_G = id", cat("object ", i));
  }
  for (std::size_t i = 0; i < carrows.size(); ++i) {
    const auto& f = carrows[i];
    auto fa = F.obj(f.src), fb = F.obj(f.dst);
    auto lhs = C.compose(G.mor(F.mor(f.map, f.src, f.dst), fa, fb), adj.unit(f.src));
    auto rhs = C.compose(adj.unit(f.dst), f.map);
    if (!C.equal(lhs, rhs)) r.fail_once("unit natural", cat("arrow ", i));
  }
  for (std::size_t i = 0; i < darrows.size(); ++i) {
    const auto& g = darrows[i];
    auto ga = G.obj(g.src), gb = G.obj(g.dst);
    auto lhs = D.compose(g.map, adj.counit(g.src));
    auto rhs = D.compose(adj.counit(g.dst), F.mor(G.mor(g.map, g.src, g.dst), ga, gb));
    if (!D.equal(lhs, rhs)) r.fail_once("counit natural", cat("arrow ", i));
  }

  if (!opt.universal || !C.homs || !D.homs) return r;
  std::size_t examined = 0;
  for (std::size_t i = 0; i < cobjs.size(); ++i)
    for (std::size_t k = 0; k < dobjs.size(); ++k) {
      if (examined++ >= opt.universal_limit) return r;
      const auto& c = cobjs[i];
      const auto& d = dobjs[k];
      auto fc = F.obj(c);
      auto gd = G.obj(d);
      auto eps = adj.counit(d);
      auto candidates = C.homs(c, gd);
      for (auto& phi : D.homs(fc, d)) {
        // The mediating morphism G(phi) . unit_c.
        auto med = C.compose(G.mor(phi, fc, d), adj.unit(c));
        if (!D.equal(D.compose(eps, F.mor(med, c, gd)), phi))
          r.fail_once("counit . F(G(phi) . unit) = phi", cat("objects ", i, ",", k));
        int count = 0;
        for (auto& psi : candidates)
          if (D.equal(D.compose(eps, F.mor(psi, c, gd)), phi)) {
            ++count;
            if (!C.equal(psi, med)) r.fail_once("factorization is the mediating morphism", cat("objects ", i, ",", k));
          }
        if (count != 1) r.fail_once("factorization exists and is unique", cat("objects ", i, ",", k, ": ", count, " factorizations"));
      }
    }
  return r;
}

// Isomorphism by search for a two-sided inverse among the morphisms back.
template <class O, class M>
Report iso_by_search(const Category<O, M>& C, const M& m, const O& a, const O& b) {
  Report r = C.check(m, a, b);
  if (!r.ok()) return r;
  for (auto& g : C.homs(b, a))
    if (C.equal(C.compose(g, m), C.id(a)) && C.equal(C.compose(m, g), C.id(b))) return r;
  r.fail("has a two-sided inverse", "none among the morphisms back");
  return r;
}

// Unit and counit components are isomorphisms on objects of the stated subcategories.
// Objects outside a subcategory are reported, not skipped.
template <class CO, class CM, class DO, class DM>
Report check_equivalence(const Adjunction<CO, CM, DO, DM>& adj, const Category<CO, CM>& C, const Category<DO, DM>& D,
                         const std::vector<CO>& cobjs, const std::vector<DO>& dobjs,
                         const std::function<Report(const CM&, const CO&, const CO&)>& c_iso,
                         const std::function<Report(const DM&, const DO&, const DO&)>& d_iso,
                         const std::function<bool(const CO&)>& c_in = {}, const std::function<bool(const DO&)>& d_in = {},
                         const std::string& c_sub = "subcategory", const std::string& d_sub = "subcategory") {
  Report r;
  for (std::size_t i = 0; i < cobjs.size(); ++i) {
    const auto& c = cobjs[i];
    if (c_in && !c_in(c)) {
      r.fail("precondition: " + c_sub, cat(C.name, " object ", i));
      continue;
    }
    auto m = c_iso(adj.unit(c), c, adj.right.obj(adj.left.obj(c)));
    if (!m.ok()) r.fail_once("unit is an isomorphism", cat("object ", i, ": ", m.failures.front().law));
  }
  for (std::size_t i = 0; i < dobjs.size(); ++i) {
    const auto& d = dobjs[i];
    if (d_in && !d_in(d)) {
      r.fail("precondition: " + d_sub, cat(D.name, " object ", i));
      continue;
    }
    auto m = d_iso(adj.counit(d), adj.left.obj(adj.right.obj(d)), d);
    if (!m.ok()) r.fail_once("counit is an isomorphism", cat("object ", i, ": ", m.failures.front().law));
  }
  return r;
}

template <class AO, class AM, class BO, class BM, class CO, class CM>
FunctorInstance<AO, AM, CO, CM> compose_functors(const FunctorInstance<BO, BM, CO, CM>& second,
                                                 const FunctorInstance<AO, AM, BO, BM>& first) {
  return {second.name + "." + first.name, [=](const AO& a) { return second.obj(first.obj(a)); },
          [=](const AM& f, const AO& a, const AO& b) { return second.mor(first.mor(f, a, b), first.obj(a), first.obj(b)); }};
}

// (F' -| G') after (F -| G) gives F'F -| GG'.
template <class CO, class CM, class DO, class DM, class EO, class EM>
Adjunction<CO, CM, EO, EM> compose_adjunctions(const Adjunction<DO, DM, EO, EM>& outer, const Adjunction<CO, CM, DO, DM>& inner,
                                               const Category<CO, CM>& C, const Category<EO, EM>& E) {
  Adjunction<CO, CM, EO, EM> a;
  a.name = outer.name + " . " + inner.name;
  a.left = compose_functors(outer.left, inner.left);
  a.right = compose_functors(inner.right, outer.right);
  a.unit = [=](const CO& c) {
    auto fc = inner.left.obj(c);
    auto gfc = outer.right.obj(outer.left.obj(fc));
    return C.compose(inner.right.mor(outer.unit(fc), fc, gfc), inner.unit(c));
  };
  a.counit = [=](const EO& e) {
    auto ge = outer.right.obj(e);
    auto fgge = inner.left.obj(inner.right.obj(ge));
    return E.compose(outer.counit(e), outer.left.mor(inner.counit(ge), fgge, ge));
  };
  return a;
}

// ---- hom sets ----

inline std::vector<std::vector<int>> all_maps(std::size_t from, std::size_t to, std::size_t budget = 200000) {
  std::vector<std::vector<int>> out;
  if (to == 0) {
    if (from == 0) out.emplace_back();
    return out;
  }
  double total = 1;
  for (std::size_t i = 0; i < from; ++i) total *= double(to);
  if (total > double(budget)) throw budget_exceeded("too many point maps to enumerate");
  std::vector<int> f(from, 0);
  for (;;) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < from && ++f[i] == int(to)) f[i++] = 0;
    if (i == from) break;
  }
  return out;
}

inline std::vector<std::vector<int>> continuous_maps(const FuzzyTopSpace& s, const FuzzyTopSpace& t) {
  std::vector<std::vector<int>> out;
  for (auto& f : all_maps(s.size(), t.size()))
    if (check_fuzzy_continuous(f, s, t).ok()) out.push_back(f);
  return out;
}

// Every system map d -> e: frame homs backward, then the points whose rows agree.
inline std::vector<SystemMap> enumerate_system_maps(const FuzzyTopSystem& d, const FuzzyTopSystem& e,
                                                    const std::function<bool(const ElemMap&)>& accept = {}) {
  std::vector<SystemMap> out;
  for (auto& f2 : enumerate_frame_homs(e.frame, d.frame)) {
    if (accept && !accept(f2)) continue;
    std::vector<std::vector<int>> cand(d.npoints());
    bool any = true;
    for (std::size_t x = 0; x < d.npoints() && any; ++x) {
      for (std::size_t y = 0; y < e.npoints(); ++y) {
        bool ok = true;
        for (Elem b = 0; b < Elem(e.nelems()) && ok; ++b) ok = e.gr(y, b) == d.gr(x, f2[b]);
        if (ok) cand[x].push_back(int(y));
      }
      any = !cand[x].empty();
    }
    if (!any) continue;
    std::vector<std::size_t> pick(d.npoints(), 0);
    for (;;) {
      SystemMap m{std::vector<int>(d.npoints()), f2};
      for (std::size_t x = 0; x < d.npoints(); ++x) m.f1[x] = cand[x][pick[x]];
      out.push_back(std::move(m));
      std::size_t x = 0;
      while (x < d.npoints() && ++pick[x] == cand[x].size()) pick[x++] = 0;
      if (x == d.npoints()) break;
    }
  }
  return out;
}

inline std::vector<FBMap> enumerate_fb_maps(const FBSysN& d, const FBSysN& e) {
  std::vector<FBMap> out;
  for (auto& f2 : enumerate_lnc_homs(e.alg, d.alg)) {
    std::vector<std::vector<int>> cand(d.npoints());
    bool any = true;
    for (std::size_t x = 0; x < d.npoints() && any; ++x) {
      for (std::size_t y = 0; y < e.npoints(); ++y) {
        bool ok = true;
        for (int b = 0; b < int(e.nelems()) && ok; ++b) ok = e.gr(y, b) == d.gr(x, f2[b]);
        if (ok) cand[x].push_back(int(y));
      }
      any = !cand[x].empty();
    }
    if (!any) continue;
    std::vector<std::size_t> pick(d.npoints(), 0);
    for (;;) {
      FBMap m{std::vector<int>(d.npoints()), f2};
      for (std::size_t x = 0; x < d.npoints(); ++x) m.f1[x] = cand[x][pick[x]];
      out.push_back(std::move(m));
      std::size_t x = 0;
      while (x < d.npoints() && ++pick[x] == cand[x].size()) pick[x++] = 0;
      if (x == d.npoints()) break;
    }
  }
  return out;
}

// Index of the point with the given row, or -1.
inline int find_row(const FuzzyTopSystem& d, const std::vector<TruthValue>& row) {
  for (std::size_t v = 0; v < d.npoints(); ++v)
    if (d.row(v) == row) return int(v);
  return -1;
}

// ---- categories ----

inline std::vector<int> identity_points(std::size_t n) {
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

inline std::vector<int> compose_points(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> h;
  for (int x : f) h.push_back(g[x]);
  return h;
}

using PointMap = std::vector<int>;

inline Category<FuzzyTopSpace, PointMap> top_category(const std::string& name = "Top") {
  Category<FuzzyTopSpace, PointMap> c;
  c.name = name;
  c.id = [](const FuzzyTopSpace& s) { return identity_points(s.size()); };
  c.compose = compose_points;
  c.check = [](const PointMap& f, const FuzzyTopSpace& s, const FuzzyTopSpace& t) {
    Report r;
    if (f.size() != s.size()) r.fail("map total", cat(f.size(), " entries"));
    for (int y : f)
      if (y < 0 || std::size_t(y) >= t.size()) r.fail_once("map total", "value out of range");
    if (r.ok()) r.merge(check_fuzzy_continuous(f, s, t));
    return r;
  };
  c.homs = continuous_maps;
  return c;
}

inline Category<FuzzyTopSystem, SystemMap> sys_category() {
  Category<FuzzyTopSystem, SystemMap> c;
  c.name = "Sys";
  c.id = identity_system_map;
  c.compose = [](const SystemMap& g, const SystemMap& f) { return compose(g, f); };
  c.check = check_system_map;
  c.homs = [](const FuzzyTopSystem& d, const FuzzyTopSystem& e) { return enumerate_system_maps(d, e); };
  return c;
}

// Locales: a morphism A -> B is a frame hom B -> A.
inline Category<FiniteFrame, ElemMap> loc_category() {
  Category<FiniteFrame, ElemMap> c;
  c.name = "Loc";
  c.id = [](const FiniteFrame& a) { return identity_map(a.size()); };
  c.compose = [](const ElemMap& g, const ElemMap& f) { return compose(f, g); };
  c.check = [](const ElemMap& h, const FiniteFrame& a, const FiniteFrame& b) { return check_frame_hom(b, a, h); };
  c.homs = [](const FiniteFrame& a, const FiniteFrame& b) { return enumerate_frame_homs(b, a); };
  return c;
}

inline Category<GradedFuzzyTopSystem, SystemMap> gsys_category() {
  Category<GradedFuzzyTopSystem, SystemMap> c;
  c.name = "GSys";
  c.id = [](const GradedFuzzyTopSystem& d) { return identity_system_map(d.base); };
  c.compose = [](const SystemMap& g, const SystemMap& f) { return compose(g, f); };
  c.check = check_graded_system_map;
  c.homs = [](const GradedFuzzyTopSystem& d, const GradedFuzzyTopSystem& e) {
    auto gd = d.graded_frame(), ge = e.graded_frame();
    return enumerate_system_maps(d.base, e.base, [&](const ElemMap& f2) { return check_graded_frame_hom(f2, ge, gd).ok(); });
  };
  return c;
}

inline Category<GradedFrame, ElemMap> gloc_category() {
  Category<GradedFrame, ElemMap> c;
  c.name = "GLoc";
  c.id = [](const GradedFrame& a) { return identity_map(a.size()); };
  c.compose = [](const ElemMap& g, const ElemMap& f) { return compose(f, g); };
  c.check = [](const ElemMap& h, const GradedFrame& a, const GradedFrame& b) { return check_graded_frame_hom(h, b, a); };
  c.homs = [](const GradedFrame& a, const GradedFrame& b) {
    std::vector<ElemMap> out;
    for (auto& h : enumerate_frame_homs(b.frame, a.frame))
      if (check_graded_frame_hom(h, b, a).ok()) out.push_back(h);
    return out;
  };
  return c;
}

inline Category<FBSysN, FBMap> fbsys_category() {
  Category<FBSysN, FBMap> c;
  c.name = "FBSys";
  c.id = identity_fb_map;
  c.compose = [](const FBMap& g, const FBMap& f) { return compose(g, f); };
  c.check = [](const FBMap& m, const FBSysN& d, const FBSysN& e) {
    Report r;
    for (int a : m.f2)
      if (a < 0 || std::size_t(a) >= d.nelems()) {
        r.fail("algebra map total", "undefined value");
        return r;
      }
    return check_fb_map(m, d, e);
  };
  c.homs = enumerate_fb_maps;
  return c;
}

// Algebras with arrows reversed: a morphism A -> B is a homomorphism B -> A.
inline Category<LnAlgebra, LnHom> lnalg_op_category() {
  Category<LnAlgebra, LnHom> c;
  c.name = "LnAlg^op";
  c.id = [](const LnAlgebra& a) { return identity_map(a.size()); };
  c.compose = [](const LnHom& g, const LnHom& f) { return compose(f, g); };
  c.check = [](const LnHom& h, const LnAlgebra& a, const LnAlgebra& b) { return check_lnc_hom(b, a, h); };
  c.homs = [](const LnAlgebra& a, const LnAlgebra& b) { return enumerate_lnc_homs(b, a); };
  return c;
}

// ---- functors ----

using SpaceFunctor = FunctorInstance<FuzzyTopSpace, PointMap, FuzzyTopSystem, SystemMap>;

// J(f) = (f, preimage).
inline SystemMap j_map(const PointMap& f, const FuzzyTopSpace& s, const FuzzyTopSpace& t) {
  SystemMap m{f, ElemMap(t.opens.size())};
  for (std::size_t i = 0; i < t.opens.size(); ++i) m.f2[i] = s.index_of(preimage(f, t.opens[i]));
  return m;
}

inline FunctorInstance<FuzzyTopSpace, PointMap, FuzzyTopSystem, SystemMap> j_functor() {
  return {"J", [](const FuzzyTopSpace& s) { return j(s); }, j_map};
}

inline FunctorInstance<FuzzyTopSystem, SystemMap, FuzzyTopSpace, PointMap> ext_functor() {
  return {"Ext", [](const FuzzyTopSystem& d) { return ext(d); },
          [](const SystemMap& m, const FuzzyTopSystem&, const FuzzyTopSystem&) { return m.f1; }};
}

inline FunctorInstance<FuzzyTopSystem, SystemMap, FiniteFrame, ElemMap> fm_functor() {
  return {"fm", [](const FuzzyTopSystem& d) { return d.frame; },
          [](const SystemMap& m, const FuzzyTopSystem&, const FuzzyTopSystem&) { return m.f2; }};
}

// S(h) for h: A -> B in Loc (a frame hom B -> A): v |-> v . h.
inline SystemMap spectrum_map(const ElemMap& h, const FuzzyTopSystem& sa, const FuzzyTopSystem& sb) {
  SystemMap m{std::vector<int>(sa.npoints()), h};
  for (std::size_t v = 0; v < sa.npoints(); ++v) {
    std::vector<TruthValue> row;
    for (Elem b = 0; b < Elem(h.size()); ++b) row.push_back(sa.gr(v, h[b]));
    m.f1[v] = find_row(sb, row);
  }
  return m;
}

inline FunctorInstance<FiniteFrame, ElemMap, FuzzyTopSystem, SystemMap> s_functor(const ValueChain& chain) {
  return {"S", [chain](const FiniteFrame& a) { return spectrum(a, chain); },
          [chain](const ElemMap& h, const FiniteFrame& a, const FiniteFrame& b) {
            return spectrum_map(h, spectrum(a, chain), spectrum(b, chain));
          }};
}

inline FunctorInstance<FuzzyTopSpace, PointMap, GradedFuzzyTopSystem, SystemMap> j_g_functor() {
  return {"J_g", [](const FuzzyTopSpace& s) { return j_g(s); }, j_map};
}

inline FunctorInstance<GradedFuzzyTopSystem, SystemMap, FuzzyTopSpace, PointMap> ext_g_functor() {
  return {"Ext_g", [](const GradedFuzzyTopSystem& d) { return ext_g(d.base); },
          [](const SystemMap& m, const GradedFuzzyTopSystem&, const GradedFuzzyTopSystem&) { return m.f1; }};
}

inline FunctorInstance<GradedFuzzyTopSystem, SystemMap, GradedFrame, ElemMap> fm_g_functor() {
  return {"fm_g", [](const GradedFuzzyTopSystem& d) { return d.graded_frame(); },
          [](const SystemMap& m, const GradedFuzzyTopSystem&, const GradedFuzzyTopSystem&) { return m.f2; }};
}

inline FunctorInstance<GradedFrame, ElemMap, GradedFuzzyTopSystem, SystemMap> s_g_functor(const ValueChain& chain) {
  return {"S_g", [chain](const GradedFrame& a) { return spectrum_g(a, chain); },
          [chain](const ElemMap& h, const GradedFrame& a, const GradedFrame& b) {
            return spectrum_map(h, spectrum_g(a, chain).base, spectrum_g(b, chain).base);
          }};
}

// J_B(f) = (f, t |-> t . f).
inline FBMap j_B_map(const PointMap& f, const FuzzyTopSpace& s, const FuzzyTopSpace& t) {
  auto js = j_B(s), jt = j_B(t);
  FBMap m{f, LnHom(jt.nelems())};
  for (int b = 0; b < int(jt.nelems()); ++b) {
    std::vector<int> v;
    for (int x : f) v.push_back(jt.alg.vec[b][x]);
    m.f2[b] = js.alg.find(v);
  }
  return m;
}

inline FunctorInstance<FuzzyTopSpace, PointMap, FBSysN, FBMap> j_B_functor() {
  return {"J_B", [](const FuzzyTopSpace& s) { return j_B(s); }, j_B_map};
}

inline FunctorInstance<FBSysN, FBMap, FuzzyTopSpace, PointMap> ext_B_functor() {
  return {"Ext_B", [](const FBSysN& d) { return ext_B(d); }, [](const FBMap& m, const FBSysN&, const FBSysN&) { return m.f1; }};
}

inline FunctorInstance<FBSysN, FBMap, LnAlgebra, LnHom> lag_functor() {
  return {"Lag", [](const FBSysN& d) { return lag(d); }, [](const FBMap& m, const FBSysN&, const FBSysN&) { return m.f2; }};
}

inline FunctorInstance<LnAlgebra, LnHom, FBSysN, FBMap> s_B_functor() {
  return {"S_B", [](const LnAlgebra& a) { return s_B(a); },
          [](const LnHom& h, const LnAlgebra& a, const LnAlgebra& b) { return s_B_map(b, a, h); }};
}

// ---- adjunctions ----

// J -| Ext: unit the identity on points, counit (id, ext*).
inline Adjunction<FuzzyTopSpace, PointMap, FuzzyTopSystem, SystemMap> j_ext_adjunction() {
  return {"J -| Ext", j_functor(), ext_functor(), [](const FuzzyTopSpace& s) { return identity_points(s.size()); },
          [](const FuzzyTopSystem& d) {
            return SystemMap{identity_points(d.npoints()), ext_star(d, ext(d))};
          }};
}

// fm -| S over a fixed chain: unit (p*, id), counit the identity.
inline Adjunction<FuzzyTopSystem, SystemMap, FiniteFrame, ElemMap> fm_s_adjunction(const ValueChain& chain) {
  return {"fm -| S", fm_functor(), s_functor(chain),
          [chain](const FuzzyTopSystem& d) {
            auto sa = spectrum(d.frame, chain);
            SystemMap m{std::vector<int>(d.npoints()), identity_map(d.nelems())};
            for (std::size_t x = 0; x < d.npoints(); ++x) m.f1[x] = find_row(sa, d.row(x));
            return m;
          },
          [](const FiniteFrame& a) { return identity_map(a.size()); }};
}

inline Adjunction<FuzzyTopSpace, PointMap, GradedFuzzyTopSystem, SystemMap> j_g_ext_g_adjunction() {
  return {"J_g -| Ext_g", j_g_functor(), ext_g_functor(), [](const FuzzyTopSpace& s) { return identity_points(s.size()); },
          [](const GradedFuzzyTopSystem& d) {
            return SystemMap{identity_points(d.base.npoints()), ext_star(d.base, ext(d.base))};
          }};
}

inline Adjunction<GradedFuzzyTopSystem, SystemMap, GradedFrame, ElemMap> fm_g_s_g_adjunction(const ValueChain& chain) {
  return {"fm_g -| S_g", fm_g_functor(), s_g_functor(chain),
          [chain](const GradedFuzzyTopSystem& d) {
            auto sa = spectrum_g(d.graded_frame(), chain).base;
            SystemMap m{std::vector<int>(d.base.npoints()), identity_map(d.base.nelems())};
            for (std::size_t x = 0; x < d.base.npoints(); ++x) m.f1[x] = find_row(sa, d.base.row(x));
            return m;
          },
          [](const GradedFrame& a) { return identity_map(a.size()); }};
}

// J_B -| Ext_B: unit the identity on points, counit (id, ext_B*).
inline Adjunction<FuzzyTopSpace, PointMap, FBSysN, FBMap> j_B_ext_B_adjunction() {
  return {"J_B -| Ext_B", j_B_functor(), ext_B_functor(), [](const FuzzyTopSpace& s) { return identity_points(s.size()); },
          [](const FBSysN& d) { return fbs_counit(d).map; }};
}

// Lag -| S_B: unit (p*, id_A), counit the identity.
inline Adjunction<FBSysN, FBMap, LnAlgebra, LnHom> lag_s_B_adjunction() {
  return {"Lag -| S_B", lag_functor(), s_B_functor(), [](const FBSysN& d) { return fbs_unit(d).map; },
          [](const LnAlgebra& a) { return identity_map(a.size()); }};
}

// ---- isomorphisms ----

// Bijective on points and frame elements, with the inverse pair again a system map.
inline Report system_iso(const SystemMap& m, const FuzzyTopSystem& d, const FuzzyTopSystem& e) {
  Report r = check_system_map(m, d, e);
  if (!r.ok()) return r;
  auto g1 = invert(m.f1, e.npoints());
  auto g2 = invert(m.f2, d.nelems());
  if (!g1) r.fail("bijective on points", cat(d.npoints(), " points to ", e.npoints()));
  if (!g2) r.fail("bijective on frames", cat(e.nelems(), " elements to ", d.nelems()));
  if (!r.ok()) return r;
  SystemMap inv{*g1, *g2};
  r.merge(check_system_map(inv, e, d), "inverse");
  if (!(compose(inv, m) == identity_system_map(d)) || !(compose(m, inv) == identity_system_map(e))) r.fail("two-sided inverse", "");
  return r;
}

inline Report graded_system_iso(const SystemMap& m, const GradedFuzzyTopSystem& d, const GradedFuzzyTopSystem& e) {
  Report r = system_iso(m, d.base, e.base);
  if (!r.ok()) return r;
  r.merge(check_graded_system_map(m, d, e));
  r.merge(check_graded_system_map({*invert(m.f1, e.base.npoints()), *invert(m.f2, d.base.nelems())}, e, d), "inverse");
  return r;
}

// Bijection with a continuous inverse.
inline Report homeomorphism(const PointMap& f, const FuzzyTopSpace& s, const FuzzyTopSpace& t) {
  Report r = check_fuzzy_continuous(f, s, t);
  auto g = invert(f, t.size());
  if (!g) {
    r.fail("bijective", cat(s.size(), " points to ", t.size()));
    return r;
  }
  r.merge(check_fuzzy_continuous(*g, t, s), "inverse");
  return r;
}

// ---- coproducts ----

// For every pair f: A -> C, g: B -> C of frame homs, exactly one h: A (x) B -> C restricts to
// f and g along the injections.
inline Report check_coproduct_universal(const FiniteFrame& a, const FiniteFrame& b, const FiniteFrame& c) {
  Report r;
  auto cp = frame_coproduct(a, b);
  r.merge(check_frame(cp.frame), "coproduct frame");
  r.merge(check_frame_hom(a, cp.frame, cp.inj_a), "left injection");
  r.merge(check_frame_hom(b, cp.frame, cp.inj_b), "right injection");
  if (!r.ok()) return r;
  std::map<std::pair<ElemMap, ElemMap>, int> count;
  for (auto& h : enumerate_frame_homs(cp.frame, c)) ++count[{compose(h, cp.inj_a), compose(h, cp.inj_b)}];
  for (auto& f : enumerate_frame_homs(a, c))
    for (auto& g : enumerate_frame_homs(b, c)) {
      auto it = count.find({f, g});
      int k = it == count.end() ? 0 : it->second;
      if (k != 1) r.fail_once("unique h with h.i_A = f and h.i_B = g", cat(k, " such maps"));
    }
  return r;
}

// Frames of at most max_size elements, one per isomorphism class, from posets of join-irreducibles.
inline std::vector<FiniteFrame> small_frames(std::size_t max_size) {
  std::vector<FiniteFrame> out;
  for (int k = 1; std::size_t(k) + 1 <= max_size; ++k) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<Elem, Elem>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      std::vector<std::string> names;
      for (int i = 0; i < k; ++i) names.push_back("j" + std::to_string(i));
      auto f = downset_frame(FinitePoset::from_edges(names, edges)).frame;
      if (f.size() > max_size) continue;
      bool seen = false;
      for (auto& g : out) seen = seen || find_isomorphism(f, g).has_value();
      if (!seen) out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace fuzzytop
