#pragma once

#include "fuzzyset.hpp"
#include "lattice.hpp"
#include "space.hpp"
#include "system.hpp"

#include <set>
#include <string>
#include <vector>

namespace fuzzytop {

// Points carrying a fuzzy membership with values in a per-object chain.
struct FuzzObject {
  std::vector<std::string> points;
  ValueChain chain;
  FuzzySubset membership;

  std::size_t size() const { return points.size(); }
  bool supported(std::size_t x) const { return membership[x] > TruthValue::zero(); }

  Report check() const {
    Report r;
    if (membership.size() != points.size()) throw carrier_mismatch("membership not total");
    r.merge(LFuzzySet{membership, chain}.check());
    return r;
  }
};

// Opens are fuzzy subsets of the membership; the membership itself is the top open.
struct LTopSpace {
  FuzzObject obj;
  std::vector<FuzzySubset> opens;

  LTopSpace& normalize() {
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    return *this;
  }
  FuzzyTopSpace as_space() const { return FuzzyTopSpace{obj.points, opens, Flavor::plain, obj.chain}; }
  friend bool operator==(const LTopSpace& a, const LTopSpace& b) { return a.obj.points == b.obj.points && a.opens == b.opens; }
};

using FuzzTopSpace = LTopSpace;

inline Report check_L_space(const LTopSpace& s) {
  Report r = s.obj.check();
  auto n = s.obj.size();
  std::set<FuzzySubset> tau(s.opens.begin(), s.opens.end());
  for (auto& t : tau) {
    if (t.size() != n) throw carrier_mismatch("open set not on the carrier");
    if (!pointwise_leq(t, s.obj.membership)) r.fail_once("opens lie below the membership", t.str());
    for (auto& v : t.m)
      if (!s.obj.chain.contains(v)) r.fail_once("values lie in the chain", t.str());
  }
  if (!tau.count(FuzzySubset::empty(n))) r.fail("empty set is open", "missing");
  if (!tau.count(s.obj.membership)) r.fail("membership is open", "missing");
  for (auto& a : tau)
    for (auto& b : tau) {
      if (!tau.count(intersection(a, b))) r.fail_once("closed under binary intersection", a.str() + " " + b.str());
      if (!tau.count(set_union(a, b))) r.fail_once("closed under union", a.str() + " " + b.str());
    }
  return r;
}

// Satisfaction bounded by the membership of the point. The top element is satisfied
// exactly to the membership degree.
struct LTopSystem {
  FuzzObject obj;
  FuzzyTopSystem base;  // base.points mirrors obj.points

  const TruthValue& gr(std::size_t x, Elem p) const { return base.gr(x, p); }
};

using FuzzTopSystem = LTopSystem;

inline Report check_L_system(const LTopSystem& d) {
  Report r = d.obj.check();
  require_total(d.base);
  if (d.base.npoints() != d.obj.size()) throw carrier_mismatch("system points differ from the fuzzy set");
  const auto& f = d.base.frame;
  for (std::size_t x = 0; x < d.obj.size(); ++x) {
    const auto& nm = d.obj.points[x];
    if (d.gr(x, f.top) != d.obj.membership[x]) r.fail_once("top is satisfied to the membership degree", nm);
    if (!d.gr(x, f.bottom).is_zero()) r.fail_once("bottom is satisfied to degree 0", nm);
    for (Elem a = 0; a < Elem(f.size()); ++a) {
      if (!d.obj.chain.contains(d.gr(x, a))) r.fail_once("grades lie in the chain", cat(nm, ",", f.name(a)));
      if (d.gr(x, a) > d.obj.membership[x]) r.fail_once("gr(x|=p) <= membership(x)", cat(nm, ",", f.name(a)));
      for (Elem b = 0; b < Elem(f.size()); ++b) {
        if (d.gr(x, f.meet(a, b)) != meet(d.gr(x, a), d.gr(x, b))) r.fail_once("meet clause", cat(nm, ",", f.name(a), ",", f.name(b)));
        if (d.gr(x, f.join(a, b)) != join(d.gr(x, a), d.gr(x, b))) r.fail_once("join clause", cat(nm, ",", f.name(a), ",", f.name(b)));
      }
    }
  }
  return r;
}

inline LTopSpace ext_L(const LTopSystem& d) {
  LTopSpace s{d.obj, {}};
  for (Elem p = 0; p < Elem(d.base.nelems()); ++p) s.opens.push_back(d.base.column(p));
  s.normalize();
  return s;
}

inline LTopSystem j_L(const LTopSpace& s) { return {s.obj, j(s.as_space())}; }

inline const FiniteFrame& lo_L(const LTopSystem& d) { return d.base.frame; }

// Points are the frame homs into the chain; each has membership the join of its values.
inline LTopSystem s_L(const FiniteFrame& p, const ValueChain& chain) {
  auto base = spectrum(p, chain);
  FuzzObject obj{base.points, chain, FuzzySubset::empty(base.npoints())};
  for (std::size_t v = 0; v < base.npoints(); ++v)
    for (Elem e = 0; e < Elem(p.size()); ++e) obj.membership[v] = join(obj.membership[v], base.gr(v, e));
  return {std::move(obj), std::move(base)};
}

inline LTopSpace ext_F(const FuzzTopSystem& d) { return ext_L(d); }
inline FuzzTopSystem j_F(const FuzzTopSpace& s) { return j_L(s); }

// Continuous map of L-systems: a proper function forward and a frame hom backward.
struct LSystemMap {
  ProperFunction f1;
  ElemMap f2;
};

inline LSystemMap identity_L_map(const LTopSystem& d) {
  return {identity_proper(d.obj.membership), identity_map(d.base.nelems())};
}

inline LSystemMap compose(const LSystemMap& second, const LSystemMap& first) {
  return {compose_proper(second.f1, first.f1), compose(first.f2, second.f2)};
}

// Transfer gr(x|=f2(q)) = gr(f1(x)|=q) is required on supported points, where f1(x) is defined.
inline Report check_L_system_map(const LSystemMap& m, const LTopSystem& d, const LTopSystem& e) {
  Report r;
  if (m.f1.source != d.obj.membership || m.f1.target != e.obj.membership) throw carrier_mismatch("proper function on other fuzzy sets");
  r.merge(check_proper(m.f1), "proper function");
  r.merge(check_frame_hom(e.base.frame, d.base.frame, m.f2), "frame hom");
  if (!r.ok()) return r;
  for (std::size_t x = 0; x < d.obj.size(); ++x) {
    if (!d.obj.supported(x)) continue;
    int y = m.f1.image_of(x);
    for (Elem q = 0; q < Elem(e.base.nelems()); ++q)
      if (d.gr(x, m.f2[q]) != e.gr(y, q)) r.fail_once("gr(x|=f2(q)) = gr(f1(x)|=q)", cat(d.obj.points[x], ",", e.base.frame.name(q)));
  }
  return r;
}

// A value-base change given by its inverse: phi_inv[i] is the image of the i-th value of the target chain.
struct FuzzMorphism {
  std::vector<TruthValue> f;  // row-major |X| x |Y|
  std::vector<TruthValue> phi_inv;
};

inline TruthValue apply_phi_inv(const FuzzMorphism& m, const ValueChain& target_chain, const TruthValue& v) {
  int i = target_chain.index_of(v);
  if (i < 0) throw invalid_value("value " + v.str() + " outside the target chain");
  return m.phi_inv[i];
}

inline Report check_value_hom(const FuzzMorphism& m, const ValueChain& src, const ValueChain& dst) {
  Report r;
  if (m.phi_inv.size() != dst.size()) {
    r.fail("value map total", cat(m.phi_inv.size(), " entries for ", dst.size(), " values"));
    return r;
  }
  ElemMap idx;
  for (auto& v : m.phi_inv) {
    int i = src.index_of(v);
    if (i < 0) {
      r.fail("value map lands in the source chain", v.str());
      return r;
    }
    idx.push_back(i);
  }
  r.merge(check_frame_hom(chain_frame(dst), chain_frame(src), idx));
  return r;
}

// Bound f <= A(x) ^ phi_inv(B(y)) and the properness clause.
inline Report check_fuzz_relation(const FuzzMorphism& m, const FuzzObject& a, const FuzzObject& b) {
  Report r;
  auto ny = b.size();
  if (m.f.size() != a.size() * ny) throw carrier_mismatch("relation not total");
  auto zero = TruthValue::zero();
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < ny; ++y)
      if (m.f[x * ny + y] > meet(a.membership[x], apply_phi_inv(m, b.chain, b.membership[y])))
        r.fail_once("f(x,y) <= A(x) ^ phi_inv(B(y))", cat("(", a.points[x], ",", b.points[y], ")"));
    if (!a.supported(x)) continue;
    int hits = 0;
    bool rest_zero = true;
    for (std::size_t y = 0; y < ny; ++y) {
      if (!b.supported(y)) continue;
      if (m.f[x * ny + y] == a.membership[x]) ++hits;
      else if (m.f[x * ny + y] != zero) rest_zero = false;
    }
    if (hits != 1) r.fail_once("unique full-weight target", cat(a.points[x], " has ", hits));
    if (!rest_zero) r.fail_once("zero at the other supported targets", a.points[x]);
  }
  return r;
}

// U(x) = sup_y [f(x,y) ^ phi_inv(V(y))].
inline FuzzySubset fuzz_preimage(const FuzzMorphism& m, const FuzzObject& a, const FuzzObject& b, const FuzzySubset& v) {
  auto u = FuzzySubset::empty(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) u[x] = join(u[x], meet(m.f[x * b.size() + y], apply_phi_inv(m, b.chain, v[y])));
  return u;
}

inline Report check_fuzztop_morphism(const FuzzMorphism& m, const LTopSpace& s1, const LTopSpace& s2) {
  Report r;
  r.merge(check_value_hom(m, s1.obj.chain, s2.obj.chain), "value map");
  if (!r.ok()) return r;
  r.merge(check_fuzz_relation(m, s1.obj, s2.obj), "relation");
  std::set<FuzzySubset> tau(s1.opens.begin(), s1.opens.end());
  for (auto& v : s2.opens)
    if (!tau.count(fuzz_preimage(m, s1.obj, s2.obj, v))) r.fail_once("preimages of opens are open", v.str());
  return r;
}

inline FuzzMorphism identity_fuzz(const FuzzObject& a) {
  FuzzMorphism m{identity_proper(a.membership).f, a.chain.values()};
  return m;
}

// (second . first)(x,z) = sup_y [first(x,y) ^ phi1_inv(second(y,z))], value maps composed backward.
inline FuzzMorphism compose_fuzz(const FuzzMorphism& second, const FuzzMorphism& first, const FuzzObject& a, const FuzzObject& b,
                                 const FuzzObject& c) {
  FuzzMorphism h;
  h.f.assign(a.size() * c.size(), TruthValue::zero());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t z = 0; z < c.size(); ++z) {
      TruthValue v;
      for (std::size_t y = 0; y < b.size(); ++y)
        v = join(v, meet(first.f[x * b.size() + y], apply_phi_inv(first, b.chain, second.f[y * c.size() + z])));
      h.f[x * c.size() + z] = v;
    }
  for (auto& w : second.phi_inv) h.phi_inv.push_back(apply_phi_inv(first, b.chain, w));
  return h;
}

struct FuzzSystemMap {
  FuzzMorphism m;
  ElemMap g;  // frame hom Q -> P
};

inline FuzzSystemMap identity_fuzz_map(const FuzzTopSystem& d) { return {identity_fuzz(d.obj), identity_map(d.base.nelems())}; }

inline FuzzSystemMap compose_fuzz_map(const FuzzSystemMap& second, const FuzzSystemMap& first, const FuzzTopSystem& d,
                                      const FuzzTopSystem& e, const FuzzTopSystem& f) {
  return {compose_fuzz(second.m, first.m, d.obj, e.obj, f.obj), compose(first.g, second.g)};
}

// gr(x|=g(q)) = sup_y [phi_inv(gr(y|=q)) ^ f(x,y)].
inline Report check_fuzztopsys_morphism(const FuzzSystemMap& h, const FuzzTopSystem& d, const FuzzTopSystem& e) {
  Report r;
  r.merge(check_value_hom(h.m, d.obj.chain, e.obj.chain), "value map");
  if (!r.ok()) return r;
  r.merge(check_fuzz_relation(h.m, d.obj, e.obj), "relation");
  r.merge(check_frame_hom(e.base.frame, d.base.frame, h.g), "frame hom");
  if (!r.ok()) return r;
  for (Elem q = 0; q < Elem(e.base.nelems()); ++q) {
    auto rhs = fuzz_preimage(h.m, d.obj, e.obj, e.base.column(q));
    for (std::size_t x = 0; x < d.obj.size(); ++x)
      if (d.gr(x, h.g[q]) != rhs[x]) r.fail_once("gr(x|=g(q)) = sup_y[phi_inv(gr(y|=q)) ^ f(x,y)]", cat(d.obj.points[x], ",", e.base.frame.name(q)));
  }
  return r;
}

// On morphisms: (f, phi) |-> (f, phi, V |-> sup_y [f(x,y) ^ phi_inv V(y)]) between frames of opens.
inline FuzzSystemMap j_F_map(const FuzzMorphism& m, const LTopSpace& s1, const LTopSpace& s2) {
  FuzzSystemMap h{m, ElemMap(s2.opens.size())};
  auto sp1 = s1.as_space();
  for (std::size_t i = 0; i < s2.opens.size(); ++i) {
    h.g[i] = sp1.index_of(fuzz_preimage(m, s1.obj, s2.obj, s2.opens[i]));
    if (h.g[i] < 0) throw structural_error("preimage of an open is not open");
  }
  return h;
}

// Counit J_F(Ext_F(D)) -> D: identity relation and values, p |-> its extent.
inline FuzzSystemMap fuzz_counit(const FuzzTopSystem& d) {
  auto sp = ext_F(d).as_space();
  return {identity_fuzz(d.obj), ext_star(d.base, sp)};
}

// Points with membership above alpha, crisp satisfaction gr > alpha.
inline FuzzyTopSystem alpha_subsystem_strict(const LTopSystem& d, const TruthValue& alpha) {
  auto keep = strict_alpha_cut(d.obj.membership, alpha);
  std::vector<std::string> names;
  for (auto x : keep) names.push_back(d.obj.points[x]);
  auto out = FuzzyTopSystem::zeros(std::move(names), d.base.frame);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Elem p = 0; p < Elem(d.base.nelems()); ++p) out.gr(i, p) = d.gr(keep[i], p) > alpha ? TruthValue::one() : TruthValue::zero();
  return out;
}

// Membership cut fuzzily at alpha; grades kept on surviving points, 0 elsewhere.
inline LTopSystem alpha_subsystem_fuzzy(const LTopSystem& d, const TruthValue& alpha) {
  LTopSystem out = d;
  out.obj.membership = fuzzy_alpha_cut(d.obj.membership, alpha);
  for (std::size_t x = 0; x < d.obj.size(); ++x)
    if (d.obj.membership[x] < alpha)
      for (Elem p = 0; p < Elem(d.base.nelems()); ++p) out.base.gr(x, p) = TruthValue::zero();
  return out;
}

// Crisp subspace on the strict cut: opens {x : T(x) > alpha}.
inline FuzzyTopSpace alpha_subspace_strict(const LTopSpace& s, const TruthValue& alpha) {
  auto keep = strict_alpha_cut(s.obj.membership, alpha);
  FuzzyTopSpace out;
  for (auto x : keep) out.points.push_back(s.obj.points[x]);
  for (auto& t : s.opens) {
    auto c = FuzzySubset::empty(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (t[keep[i]] > alpha) c[i] = TruthValue::one();
    out.opens.push_back(c);
  }
  out.normalize();
  return out;
}

// Opens intersected with the fuzzy alpha-cut of the membership.
inline LTopSpace alpha_subspace_fuzzy(const LTopSpace& s, const TruthValue& alpha) {
  LTopSpace out{s.obj, {}};
  out.obj.membership = fuzzy_alpha_cut(s.obj.membership, alpha);
  for (auto& t : s.opens) out.opens.push_back(intersection(out.obj.membership, t));
  out.normalize();
  return out;
}

}  // namespace fuzzytop
