#pragma once

#include "fuzzyset.hpp"
#include "lattice.hpp"
#include "space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace fuzzytop {

// Points, frame, and a graded satisfaction matrix (row-major |X| x |A|).
struct FuzzyTopSystem {
  std::vector<std::string> points;
  FiniteFrame frame;
  std::vector<TruthValue> sat;

  std::size_t npoints() const { return points.size(); }
  std::size_t nelems() const { return frame.size(); }
  const TruthValue& gr(std::size_t x, Elem a) const { return sat[x * nelems() + a]; }
  TruthValue& gr(std::size_t x, Elem a) { return sat[x * nelems() + a]; }

  FuzzySubset column(Elem a) const {
    FuzzySubset c = FuzzySubset::empty(npoints());
    for (std::size_t x = 0; x < npoints(); ++x) c[x] = gr(x, a);
    return c;
  }
  std::vector<TruthValue> row(std::size_t x) const {
    return {sat.begin() + std::ptrdiff_t(x * nelems()), sat.begin() + std::ptrdiff_t((x + 1) * nelems())};
  }

  static FuzzyTopSystem zeros(std::vector<std::string> points, FiniteFrame frame) {
    FuzzyTopSystem d{std::move(points), std::move(frame), {}};
    d.sat.assign(d.npoints() * d.nelems(), TruthValue::zero());
    return d;
  }
};

struct GradedFuzzyTopSystem {
  FuzzyTopSystem base;
  std::vector<TruthValue> r;  // graded order on the frame, row-major |A| x |A|

  const TruthValue& R(Elem a, Elem b) const { return r[std::size_t(a) * base.nelems() + b]; }
  GradedFrame graded_frame() const { return {base.frame, r}; }
};

inline void require_total(const FuzzyTopSystem& d) {
  if (d.sat.size() != d.npoints() * d.nelems()) throw structural_error("satisfaction matrix not total");
}

// Binary meet/join clauses plus top = 1 and bottom = 0. On a finite frame these give the
// clauses for every finite and every arbitrary family.
inline Report check_system(const FuzzyTopSystem& d) {
  Report r;
  require_total(d);
  const auto& f = d.frame;
  for (std::size_t x = 0; x < d.npoints(); ++x) {
    const auto& nm = d.points[x];
    if (!d.gr(x, f.top).is_one()) r.fail_once("top is satisfied to degree 1", nm);
    if (!d.gr(x, f.bottom).is_zero()) r.fail_once("bottom is satisfied to degree 0", nm);
    for (Elem a = 0; a < Elem(d.nelems()); ++a)
      for (Elem b = 0; b < Elem(d.nelems()); ++b) {
        if (d.gr(x, f.meet(a, b)) != meet(d.gr(x, a), d.gr(x, b)))
          r.fail_once("meet clause", cat(nm, ",", f.name(a), ",", f.name(b)));
        if (d.gr(x, f.join(a, b)) != join(d.gr(x, a), d.gr(x, b)))
          r.fail_once("join clause", cat(nm, ",", f.name(a), ",", f.name(b)));
      }
  }
  return r;
}

// The clauses quantified over every subset of the frame, exhaustively.
inline Report check_system_subsets(const FuzzyTopSystem& d) {
  Report r;
  require_total(d);
  auto n = d.nelems();
  if (n > 20) throw budget_exceeded("subset check limited to 20 frame elements");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Elem> s;
    for (Elem a = 0; a < Elem(n); ++a)
      if (mask >> a & 1) s.push_back(a);
    Elem m = d.frame.meet_all(s), j = d.frame.join_all(s);
    for (std::size_t x = 0; x < d.npoints(); ++x) {
      TruthValue inf = TruthValue::one(), sup;
      for (auto a : s) {
        inf = meet(inf, d.gr(x, a));
        sup = join(sup, d.gr(x, a));
      }
      if (d.gr(x, m) != inf) r.fail_once("meet of a finite family", cat(d.points[x], " mask ", mask));
      if (d.gr(x, j) != sup) r.fail_once("join of a family", cat(d.points[x], " mask ", mask));
    }
  }
  return r;
}

inline Report check_graded_system(const GradedFuzzyTopSystem& d) {
  Report r;
  if (d.r.size() != d.base.nelems() * d.base.nelems()) throw structural_error("R not total on the frame");
  r.merge(check_graded_frame(d.graded_frame()), "graded frame");
  r.merge(check_system(d.base));
  for (std::size_t x = 0; x < d.base.npoints(); ++x)
    for (Elem a = 0; a < Elem(d.base.nelems()); ++a)
      for (Elem b = 0; b < Elem(d.base.nelems()); ++b)
        if (meet(d.base.gr(x, a), d.R(a, b)) > d.base.gr(x, b))
          r.fail_once("gr(x|=a) ^ R(a,b) <= gr(x|=b)", cat(d.base.points[x], ",", d.base.frame.name(a), ",", d.base.frame.name(b)));
  return r;
}

// Equal columns force equal frame elements.
inline bool is_spatial(const FuzzyTopSystem& d) {
  std::set<FuzzySubset> cols;
  for (Elem a = 0; a < Elem(d.nelems()); ++a)
    if (!cols.insert(d.column(a)).second) return false;
  return true;
}

// Distinct points have distinct rows.
inline bool is_localic(const FuzzyTopSystem& d) {
  std::set<std::vector<TruthValue>> rows;
  for (std::size_t x = 0; x < d.npoints(); ++x)
    if (!rows.insert(d.row(x)).second) return false;
  return true;
}

// Opens are the distinct columns.
inline FuzzyTopSpace ext(const FuzzyTopSystem& d) {
  FuzzyTopSpace s{d.points, {}, Flavor::plain, std::nullopt};
  for (Elem a = 0; a < Elem(d.nelems()); ++a) s.opens.push_back(d.column(a));
  s.normalize();
  return s;
}

inline FuzzyTopSpace ext_g(const FuzzyTopSystem& d) {
  auto s = ext(d);
  s.flavor = Flavor::graded;
  return s;
}

// a |-> index of its extent among the opens of ext(d).
inline ElemMap ext_star(const FuzzyTopSystem& d, const FuzzyTopSpace& s) {
  ElemMap m(d.nelems());
  for (Elem a = 0; a < Elem(d.nelems()); ++a) m[a] = s.index_of(d.column(a));
  return m;
}

// Membership satisfaction over the frame of opens.
inline FuzzyTopSystem j(const FuzzyTopSpace& s) {
  auto d = FuzzyTopSystem::zeros(s.points, space_frame(s));
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t i = 0; i < s.opens.size(); ++i) d.gr(x, Elem(i)) = s.opens[i][x];
  return d;
}

inline GradedFuzzyTopSystem j_g(const FuzzyTopSpace& s) { return {j(s), space_graded_frame(s).r}; }

inline const FiniteFrame& fm(const FuzzyTopSystem& d) { return d.frame; }

// Every value in the matrix, with 0 and 1.
inline ValueChain occurring_chain(const FuzzyTopSystem& d) { return ValueChain::from_values(d.sat); }

// Points are the frame homs into the chain; v satisfies a to degree v(a).
inline FuzzyTopSystem spectrum(const FiniteFrame& a, const ValueChain& chain) {
  auto homs = enumerate_frame_homs(a, chain_frame(chain));
  auto d = FuzzyTopSystem::zeros(default_point_names(homs.size(), "v"), a);
  for (std::size_t v = 0; v < homs.size(); ++v)
    for (Elem e = 0; e < Elem(a.size()); ++e) d.gr(v, e) = chain[homs[v][e]];
  return d;
}

// Homs into the chain that are also graded homs into (chain, Goedel arrow).
inline GradedFuzzyTopSystem spectrum_g(const GradedFrame& g, const ValueChain& chain) {
  auto all = spectrum(g.frame, chain);
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < all.npoints(); ++v) {
    bool ok = true;
    for (Elem a = 0; a < Elem(g.size()) && ok; ++a)
      for (Elem b = 0; b < Elem(g.size()) && ok; ++b)
        if (g.R(a, b) > godel_arrow(all.gr(v, a), all.gr(v, b))) ok = false;
    if (ok) keep.push_back(v);
  }
  auto d = FuzzyTopSystem::zeros(default_point_names(keep.size(), "v"), g.frame);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Elem e = 0; e < Elem(g.size()); ++e) d.gr(i, e) = all.gr(keep[i], e);
  return {d, g.r};
}

// Chain as a graded frame with R*(a,b) = a -> b.
inline GradedFrame chain_graded_frame(const ValueChain& chain) {
  GradedFrame g{chain_frame(chain), std::vector<TruthValue>(chain.size() * chain.size())};
  for (Elem a = 0; a < Elem(chain.size()); ++a)
    for (Elem b = 0; b < Elem(chain.size()); ++b) g.R(a, b) = godel_arrow(chain[a], chain[b]);
  return g;
}

// Continuous map of systems D -> E: f1 on points forward, f2 on frames backward.
struct SystemMap {
  std::vector<int> f1;
  ElemMap f2;
  friend bool operator==(const SystemMap&, const SystemMap&) = default;
};

inline SystemMap identity_system_map(const FuzzyTopSystem& d) {
  std::vector<int> f1(d.npoints());
  std::iota(f1.begin(), f1.end(), 0);
  return {f1, identity_map(d.nelems())};
}

// second after first
inline SystemMap compose(const SystemMap& second, const SystemMap& first) {
  SystemMap m;
  for (auto y : first.f1) m.f1.push_back(second.f1[y]);
  m.f2 = compose(first.f2, second.f2);
  return m;
}

inline Report check_transfer(const SystemMap& m, const FuzzyTopSystem& d, const FuzzyTopSystem& e) {
  Report r;
  for (std::size_t x = 0; x < d.npoints(); ++x)
    for (Elem b = 0; b < Elem(e.nelems()); ++b)
      if (d.gr(x, m.f2[b]) != e.gr(m.f1[x], b))
        r.fail_once("gr(x|=f2(b)) = gr(f1(x)|=b)", cat(d.points[x], ",", e.frame.name(b)));
  return r;
}

inline Report check_map_shape(const SystemMap& m, const FuzzyTopSystem& d, const FuzzyTopSystem& e) {
  Report r;
  if (m.f1.size() != d.npoints()) r.fail("point map total", cat(m.f1.size(), " entries"));
  for (auto y : m.f1)
    if (y < 0 || std::size_t(y) >= e.npoints()) r.fail_once("point map total", "value out of range");
  if (m.f2.size() != e.nelems()) r.fail("frame map total", cat(m.f2.size(), " entries"));
  for (auto a : m.f2)
    if (a < 0 || std::size_t(a) >= d.nelems()) r.fail_once("frame map total", "value out of range");
  return r;
}

inline Report check_system_map(const SystemMap& m, const FuzzyTopSystem& d, const FuzzyTopSystem& e) {
  Report r = check_map_shape(m, d, e);
  if (!r.ok()) return r;
  r.merge(check_frame_hom(e.frame, d.frame, m.f2), "frame hom");
  r.merge(check_transfer(m, d, e));
  return r;
}

inline Report check_graded_system_map(const SystemMap& m, const GradedFuzzyTopSystem& d, const GradedFuzzyTopSystem& e) {
  Report r = check_map_shape(m, d.base, e.base);
  if (!r.ok()) return r;
  r.merge(check_graded_frame_hom(m.f2, e.graded_frame(), d.graded_frame()), "graded frame hom");
  r.merge(check_transfer(m, d.base, e.base));
  return r;
}

struct Quotient {
  FuzzyTopSystem sys;
  ElemMap class_of;             // original element -> class
  std::vector<Elem> representative;  // class -> least original element
};

// Merge frame elements with equal columns, ordered by pointwise column order.
inline Quotient quotient(const FuzzyTopSystem& d) {
  Quotient q;
  std::map<FuzzySubset, Elem> seen;
  q.class_of.resize(d.nelems());
  for (Elem a = 0; a < Elem(d.nelems()); ++a) {
    auto c = d.column(a);
    auto [it, fresh] = seen.emplace(c, Elem(q.representative.size()));
    if (fresh) q.representative.push_back(a);
    q.class_of[a] = it->second;
  }
  auto k = q.representative.size();
  FiniteFrame f;
  std::vector<std::string> names;
  for (auto a : q.representative) names.push_back("[" + d.frame.name(a) + "]");
  f.poset = FinitePoset::discrete(std::move(names));
  f.meet_t.assign(k, std::vector<Elem>(k));
  f.join_t.assign(k, std::vector<Elem>(k));
  std::vector<FuzzySubset> cols;
  for (auto a : q.representative) cols.push_back(d.column(a));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      f.poset.le[i][t] = pointwise_leq(cols[i], cols[t]);
      f.meet_t[i][t] = q.class_of[d.frame.meet(q.representative[i], q.representative[t])];
      f.join_t[i][t] = q.class_of[d.frame.join(q.representative[i], q.representative[t])];
    }
  f.top = q.class_of[d.frame.top];
  f.bottom = q.class_of[d.frame.bottom];
  q.sys = FuzzyTopSystem::zeros(d.points, std::move(f));
  for (std::size_t x = 0; x < d.npoints(); ++x)
    for (std::size_t i = 0; i < k; ++i) q.sys.gr(x, Elem(i)) = cols[i][x];
  return q;
}

// R([a],[b]) = inf over points of gr(x|=[a]) -> gr(x|=[b]).
inline std::vector<TruthValue> column_inclusion(const FuzzyTopSystem& d) {
  auto k = d.nelems();
  std::vector<TruthValue> r(k * k);
  for (Elem a = 0; a < Elem(k); ++a)
    for (Elem b = 0; b < Elem(k); ++b) r[a * k + b] = graded_inclusion(d.column(a), d.column(b));
  return r;
}

struct GradedQuotient {
  GradedFuzzyTopSystem sys;
  ElemMap class_of;
  std::vector<Elem> representative;
};

inline GradedQuotient quotient_g(const FuzzyTopSystem& d) {
  auto q = quotient(d);
  auto r = column_inclusion(q.sys);
  return {{std::move(q.sys), std::move(r)}, std::move(q.class_of), std::move(q.representative)};
}

struct SumSystem {
  FuzzyTopSystem sys;
  ProductFrame product;
  std::vector<std::pair<int, int>> tag;  // point -> (summand, point in summand)
};

// Disjoint union of the points over the product of the frames. Point (l,x) satisfies a tuple
// to the degree sup over m of (X_m(l,x) ^ gr(x |=_m a_m)), with X_m crisp.
inline SumSystem system_sum(const std::vector<FuzzyTopSystem>& ds) {
  SumSystem out;
  std::vector<FiniteFrame> frames;
  for (auto& d : ds) frames.push_back(d.frame);
  out.product = frame_product(frames);
  std::vector<std::string> names;
  for (std::size_t l = 0; l < ds.size(); ++l)
    for (std::size_t x = 0; x < ds[l].npoints(); ++x) {
      out.tag.emplace_back(int(l), int(x));
      names.push_back(std::to_string(l) + ":" + ds[l].points[x]);
    }
  out.sys = FuzzyTopSystem::zeros(std::move(names), out.product.frame);
  for (std::size_t z = 0; z < out.tag.size(); ++z)
    for (Elem e = 0; e < Elem(out.sys.nelems()); ++e) {
      TruthValue v;
      for (std::size_t m = 0; m < ds.size(); ++m) {
        auto member = out.tag[z].first == int(m) ? TruthValue::one() : TruthValue::zero();
        auto g = member.is_one() ? ds[m].gr(out.tag[z].second, out.product.proj[m][e]) : TruthValue::zero();
        v = join(v, meet(member, g));
      }
      out.sys.gr(z, e) = v;
    }
  return out;
}

struct ProductSystem {
  FuzzyTopSystem sys;
  Coproduct coproduct;
  std::size_t ny = 0;  // point (x,y) has index x * ny + y
};

// Points X x Y over the frame coproduct. An element, written canonically as the join of the
// tensors of its join-irreducible pairs, is satisfied to the sup of min(gr(x|=a), gr(y|=b)).
inline ProductSystem system_product(const FuzzyTopSystem& d, const FuzzyTopSystem& e) {
  ProductSystem p;
  p.coproduct = frame_coproduct(d.frame, e.frame);
  p.ny = e.npoints();
  std::vector<std::string> names;
  for (auto& x : d.points)
    for (auto& y : e.points) names.push_back("(" + x + "," + y + ")");
  p.sys = FuzzyTopSystem::zeros(std::move(names), p.coproduct.frame);
  for (Elem c = 0; c < Elem(p.sys.nelems()); ++c) {
    auto terms = p.coproduct.tensor_terms(c);
    for (std::size_t x = 0; x < d.npoints(); ++x)
      for (std::size_t y = 0; y < e.npoints(); ++y) {
        TruthValue v;
        for (auto [a, b] : terms) v = join(v, meet(d.gr(x, a), e.gr(y, b)));
        p.sys.gr(x * p.ny + y, c) = v;
      }
  }
  return p;
}

// The grade does not depend on the chosen decomposition: compare with the sup over every
// pure tensor below each element.
inline Report check_decomposition_independence(const ProductSystem& p, const FuzzyTopSystem& d, const FuzzyTopSystem& e) {
  Report r;
  const auto& c = p.coproduct;
  for (Elem el = 0; el < Elem(p.sys.nelems()); ++el)
    for (std::size_t x = 0; x < d.npoints(); ++x)
      for (std::size_t y = 0; y < e.npoints(); ++y) {
        TruthValue v;
        for (Elem a = 0; a < Elem(d.nelems()); ++a)
          for (Elem b = 0; b < Elem(e.nelems()); ++b)
            if (c.frame.leq(c.tensor(a, b), el)) v = join(v, meet(d.gr(x, a), e.gr(y, b)));
        if (v != p.sys.gr(x * p.ny + y, el)) r.fail_once("independent of decomposition", cat(c.frame.name(el)));
      }
  return r;
}

// gr((x,y) |= a (x) b) = gr(x|=a) ^ gr(y|=b) for all pure tensors.
inline Report check_tensor_law(const ProductSystem& p, const FuzzyTopSystem& d, const FuzzyTopSystem& e) {
  Report r;
  for (Elem a = 0; a < Elem(d.nelems()); ++a)
    for (Elem b = 0; b < Elem(e.nelems()); ++b) {
      auto t = p.coproduct.tensor(a, b);
      for (std::size_t x = 0; x < d.npoints(); ++x)
        for (std::size_t y = 0; y < e.npoints(); ++y)
          if (p.sys.gr(x * p.ny + y, t) != meet(d.gr(x, a), e.gr(y, b)))
            r.fail_once("single tensor grade", cat(d.frame.name(a), "*", e.frame.name(b)));
    }
  return r;
}

}  // namespace fuzzytop
