#pragma once

#include "report.hpp"
#include "truth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzytop {

class structural_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Elem = int;
using ElemMap = std::vector<Elem>;  // total map between carriers, indexed by source id

struct FinitePoset {
  std::vector<std::string> names;
  std::vector<std::vector<char>> le;  // le[a][b] iff a <= b

  std::size_t size() const { return names.size(); }
  bool leq(Elem a, Elem b) const { return le[a][b]; }
  bool lt(Elem a, Elem b) const { return a != b && le[a][b]; }

  static FinitePoset discrete(std::vector<std::string> names) {
    FinitePoset p;
    p.names = std::move(names);
    p.le.assign(p.size(), std::vector<char>(p.size(), 0));
    for (std::size_t i = 0; i < p.size(); ++i) p.le[i][i] = 1;
    return p;
  }

  // Reflexive-transitive closure of the given edges (a below b).
  static FinitePoset from_edges(std::vector<std::string> names, const std::vector<std::pair<Elem, Elem>>& edges) {
    auto p = discrete(std::move(names));
    auto n = p.size();
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || std::size_t(a) >= n || std::size_t(b) >= n) throw structural_error("edge out of range");
      p.le[a][b] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (p.le[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (p.le[k][j]) p.le[i][j] = 1;
    return p;
  }

  Report check() const {
    Report r;
    auto n = size();
    for (std::size_t a = 0; a < n; ++a) {
      if (!le[a][a]) r.fail_once("reflexive", names[a]);
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && le[a][b] && le[b][a]) r.fail_once("antisymmetric", cat(names[a], ",", names[b]));
        for (std::size_t c = 0; c < n; ++c)
          if (le[a][b] && le[b][c] && !le[a][c]) r.fail_once("transitive", cat(names[a], ",", names[b], ",", names[c]));
      }
    }
    return r;
  }

  // Hasse diagram: pairs (a,b) with a < b and nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    auto n = Elem(size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!lt(a, b)) continue;
        bool direct = true;
        for (Elem c = 0; c < n && direct; ++c)
          if (lt(a, c) && lt(c, b)) direct = false;
        if (direct) out.emplace_back(a, b);
      }
    return out;
  }

  // Ids ordered so that every element comes after everything below it.
  std::vector<Elem> linear_extension() const {
    std::vector<Elem> ids(size());
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<int> below(size(), 0);
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (le[b][a]) ++below[a];
    std::stable_sort(ids.begin(), ids.end(), [&](Elem a, Elem b) { return below[a] < below[b]; });
    return ids;
  }
};

struct FiniteFrame {
  FinitePoset poset;
  std::vector<std::vector<Elem>> meet_t, join_t;
  Elem top = 0, bottom = 0;

  std::size_t size() const { return poset.size(); }
  bool leq(Elem a, Elem b) const { return poset.le[a][b]; }
  Elem meet(Elem a, Elem b) const { return meet_t[a][b]; }
  Elem join(Elem a, Elem b) const { return join_t[a][b]; }
  const std::string& name(Elem a) const { return poset.names[a]; }

  Elem join_all(const std::vector<Elem>& s) const {
    Elem r = bottom;
    for (auto a : s) r = join(r, a);
    return r;
  }
  Elem meet_all(const std::vector<Elem>& s) const {
    Elem r = top;
    for (auto a : s) r = meet(r, a);
    return r;
  }

  std::optional<Elem> find(const std::string& nm) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (poset.names[i] == nm) return Elem(i);
    return std::nullopt;
  }

  // Builds meet/join tables as glb/lub of the order; throws if some pair lacks one.
  static FiniteFrame from_poset(FinitePoset p) {
    FiniteFrame f;
    auto n = Elem(p.size());
    if (n == 0) throw structural_error("empty carrier");
    f.meet_t.assign(n, std::vector<Elem>(n, -1));
    f.join_t.assign(n, std::vector<Elem>(n, -1));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem glb = -1, lub = -1;
        for (Elem c = 0; c < n; ++c) {
          if (p.le[c][a] && p.le[c][b] && (glb < 0 || p.le[glb][c])) glb = c;
          if (p.le[a][c] && p.le[b][c] && (lub < 0 || p.le[c][lub])) lub = c;
        }
        for (Elem c = 0; c < n; ++c) {
          if (p.le[c][a] && p.le[c][b] && !p.le[c][glb]) glb = -1;
          if (p.le[a][c] && p.le[b][c] && !p.le[lub][c]) lub = -1;
          if (glb < 0 || lub < 0) break;
        }
        if (glb < 0 || lub < 0) throw structural_error(cat("no ", glb < 0 ? "meet" : "join", " for ", p.names[a], ",", p.names[b]));
        f.meet_t[a][b] = glb;
        f.join_t[a][b] = lub;
      }
    f.bottom = f.top = 0;
    for (Elem c = 0; c < n; ++c) {
      f.bottom = f.meet_t[f.bottom][c];
      f.top = f.join_t[f.top][c];
    }
    f.poset = std::move(p);
    return f;
  }

  static FiniteFrame from_edges(std::vector<std::string> names, const std::vector<std::pair<Elem, Elem>>& edges) {
    return from_poset(FinitePoset::from_edges(std::move(names), edges));
  }
};

// Checks order laws, that the tables are glb/lub, bounds, distributivity, and top != bottom.
inline Report check_frame(const FiniteFrame& f) {
  Report r;
  auto n = Elem(f.size());
  if (n == 0) {
    r.fail("nonempty", "empty carrier");
    return r;
  }
  if (f.meet_t.size() != std::size_t(n) || f.join_t.size() != std::size_t(n) || f.poset.le.size() != std::size_t(n))
    throw structural_error("tables not total on carrier");
  for (Elem a = 0; a < n; ++a)
    if (f.meet_t[a].size() != std::size_t(n) || f.join_t[a].size() != std::size_t(n) || f.poset.le[a].size() != std::size_t(n))
      throw structural_error("tables not total on carrier");
  r.merge(f.poset.check(), "order");
  auto nm = [&](Elem a) { return f.name(a); };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem m = f.meet(a, b), j = f.join(a, b);
      if (m < 0 || m >= n || j < 0 || j >= n) throw structural_error("table entry out of range");
      bool glb = f.leq(m, a) && f.leq(m, b), lub = f.leq(a, j) && f.leq(b, j);
      for (Elem c = 0; c < n; ++c) {
        if (f.leq(c, a) && f.leq(c, b) && !f.leq(c, m)) glb = false;
        if (f.leq(a, c) && f.leq(b, c) && !f.leq(j, c)) lub = false;
      }
      if (!glb) r.fail_once("meet is greatest lower bound", cat(nm(a), ",", nm(b)));
      if (!lub) r.fail_once("join is least upper bound", cat(nm(a), ",", nm(b)));
    }
  for (Elem a = 0; a < n; ++a) {
    if (!f.leq(a, f.top)) r.fail_once("top is greatest", nm(a));
    if (!f.leq(f.bottom, a)) r.fail_once("bottom is least", nm(a));
  }
  if (f.top == f.bottom) r.fail("top differs from bottom", nm(f.top));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (f.meet(a, f.join(b, c)) != f.join(f.meet(a, b), f.meet(a, c)))
          r.fail_once("distributivity", cat(nm(a), ",", nm(b), ",", nm(c)));
  return r;
}

// Chain frame on the values of a ValueChain, element i = i-th value.
inline FiniteFrame chain_frame(const ValueChain& c) {
  std::vector<std::string> names;
  std::vector<std::pair<Elem, Elem>> edges;
  for (std::size_t i = 0; i < c.size(); ++i) {
    names.push_back(c[i].str());
    if (i) edges.emplace_back(Elem(i - 1), Elem(i));
  }
  return FiniteFrame::from_edges(std::move(names), edges);
}

// Chain frame with k elements named 0..k-1.
inline FiniteFrame chain_frame(int k) {
  std::vector<std::string> names;
  std::vector<std::pair<Elem, Elem>> edges;
  for (int i = 0; i < k; ++i) {
    names.push_back(std::to_string(i));
    if (i) edges.emplace_back(i - 1, i);
  }
  return FiniteFrame::from_edges(std::move(names), edges);
}

inline Report check_frame_hom(const FiniteFrame& a, const FiniteFrame& b, const ElemMap& f) {
  Report r;
  if (f.size() != a.size()) {
    r.fail("total", cat("map has ", f.size(), " entries for ", a.size(), " elements"));
    return r;
  }
  for (auto v : f)
    if (v < 0 || std::size_t(v) >= b.size()) {
      r.fail("total", "value out of range");
      return r;
    }
  if (f[a.top] != b.top) r.fail("preserves top", a.name(a.top));
  if (f[a.bottom] != b.bottom) r.fail("preserves bottom", a.name(a.bottom));
  for (Elem x = 0; x < Elem(a.size()); ++x)
    for (Elem y = 0; y < Elem(a.size()); ++y) {
      if (f[a.meet(x, y)] != b.meet(f[x], f[y])) r.fail_once("preserves meet", cat(a.name(x), ",", a.name(y)));
      if (f[a.join(x, y)] != b.join(f[x], f[y])) r.fail_once("preserves join", cat(a.name(x), ",", a.name(y)));
    }
  return r;
}

inline bool is_frame_hom(const FiniteFrame& a, const FiniteFrame& b, const ElemMap& f) {
  return check_frame_hom(a, b, f).ok();
}

inline ElemMap compose(const ElemMap& g, const ElemMap& f) {  // g after f
  ElemMap h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

inline ElemMap identity_map(std::size_t n) {
  ElemMap m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

inline bool bijective(const ElemMap& f, std::size_t target_size) {
  if (f.size() != target_size) return false;
  std::vector<char> hit(target_size, 0);
  for (auto v : f) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

struct ProductFrame {
  FiniteFrame frame;
  std::vector<ElemMap> proj;  // proj[k][element] = k-th coordinate
  std::vector<std::size_t> sizes;

  Elem tuple_to_elem(const std::vector<Elem>& t) const {
    Elem e = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) e = e * Elem(sizes[k]) + t[k];
    return e;
  }
};

// Cartesian product with componentwise order; element ids are mixed-radix tuples.
inline ProductFrame frame_product(const std::vector<FiniteFrame>& fs) {
  if (fs.empty()) throw structural_error("product of no frames");
  ProductFrame p;
  std::size_t total = 1;
  for (auto& f : fs) {
    p.sizes.push_back(f.size());
    total *= f.size();
  }
  std::vector<std::vector<Elem>> tuples(total, std::vector<Elem>(fs.size()));
  for (std::size_t e = 0; e < total; ++e) {
    auto rest = e;
    for (std::size_t k = fs.size(); k-- > 0;) {
      tuples[e][k] = Elem(rest % fs[k].size());
      rest /= fs[k].size();
    }
  }
  FiniteFrame& out = p.frame;
  out.poset.names.resize(total);
  out.poset.le.assign(total, std::vector<char>(total, 0));
  out.meet_t.assign(total, std::vector<Elem>(total));
  out.join_t.assign(total, std::vector<Elem>(total));
  for (std::size_t e = 0; e < total; ++e) {
    std::string nm = "(";
    for (std::size_t k = 0; k < fs.size(); ++k) nm += (k ? "," : "") + fs[k].name(tuples[e][k]);
    out.poset.names[e] = nm + ")";
  }
  std::vector<Elem> tmp_m(fs.size()), tmp_j(fs.size());
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      bool le = true;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        le = le && fs[k].leq(tuples[a][k], tuples[b][k]);
        tmp_m[k] = fs[k].meet(tuples[a][k], tuples[b][k]);
        tmp_j[k] = fs[k].join(tuples[a][k], tuples[b][k]);
      }
      out.poset.le[a][b] = le;
      out.meet_t[a][b] = p.tuple_to_elem(tmp_m);
      out.join_t[a][b] = p.tuple_to_elem(tmp_j);
    }
  std::vector<Elem> tops, bots;
  for (auto& f : fs) {
    tops.push_back(f.top);
    bots.push_back(f.bottom);
  }
  out.top = p.tuple_to_elem(tops);
  out.bottom = p.tuple_to_elem(bots);
  p.proj.assign(fs.size(), ElemMap(total));
  for (std::size_t e = 0; e < total; ++e)
    for (std::size_t k = 0; k < fs.size(); ++k) p.proj[k][e] = tuples[e][k];
  return p;
}

inline ProductFrame frame_product(const FiniteFrame& a, const FiniteFrame& b) { return frame_product(std::vector{a, b}); }

struct JoinIrreducibles {
  FinitePoset poset;      // induced order
  std::vector<Elem> ids;  // element ids in the source frame
};

// Elements j != bottom such that j = a v b forces j = a or j = b.
inline JoinIrreducibles join_irreducibles(const FiniteFrame& f) {
  JoinIrreducibles out;
  auto n = Elem(f.size());
  for (Elem j = 0; j < n; ++j) {
    if (j == f.bottom) continue;
    bool irr = true;
    for (Elem a = 0; a < n && irr; ++a)
      for (Elem b = 0; b < n && irr; ++b)
        if (f.join(a, b) == j && a != j && b != j) irr = false;
    if (irr) out.ids.push_back(j);
  }
  std::vector<std::string> names;
  for (auto j : out.ids) names.push_back(f.name(j));
  out.poset = FinitePoset::discrete(std::move(names));
  for (std::size_t i = 0; i < out.ids.size(); ++i)
    for (std::size_t k = 0; k < out.ids.size(); ++k) out.poset.le[i][k] = f.leq(out.ids[i], out.ids[k]);
  return out;
}

struct DownsetFrame {
  FiniteFrame frame;
  std::vector<std::uint64_t> sets;  // bitmask over poset elements, one per frame element

  Elem elem_of(std::uint64_t mask) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), mask, [&](Elem e, std::uint64_t m) { return sets[e] < m; });
    if (it == order_.end() || sets[*it] != mask) return -1;
    return *it;
  }

  std::vector<Elem> order_;  // ids sorted by mask, for lookup
};

// Frame of down-closed subsets ordered by inclusion.
inline DownsetFrame downset_frame(const FinitePoset& p) {
  auto n = p.size();
  if (n > 20) throw structural_error("poset too large for downset enumeration");
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.le[b][a] && a != b) below[a] |= std::uint64_t(1) << b;
  auto ext = p.linear_extension();
  std::vector<std::uint64_t> sets;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t cur) -> void {
    if (i == ext.size()) {
      sets.push_back(cur);
      return;
    }
    self(self, i + 1, cur);
    auto x = ext[i];
    if ((below[x] & cur) == below[x]) self(self, i + 1, cur | (std::uint64_t(1) << x));
  };
  rec(rec, 0, 0);
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    auto pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  DownsetFrame d;
  d.sets = sets;
  auto m = sets.size();
  std::vector<std::string> names;
  for (auto s : sets) {
    std::string nm = "{";
    bool first = true;
    for (std::size_t x = 0; x < n; ++x)
      if (s >> x & 1) {
        nm += (first ? "" : ",") + p.names[x];
        first = false;
      }
    names.push_back(nm + "}");
  }
  d.order_.resize(m);
  std::iota(d.order_.begin(), d.order_.end(), 0);
  std::sort(d.order_.begin(), d.order_.end(), [&](Elem a, Elem b) { return sets[a] < sets[b]; });
  auto& f = d.frame;
  f.poset = FinitePoset::discrete(std::move(names));
  f.meet_t.assign(m, std::vector<Elem>(m));
  f.join_t.assign(m, std::vector<Elem>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      f.poset.le[a][b] = (sets[a] & ~sets[b]) == 0;
      f.meet_t[a][b] = d.elem_of(sets[a] & sets[b]);
      f.join_t[a][b] = d.elem_of(sets[a] | sets[b]);
    }
  f.bottom = 0;
  f.top = Elem(m - 1);
  return d;
}

// a |-> {j in J(A) : j <= a}; an isomorphism A -> downsets(J(A)) for finite distributive A.
inline ElemMap birkhoff_map(const FiniteFrame& a, const JoinIrreducibles& j, const DownsetFrame& d) {
  ElemMap m(a.size());
  for (Elem x = 0; x < Elem(a.size()); ++x) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < j.ids.size(); ++k)
      if (a.leq(j.ids[k], x)) mask |= std::uint64_t(1) << k;
    m[x] = d.elem_of(mask);
  }
  return m;
}

// All frame homomorphisms a -> l, in lexicographic order of their tables.
// A hom is fixed by its values on join-irreducibles, which must be monotone there.
inline std::vector<ElemMap> enumerate_frame_homs(const FiniteFrame& a, const FiniteFrame& l) {
  auto j = join_irreducibles(a);
  auto ext = j.poset.linear_extension();
  auto k = j.ids.size();
  std::vector<Elem> val(k, -1);
  std::vector<ElemMap> out;
  ElemMap f(a.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      for (Elem x = 0; x < Elem(a.size()); ++x) {
        Elem v = l.bottom;
        for (std::size_t t = 0; t < k; ++t)
          if (a.leq(j.ids[t], x)) v = l.join(v, val[t]);
        f[x] = v;
      }
      if (is_frame_hom(a, l, f)) out.push_back(f);
      return;
    }
    auto t = ext[i];
    for (Elem v = 0; v < Elem(l.size()); ++v) {
      bool mono = true;
      for (std::size_t s = 0; s < i && mono; ++s) {
        auto u = ext[s];
        if (j.poset.le[u][t] && !l.leq(val[u], v)) mono = false;
      }
      if (!mono) continue;
      val[t] = v;
      self(self, i + 1);
    }
    val[t] = -1;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<ElemMap> find_isomorphism(const FiniteFrame& a, const FiniteFrame& b) {
  if (a.size() != b.size()) return std::nullopt;
  for (auto& h : enumerate_frame_homs(a, b))
    if (bijective(h, b.size())) return h;
  return std::nullopt;
}

struct Coproduct {
  FiniteFrame frame;
  ElemMap inj_a, inj_b;
  JoinIrreducibles ja, jb;
  std::vector<std::pair<int, int>> pairs;  // poset element -> (index in ja, index in jb)
  DownsetFrame downsets;

  // Canonical decomposition: the join-irreducible pairs contained in element e.
  std::vector<std::pair<Elem, Elem>> tensor_terms(Elem e) const {
    std::vector<std::pair<Elem, Elem>> out;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (downsets.sets[e] >> k & 1) out.emplace_back(ja.ids[pairs[k].first], jb.ids[pairs[k].second]);
    return out;
  }

  // a (x) b = i_A(a) meet i_B(b).
  Elem tensor(Elem a, Elem b) const { return frame.meet(inj_a[a], inj_b[b]); }
};

// A (x) B as downsets of J(A) x J(B).
inline Coproduct frame_coproduct(const FiniteFrame& a, const FiniteFrame& b) {
  Coproduct c;
  c.ja = join_irreducibles(a);
  c.jb = join_irreducibles(b);
  std::vector<std::string> names;
  for (std::size_t p = 0; p < c.ja.ids.size(); ++p)
    for (std::size_t q = 0; q < c.jb.ids.size(); ++q) {
      c.pairs.emplace_back(int(p), int(q));
      names.push_back(a.name(c.ja.ids[p]) + "*" + b.name(c.jb.ids[q]));
    }
  auto pp = FinitePoset::discrete(std::move(names));
  for (std::size_t s = 0; s < c.pairs.size(); ++s)
    for (std::size_t t = 0; t < c.pairs.size(); ++t)
      pp.le[s][t] = c.ja.poset.le[c.pairs[s].first][c.pairs[t].first] && c.jb.poset.le[c.pairs[s].second][c.pairs[t].second];
  c.downsets = downset_frame(pp);
  c.frame = c.downsets.frame;
  c.inj_a.resize(a.size());
  c.inj_b.resize(b.size());
  for (Elem x = 0; x < Elem(a.size()); ++x) {
    std::uint64_t m = 0;
    for (std::size_t s = 0; s < c.pairs.size(); ++s)
      if (a.leq(c.ja.ids[c.pairs[s].first], x)) m |= std::uint64_t(1) << s;
    c.inj_a[x] = c.downsets.elem_of(m);
  }
  for (Elem y = 0; y < Elem(b.size()); ++y) {
    std::uint64_t m = 0;
    for (std::size_t s = 0; s < c.pairs.size(); ++s)
      if (b.leq(c.jb.ids[c.pairs[s].second], y)) m |= std::uint64_t(1) << s;
    c.inj_b[y] = c.downsets.elem_of(m);
  }
  return c;
}

// Frame with a [0,1]-valued relation R on its carrier.
struct GradedFrame {
  FiniteFrame frame;
  std::vector<TruthValue> r;  // row-major |A| x |A|

  std::size_t size() const { return frame.size(); }
  const TruthValue& R(Elem a, Elem b) const { return r[std::size_t(a) * size() + b]; }
  TruthValue& R(Elem a, Elem b) { return r[std::size_t(a) * size() + b]; }
};

// R(a,b) = 1 iff a <= b, 0 otherwise.
inline GradedFrame crisp_graded(const FiniteFrame& f) {
  GradedFrame g{f, std::vector<TruthValue>(f.size() * f.size())};
  for (Elem a = 0; a < Elem(f.size()); ++a)
    for (Elem b = 0; b < Elem(f.size()); ++b) g.R(a, b) = f.leq(a, b) ? TruthValue::one() : TruthValue::zero();
  return g;
}

// The nine graded-frame axioms and two of their consequences. Subset-quantified
// axioms are checked over all subsets when |A| <= exhaustive_limit, else over
// singletons, pairs, and the empty family.
inline Report check_graded_frame(const GradedFrame& g, std::size_t exhaustive_limit = 10) {
  Report rep;
  const auto& f = g.frame;
  auto n = Elem(f.size());
  if (g.r.size() != f.size() * f.size()) throw structural_error("R not total on carrier");
  auto one = TruthValue::one();
  auto nm = [&](Elem a) { return f.name(a); };
  for (Elem a = 0; a < n; ++a) {
    if (g.R(a, a) != one) rep.fail_once("axiom 1: R(a,a)=1", nm(a));
    if (g.R(a, f.top) != one) rep.fail_once("axiom 5: R(a,top)=1", nm(a));
    if (g.R(f.bottom, a) != one) rep.fail_once("R(bottom,a)=1", nm(a));
    for (Elem b = 0; b < n; ++b) {
      if (a != b && g.R(a, b) == one && g.R(b, a) == one) rep.fail_once("axiom 2: antisymmetry", cat(nm(a), ",", nm(b)));
      Elem m = f.meet(a, b), j = f.join(a, b);
      if (g.R(m, a) != one || g.R(m, b) != one) rep.fail_once("axiom 4: R(a^b,a)=1=R(a^b,b)", cat(nm(a), ",", nm(b)));
      auto lhs = g.R(a, b);
      if (lhs != meet(g.R(m, a), g.R(a, m)) || lhs != meet(g.R(j, b), g.R(b, j)))
        rep.fail_once("R(a,b) via meets and joins", cat(nm(a), ",", nm(b)));
      for (Elem c = 0; c < n; ++c) {
        if (meet(g.R(a, b), g.R(b, c)) > g.R(a, c)) rep.fail_once("axiom 3: transitivity", cat(nm(a), ",", nm(b), ",", nm(c)));
        if (meet(g.R(a, b), g.R(a, c)) != g.R(a, f.meet(b, c))) rep.fail_once("axiom 6: meet", cat(nm(a), ",", nm(b), ",", nm(c)));
      }
    }
  }
  // Subset axioms 7, 8, 9.
  auto check_family = [&](const std::vector<Elem>& s) {
    Elem js = f.join_all(s);
    for (auto a : s)
      if (g.R(a, js) != one) rep.fail_once("axiom 7: R(a, join S)=1 for a in S", nm(a));
    for (Elem b = 0; b < n; ++b) {
      TruthValue inf = one;
      for (auto a : s) inf = meet(inf, g.R(a, b));
      if (inf != g.R(js, b)) rep.fail_once("axiom 8: inf R(a,b) = R(join S, b)", cat(nm(b), " with |S|=", s.size()));
    }
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> ms;
      for (auto b : s) ms.push_back(f.meet(a, b));
      if (g.R(f.meet(a, js), f.join_all(ms)) != one) rep.fail_once("axiom 9: distributivity", cat(nm(a), " with |S|=", s.size()));
    }
  };
  if (f.size() <= exhaustive_limit) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Elem> s;
      for (Elem a = 0; a < n; ++a)
        if (mask >> a & 1) s.push_back(a);
      check_family(s);
    }
  } else {
    check_family({});
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b) check_family(a == b ? std::vector<Elem>{a} : std::vector<Elem>{a, b});
  }
  return rep;
}

// Underlying frame: a <= b iff R(a,b) = 1. Rejects graded frames failing the axioms.
inline FiniteFrame graded_to_frame(const GradedFrame& g) {
  if (auto rep = check_graded_frame(g); !rep.ok()) throw structural_error("not a graded frame: " + rep.failures.front().law);
  auto p = FinitePoset::discrete(g.frame.poset.names);
  for (Elem a = 0; a < Elem(g.size()); ++a)
    for (Elem b = 0; b < Elem(g.size()); ++b) p.le[a][b] = g.R(a, b).is_one();
  auto f = FiniteFrame::from_poset(std::move(p));
  if (auto rep = check_frame(f); !rep.ok()) throw structural_error("1-cut is not a frame: " + rep.failures.front().law);
  return f;
}

inline Report check_graded_frame_hom(const ElemMap& f, const GradedFrame& g, const GradedFrame& h) {
  Report rep;
  const auto& a = g.frame;
  const auto& b = h.frame;
  if (f.size() != a.size()) {
    rep.fail("total", "map size mismatch");
    return rep;
  }
  for (Elem x = 0; x < Elem(a.size()); ++x)
    for (Elem y = 0; y < Elem(a.size()); ++y) {
      if (f[a.meet(x, y)] != b.meet(f[x], f[y])) rep.fail_once("preserves binary meet", cat(a.name(x), ",", a.name(y)));
      if (f[a.join(x, y)] != b.join(f[x], f[y])) rep.fail_once("preserves finite join", cat(a.name(x), ",", a.name(y)));
      if (g.R(x, y) > h.R(f[x], f[y])) rep.fail_once("R(a1,a2) <= R'(f(a1),f(a2))", cat(a.name(x), ",", a.name(y)));
    }
  if (f[a.bottom] != b.bottom) rep.fail("preserves finite join", "empty join");
  return rep;
}

}  // namespace fuzzytop
