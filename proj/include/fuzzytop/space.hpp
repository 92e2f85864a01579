#pragma once

#include "fuzzyset.hpp"
#include "lattice.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzytop {

class flavor_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class budget_exceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Flavor { plain, stratified, n_valued, graded };

inline const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::plain: return "plain";
    case Flavor::stratified: return "stratified";
    case Flavor::n_valued: return "n-valued";
    case Flavor::graded: return "graded";
  }
  return "?";
}

inline Flavor parse_flavor(const std::string& s) {
  if (s == "plain") return Flavor::plain;
  if (s == "stratified") return Flavor::stratified;
  if (s == "n-valued") return Flavor::n_valued;
  if (s == "graded") return Flavor::graded;
  throw flavor_error("unknown flavor '" + s + "'");
}

struct FuzzyTopSpace {
  std::vector<std::string> points;
  std::vector<FuzzySubset> opens;  // kept sorted and duplicate-free by normalize()
  Flavor flavor = Flavor::plain;
  std::optional<ValueChain> chain;  // required for stratified and n-valued

  std::size_t size() const { return points.size(); }

  FuzzyTopSpace& normalize() {
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    return *this;
  }

  int index_of(const FuzzySubset& t) const {
    auto it = std::lower_bound(opens.begin(), opens.end(), t);
    return (it != opens.end() && *it == t) ? int(it - opens.begin()) : -1;
  }
  bool contains(const FuzzySubset& t) const { return index_of(t) >= 0; }

  friend bool operator==(const FuzzyTopSpace& a, const FuzzyTopSpace& b) {
    return a.points == b.points && a.opens == b.opens;
  }
};

inline std::vector<std::string> default_point_names(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Graded inclusion on the opens, as a graded frame ordered pointwise.
GradedFrame space_graded_frame(const FuzzyTopSpace& s);

inline Report check_space(const FuzzyTopSpace& s) {
  Report r;
  auto n = s.size();
  for (auto& t : s.opens)
    if (t.size() != n) throw carrier_mismatch("open set not on the carrier");
  std::set<FuzzySubset> tau(s.opens.begin(), s.opens.end());
  if (!tau.count(FuzzySubset::empty(n))) r.fail("empty set is open", "missing");
  if (!tau.count(FuzzySubset::full(n))) r.fail("whole carrier is open", "missing");
  for (auto& a : tau)
    for (auto& b : tau) {
      if (!tau.count(intersection(a, b))) r.fail_once("closed under binary intersection", a.str() + " " + b.str());
      if (!tau.count(set_union(a, b))) r.fail_once("closed under union", a.str() + " " + b.str());
    }
  if (s.flavor == Flavor::stratified || s.flavor == Flavor::n_valued) {
    if (!s.chain) throw flavor_error(cat(flavor_name(s.flavor), " space needs a chain"));
    for (auto& t : tau)
      for (std::size_t x = 0; x < n; ++x)
        if (!s.chain->contains(t[x])) r.fail_once("values lie in the chain", t.str());
    if (s.flavor == Flavor::stratified)
      for (auto& c : *s.chain)
        if (!tau.count(FuzzySubset::constant(n, c))) r.fail_once("constants are open", c.str());
  }
  if (s.flavor == Flavor::graded && r.ok()) r.merge(check_graded_frame(space_graded_frame(s)), "graded inclusion");
  return r;
}

// Least topology containing the subbasis: closure under binary intersection and union, plus the bounds.
inline FuzzyTopSpace generate_topology(std::vector<std::string> points, const std::vector<FuzzySubset>& subbasis,
                                       std::size_t budget = 100000) {
  auto n = points.size();
  std::set<FuzzySubset> tau{FuzzySubset::empty(n), FuzzySubset::full(n)};
  for (auto& t : subbasis) {
    if (t.size() != n) throw carrier_mismatch("subbasis element not on the carrier");
    tau.insert(t);
  }
  std::vector<FuzzySubset> frontier(tau.begin(), tau.end());
  while (!frontier.empty()) {
    std::vector<FuzzySubset> fresh;
    std::vector<FuzzySubset> all(tau.begin(), tau.end());
    for (auto& a : frontier)
      for (auto& b : all)
        for (auto c : {intersection(a, b), set_union(a, b)})
          if (tau.insert(c).second) fresh.push_back(c);
    if (tau.size() > budget) throw budget_exceeded("topology generation exceeded budget");
    frontier = std::move(fresh);
  }
  FuzzyTopSpace s{std::move(points), {tau.begin(), tau.end()}, Flavor::plain, std::nullopt};
  return s;
}

// Frame of opens under pointwise order. Element i is opens[i].
inline FiniteFrame space_frame(const FuzzyTopSpace& s) {
  auto m = s.opens.size();
  FiniteFrame f;
  std::vector<std::string> names;
  for (auto& t : s.opens) names.push_back(t.str());
  f.poset = FinitePoset::discrete(std::move(names));
  f.meet_t.assign(m, std::vector<Elem>(m));
  f.join_t.assign(m, std::vector<Elem>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      f.poset.le[a][b] = pointwise_leq(s.opens[a], s.opens[b]);
      f.meet_t[a][b] = s.index_of(intersection(s.opens[a], s.opens[b]));
      f.join_t[a][b] = s.index_of(set_union(s.opens[a], s.opens[b]));
      if (f.meet_t[a][b] < 0 || f.join_t[a][b] < 0) throw structural_error("opens not closed under intersection and union");
    }
  // Bounds are the union and intersection of all opens, so the top may be a proper fuzzy set.
  if (m == 0) throw structural_error("no opens");
  auto lo = s.opens.front(), hi = s.opens.front();
  for (auto& t : s.opens) {
    lo = intersection(lo, t);
    hi = set_union(hi, t);
  }
  f.bottom = s.index_of(lo);
  f.top = s.index_of(hi);
  if (f.bottom < 0 || f.top < 0) throw structural_error("bounds missing from the opens");
  return f;
}

inline GradedFrame space_graded_frame(const FuzzyTopSpace& s) {
  GradedFrame g{space_frame(s), {}};
  auto m = s.opens.size();
  g.r.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) g.R(Elem(a), Elem(b)) = graded_inclusion(s.opens[a], s.opens[b]);
  return g;
}

// Preimage of every open of s2 under f is open in s1.
inline Report check_fuzzy_continuous(const std::vector<int>& f, const FuzzyTopSpace& s1, const FuzzyTopSpace& s2) {
  Report r;
  if (f.size() != s1.size()) throw carrier_mismatch("map not total on the source");
  for (auto& b : s2.opens)
    if (!s1.contains(preimage(f, b))) r.fail_once("preimages of opens are open", b.str());
  return r;
}

inline const ValueChain& require_chain(const FuzzyTopSpace& s) {
  if (!s.chain) throw flavor_error("predicate needs an n-valued space with a declared chain");
  for (auto& t : s.opens)
    for (auto& v : t.m)
      if (!s.chain->contains(v)) throw flavor_error("open set takes a value outside the chain: " + t.str());
  return *s.chain;
}

inline bool kolmogorov(const FuzzyTopSpace& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (std::none_of(s.opens.begin(), s.opens.end(), [&](auto& t) { return t[a] != t[b]; })) return false;
  return true;
}

// Strict reading: sup of the meet of the two opens lies below r.
inline bool hausdorff(const FuzzyTopSpace& s) {
  const auto& ch = require_chain(s);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b) continue;
      bool sep = false;
      for (auto& r : ch) {
        for (auto& t1 : s.opens) {
          if (t1[a] < r) continue;
          for (auto& t2 : s.opens)
            if (t2[b] >= r) {
              TruthValue top;
              for (std::size_t x = 0; x < s.size(); ++x) top = join(top, meet(t1[x], t2[x]));
              if (top < r) {
                sep = true;
                break;
              }
            }
          if (sep) break;
        }
        if (sep) break;
      }
      if (!sep) return false;
    }
  return true;
}

// A subfamily of `cover` whose join is the constant 1, found greedily; nullopt when the
// family does not cover. Every cover of a finite topology is finite, so a cover always has one.
inline std::optional<std::vector<int>> finite_subcover(const FuzzyTopSpace& s, const std::vector<int>& cover) {
  auto n = s.size();
  auto cur = FuzzySubset::empty(n);
  std::vector<int> chosen;
  auto full = FuzzySubset::full(n);
  while (cur != full) {
    int best = -1;
    std::size_t gain = 0;
    for (auto i : cover) {
      auto next = set_union(cur, s.opens[i]);
      std::size_t g = 0;
      for (std::size_t x = 0; x < n; ++x) g += next[x] != cur[x];
      if (g > gain) {
        gain = g;
        best = i;
      }
    }
    if (best < 0) return std::nullopt;
    chosen.push_back(best);
    cur = set_union(cur, s.opens[best]);
  }
  return chosen;
}

inline bool compact(const FuzzyTopSpace& s) {
  std::vector<int> all(s.opens.size());
  std::iota(all.begin(), all.end(), 0);
  require_chain(s);
  return finite_subcover(s, all).has_value();
}

// Maps t: X -> chain such that B.t is open for every B: chain -> chain.
inline std::vector<FuzzySubset> cont(const FuzzyTopSpace& s, std::size_t budget = 1000000) {
  const auto& ch = require_chain(s);
  auto n = s.size(), k = ch.size();
  double cand = 1;
  for (std::size_t i = 0; i < n; ++i) cand *= double(k);
  if (cand > double(budget)) throw budget_exceeded("cont enumeration out of budget");
  std::set<FuzzySubset> tau(s.opens.begin(), s.opens.end());
  std::vector<FuzzySubset> out;
  std::vector<int> t(n, 0);
  for (;;) {
    // Distinct levels of t, then every assignment of chain values to the levels.
    std::vector<int> levels(t.begin(), t.end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<std::size_t> b(levels.size(), 0);
    bool ok = true;
    for (;;) {
      FuzzySubset img = FuzzySubset::empty(n);
      for (std::size_t x = 0; x < n; ++x) img[x] = ch[b[std::lower_bound(levels.begin(), levels.end(), t[x]) - levels.begin()]];
      if (!tau.count(img)) {
        ok = false;
        break;
      }
      std::size_t i = 0;
      while (i < b.size() && ++b[i] == k) b[i++] = 0;
      if (i == b.size()) break;
    }
    if (ok) {
      FuzzySubset f = FuzzySubset::empty(n);
      for (std::size_t x = 0; x < n; ++x) f[x] = ch[t[x]];
      out.push_back(f);
    }
    std::size_t i = 0;
    while (i < n && ++t[i] == int(k)) t[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// cont(s) is a basis of s: contained in the opens, closed under finite meets, and every open
// is the join of the members below it.
inline bool zero_dimensional(const FuzzyTopSpace& s) {
  auto c = cont(s);
  std::set<FuzzySubset> cs(c.begin(), c.end());
  for (auto& t : c)
    if (!s.contains(t)) return false;
  if (!cs.count(FuzzySubset::full(s.size()))) return false;
  for (auto& a : c)
    for (auto& b : c)
      if (!cs.count(intersection(a, b))) return false;
  for (auto& u : s.opens) {
    auto j = FuzzySubset::empty(s.size());
    for (auto& t : c)
      if (pointwise_leq(t, u)) j = set_union(j, t);
    if (j != u) return false;
  }
  return true;
}

inline bool is_boolean_space(const FuzzyTopSpace& s) { return zero_dimensional(s) && compact(s) && kolmogorov(s); }

}  // namespace fuzzytop
