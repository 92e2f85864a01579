#pragma once

#include "report.hpp"
#include "truth.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzytop {

class carrier_mismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Membership function on the carrier {0, ..., n-1}. Carrier names live with the owning structure.
struct FuzzySubset {
  std::vector<TruthValue> m;

  FuzzySubset() = default;
  explicit FuzzySubset(std::vector<TruthValue> v) : m(std::move(v)) {}

  static FuzzySubset constant(std::size_t n, const TruthValue& r) { return FuzzySubset(std::vector<TruthValue>(n, r)); }
  static FuzzySubset empty(std::size_t n) { return constant(n, TruthValue::zero()); }
  static FuzzySubset full(std::size_t n) { return constant(n, TruthValue::one()); }

  std::size_t size() const { return m.size(); }
  const TruthValue& operator[](std::size_t x) const { return m[x]; }
  TruthValue& operator[](std::size_t x) { return m[x]; }

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;
  friend auto operator<=>(const FuzzySubset& a, const FuzzySubset& b) { return a.m <=> b.m; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + m[i].str();
    return s + ")";
  }
};

inline void require_same_carrier(const FuzzySubset& a, const FuzzySubset& b) {
  if (a.size() != b.size()) throw carrier_mismatch(cat("carrier sizes ", a.size(), " and ", b.size()));
}

// Pointwise sup; the empty union on an n-point carrier is the empty set.
inline FuzzySubset union_of(const std::vector<FuzzySubset>& ts, std::size_t n) {
  auto r = FuzzySubset::empty(n);
  for (auto& t : ts) {
    require_same_carrier(r, t);
    for (std::size_t x = 0; x < n; ++x) r[x] = join(r[x], t[x]);
  }
  return r;
}

inline FuzzySubset set_union(const FuzzySubset& a, const FuzzySubset& b) {
  require_same_carrier(a, b);
  FuzzySubset r = a;
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = join(a[x], b[x]);
  return r;
}

inline FuzzySubset intersection(const FuzzySubset& a, const FuzzySubset& b) {
  require_same_carrier(a, b);
  FuzzySubset r = a;
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = meet(a[x], b[x]);
  return r;
}

// inf over points of a(x) -> b(x).
inline TruthValue graded_inclusion(const FuzzySubset& a, const FuzzySubset& b) {
  require_same_carrier(a, b);
  auto r = TruthValue::one();
  for (std::size_t x = 0; x < a.size(); ++x) r = meet(r, godel_arrow(a[x], b[x]));
  return r;
}

inline bool pointwise_leq(const FuzzySubset& a, const FuzzySubset& b) { return graded_inclusion(a, b).is_one(); }

inline std::vector<int> alpha_cut(const FuzzySubset& a, const TruthValue& alpha) {
  std::vector<int> out;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] >= alpha) out.push_back(int(x));
  return out;
}

inline std::vector<int> strict_alpha_cut(const FuzzySubset& a, const TruthValue& alpha) {
  std::vector<int> out;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] > alpha) out.push_back(int(x));
  return out;
}

inline FuzzySubset fuzzy_alpha_cut(const FuzzySubset& a, const TruthValue& alpha) {
  FuzzySubset r = a;
  for (auto& v : r.m)
    if (v < alpha) v = TruthValue::zero();
  return r;
}

inline std::vector<int> support(const FuzzySubset& a) { return strict_alpha_cut(a, TruthValue::zero()); }

// b after f, for f: X -> Y given as a table of target indices.
inline FuzzySubset preimage(const std::vector<int>& f, const FuzzySubset& b) {
  FuzzySubset r = FuzzySubset::empty(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] < 0 || std::size_t(f[x]) >= b.size()) throw carrier_mismatch("map leaves the carrier");
    r[x] = b[f[x]];
  }
  return r;
}

// Sup over each fiber; 0 on points with an empty fiber.
inline FuzzySubset image(const std::vector<int>& f, const FuzzySubset& a, std::size_t target_size) {
  if (f.size() != a.size()) throw carrier_mismatch("map and set on different carriers");
  auto r = FuzzySubset::empty(target_size);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] < 0 || std::size_t(f[x]) >= target_size) throw carrier_mismatch("map leaves the carrier");
    r[f[x]] = join(r[f[x]], a[x]);
  }
  return r;
}

// Fuzzy set whose values are drawn from a declared chain.
struct LFuzzySet {
  FuzzySubset set;
  ValueChain chain;

  std::size_t size() const { return set.size(); }
  const TruthValue& operator[](std::size_t x) const { return set[x]; }

  Report check() const {
    Report r;
    for (std::size_t x = 0; x < set.size(); ++x)
      if (!chain.contains(set[x])) r.fail_once("membership values lie in the chain", cat("point ", x, " has ", set[x]));
    return r;
  }
};

// Fuzzy relation between (X, a) and (Y, b), row-major |X| x |Y|.
struct ProperFunction {
  FuzzySubset source, target;
  std::vector<TruthValue> f;

  std::size_t rows() const { return source.size(); }
  std::size_t cols() const { return target.size(); }
  const TruthValue& operator()(std::size_t x, std::size_t y) const { return f[x * cols() + y]; }
  TruthValue& operator()(std::size_t x, std::size_t y) { return f[x * cols() + y]; }

  // The unique y in the target support with f(x,y) = source(x), or -1.
  int image_of(std::size_t x) const {
    for (std::size_t y = 0; y < cols(); ++y)
      if (target[y] > TruthValue::zero() && (*this)(x, y) == source[x]) return int(y);
    return -1;
  }
};

// Properness: each supported x has exactly one supported y with f(x,y) = source(x)
// and 0 at every other supported y. With `bounded`, also f(x,y) <= source(x) ^ target(y),
// which is what makes composition and identities behave.
inline Report check_proper(const ProperFunction& p, bool bounded = true) {
  Report r;
  if (p.f.size() != p.rows() * p.cols()) throw carrier_mismatch("relation not total");
  auto zero = TruthValue::zero();
  for (std::size_t x = 0; x < p.rows(); ++x) {
    if (p.source[x] > zero) {
      int hits = 0;
      bool others_zero = true;
      for (std::size_t y = 0; y < p.cols(); ++y) {
        if (!(p.target[y] > zero)) continue;
        if (p(x, y) == p.source[x]) ++hits;
        else if (p(x, y) != zero) others_zero = false;
      }
      if (hits != 1) r.fail_once("unique full-weight target", cat("point ", x, " has ", hits));
      if (!others_zero) r.fail_once("zero at the other supported targets", cat("point ", x));
    }
    if (bounded)
      for (std::size_t y = 0; y < p.cols(); ++y)
        if (p(x, y) > meet(p.source[x], p.target[y])) r.fail_once("bounded by memberships", cat("(", x, ",", y, ")"));
  }
  return r;
}

inline ProperFunction identity_proper(const FuzzySubset& a) {
  ProperFunction p{a, a, std::vector<TruthValue>(a.size() * a.size())};
  for (std::size_t x = 0; x < a.size(); ++x) p(x, x) = a[x];
  return p;
}

// (g.f)(x,z) = sup over supported y of min(f(x,y), g(y,z)).
inline ProperFunction compose_proper(const ProperFunction& g, const ProperFunction& f) {
  if (f.target != g.source) throw carrier_mismatch("proper functions do not chain");
  ProperFunction h{f.source, g.target, std::vector<TruthValue>(f.rows() * g.cols())};
  for (std::size_t x = 0; x < f.rows(); ++x)
    for (std::size_t z = 0; z < g.cols(); ++z) {
      TruthValue v;
      for (std::size_t y = 0; y < f.cols(); ++y)
        if (f.target[y] > TruthValue::zero()) v = join(v, meet(f(x, y), g(y, z)));
      h(x, z) = v;
    }
  return h;
}

// f^-1(b1)(x) = sup over supported y of min(f(x,y), b1(y)) on the source support, 0 elsewhere.
inline FuzzySubset proper_preimage(const ProperFunction& p, const FuzzySubset& b1) {
  if (b1.size() != p.cols()) throw carrier_mismatch("set not on the target carrier");
  if (auto rep = check_proper(p, false); !rep.ok()) throw std::invalid_argument("not a proper function: " + rep.failures.front().law);
  auto r = FuzzySubset::empty(p.rows());
  for (std::size_t x = 0; x < p.rows(); ++x) {
    if (!(p.source[x] > TruthValue::zero())) continue;
    for (std::size_t y = 0; y < p.cols(); ++y)
      if (p.target[y] > TruthValue::zero()) r[x] = join(r[x], meet(p(x, y), b1[y]));
  }
  return r;
}

}  // namespace fuzzytop
