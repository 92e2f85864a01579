#pragma once

#include "lattice.hpp"
#include "report.hpp"
#include "space.hpp"
#include "truth.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzytop {

class closure_error : public std::logic_error {
  using std::logic_error::logic_error;
};

class precondition_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Values of the n-element chain are handled as indices k, standing for k/(n-1).
namespace chain_ops {
inline int plus(int n, int a, int b) { return std::min(n - 1, a + b); }
inline int times(int n, int a, int b) { return std::max(0, a + b - (n - 1)); }
inline int neg(int n, int a) { return n - 1 - a; }
inline TruthValue value(int n, int k) { return TruthValue(k, n - 1); }
}  // namespace chain_ops

// Finite algebra (A, oplus, *, complement) with the n-chain embedded as constants.
// When `vec` is filled the algebra is a subalgebra of the n-chain to the power X and
// elements are sorted lexicographically by their value vectors.
struct LnAlgebra {
  int n = 2;
  std::vector<std::string> names;
  std::vector<int> plus_t, times_t, neg_t;
  std::vector<int> constants;  // constants[k] is the element standing for k/(n-1)
  std::size_t xsize = 0;
  std::vector<std::vector<int>> vec;

  std::size_t size() const { return names.size(); }
  bool has_representation() const { return !vec.empty(); }

  int plus(int a, int b) const { return plus_t[std::size_t(a) * size() + b]; }
  int times(int a, int b) const { return times_t[std::size_t(a) * size() + b]; }
  int neg(int a) const { return neg_t[a]; }
  int zero() const { return constants.front(); }
  int one() const { return constants.back(); }

  int join(int a, int b) const { return plus(times(a, neg(b)), b); }
  int meet(int a, int b) const { return times(plus(a, neg(b)), b); }
  int arrow(int a, int b) const { return plus(neg(a), b); }
  int equiv(int a, int b) const { return meet(arrow(a, b), arrow(b, a)); }
  bool leq(int a, int b) const { return join(a, b) == b; }

  int multiple(int m, int a) const {
    int r = zero();
    for (int i = 0; i < m; ++i) r = plus(r, a);
    return r;
  }
  int power(int m, int a) const {
    int r = one();
    for (int i = 0; i < m; ++i) r = times(r, a);
    return r;
  }

  int find(const std::vector<int>& v) const {
    auto it = std::lower_bound(vec.begin(), vec.end(), v);
    return (it != vec.end() && *it == v) ? int(it - vec.begin()) : -1;
  }

  int find_name(const std::string& s) const {
    auto it = std::find(names.begin(), names.end(), s);
    return it == names.end() ? -1 : int(it - names.begin());
  }

  // The lattice reduct as a frame.
  FiniteFrame frame() const {
    auto m = size();
    FiniteFrame f;
    f.poset.names = names;
    f.poset.le.assign(m, std::vector<char>(m, 0));
    f.meet_t.assign(m, std::vector<Elem>(m));
    f.join_t.assign(m, std::vector<Elem>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        f.poset.le[a][b] = leq(int(a), int(b));
        f.meet_t[a][b] = meet(int(a), int(b));
        f.join_t[a][b] = join(int(a), int(b));
      }
    f.top = one();
    f.bottom = zero();
    return f;
  }
};

inline std::string function_name(int n, const std::vector<int>& v) {
  if (v.size() == 1) return chain_ops::value(n, v[0]).str();
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + chain_ops::value(n, v[i]).str();
  return s + ")";
}

// Closes `seed` and the constants under oplus, * and complement, pointwise.
inline std::vector<std::vector<int>> close_functions(int n, std::size_t xsize, const std::vector<std::vector<int>>& seed) {
  if (n < 2) throw invalid_chain(cat("chain size must be at least 2, got ", n));
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> list;
  auto add = [&](std::vector<int> v) {
    if (seen.insert(v).second) list.push_back(std::move(v));
  };
  for (int k = 0; k < n; ++k) add(std::vector<int>(xsize, k));
  for (auto& g : seed) {
    if (g.size() != xsize) throw carrier_mismatch(cat("generator has ", g.size(), " values, expected ", xsize));
    for (int k : g)
      if (k < 0 || k >= n) throw invalid_value(cat("generator value ", k, " outside the ", n, "-chain"));
    add(g);
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::vector<int> c(xsize);
    for (std::size_t x = 0; x < xsize; ++x) c[x] = chain_ops::neg(n, list[i][x]);
    add(c);
    for (std::size_t j = 0; j <= i; ++j) {
      std::vector<int> p(xsize), t(xsize);
      for (std::size_t x = 0; x < xsize; ++x) {
        p[x] = chain_ops::plus(n, list[i][x], list[j][x]);
        t[x] = chain_ops::times(n, list[i][x], list[j][x]);
      }
      add(std::move(p));
      add(std::move(t));
    }
  }
  return {seen.begin(), seen.end()};
}

// Tables for an already closed, sorted set of value vectors.
inline LnAlgebra algebra_of_functions(int n, std::size_t xsize, std::vector<std::vector<int>> elems) {
  LnAlgebra a;
  a.n = n;
  a.xsize = xsize;
  a.vec = std::move(elems);
  std::sort(a.vec.begin(), a.vec.end());
  auto m = a.vec.size();
  auto lookup = [&](const std::vector<int>& v) {
    int i = a.find(v);
    if (i < 0) throw closure_error("set of functions not closed under the operations: missing " + function_name(n, v));
    return i;
  };
  a.plus_t.resize(m * m);
  a.times_t.resize(m * m);
  a.neg_t.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    a.names.push_back(function_name(n, a.vec[i]));
    std::vector<int> c(xsize);
    for (std::size_t x = 0; x < xsize; ++x) c[x] = chain_ops::neg(n, a.vec[i][x]);
    a.neg_t[i] = lookup(c);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<int> p(xsize), t(xsize);
      for (std::size_t x = 0; x < xsize; ++x) {
        p[x] = chain_ops::plus(n, a.vec[i][x], a.vec[j][x]);
        t[x] = chain_ops::times(n, a.vec[i][x], a.vec[j][x]);
      }
      a.plus_t[i * m + j] = lookup(p);
      a.times_t[i * m + j] = lookup(t);
    }
  }
  for (int k = 0; k < n; ++k) a.constants.push_back(lookup(std::vector<int>(xsize, k)));
  return a;
}

// Subalgebra of the n-chain to the power X generated by `generators` and the constants.
inline LnAlgebra function_algebra(int n, std::size_t xsize, const std::vector<std::vector<int>>& generators) {
  if (xsize == 0) throw precondition_error("function algebra needs a nonempty point set");
  return algebra_of_functions(n, xsize, close_functions(n, xsize, generators));
}

// The chain itself; element k is k/(n-1).
inline LnAlgebra chain_algebra(int n) { return function_algebra(n, 1, {}); }

inline std::vector<std::vector<int>> all_functions(int n, std::size_t xsize) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(xsize, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = xsize;
    while (i > 0 && ++v[i - 1] == n) v[--i] = 0;
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline LnAlgebra power_algebra(int n, std::size_t xsize) { return algebra_of_functions(n, xsize, all_functions(n, xsize)); }

// Abstract tables, accepted for axiom checking.
inline LnAlgebra algebra_from_tables(int n, std::vector<std::string> names, std::vector<int> plus, std::vector<int> times,
                                     std::vector<int> neg, std::vector<int> constants) {
  auto m = names.size();
  if (plus.size() != m * m || times.size() != m * m || neg.size() != m)
    throw structural_error("operation tables are not total");
  if (constants.size() != std::size_t(n)) throw structural_error(cat("expected ", n, " constants, got ", constants.size()));
  auto in_range = [&](const std::vector<int>& t) {
    return std::all_of(t.begin(), t.end(), [&](int v) { return v >= 0 && std::size_t(v) < m; });
  };
  if (!in_range(plus) || !in_range(times) || !in_range(neg) || !in_range(constants))
    throw structural_error("table entry outside the carrier");
  LnAlgebra a;
  a.n = n;
  a.names = std::move(names);
  a.plus_t = std::move(plus);
  a.times_t = std::move(times);
  a.neg_t = std::move(neg);
  a.constants = std::move(constants);
  return a;
}

// Exhaustive check of the MV axioms, the n-valued axioms and the embedding of the chain.
inline Report check_lnc(const LnAlgebra& A) {
  Report r;
  int m = int(A.size());
  int n = A.n;
  auto nm = [&](int a) { return A.names[a]; };
  int z = A.zero(), o = A.one();

  for (int x = 0; x < m; ++x) {
    if (A.plus(x, z) != x) r.fail_once("0 is the unit of oplus", nm(x));
    if (A.plus(x, o) != o) r.fail_once("x oplus 1 = 1", nm(x));
    if (A.neg(A.neg(x)) != x) r.fail_once("double complement", nm(x));
    for (int y = 0; y < m; ++y) {
      if (A.plus(x, y) != A.plus(y, x)) r.fail_once("oplus commutative", cat(nm(x), ",", nm(y)));
      if (A.plus(A.neg(A.plus(A.neg(x), y)), y) != A.plus(A.neg(A.plus(A.neg(y), x)), x))
        r.fail_once("(x' oplus y)' oplus y symmetric", cat("x=", nm(x), " y=", nm(y)));
      if (A.times(x, y) != A.neg(A.plus(A.neg(x), A.neg(y)))) r.fail_once("x*y = (x' oplus y')'", cat(nm(x), ",", nm(y)));
      for (int w = 0; w < m; ++w)
        if (A.plus(A.plus(x, y), w) != A.plus(x, A.plus(y, w))) r.fail_once("oplus associative", cat(nm(x), ",", nm(y), ",", nm(w)));
    }
  }
  if (A.neg(z) != o) r.fail("0' = 1", nm(A.neg(z)));

  for (int x = 0; x < m; ++x) {
    int mx = A.multiple(n - 1, x), px = A.power(n - 1, x);
    if (A.plus(mx, x) != mx) r.fail_once("(n-1)x oplus x = (n-1)x", nm(x));
    if (A.times(px, x) != px) r.fail_once("x^(n-1) * x = x^(n-1)", nm(x));
    if (n >= 4)
      for (int j = 2; j < n - 1; ++j) {
        if ((n - 1) % j == 0) continue;
        int lhs = A.power(n - 1, A.times(A.multiple(j, x), A.plus(A.neg(x), A.neg(A.multiple(j - 1, x)))));
        if (lhs != z) r.fail_once(cat("[(jx)*(x' oplus ((j-1)x)')]^(n-1) = 0, j=", j), nm(x));
        int rhs = A.multiple(n - 1, A.plus(A.power(j, x), A.times(A.neg(x), A.neg(A.power(j - 1, x)))));
        if (rhs != o) r.fail_once(cat("(n-1)[x^j oplus (x' * (x^(j-1))')] = 1, j=", j), nm(x));
      }
  }

  std::set<int> distinct(A.constants.begin(), A.constants.end());
  if (int(distinct.size()) != n) r.fail("constants injective", cat(distinct.size(), " distinct of ", n));
  for (int k = 0; k < n; ++k) {
    if (A.neg(A.constants[k]) != A.constants[chain_ops::neg(n, k)]) r.fail_once("constants preserve complement", cat(k));
    for (int l = 0; l < n; ++l) {
      if (A.plus(A.constants[k], A.constants[l]) != A.constants[chain_ops::plus(n, k, l)])
        r.fail_once("constants preserve oplus", cat(k, ",", l));
      if (A.times(A.constants[k], A.constants[l]) != A.constants[chain_ops::times(n, k, l)])
        r.fail_once("constants preserve *", cat(k, ",", l));
    }
  }

  if (A.has_representation())
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        std::vector<int> mx(A.xsize), mn(A.xsize);
        for (std::size_t p = 0; p < A.xsize; ++p) {
          mx[p] = std::max(A.vec[x][p], A.vec[y][p]);
          mn[p] = std::min(A.vec[x][p], A.vec[y][p]);
        }
        if (A.join(x, y) != A.find(mx)) r.fail_once("(a*b') oplus b is the pointwise max", cat(nm(x), ",", nm(y)));
        if (A.meet(x, y) != A.find(mn)) r.fail_once("(a oplus b') * b is the pointwise min", cat(nm(x), ",", nm(y)));
      }
  return r;
}

inline void require_representation(const LnAlgebra& A) {
  if (!A.has_representation()) throw precondition_error("operation needs an algebra of functions into the chain");
}

// T_r(a): 1 where a takes the value r, 0 elsewhere. r is a chain index.
inline int t_term(const LnAlgebra& A, int r, int a) {
  require_representation(A);
  if (r < 0 || r >= A.n) throw invalid_value(cat("chain index ", r, " out of range"));
  std::vector<int> v(A.xsize);
  for (std::size_t x = 0; x < A.xsize; ++x) v[x] = A.vec[a][x] == r ? A.n - 1 : 0;
  int t = A.find(v);
  if (t < 0) throw closure_error("T_r(" + A.names[a] + ") not in the algebra");
  if (A.times(t, t) != t) throw closure_error("T_r(" + A.names[a] + ") not idempotent");
  return t;
}

// S_r(a): r where a takes the value 1, 0 elsewhere.
inline int s_term(const LnAlgebra& A, int r, int a) {
  require_representation(A);
  if (r < 0 || r >= A.n) throw invalid_value(cat("chain index ", r, " out of range"));
  std::vector<int> v(A.xsize);
  for (std::size_t x = 0; x < A.xsize; ++x) v[x] = A.vec[a][x] == A.n - 1 ? r : 0;
  int s = A.find(v);
  if (s < 0) throw closure_error("S_r(" + A.names[a] + ") not in the algebra");
  return s;
}

// ---- filters ----

struct NFilter {
  std::vector<int> elems;  // sorted

  bool contains(int a) const { return std::binary_search(elems.begin(), elems.end(), a); }
  std::size_t size() const { return elems.size(); }
  friend bool operator==(const NFilter&, const NFilter&) = default;
  friend auto operator<=>(const NFilter& a, const NFilter& b) { return a.elems <=> b.elems; }
};

inline std::string filter_str(const LnAlgebra& A, const NFilter& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.elems.size(); ++i) s += (i ? ", " : "") + A.names[f.elems[i]];
  return s + "}";
}

inline bool is_nfilter(const LnAlgebra& A, const NFilter& f) {
  if (f.elems.empty()) return false;
  for (int a : f.elems) {
    for (int b = 0; b < int(A.size()); ++b)
      if (A.leq(a, b) && !f.contains(b)) return false;
    for (int b : f.elems)
      if (!f.contains(A.times(a, b))) return false;
  }
  return true;
}

inline NFilter principal_filter(const LnAlgebra& A, int e) {
  NFilter f;
  for (int b = 0; b < int(A.size()); ++b)
    if (A.leq(e, b)) f.elems.push_back(b);
  return f;
}

inline bool is_proper(const LnAlgebra& A, const NFilter& f) { return f.size() < A.size(); }

inline bool is_prime(const LnAlgebra& A, const NFilter& f) {
  if (!is_proper(A, f)) return false;
  for (int a = 0; a < int(A.size()); ++a)
    for (int b = 0; b < int(A.size()); ++b)
      if (f.contains(A.join(a, b)) && !f.contains(a) && !f.contains(b)) return false;
  return true;
}

// A finite filter contains the product p of its members, so it is the up-set of p, and p is
// idempotent. Enumerating up-sets of idempotents is therefore exhaustive.
inline std::vector<NFilter> enumerate_nfilters(const LnAlgebra& A) {
  std::vector<NFilter> out;
  for (int e = 0; e < int(A.size()); ++e)
    if (A.times(e, e) == e) out.push_back(principal_filter(A, e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<NFilter> prime_filters(const LnAlgebra& A) {
  std::vector<NFilter> out;
  for (auto& f : enumerate_nfilters(A))
    if (is_prime(A, f)) out.push_back(f);
  return out;
}

inline bool subset_of(const NFilter& f, const NFilter& g) {
  return std::includes(g.elems.begin(), g.elems.end(), f.elems.begin(), f.elems.end());
}

// A prime filter containing f and avoiding b.
inline NFilter extend_filter(const LnAlgebra& A, const NFilter& f, int b) {
  if (!is_nfilter(A, f)) throw precondition_error(filter_str(A, f) + " is not a filter");
  if (f.contains(b)) throw precondition_error(A.names[b] + " already lies in " + filter_str(A, f));
  for (auto& p : prime_filters(A))
    if (subset_of(f, p) && !p.contains(b)) return p;
  throw closure_error("no prime filter extends " + filter_str(A, f) + " avoiding " + A.names[b]);
}

// Products with repetitions: the least one is the product of the idempotents x^(n-1).
inline int fip_product(const LnAlgebra& A, const std::vector<int>& xs) {
  int p = A.one();
  for (int x : xs) p = A.times(p, A.power(A.n - 1, x));
  return p;
}

inline bool has_fip(const LnAlgebra& A, const std::vector<int>& xs) { return fip_product(A, xs) != A.zero(); }

// Products of distinct members only.
inline bool has_fip_distinct(const LnAlgebra& A, std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() > 20) throw budget_exceeded("too many elements for subset products");
  for (std::uint32_t mask = 1; mask < (1u << xs.size()); ++mask) {
    int p = A.one();
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask >> i & 1) p = A.times(p, xs[i]);
    if (p == A.zero()) return false;
  }
  return true;
}

inline NFilter prime_from_fip(const LnAlgebra& A, const std::vector<int>& xs) {
  if (!has_fip(A, xs)) throw precondition_error("set lacks the finite intersection property");
  return extend_filter(A, principal_filter(A, fip_product(A, xs)), A.zero());
}

// ---- homomorphisms ----

using LnHom = std::vector<int>;  // element of the source -> element of the target

inline Report check_lnc_hom(const LnAlgebra& A, const LnAlgebra& B, const LnHom& h) {
  Report r;
  if (A.n != B.n) {
    r.fail("same chain", cat(A.n, " vs ", B.n));
    return r;
  }
  if (h.size() != A.size()) {
    r.fail("map total", cat(h.size(), " entries for ", A.size(), " elements"));
    return r;
  }
  for (int v : h)
    if (v < 0 || std::size_t(v) >= B.size()) {
      r.fail("map total", "value out of range");
      return r;
    }
  for (int k = 0; k < A.n; ++k)
    if (h[A.constants[k]] != B.constants[k]) r.fail_once("preserves constants", cat(k, "/", A.n - 1));
  for (int a = 0; a < int(A.size()); ++a) {
    if (h[A.neg(a)] != B.neg(h[a])) r.fail_once("preserves complement", A.names[a]);
    for (int b = 0; b < int(A.size()); ++b) {
      if (h[A.plus(a, b)] != B.plus(h[a], h[b])) r.fail_once("preserves oplus", cat(A.names[a], ",", A.names[b]));
      if (h[A.times(a, b)] != B.times(h[a], h[b])) r.fail_once("preserves *", cat(A.names[a], ",", A.names[b]));
    }
  }
  return r;
}

// All homomorphisms into the chain (values are chain indices), by backtracking with
// propagation through the operation tables. Sorted.
inline std::vector<LnHom> enumerate_homs(const LnAlgebra& A) {
  int m = int(A.size()), n = A.n;
  std::vector<LnHom> out;
  std::vector<int> v(m, -1);

  // Assign a := k and everything it forces; false on conflict.
  auto propagate = [&](std::vector<int>& w, int a, int k) {
    std::vector<std::pair<int, int>> queue{{a, k}};
    while (!queue.empty()) {
      auto [x, val] = queue.back();
      queue.pop_back();
      if (w[x] >= 0) {
        if (w[x] != val) return false;
        continue;
      }
      w[x] = val;
      queue.push_back({A.neg(x), chain_ops::neg(n, val)});
      for (int y = 0; y < m; ++y)
        if (w[y] >= 0) {
          queue.push_back({A.plus(x, y), chain_ops::plus(n, val, w[y])});
          queue.push_back({A.times(x, y), chain_ops::times(n, val, w[y])});
        }
    }
    return true;
  };

  for (int k = 0; k < n; ++k)
    if (!propagate(v, A.constants[k], k)) return out;

  auto rec = [&](auto& self, std::vector<int>& w) -> void {
    auto it = std::find(w.begin(), w.end(), -1);
    if (it == w.end()) {
      out.push_back(w);
      return;
    }
    int a = int(it - w.begin());
    for (int k = 0; k < n; ++k) {
      auto w2 = w;
      if (propagate(w2, a, k)) self(self, w2);
    }
  };
  rec(rec, v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All homomorphisms A -> B for B a subalgebra of a chain power: each coordinate of such a
// map is a homomorphism into the chain, so combine those and keep the tuples landing in B.
inline std::vector<LnHom> enumerate_lnc_homs(const LnAlgebra& A, const LnAlgebra& B) {
  std::vector<LnHom> out;
  if (A.n != B.n) return out;
  require_representation(B);
  auto coords = enumerate_homs(A);
  auto k = B.xsize;
  if (coords.empty()) return out;
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    LnHom h(A.size());
    bool ok = true;
    std::vector<int> v(k);
    for (int a = 0; a < int(A.size()) && ok; ++a) {
      for (std::size_t i = 0; i < k; ++i) v[i] = coords[pick[i]][a];
      h[a] = B.find(v);
      ok = h[a] >= 0;
    }
    if (ok) out.push_back(h);
    std::size_t i = 0;
    while (i < k && ++pick[i] == coords.size()) pick[i++] = 0;
    if (i == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// v_P(a) = r iff T_r(a) lies in P.
inline LnHom hom_from_prime(const LnAlgebra& A, const NFilter& p) {
  LnHom v(A.size(), -1);
  for (int a = 0; a < int(A.size()); ++a)
    for (int r = 0; r < A.n; ++r)
      if (p.contains(t_term(A, r, a))) {
        if (v[a] >= 0) throw precondition_error(filter_str(A, p) + " gives " + A.names[a] + " two values");
        v[a] = r;
      }
  if (std::count(v.begin(), v.end(), -1)) throw precondition_error(filter_str(A, p) + " is not prime");
  return v;
}

inline NFilter prime_from_hom(const LnAlgebra& A, const LnHom& v) {
  NFilter f;
  for (int a = 0; a < int(A.size()); ++a)
    if (v[a] == A.n - 1) f.elems.push_back(a);
  return f;
}

// Prime filters and homomorphisms into the chain correspond one to one through the two maps.
inline Report bijection_check(const LnAlgebra& A) {
  Report r;
  auto chain = chain_algebra(A.n);
  auto primes = prime_filters(A);
  auto homs = enumerate_homs(A);
  std::set<LnHom> hs(homs.begin(), homs.end());
  std::set<LnHom> images;
  for (auto& p : primes) {
    auto v = hom_from_prime(A, p);
    if (!check_lnc_hom(A, chain, v).ok()) r.fail_once("v_P is a homomorphism", filter_str(A, p));
    if (!hs.count(v)) r.fail_once("v_P among the enumerated homomorphisms", filter_str(A, p));
    if (prime_from_hom(A, v) != p) r.fail_once("v_P^-1(1) = P", filter_str(A, p));
    images.insert(v);
  }
  if (images.size() != primes.size()) r.fail("P -> v_P injective", cat(images.size(), " images of ", primes.size()));
  for (auto& v : homs) {
    auto p = prime_from_hom(A, v);
    if (!is_nfilter(A, p) || !is_prime(A, p)) {
      r.fail_once("v^-1(1) is a prime filter", filter_str(A, p));
      continue;
    }
    if (hom_from_prime(A, p) != v) r.fail_once("v_(v^-1(1)) = v", filter_str(A, p));
  }
  if (primes.size() != homs.size()) r.fail("as many primes as homomorphisms", cat(primes.size(), " vs ", homs.size()));
  return r;
}

// ---- properties of the characteristic terms ----

inline Report check_term_laws(const LnAlgebra& A) {
  Report r;
  int m = int(A.size()), n = A.n;
  auto homs = enumerate_homs(A);
  auto nm = [&](int a) { return A.names[a]; };

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool ia = A.times(a, a) == a, ib = A.times(b, b) == b;
      if (ia && ib) {
        if (A.times(a, b) != A.meet(a, b)) r.fail_once("idempotents: a*b = a meet b", cat(nm(a), ",", nm(b)));
        if (A.plus(a, b) != A.join(a, b)) r.fail_once("idempotents: a oplus b = a join b", cat(nm(a), ",", nm(b)));
      }
      if (t_term(A, n - 1, A.join(a, b)) != A.join(t_term(A, n - 1, a), t_term(A, n - 1, b)))
        r.fail_once("T_1 preserves joins", cat(nm(a), ",", nm(b)));
      if (t_term(A, n - 1, A.meet(a, b)) != A.meet(t_term(A, n - 1, a), t_term(A, n - 1, b)))
        r.fail_once("T_1 preserves meets", cat(nm(a), ",", nm(b)));
      int all = A.one();
      for (int k = 0; k < n; ++k) all = A.meet(all, A.equiv(t_term(A, k, a), t_term(A, k, b)));
      if (!A.leq(all, A.equiv(a, b))) r.fail_once("meet of T_r(a) <-> T_r(b) below a <-> b", cat(nm(a), ",", nm(b)));
    }

  for (auto& v : homs)
    for (int a = 0; a < m; ++a)
      for (int k = 0; k < n; ++k) {
        int t = t_term(A, k, a), s = s_term(A, k, a);
        if ((v[t] == n - 1) != (v[a] == k)) r.fail_once("v(T_r(a)) = 1 iff v(a) = r", cat(nm(a), " r=", k));
        if ((v[t] == 0) != (v[a] != k)) r.fail_once("v(T_r(a)) = 0 iff v(a) != r", cat(nm(a), " r=", k));
        if (k > 0 && (v[s] == k) != (v[a] == n - 1)) r.fail_once("v(S_r(a)) = r iff v(a) = 1", cat(nm(a), " r=", k));
        if (k > 0 && (v[s] == 0) != (v[a] != n - 1)) r.fail_once("v(S_r(a)) = 0 iff v(a) != 1", cat(nm(a), " r=", k));
      }
  return r;
}

// ---- subalgebras ----

// Every subalgebra of the n-chain to the power X, by closing one more element at a time.
inline std::vector<LnAlgebra> enumerate_subalgebras(int n, std::size_t xsize, std::size_t budget = 100000) {
  auto everything = all_functions(n, xsize);
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<std::vector<std::vector<int>>> queue{close_functions(n, xsize, {})};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto cur = queue[i];
    for (auto& e : everything) {
      if (std::binary_search(cur.begin(), cur.end(), e)) continue;
      auto seed = cur;
      seed.push_back(e);
      auto next = close_functions(n, xsize, seed);
      if (seen.insert(next).second) {
        if (seen.size() > budget) throw budget_exceeded("too many subalgebras");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<LnAlgebra> out;
  for (auto& s : seen) out.push_back(algebra_of_functions(n, xsize, s));
  std::sort(out.begin(), out.end(), [](const LnAlgebra& a, const LnAlgebra& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.vec < b.vec;
  });
  return out;
}

// ---- n-valued Boolean systems ----

struct FBSysN {
  std::vector<std::string> points;
  LnAlgebra alg;
  std::vector<int> sat;  // chain indices, row-major |X| x |A|

  std::size_t npoints() const { return points.size(); }
  std::size_t nelems() const { return alg.size(); }
  int gr(std::size_t x, int a) const { return sat[x * nelems() + a]; }
  int& gr(std::size_t x, int a) { return sat[x * nelems() + a]; }
  TruthValue grade(std::size_t x, int a) const { return chain_ops::value(alg.n, gr(x, a)); }
  std::vector<int> row(std::size_t x) const {
    return {sat.begin() + std::ptrdiff_t(x * nelems()), sat.begin() + std::ptrdiff_t((x + 1) * nelems())};
  }
};

inline Report check_fbsys(const FBSysN& d) {
  Report r;
  const auto& A = d.alg;
  int n = A.n;
  if (d.sat.size() != d.npoints() * d.nelems()) throw structural_error("satisfaction matrix not total");
  for (int v : d.sat)
    if (v < 0 || v >= n) throw structural_error(cat("grade index ", v, " outside the ", n, "-chain"));
  r.merge(check_lnc(A), "algebra");
  if (d.points.empty()) r.fail("points nonempty", "no points");
  for (std::size_t x = 0; x < d.npoints(); ++x) {
    auto& px = d.points[x];
    for (int a = 0; a < int(A.size()); ++a) {
      if (d.gr(x, A.neg(a)) != chain_ops::neg(n, d.gr(x, a))) r.fail_once("gr(x|=a') = 1 - gr(x|=a)", cat(px, ",", A.names[a]));
      for (int b = 0; b < int(A.size()); ++b) {
        auto w = cat(px, ",", A.names[a], ",", A.names[b]);
        if (d.gr(x, A.times(a, b)) != chain_ops::times(n, d.gr(x, a), d.gr(x, b)))
          r.fail_once("gr(x|=a*b) = max(0, gr(x|=a)+gr(x|=b)-1)", w);
        if (d.gr(x, A.meet(a, b)) != std::min(d.gr(x, a), d.gr(x, b))) r.fail_once("gr(x|=a meet b) = min", w);
        if (d.gr(x, A.join(a, b)) != std::max(d.gr(x, a), d.gr(x, b))) r.fail_once("gr(x|=a join b) = max", w);
      }
    }
    for (int k = 0; k < n; ++k)
      if (d.gr(x, A.constants[k]) != k) r.fail_once("gr(x|=r) = r", cat(px, ",", chain_ops::value(n, k)));
  }
  for (std::size_t x = 0; x < d.npoints(); ++x)
    for (std::size_t y = x + 1; y < d.npoints(); ++y)
      if (d.row(x) == d.row(y)) r.fail("distinct points separated by some element", cat(d.points[x], ",", d.points[y]));
  return r;
}

inline FuzzySubset fbs_extent(const FBSysN& d, int a) {
  auto t = FuzzySubset::empty(d.npoints());
  for (std::size_t x = 0; x < d.npoints(); ++x) t[x] = d.grade(x, a);
  return t;
}

inline std::vector<int> extent_vector(const FBSysN& d, int a) {
  std::vector<int> v(d.npoints());
  for (std::size_t x = 0; x < d.npoints(); ++x) v[x] = d.gr(x, a);
  return v;
}

inline FuzzyTopSpace ext_B(const FBSysN& d) {
  FuzzyTopSpace s{d.points, {}, Flavor::n_valued, make_chain(d.alg.n)};
  for (int a = 0; a < int(d.nelems()); ++a) s.opens.push_back(fbs_extent(d, a));
  s.normalize();
  return s;
}

inline std::vector<int> to_indices(const FuzzySubset& t, const ValueChain& ch) {
  std::vector<int> v(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    v[x] = ch.index_of(t[x]);
    if (v[x] < 0) throw invalid_value("value " + t[x].str() + " outside the chain");
  }
  return v;
}

inline int uniform_chain_size(const FuzzyTopSpace& s) {
  const auto& ch = require_chain(s);
  if (!ch.uniform()) throw flavor_error("space is not valued in a uniform chain");
  return int(ch.size());
}

// Cont(X, tau) with pointwise operations.
inline LnAlgebra cont_algebra(const FuzzyTopSpace& s) {
  int n = uniform_chain_size(s);
  if (s.size() == 0) throw precondition_error("space has no points");
  // B.t for a constant B is a constant, so Cont is empty unless every constant is open.
  for (auto& c : require_chain(s))
    if (!s.contains(FuzzySubset::constant(s.size(), c))) throw precondition_error("constant " + c.str() + " is not open, so Cont is empty");
  std::vector<std::vector<int>> fs;
  for (auto& t : cont(s)) fs.push_back(to_indices(t, require_chain(s)));
  return algebra_of_functions(n, s.size(), fs);
}

inline FBSysN j_B(const FuzzyTopSpace& s) {
  FBSysN d{s.points, cont_algebra(s), {}};
  d.sat.resize(d.npoints() * d.nelems());
  for (std::size_t x = 0; x < d.npoints(); ++x)
    for (int t = 0; t < int(d.nelems()); ++t) d.gr(x, t) = d.alg.vec[t][x];
  return d;
}

inline const LnAlgebra& lag(const FBSysN& d) { return d.alg; }

inline std::string hom_name(const LnAlgebra& A, const LnHom& v) {
  // Homomorphisms are named by where they send the elements, in element order.
  std::string s = "<";
  for (std::size_t a = 0; a < v.size(); ++a) s += (a ? "," : "") + chain_ops::value(A.n, v[a]).str();
  return s + ">";
}

inline FBSysN s_B(const LnAlgebra& A) {
  auto homs = enumerate_homs(A);
  FBSysN d;
  d.alg = A;
  for (std::size_t i = 0; i < homs.size(); ++i) d.points.push_back("v" + std::to_string(i));
  for (auto& v : homs) d.sat.insert(d.sat.end(), v.begin(), v.end());
  return d;
}

// (f1, f2): f1 on points forward, f2 an algebra homomorphism backward.
struct FBMap {
  std::vector<int> f1;
  LnHom f2;
  friend bool operator==(const FBMap&, const FBMap&) = default;
};

inline FBMap identity_fb_map(const FBSysN& d) {
  FBMap m{std::vector<int>(d.npoints()), LnHom(d.nelems())};
  std::iota(m.f1.begin(), m.f1.end(), 0);
  std::iota(m.f2.begin(), m.f2.end(), 0);
  return m;
}

// second after first
inline FBMap compose(const FBMap& second, const FBMap& first) {
  FBMap m;
  for (int y : first.f1) m.f1.push_back(second.f1[y]);
  for (int c : second.f2) m.f2.push_back(first.f2[c]);
  return m;
}

inline Report check_fb_map(const FBMap& m, const FBSysN& d, const FBSysN& e) {
  Report r;
  if (m.f1.size() != d.npoints()) {
    r.fail("point map total", cat(m.f1.size(), " entries"));
    return r;
  }
  for (int y : m.f1)
    if (y < 0 || std::size_t(y) >= e.npoints()) {
      r.fail("point map total", "value out of range");
      return r;
    }
  r.merge(check_lnc_hom(e.alg, d.alg, m.f2), "algebra hom");
  if (!r.ok()) return r;
  for (std::size_t x = 0; x < d.npoints(); ++x)
    for (int b = 0; b < int(e.nelems()); ++b)
      if (d.gr(x, m.f2[b]) != e.gr(m.f1[x], b))
        r.fail_once("gr(x|=f2(b)) = gr(f1(x)|=b)", cat(d.points[x], ",", e.alg.names[b]));
  return r;
}

inline std::optional<std::vector<int>> invert(const std::vector<int>& f, std::size_t target) {
  if (f.size() != target) return std::nullopt;
  std::vector<int> g(target, -1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || std::size_t(f[i]) >= target || g[f[i]] >= 0) return std::nullopt;
    g[f[i]] = int(i);
  }
  return g;
}

// m is a continuous map with a two-sided continuous inverse.
inline Report check_homeo(const FBMap& m, const FBSysN& d, const FBSysN& e) {
  Report r = check_fb_map(m, d, e);
  if (!r.ok()) return r;
  auto g1 = invert(m.f1, e.npoints());
  auto g2 = invert(m.f2, d.nelems());
  if (!g1) r.fail("point map bijective", cat(d.npoints(), " points to ", e.npoints()));
  if (!g2) r.fail("algebra map bijective", cat(e.nelems(), " elements to ", d.nelems()));
  if (!r.ok()) return r;
  FBMap g{*g1, *g2};
  r.merge(check_fb_map(g, e, d), "inverse");
  if (compose(g, m).f1 != identity_fb_map(d).f1 || compose(g, m).f2 != identity_fb_map(d).f2) r.fail("g.f = id", "");
  if (compose(m, g).f1 != identity_fb_map(e).f1 || compose(m, g).f2 != identity_fb_map(e).f2) r.fail("f.g = id", "");
  return r;
}

struct FBComponent {
  FBSysN other;  // the system at the far end of the map
  FBMap map;
};

// (id, ext_B*): J_B(Ext_B(D)) -> D. Elements of A whose extent is not continuous map to -1.
inline FBComponent fbs_counit(const FBSysN& d) {
  FBComponent c{j_B(ext_B(d)), {}};
  c.map.f1.resize(d.npoints());
  std::iota(c.map.f1.begin(), c.map.f1.end(), 0);
  for (int a = 0; a < int(d.nelems()); ++a) c.map.f2.push_back(c.other.alg.find(extent_vector(d, a)));
  return c;
}

// (p*, id_A): D -> S_B(Lag(D)), p*(x) = the row of x as a homomorphism.
inline FBComponent fbs_unit(const FBSysN& d) {
  FBComponent c{s_B(d.alg), identity_fb_map(d)};
  auto homs = enumerate_homs(d.alg);
  for (std::size_t x = 0; x < d.npoints(); ++x) {
    auto it = std::lower_bound(homs.begin(), homs.end(), d.row(x));
    c.map.f1[x] = (it != homs.end() && *it == d.row(x)) ? int(it - homs.begin()) : -1;
  }
  return c;
}

// Ext_B(J_B(S)) on the same points; the unit on the space side is the identity exactly
// when this equals S.
inline FuzzyTopSpace ext_B_j_B(const FuzzyTopSpace& s) { return ext_B(j_B(s)); }

// Image of a homomorphism of algebras under S_B: precompose on points.
inline FBMap s_B_map(const LnAlgebra& A, const LnAlgebra& B, const LnHom& f) {
  // f: A -> B gives S_B(B) -> S_B(A)
  auto ha = enumerate_homs(A), hb = enumerate_homs(B);
  FBMap m{{}, f};
  for (auto& v : hb) {
    LnHom w(A.size());
    for (int a = 0; a < int(A.size()); ++a) w[a] = v[f[a]];
    auto it = std::lower_bound(ha.begin(), ha.end(), w);
    m.f1.push_back((it != ha.end() && *it == w) ? int(it - ha.begin()) : -1);
  }
  return m;
}

}  // namespace fuzzytop
