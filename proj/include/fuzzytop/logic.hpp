#pragma once

#include "fuzzyset.hpp"
#include "lattice.hpp"
#include "report.hpp"
#include "space.hpp"
#include "system.hpp"
#include "truth.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzytop {

class signature_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class parse_error : public std::invalid_argument {
 public:
  parse_error(std::size_t line, std::size_t col, const std::string& msg)
      : std::invalid_argument(cat(line, ":", col, ": ", msg)), line_(line), col_(col), msg_(msg) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }
  const std::string& message() const { return msg_; }

 private:
  std::size_t line_, col_;
  std::string msg_;
};

// ---- syntax ----

struct Term {
  enum class Kind { var, constant, fun };
  Kind kind = Kind::var;
  std::string name;
  std::vector<Term> args;

  static Term v(std::string n) { return {Kind::var, std::move(n), {}}; }
  static Term c(std::string n) { return {Kind::constant, std::move(n), {}}; }
  static Term f(std::string n, std::vector<Term> a) { return {Kind::fun, std::move(n), std::move(a)}; }

  friend bool operator==(const Term&, const Term&) = default;
};

struct Formula {
  enum class Kind { top, bot, pred, eq, conj, disj, exists };
  Kind kind = Kind::top;
  std::string name;           // predicate symbol, or the bound variable of exists
  std::vector<Term> terms;    // predicate arguments, or the two sides of an equality
  std::vector<Formula> subs;  // conj: 2, disj: any number, exists: 1

  friend bool operator==(const Formula&, const Formula&) = default;
};

inline Formula f_top() { return {Formula::Kind::top, {}, {}, {}}; }
inline Formula f_bot() { return {Formula::Kind::bot, {}, {}, {}}; }
inline Formula f_pred(std::string p, std::vector<Term> args) { return {Formula::Kind::pred, std::move(p), std::move(args), {}}; }
inline Formula f_eq(Term a, Term b) { return {Formula::Kind::eq, {}, {std::move(a), std::move(b)}, {}}; }
inline Formula f_and(Formula a, Formula b) { return {Formula::Kind::conj, {}, {}, {std::move(a), std::move(b)}}; }
inline Formula f_or(std::vector<Formula> fs) { return {Formula::Kind::disj, {}, {}, std::move(fs)}; }
inline Formula f_or(Formula a, Formula b) { return f_or(std::vector<Formula>{std::move(a), std::move(b)}); }
inline Formula f_exists(std::string x, Formula body) { return {Formula::Kind::exists, std::move(x), {}, {std::move(body)}}; }

// (x1,...,xn) = (y1,...,yn) as a left-nested conjunction of equalities; true when n = 0.
inline Formula tuple_eq(const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
  if (xs.size() != ys.size()) throw signature_error("tuples of different lengths");
  if (xs.empty()) return f_top();
  Formula r = f_eq(Term::v(xs[0]), Term::v(ys[0]));
  for (std::size_t i = 1; i < xs.size(); ++i) r = f_and(r, f_eq(Term::v(xs[i]), Term::v(ys[i])));
  return r;
}

struct Sequent {
  Formula lhs, rhs;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

struct GradedSequent {
  Sequent seq;
  TruthValue grade = TruthValue::one();
};

// ---- printing ----

inline std::string to_string(const Term& t) {
  if (t.kind != Term::Kind::fun) return t.name;
  std::string s = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) s += (i ? "," : "") + to_string(t.args[i]);
  return s + ")";
}

inline std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::top: return "true";
    case K::bot: return "false";
    case K::pred: {
      if (f.terms.empty()) return f.name;
      std::string s = f.name + "(";
      for (std::size_t i = 0; i < f.terms.size(); ++i) s += (i ? "," : "") + to_string(f.terms[i]);
      return s + ")";
    }
    case K::eq: return to_string(f.terms[0]) + " = " + to_string(f.terms[1]);
    case K::conj: return "(" + to_string(f.subs[0]) + " & " + to_string(f.subs[1]) + ")";
    case K::disj: {
      if (f.subs.size() < 2) return f.subs.empty() ? "(|)" : "(| " + to_string(f.subs[0]) + ")";
      std::string s = "(";
      for (std::size_t i = 0; i < f.subs.size(); ++i) s += (i ? " | " : "") + to_string(f.subs[i]);
      return s + ")";
    }
    case K::exists: return "(exists " + f.name + ". " + to_string(f.subs[0]) + ")";
  }
  return {};
}

inline std::string to_string(const Sequent& s) { return to_string(s.lhs) + " |- " + to_string(s.rhs); }

inline std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (auto& g : f.subs) d = std::max(d, depth(g));
  return f.subs.empty() ? 0 : d + 1;
}

// ---- variables and substitution ----

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::var) out.insert(t.name);
  for (auto& a : t.args) collect_vars(a, out);
}

inline std::set<std::string> vars_of(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  for (auto& t : f.terms) collect_vars(t, out);
  for (auto& g : f.subs)
    for (auto& v : free_vars(g)) out.insert(v);
  if (f.kind == Formula::Kind::exists) out.erase(f.name);
  return out;
}

inline bool is_free_in(const std::string& x, const Formula& f) { return free_vars(f).count(x) > 0; }

inline Term subst_term(const Term& t, const Term& by, const std::string& x) {
  if (t.kind == Term::Kind::var) return t.name == x ? by : t;
  Term r = t;
  for (auto& a : r.args) a = subst_term(a, by, x);
  return r;
}

// Simultaneous replacement of free occurrences; no renaming of bound variables.
inline Term subst_term(const Term& t, const std::map<std::string, Term>& m) {
  if (t.kind == Term::Kind::var) {
    auto it = m.find(t.name);
    return it == m.end() ? t : it->second;
  }
  Term r = t;
  for (auto& a : r.args) a = subst_term(a, m);
  return r;
}

inline Formula subst_formula(const Formula& f, const std::map<std::string, Term>& m) {
  if (m.empty()) return f;
  Formula r = f;
  if (f.kind == Formula::Kind::exists) {
    auto inner = m;
    inner.erase(f.name);
    r.subs[0] = subst_formula(f.subs[0], inner);
    return r;
  }
  for (auto& t : r.terms) t = subst_term(t, m);
  for (auto& g : r.subs) g = subst_formula(g, m);
  return r;
}

inline Formula subst_formula(const Formula& f, const Term& t, const std::string& x) {
  return subst_formula(f, std::map<std::string, Term>{{x, t}});
}

// No free occurrence of x in f lies under a quantifier binding a variable of t.
inline bool free_for(const Term& t, const std::string& x, const Formula& f) {
  if (f.kind == Formula::Kind::exists) {
    if (f.name == x) return true;
    if (vars_of(t).count(f.name) && is_free_in(x, f.subs[0])) return false;
    return free_for(t, x, f.subs[0]);
  }
  for (auto& g : f.subs)
    if (!free_for(t, x, g)) return false;
  return true;
}

// ---- interpretations ----

struct Interpretation {
  struct Function {
    int arity = 0;
    std::vector<int> table;  // indexed by argument tuples, first argument most significant
  };
  struct Predicate {
    int arity = 0;
    std::vector<TruthValue> table;
  };

  std::vector<std::string> domain;
  std::map<std::string, int> constants;
  std::map<std::string, Function> functions;
  std::map<std::string, Predicate> predicates;

  std::size_t tuples(int arity) const {
    std::size_t k = 1;
    for (int i = 0; i < arity; ++i) k *= domain.size();
    return k;
  }
  std::size_t tuple_index(const std::vector<int>& args) const {
    std::size_t i = 0;
    for (int a : args) i = i * domain.size() + std::size_t(a);
    return i;
  }
  std::vector<int> tuple_at(std::size_t i, int arity) const {
    std::vector<int> t(arity);
    for (int k = arity - 1; k >= 0; --k) {
      t[k] = int(i % domain.size());
      i /= domain.size();
    }
    return t;
  }
  int element(const std::string& d) const {
    auto it = std::find(domain.begin(), domain.end(), d);
    if (it == domain.end()) throw signature_error("'" + d + "' is not a domain element");
    return int(it - domain.begin());
  }
  std::set<std::string> constant_names() const {
    std::set<std::string> s;
    for (auto& [k, v] : constants) s.insert(k);
    return s;
  }
};

inline Report check_interpretation(const Interpretation& I) {
  Report r;
  auto n = int(I.domain.size());
  if (n == 0) r.fail("domain nonempty", "empty domain");
  for (auto& [c, d] : I.constants)
    if (d < 0 || d >= n) r.fail("constants denote elements", c);
  for (auto& [f, fn] : I.functions) {
    if (fn.table.size() != I.tuples(fn.arity)) r.fail("function tables total", f);
    for (int d : fn.table)
      if (d < 0 || d >= n) r.fail_once("function values in the domain", f);
  }
  for (auto& [p, pr] : I.predicates)
    if (pr.table.size() != I.tuples(pr.arity)) r.fail("predicate tables total", p);
  return r;
}

inline void check_signature(const Term& t, const Interpretation& I) {
  switch (t.kind) {
    case Term::Kind::var: return;
    case Term::Kind::constant:
      if (!I.constants.count(t.name)) throw signature_error("unknown constant '" + t.name + "'");
      return;
    case Term::Kind::fun: {
      auto it = I.functions.find(t.name);
      if (it == I.functions.end()) throw signature_error("unknown function '" + t.name + "'");
      if (it->second.arity != int(t.args.size()))
        throw signature_error(cat("'", t.name, "' takes ", it->second.arity, " arguments, given ", t.args.size()));
      for (auto& a : t.args) check_signature(a, I);
    }
  }
}

inline void check_signature(const Formula& f, const Interpretation& I) {
  if (f.kind == Formula::Kind::pred) {
    auto it = I.predicates.find(f.name);
    if (it == I.predicates.end()) throw signature_error("unknown predicate '" + f.name + "'");
    if (it->second.arity != int(f.terms.size()))
      throw signature_error(cat("'", f.name, "' takes ", it->second.arity, " arguments, given ", f.terms.size()));
  }
  if (f.kind == Formula::Kind::conj && f.subs.size() != 2) throw signature_error("conjunction must be binary");
  if (f.kind == Formula::Kind::exists && f.subs.size() != 1) throw signature_error("quantifier needs one body");
  for (auto& t : f.terms) check_signature(t, I);
  for (auto& g : f.subs) check_signature(g, I);
}

// Finite assignment of domain elements to variables, with an optional fallback element.
struct Environment {
  std::map<std::string, int> vals;
  std::optional<int> fallback;

  int at(const std::string& x) const {
    auto it = vals.find(x);
    if (it != vals.end()) return it->second;
    if (fallback) return *fallback;
    throw signature_error("unbound variable '" + x + "'");
  }
  Environment with(const std::string& x, int d) const {
    Environment e = *this;
    e.vals[x] = d;
    return e;
  }
  std::string str(const Interpretation& I) const {
    if (vals.empty()) return "s";
    std::string s;
    for (auto& [x, d] : vals) s += (s.empty() ? "" : ",") + x + "=" + I.domain[d];
    return s;
  }
};

inline int eval_term(const Environment& s, const Term& t, const Interpretation& I) {
  switch (t.kind) {
    case Term::Kind::var: return s.at(t.name);
    case Term::Kind::constant: {
      auto it = I.constants.find(t.name);
      if (it == I.constants.end()) throw signature_error("unknown constant '" + t.name + "'");
      return it->second;
    }
    case Term::Kind::fun: {
      auto it = I.functions.find(t.name);
      if (it == I.functions.end() || it->second.arity != int(t.args.size()))
        throw signature_error("bad application of '" + t.name + "'");
      std::vector<int> args;
      for (auto& a : t.args) args.push_back(eval_term(s, a, I));
      return it->second.table[I.tuple_index(args)];
    }
  }
  return 0;
}

inline TruthValue grade_sat(const Environment& s, const Formula& f, const Interpretation& I) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::top: return TruthValue::one();
    case K::bot: return TruthValue::zero();
    case K::pred: {
      auto it = I.predicates.find(f.name);
      if (it == I.predicates.end() || it->second.arity != int(f.terms.size()))
        throw signature_error("bad application of '" + f.name + "'");
      std::vector<int> args;
      for (auto& a : f.terms) args.push_back(eval_term(s, a, I));
      return it->second.table[I.tuple_index(args)];
    }
    case K::eq: return eval_term(s, f.terms[0], I) == eval_term(s, f.terms[1], I) ? TruthValue::one() : TruthValue::zero();
    case K::conj: return meet(grade_sat(s, f.subs[0], I), grade_sat(s, f.subs[1], I));
    case K::disj: {
      TruthValue v;
      for (auto& g : f.subs) v = join(v, grade_sat(s, g, I));
      return v;
    }
    case K::exists: {
      TruthValue v;
      for (int d = 0; d < int(I.domain.size()); ++d) v = join(v, grade_sat(s.with(f.name, d), f.subs[0], I));
      return v;
    }
  }
  return {};
}

// Every assignment of the given variables.
inline std::vector<Environment> environments(const std::set<std::string>& vars, const Interpretation& I) {
  if (I.domain.empty()) throw signature_error("empty domain");
  std::vector<std::string> vs(vars.begin(), vars.end());
  std::vector<Environment> out;
  std::vector<int> idx(vs.size(), 0);
  for (;;) {
    Environment e;
    e.fallback = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) e.vals[vs[i]] = idx[i];
    out.push_back(std::move(e));
    std::size_t i = vs.size();
    while (i > 0 && ++idx[i - 1] == int(I.domain.size())) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline std::set<std::string> free_vars(const Sequent& q) {
  auto v = free_vars(q.lhs);
  for (auto& x : free_vars(q.rhs)) v.insert(x);
  return v;
}

inline TruthValue sequent_grade(const Formula& phi, const Formula& psi, const Interpretation& I) {
  auto r = TruthValue::one();
  for (auto& s : environments(free_vars(Sequent{phi, psi}), I)) r = meet(r, godel_arrow(grade_sat(s, phi, I), grade_sat(s, psi, I)));
  return r;
}

inline TruthValue sequent_grade(const Sequent& q, const Interpretation& I) { return sequent_grade(q.lhs, q.rhs, I); }

inline bool is_valid(const Formula& phi, const Formula& psi, const Interpretation& I) {
  for (auto& s : environments(free_vars(Sequent{phi, psi}), I))
    if (grade_sat(s, phi, I) > grade_sat(s, psi, I)) return false;
  return true;
}

// ---- rules ----

// Formulas and variables to instantiate every rule schema once.
struct RuleSample {
  Formula phi, psi, chi;
  std::vector<Formula> family;
  std::string x, y;                   // term variable and quantified variable
  std::vector<std::string> xs, ys;    // tuples for the equality rule
};

struct SoundnessResult {
  Report report;
  std::size_t checked = 0, skipped = 0;
};

inline SoundnessResult check_rule_soundness(const Interpretation& I, const std::vector<RuleSample>& samples) {
  SoundnessResult out;
  auto& r = out.report;
  auto one = TruthValue::one();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& q = samples[i];
    auto w = [&](const Formula& a, const Formula& b) { return cat("sample ", i, ": ", to_string(a), " |- ", to_string(b)); };
    auto g = [&](const Formula& a, const Formula& b) { return sequent_grade(a, b, I); };
    auto valid = [&](const Formula& a, const Formula& b) { return is_valid(a, b, I); };
    auto expect_one = [&](const std::string& law, const Formula& a, const Formula& b) {
      if (g(a, b) != one) r.fail_once(law, w(a, b));
      if (!valid(a, b)) r.fail_once(law + " (valid)", w(a, b));
      ++out.checked;
    };
    const auto &phi = q.phi, &psi = q.psi, &chi = q.chi;

    expect_one("phi |- phi", phi, phi);

    auto gpp = g(phi, psi), gpc = g(psi, chi), gphc = g(phi, chi);
    if (meet(gpp, gpc) > gphc) r.fail_once("cut: gr(phi|-psi) ^ gr(psi|-chi) <= gr(phi|-chi)", w(phi, chi));
    if (valid(phi, psi) && valid(psi, chi) && !valid(phi, chi)) r.fail_once("cut preserves validity", w(phi, chi));
    ++out.checked;

    expect_one("phi |- true", phi, f_top());
    expect_one("phi & psi |- phi", f_and(phi, psi), phi);
    expect_one("phi & psi |- psi", f_and(phi, psi), psi);

    if (meet(g(phi, psi), g(phi, chi)) != g(phi, f_and(psi, chi)))
      r.fail_once("gr(phi|-psi) ^ gr(phi|-chi) = gr(phi|-psi&chi)", w(phi, f_and(psi, chi)));
    if (valid(phi, psi) && valid(phi, chi) && !valid(phi, f_and(psi, chi))) r.fail_once("and-intro preserves validity", w(phi, chi));
    ++out.checked;

    auto fam = q.family;
    fam.push_back(phi);
    expect_one("phi |- OR S for phi in S", phi, f_or(fam));

    auto inf = one;
    bool all_valid = true;
    for (auto& s : q.family) {
      inf = meet(inf, g(s, psi));
      all_valid = all_valid && valid(s, psi);
    }
    if (inf > g(f_or(q.family), psi)) r.fail_once("inf gr(s|-psi) <= gr(OR S|-psi)", w(f_or(q.family), psi));
    if (all_valid && !valid(f_or(q.family), psi)) r.fail_once("or-elim preserves validity", w(f_or(q.family), psi));
    ++out.checked;

    std::vector<Formula> dist;
    for (auto& s : q.family) dist.push_back(f_and(phi, s));
    expect_one("phi & OR S |- OR (phi & s)", f_and(phi, f_or(q.family)), f_or(dist));

    expect_one("true |- x = x", f_top(), f_eq(Term::v(q.x), Term::v(q.x)));

    std::map<std::string, Term> m;
    bool ok7 = q.xs.size() == q.ys.size();
    for (std::size_t k = 0; ok7 && k < q.xs.size(); ++k) {
      m.emplace(q.xs[k], Term::v(q.ys[k]));
      ok7 = free_for(Term::v(q.ys[k]), q.xs[k], phi);
    }
    std::set<std::string> distinct(q.xs.begin(), q.xs.end());
    if (ok7 && distinct.size() == q.xs.size())
      expect_one("(xs = ys) & phi |- phi[ys/xs]", f_and(tuple_eq(q.xs, q.ys), phi), subst_formula(phi, m));
    else
      ++out.skipped;

    auto vx = Term::v(q.x);
    if (free_for(vx, q.y, psi)) {
      auto lhs = g(phi, subst_formula(psi, vx, q.y)), rhs = g(phi, f_exists(q.y, psi));
      if (lhs > rhs) r.fail_once("gr(phi|-psi[x/y]) <= gr(phi|-exists y psi)", w(phi, f_exists(q.y, psi)));
      if (valid(phi, subst_formula(psi, vx, q.y)) && !valid(phi, f_exists(q.y, psi)))
        r.fail_once("exists-intro preserves validity", w(phi, f_exists(q.y, psi)));
      ++out.checked;
    } else {
      ++out.skipped;
    }
    if (free_for(vx, q.y, phi)) {
      auto lhs = g(f_exists(q.y, phi), psi), rhs = g(subst_formula(phi, vx, q.y), psi);
      if (lhs > rhs) r.fail_once("gr(exists y phi|-psi) <= gr(phi[x/y]|-psi)", w(f_exists(q.y, phi), psi));
      if (valid(f_exists(q.y, phi), psi) && !valid(subst_formula(phi, vx, q.y), psi))
        r.fail_once("exists-elim preserves validity", w(f_exists(q.y, phi), psi));
      ++out.checked;
    } else {
      ++out.skipped;
    }

    // Only when y is not free in phi; otherwise the sequent can have grade 0.
    if (!is_free_in(q.y, phi))
      expect_one("phi & exists y psi |- exists y (phi & psi)", f_and(phi, f_exists(q.y, psi)), f_exists(q.y, f_and(phi, psi)));
    else
      ++out.skipped;

    if (g(phi, psi) > g(f_and(phi, chi), psi)) r.fail_once("gr(b|-a) <= gr(b&d|-a)", w(f_and(phi, chi), psi));
    ++out.checked;
  }
  return out;
}

// ---- metatheorems ----

struct MetaSample {
  Formula phi;
  Term t, by;
  std::string x;
  Environment s, s2;
};

inline SoundnessResult check_metatheorems(const Interpretation& I, const std::vector<MetaSample>& samples) {
  SoundnessResult out;
  auto& r = out.report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& q = samples[i];
    auto agree_on = [&](const std::set<std::string>& vs) {
      Environment e = q.s2;
      for (auto& v : vs) e.vals[v] = q.s.at(v);
      return e;
    };
    if (eval_term(q.s, q.t, I) != eval_term(agree_on(vars_of(q.t)), q.t, I))
      r.fail_once("terms depend only on their variables", cat("sample ", i, ": ", to_string(q.t)));
    if (grade_sat(q.s, q.phi, I) != grade_sat(agree_on(free_vars(q.phi)), q.phi, I))
      r.fail_once("formulas depend only on their free variables", cat("sample ", i, ": ", to_string(q.phi)));
    auto shifted = q.s.with(q.x, eval_term(q.s, q.by, I));
    if (eval_term(q.s, subst_term(q.t, q.by, q.x), I) != eval_term(shifted, q.t, I))
      r.fail_once("s(t[t'/x]) = s(s(t')/x)(t)", cat("sample ", i));
    out.checked += 3;
    if (free_for(q.by, q.x, q.phi)) {
      if (grade_sat(q.s, subst_formula(q.phi, q.by, q.x), I) != grade_sat(shifted, q.phi, I))
        r.fail_once("gr(s sat phi[t/x]) = gr(s(s(t)/x) sat phi)", cat("sample ", i, ": ", to_string(q.phi)));
      ++out.checked;
    } else {
      ++out.skipped;
    }
  }
  return out;
}

// Classical geometric satisfaction for 0/1-valued predicates, written independently of grade_sat.
inline bool classical_sat(const Environment& s, const Formula& f, const Interpretation& I) {
  using K = Formula::Kind;
  if (f.kind == K::top) return true;
  if (f.kind == K::bot) return false;
  if (f.kind == K::eq) return eval_term(s, f.terms[0], I) == eval_term(s, f.terms[1], I);
  if (f.kind == K::pred) {
    std::vector<int> args;
    for (auto& a : f.terms) args.push_back(eval_term(s, a, I));
    const auto& v = I.predicates.at(f.name).table[I.tuple_index(args)];
    if (!v.is_zero() && !v.is_one()) throw signature_error("predicate " + f.name + " is not two-valued");
    return v.is_one();
  }
  if (f.kind == K::conj) return classical_sat(s, f.subs[0], I) && classical_sat(s, f.subs[1], I);
  if (f.kind == K::disj)
    return std::any_of(f.subs.begin(), f.subs.end(), [&](const Formula& g) { return classical_sat(s, g, I); });
  for (int d = 0; d < int(I.domain.size()); ++d)
    if (classical_sat(s.with(f.name, d), f.subs[0], I)) return true;
  return false;
}

// ---- derivations ----

struct ProofNode {
  std::string rule;
  Sequent conclusion;
  std::vector<ProofNode> premises;
  std::optional<Term> term;  // witness term for the quantifier rules
};

struct DerivationResult {
  Report report;
  TruthValue bound;
};

inline const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names{"premise", "refl", "cut", "top", "and-l", "and-r", "and-intro", "or-intro",
                                              "or-elim", "dist", "eq-refl", "eq-subst", "exists-intro", "exists-elim", "frobenius"};
  return names;
}

namespace detail {

inline void flatten_conj(const Formula& f, std::vector<Formula>& out) {
  if (f.kind == Formula::Kind::conj) {
    flatten_conj(f.subs[0], out);
    flatten_conj(f.subs[1], out);
  } else {
    out.push_back(f);
  }
}

inline TruthValue check_node(const ProofNode& n, const std::vector<GradedSequent>& given, const std::string& path,
                             Report& r, const Interpretation* I) {
  using K = Formula::Kind;
  const auto& c = n.conclusion;
  auto bad = [&](const std::string& why) { r.fail("rule " + n.rule + " misapplied", path + ": " + why); };
  auto arity = [&](std::size_t k) {
    if (n.premises.size() == k) return true;
    bad(cat("expects ", k, " premises, has ", n.premises.size()));
    return false;
  };

  TruthValue bound = TruthValue::one();
  for (std::size_t i = 0; i < n.premises.size(); ++i)
    bound = meet(bound, check_node(n.premises[i], given, path + "." + std::to_string(i), r, I));
  auto prem = [&](std::size_t i) -> const Sequent& { return n.premises[i].conclusion; };

  if (n.rule == "premise") {
    std::optional<TruthValue> best;
    for (auto& g : given)
      if (g.seq == c) best = best ? join(*best, g.grade) : g.grade;
    if (!best) bad("not among the graded premises: " + to_string(c));
    else bound = *best;
    if (I && best && *best > sequent_grade(c, *I))
      r.fail("premise grade compatible with the interpretation", path + ": " + to_string(c));
    arity(0);
  } else if (n.rule == "refl") {
    if (arity(0) && c.lhs != c.rhs) bad("sides differ");
  } else if (n.rule == "cut") {
    if (arity(2) && !(prem(0).lhs == c.lhs && prem(0).rhs == prem(1).lhs && prem(1).rhs == c.rhs)) bad("premises do not chain");
  } else if (n.rule == "top") {
    if (arity(0) && c.rhs.kind != K::top) bad("right side is not true");
  } else if (n.rule == "and-l" || n.rule == "and-r") {
    if (arity(0) && !(c.lhs.kind == K::conj && c.lhs.subs[n.rule == "and-l" ? 0 : 1] == c.rhs)) bad("not a conjunct");
  } else if (n.rule == "and-intro") {
    if (arity(2) && !(c.rhs.kind == K::conj && prem(0).lhs == c.lhs && prem(1).lhs == c.lhs && prem(0).rhs == c.rhs.subs[0] &&
                      prem(1).rhs == c.rhs.subs[1]))
      bad("premises do not match the conjunction");
  } else if (n.rule == "or-intro") {
    if (arity(0) && !(c.rhs.kind == K::disj && std::find(c.rhs.subs.begin(), c.rhs.subs.end(), c.lhs) != c.rhs.subs.end()))
      bad("left side is not a disjunct");
  } else if (n.rule == "or-elim") {
    if (c.lhs.kind != K::disj) bad("left side is not a disjunction");
    else if (arity(c.lhs.subs.size()))
      for (std::size_t i = 0; i < c.lhs.subs.size(); ++i)
        if (!(prem(i).lhs == c.lhs.subs[i] && prem(i).rhs == c.rhs)) bad(cat("premise ", i, " does not match disjunct ", i));
  } else if (n.rule == "dist") {
    bool ok = arity(0) && c.lhs.kind == K::conj && c.lhs.subs[1].kind == K::disj && c.rhs.kind == K::disj;
    if (ok) {
      std::vector<Formula> want;
      for (auto& s : c.lhs.subs[1].subs) want.push_back(f_and(c.lhs.subs[0], s));
      ok = c.rhs.subs == want;
    }
    if (!ok) bad("not of the form phi & OR S |- OR (phi & s)");
  } else if (n.rule == "eq-refl") {
    if (arity(0) && !(c.lhs.kind == K::top && c.rhs.kind == K::eq && c.rhs.terms[0] == c.rhs.terms[1] &&
                      c.rhs.terms[0].kind == Term::Kind::var))
      bad("not true |- x = x");
  } else if (n.rule == "eq-subst") {
    bool ok = arity(0) && c.lhs.kind == K::conj;
    std::map<std::string, Term> m;
    if (ok) {
      std::vector<Formula> eqs;
      flatten_conj(c.lhs.subs[0], eqs);
      for (auto& e : eqs) {
        if (e.kind != K::eq || e.terms[0].kind != Term::Kind::var || e.terms[1].kind != Term::Kind::var ||
            !m.emplace(e.terms[0].name, e.terms[1]).second) {
          ok = false;
          break;
        }
        if (!free_for(e.terms[1], e.terms[0].name, c.lhs.subs[1])) {
          bad("substituted variable would be captured");
          ok = false;
          break;
        }
      }
      ok = ok && subst_formula(c.lhs.subs[1], m) == c.rhs;
    }
    if (!ok) bad("not (xs = ys) & phi |- phi[ys/xs]");
  } else if (n.rule == "exists-intro") {
    if (!n.term) bad("needs a witness term");
    else if (arity(1) && !(c.rhs.kind == K::exists && prem(0).lhs == c.lhs &&
                           prem(0).rhs == subst_formula(c.rhs.subs[0], *n.term, c.rhs.name) &&
                           free_for(*n.term, c.rhs.name, c.rhs.subs[0])))
      bad("premise is not phi |- psi[x/y]");
  } else if (n.rule == "exists-elim") {
    if (!n.term) bad("needs a witness term");
    else if (arity(1) && !(prem(0).lhs.kind == K::exists && prem(0).rhs == c.rhs &&
                           c.lhs == subst_formula(prem(0).lhs.subs[0], *n.term, prem(0).lhs.name) &&
                           free_for(*n.term, prem(0).lhs.name, prem(0).lhs.subs[0])))
      bad("conclusion is not phi[x/y] |- psi");
  } else if (n.rule == "frobenius") {
    bool ok = arity(0) && c.lhs.kind == K::conj && c.lhs.subs[1].kind == K::exists && c.rhs.kind == K::exists;
    if (ok) {
      const auto& y = c.lhs.subs[1].name;
      ok = c.rhs.name == y && c.rhs.subs[0] == f_and(c.lhs.subs[0], c.lhs.subs[1].subs[0]);
      if (ok && is_free_in(y, c.lhs.subs[0])) {
        bad("quantified variable free in the left conjunct");
        ok = true;
      }
    }
    if (!ok) bad("not phi & exists y psi |- exists y (phi & psi)");
  } else {
    r.fail("known rule", path + ": '" + n.rule + "'");
  }

  if (I && bound > sequent_grade(c, *I)) r.fail("bound at most the semantic grade", path + ": " + to_string(c));
  return bound;
}

}  // namespace detail

// Each step is checked against its rule; the bound is the least grade of the premises used.
inline DerivationResult check_derivation(const std::vector<GradedSequent>& premises, const ProofNode& tree,
                                         const Interpretation* cross_check = nullptr) {
  DerivationResult d;
  d.bound = detail::check_node(tree, premises, "root", d.report, cross_check);
  return d;
}

// ---- from an interpretation to a graded system ----

struct Lindenbaum {
  GradedFuzzyTopSystem sys;
  std::vector<Formula> reps;   // representative of each class
  std::vector<Elem> class_of;  // class of each input formula
};

// Points are the assignments to the free variables of the inputs; classes are equal columns.
// Columns are closed under pointwise min and max, which the conjunctions and binary disjunctions
// of representatives realize.
inline Lindenbaum lindenbaum(const Interpretation& I, const std::vector<Formula>& formulas, std::size_t budget = 256) {
  std::set<std::string> vars;
  for (auto& f : formulas) {
    check_signature(f, I);
    for (auto& v : free_vars(f)) vars.insert(v);
  }
  auto envs = environments(vars, I);
  auto column = [&](const Formula& f) {
    FuzzySubset c = FuzzySubset::empty(envs.size());
    for (std::size_t s = 0; s < envs.size(); ++s) c[s] = grade_sat(envs[s], f, I);
    return c;
  };

  std::map<FuzzySubset, Formula> classes;
  std::vector<FuzzySubset> order;
  auto add = [&](const FuzzySubset& c, const Formula& f) {
    if (classes.emplace(c, f).second) {
      order.push_back(c);
      if (order.size() > budget) throw budget_exceeded(cat("more than ", budget, " formula classes"));
    }
  };
  add(column(f_top()), f_top());
  add(column(f_bot()), f_bot());
  for (auto& f : formulas) add(column(f), f);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto a = order[i], b = order[j];
      add(intersection(a, b), f_and(classes.at(a), classes.at(b)));
      add(set_union(a, b), f_or(classes.at(a), classes.at(b)));
    }

  std::vector<FuzzySubset> cols;
  for (auto& [c, f] : classes) cols.push_back(c);
  auto m = cols.size();
  auto idx = [&](const FuzzySubset& c) { return Elem(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin()); };

  Lindenbaum out;
  FiniteFrame fr;
  fr.poset.le.assign(m, std::vector<char>(m, 0));
  fr.meet_t.assign(m, std::vector<Elem>(m));
  fr.join_t.assign(m, std::vector<Elem>(m));
  for (std::size_t a = 0; a < m; ++a) {
    out.reps.push_back(classes.at(cols[a]));
    fr.poset.names.push_back("[" + to_string(out.reps.back()) + "]");
    for (std::size_t b = 0; b < m; ++b) {
      fr.poset.le[a][b] = pointwise_leq(cols[a], cols[b]);
      fr.meet_t[a][b] = idx(intersection(cols[a], cols[b]));
      fr.join_t[a][b] = idx(set_union(cols[a], cols[b]));
    }
  }
  fr.top = idx(column(f_top()));
  fr.bottom = idx(column(f_bot()));

  std::vector<std::string> points;
  for (auto& e : envs) points.push_back(e.str(I));
  auto d = FuzzyTopSystem::zeros(points, fr);
  for (std::size_t s = 0; s < envs.size(); ++s)
    for (std::size_t a = 0; a < m; ++a) d.gr(s, Elem(a)) = cols[a][s];
  out.sys.base = std::move(d);
  out.sys.r.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) out.sys.r[a * m + b] = graded_inclusion(cols[a], cols[b]);
  for (auto& f : formulas) out.class_of.push_back(idx(column(f)));
  return out;
}

// ---- from a graded space to a propositional theory ----

// One propositional variable per open; formulas are read as opens (meet as intersection,
// disjunction as union) and gr(a |- b) is the graded inclusion of those opens.
struct PropTheory {
  FuzzyTopSpace space;
  std::vector<std::string> vars;

  Formula var(std::size_t i) const { return f_pred(vars.at(i), {}); }

  int open_of(const Formula& f) const {
    using K = Formula::Kind;
    auto n = space.size();
    switch (f.kind) {
      case K::top: return index(FuzzySubset::full(n));
      case K::bot: return index(FuzzySubset::empty(n));
      case K::pred: {
        auto it = std::find(vars.begin(), vars.end(), f.name);
        if (it == vars.end() || !f.terms.empty()) throw signature_error("'" + f.name + "' is not a propositional variable of the theory");
        return int(it - vars.begin());
      }
      case K::conj: return index(intersection(space.opens[open_of(f.subs[0])], space.opens[open_of(f.subs[1])]));
      case K::disj: {
        auto u = FuzzySubset::empty(n);
        for (auto& g : f.subs) u = set_union(u, space.opens[open_of(g)]);
        return index(u);
      }
      default: throw signature_error("propositional theory has no equality or quantifiers");
    }
  }

  TruthValue grade(const Formula& a, const Formula& b) const {
    return graded_inclusion(space.opens[open_of(a)], space.opens[open_of(b)]);
  }

 private:
  int index(const FuzzySubset& t) const {
    int i = space.index_of(t);
    if (i < 0) throw structural_error("opens not closed: " + t.str());
    return i;
  }
};

inline PropTheory theory_from_space(const FuzzyTopSpace& s) {
  PropTheory t{s, {}};
  t.space.normalize();
  for (std::size_t i = 0; i < t.space.opens.size(); ++i) t.vars.push_back("P" + std::to_string(i));
  return t;
}

// The sequent laws of the theory, checked over all opens (families up to `family_limit` members).
inline Report check_prop_theory(const PropTheory& t, std::size_t family_limit = 3) {
  Report r;
  auto k = t.vars.size();
  auto one = TruthValue::one();
  auto P = [&](std::size_t i) { return t.var(i); };
  const auto& o = t.space.opens;
  auto nm = [&](std::size_t i) { return t.vars[i]; };
  auto whole = t.space.index_of(FuzzySubset::full(t.space.size()));
  auto none = t.space.index_of(FuzzySubset::empty(t.space.size()));
  if (whole < 0 || none < 0) {
    r.fail("theory has variables for the empty and the whole set", "");
    return r;
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (t.grade(P(i), P(i)) != one) r.fail_once("gr(P|-P) = 1", nm(i));
    if (t.grade(P(i), P(whole)) != one) r.fail_once("gr(P|-P_X) = 1", nm(i));
    if (t.grade(P(none), P(i)) != one) r.fail_once("gr(P_empty|-P) = 1", nm(i));
    for (std::size_t j = 0; j < k; ++j) {
      auto w = cat(nm(i), ",", nm(j));
      if (t.grade(P(i), P(j)) != graded_inclusion(o[i], o[j])) r.fail_once("gr(P_T|-P_T') = gr(T in T')", w);
      if (i != j && t.grade(P(i), P(j)) == one && t.grade(P(j), P(i)) == one) r.fail_once("mutual consequence only for equal opens", w);
      auto pij = f_and(P(i), P(j));
      int cap = t.space.index_of(intersection(o[i], o[j]));
      if (cap < 0) {
        r.fail_once("opens closed under intersection", w);
        continue;
      }
      if (t.grade(pij, P(cap)) != one || t.grade(P(cap), pij) != one) r.fail_once("P & P' equivalent to P_(T cap T')", w);
      if (t.grade(pij, P(i)) != one) r.fail_once("gr(P & P'|-P) = 1", w);
      if (t.grade(pij, P(j)) != one) r.fail_once("gr(P & P'|-P') = 1", w);
      for (std::size_t l = 0; l < k; ++l) {
        auto w3 = cat(w, ",", nm(l));
        if (meet(t.grade(P(i), P(j)), t.grade(P(j), P(l))) > t.grade(P(i), P(l))) r.fail_once("transitivity", w3);
        if (meet(t.grade(P(i), P(j)), t.grade(P(i), P(l))) != t.grade(P(i), f_and(P(j), P(l))))
          r.fail_once("gr(P|-Q) ^ gr(P|-R) = gr(P|-Q & R)", w3);
      }
    }
  }

  // Families of up to family_limit opens, with a target and a left conjunct.
  std::vector<std::size_t> fam;
  auto visit = [&](auto& self, std::size_t start) -> void {
    std::vector<Formula> ps;
    auto u = FuzzySubset::empty(t.space.size());
    for (auto i : fam) {
      ps.push_back(P(i));
      u = set_union(u, o[i]);
    }
    auto disj = f_or(ps);
    int cup = t.space.index_of(u);
    std::string w = "{";
    for (auto i : fam) w += nm(i) + " ";
    w += "}";
    if (cup < 0) r.fail_once("opens closed under union", w);
    else if (t.grade(P(cup), disj) != one || t.grade(disj, P(cup)) != one) r.fail_once("OR P_i equivalent to P_(union)", w);
    for (auto i : fam)
      if (t.grade(P(i), disj) != one) r.fail_once("gr(P_i|-OR P_i) = 1", w);
    for (std::size_t x = 0; x < k; ++x) {
      auto inf = one;
      std::vector<Formula> dist;
      for (auto i : fam) {
        inf = meet(inf, t.grade(P(i), P(x)));
        dist.push_back(f_and(P(x), P(i)));
      }
      if (inf > t.grade(disj, P(x))) r.fail_once("inf gr(P_i|-P) <= gr(OR P_i|-P)", w + " " + nm(x));
      if (t.grade(f_and(P(x), disj), f_or(dist)) != one) r.fail_once("gr(P & OR P_i|-OR (P & P_i)) = 1", w + " " + nm(x));
    }
    if (fam.size() == family_limit) return;
    for (std::size_t i = start; i < k; ++i) {
      fam.push_back(i);
      self(self, i + 1);
      fam.pop_back();
    }
  };
  visit(visit, 0);
  return r;
}

// The theory as unary predicates over the points: gr(P_T(x) |- P_T'(x)) computed by the
// first-order evaluator should match the propositional grade.
inline Interpretation point_interpretation(const PropTheory& t) {
  Interpretation I;
  I.domain = t.space.points;
  for (std::size_t i = 0; i < t.vars.size(); ++i) I.predicates[t.vars[i]] = {1, t.space.opens[i].m};
  return I;
}

inline Formula at_point(const Formula& f, const std::string& x) {
  Formula g = f;
  if (g.kind == Formula::Kind::pred) g.terms = {Term::v(x)};
  for (auto& s : g.subs) s = at_point(s, x);
  return g;
}

// ---- parsing ----

namespace detail {

struct Lexer {
  std::string_view src;
  std::size_t pos = 0, line = 1, line_start = 0;

  [[noreturn]] void error(const std::string& msg) const { throw parse_error(line, pos - line_start + 1, msg); }

  void skip() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) {
      if (src[pos] == '\n') {
        ++line;
        line_start = pos + 1;
      }
      ++pos;
    }
  }
  bool at_end() {
    skip();
    return pos >= src.size();
  }
  bool peek(std::string_view tok) {
    skip();
    return src.substr(pos, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) error("expected '" + std::string(tok) + "'");
  }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
  bool peek_ident() {
    skip();
    return pos < src.size() && (std::isalpha(static_cast<unsigned char>(src[pos])) || src[pos] == '_');
  }
  std::string ident() {
    if (!peek_ident()) error("expected an identifier");
    auto start = pos;
    while (pos < src.size() && ident_char(src[pos])) ++pos;
    return std::string(src.substr(start, pos - start));
  }
  bool peek_keyword(std::string_view kw) {
    skip();
    return src.substr(pos, kw.size()) == kw && (pos + kw.size() >= src.size() || !ident_char(src[pos + kw.size()]));
  }
};

struct Parser {
  Lexer lx;
  const std::set<std::string>& constants;

  Term term() {
    auto name = lx.ident();
    if (lx.accept("(")) {
      std::vector<Term> args;
      if (!lx.peek(")"))
        do args.push_back(term());
        while (lx.accept(","));
      lx.expect(")");
      return Term::f(name, std::move(args));
    }
    return constants.count(name) ? Term::c(name) : Term::v(name);
  }

  Formula atom() {
    if (lx.peek_keyword("true")) {
      lx.ident();
      return f_top();
    }
    if (lx.peek_keyword("false")) {
      lx.ident();
      return f_bot();
    }
    if (lx.peek_keyword("exists")) {
      lx.ident();
      auto x = lx.ident();
      lx.expect(".");
      return f_exists(x, disjunction());
    }
    if (lx.accept("(")) {
      if (lx.accept("|")) {
        std::vector<Formula> fs;
        if (!lx.peek(")"))
          do fs.push_back(conjunction());
          while (lx.accept("|") && !lx.peek("-"));
        lx.expect(")");
        return f_or(std::move(fs));
      }
      auto f = disjunction();
      lx.expect(")");
      return f;
    }
    // Predicate application or the left side of an equality.
    auto t = term();
    if (lx.peek("=")) {
      lx.expect("=");
      return f_eq(std::move(t), term());
    }
    if (t.kind == Term::Kind::constant) lx.error("constant '" + t.name + "' used as a formula");
    return f_pred(t.name, t.args);
  }

  Formula conjunction() {
    auto f = atom();
    while (lx.accept("&")) f = f_and(std::move(f), atom());
    return f;
  }

  Formula disjunction() {
    std::vector<Formula> fs{conjunction()};
    while (lx.peek("|") && !lx.peek("|-")) {
      lx.expect("|");
      fs.push_back(conjunction());
    }
    return fs.size() == 1 ? std::move(fs[0]) : f_or(std::move(fs));
  }
};

}  // namespace detail

// Identifiers listed in `constants` are read as constants, other bare identifiers in term
// position as variables.
inline Formula parse_formula(std::string_view text, const std::set<std::string>& constants = {}) {
  detail::Parser p{{text}, constants};
  auto f = p.disjunction();
  if (!p.lx.at_end()) p.lx.error("unexpected input after formula");
  return f;
}

inline Term parse_term(std::string_view text, const std::set<std::string>& constants = {}) {
  detail::Parser p{{text}, constants};
  auto t = p.term();
  if (!p.lx.at_end()) p.lx.error("unexpected input after term");
  return t;
}

inline Sequent parse_sequent(std::string_view text, const std::set<std::string>& constants = {}) {
  detail::Parser p{{text}, constants};
  Sequent s;
  s.lhs = p.disjunction();
  p.lx.expect("|-");
  s.rhs = p.disjunction();
  if (!p.lx.at_end()) p.lx.error("unexpected input after sequent");
  return s;
}

// A theory file: a domain, constants, function and predicate tables, and graded sequents.
//   domain: a b c
//   const c = a
//   fun f(1): a->b, b->a, c->c
//   pred p(2): (a,b)=1/2, (b,b)=1      unlisted tuples get 0
//   seq: p(x,c) |- exists y. p(x,y) @ 3/5
struct Theory {
  Interpretation interp;
  std::vector<GradedSequent> sequents;
};

namespace detail {

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// Split on commas that are not inside parentheses.
inline std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  auto last = trim(s.substr(start));
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

inline std::vector<std::string> tuple_items(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return split_top(std::string_view(s).substr(1, s.size() - 2));
  return {s};
}

}  // namespace detail

inline Theory parse_theory(std::string_view text) {
  Theory th;
  auto& I = th.interp;
  std::size_t lineno = 0;
  std::vector<std::pair<std::size_t, std::string>> seqs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    auto line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) -> parse_error { return parse_error(lineno, 1, msg); };
    auto colon = line.find(':');
    auto head = detail::trim(std::string_view(line).substr(0, colon == std::string::npos ? line.size() : colon));
    auto body = colon == std::string::npos ? std::string() : detail::trim(std::string_view(line).substr(colon + 1));
    try {
      if (head == "domain") {
        std::string b = body;
        std::replace(b.begin(), b.end(), ',', ' ');
        std::size_t p = 0;
        while (p < b.size()) {
          while (p < b.size() && b[p] == ' ') ++p;
          auto q = b.find(' ', p);
          auto tok = b.substr(p, q == std::string::npos ? std::string::npos : q - p);
          if (!tok.empty()) I.domain.push_back(tok);
          p = q == std::string::npos ? b.size() : q;
        }
        if (I.domain.empty()) throw fail("empty domain");
      } else if (line.rfind("const ", 0) == 0) {
        auto eq = line.find('=');
        if (eq == std::string::npos) throw fail("expected 'const name = element'");
        I.constants[detail::trim(std::string_view(line).substr(6, eq - 6))] = I.element(detail::trim(std::string_view(line).substr(eq + 1)));
      } else if (head.rfind("fun ", 0) == 0 || head.rfind("pred ", 0) == 0) {
        bool is_fun = head[0] == 'f';
        auto sig = detail::trim(std::string_view(head).substr(is_fun ? 4 : 5));
        auto lp = sig.find('('), rp = sig.find(')');
        if (lp == std::string::npos || rp == std::string::npos) throw fail("expected 'name(arity)'");
        auto name = detail::trim(std::string_view(sig).substr(0, lp));
        int arity = std::stoi(sig.substr(lp + 1, rp - lp - 1));
        if (arity < 0 || arity > 6) throw fail("arity out of range");
        if (is_fun) {
          if (arity == 0) throw fail("use const for 0-ary functions");
          Interpretation::Function fn{arity, std::vector<int>(I.tuples(arity), -1)};
          for (auto& item : detail::split_top(body)) {
            auto arrow = item.find("->");
            if (arrow == std::string::npos) throw fail("expected 'args->value' in '" + item + "'");
            std::vector<int> args;
            for (auto& a : detail::tuple_items(detail::trim(std::string_view(item).substr(0, arrow)))) args.push_back(I.element(a));
            if (int(args.size()) != arity) throw fail("wrong number of arguments in '" + item + "'");
            fn.table[I.tuple_index(args)] = I.element(detail::trim(std::string_view(item).substr(arrow + 2)));
          }
          if (std::count(fn.table.begin(), fn.table.end(), -1)) throw fail("function '" + name + "' not total");
          I.functions[name] = fn;
        } else {
          Interpretation::Predicate pr{arity, std::vector<TruthValue>(I.tuples(arity))};
          for (auto& item : detail::split_top(body)) {
            if (arity == 0) {
              pr.table[0] = TruthValue::parse(item);
              continue;
            }
            auto eq = item.rfind('=');
            if (eq == std::string::npos) throw fail("expected 'args=value' in '" + item + "'");
            std::vector<int> args;
            for (auto& a : detail::tuple_items(detail::trim(std::string_view(item).substr(0, eq)))) args.push_back(I.element(a));
            if (int(args.size()) != arity) throw fail("wrong number of arguments in '" + item + "'");
            pr.table[I.tuple_index(args)] = TruthValue::parse(detail::trim(std::string_view(item).substr(eq + 1)));
          }
          I.predicates[name] = pr;
        }
      } else if (head == "seq") {
        seqs.emplace_back(lineno, body);
      } else {
        throw fail("unknown declaration '" + head + "'");
      }
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception& e) {
      throw parse_error(lineno, 1, e.what());
    }
  }
  if (I.domain.empty()) throw parse_error(lineno, 1, "theory declares no domain");
  auto consts = I.constant_names();
  for (auto& [ln, body] : seqs) {
    try {
      auto at = body.rfind('@');
      GradedSequent g;
      g.seq = parse_sequent(std::string_view(body).substr(0, at == std::string::npos ? body.size() : at), consts);
      if (at != std::string::npos) g.grade = TruthValue::parse(body.substr(at + 1));
      check_signature(g.seq.lhs, I);
      check_signature(g.seq.rhs, I);
      th.sequents.push_back(std::move(g));
    } catch (const parse_error& e) {
      throw parse_error(ln, e.column(), e.message());
    } catch (const std::exception& e) {
      throw parse_error(ln, 1, e.what());
    }
  }
  return th;
}

}  // namespace fuzzytop
