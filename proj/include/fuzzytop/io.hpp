#pragma once

#include "lattice.hpp"
#include "logic.hpp"
#include "mvn.hpp"
#include "report.hpp"
#include "space.hpp"
#include "system.hpp"
#include "varbasis.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// One JSON container format; every document carries a "kind".
namespace fuzzytop::io {

using json = nlohmann::ordered_json;

// Malformed input, located by file and JSON pointer.
class input_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- reading helpers ----

struct At {
  std::string where;
  At operator/(const std::string& k) const { return {where + "/" + k}; }
  At operator/(std::size_t i) const { return {where + "/" + std::to_string(i)}; }
  [[noreturn]] void fail(const std::string& msg) const { throw input_error((where.empty() ? "/" : where) + ": " + msg); }
};

inline const json& need(const json& j, const std::string& key, const At& at) {
  if (!j.is_object()) at.fail("expected an object");
  auto it = j.find(key);
  if (it == j.end()) at.fail("missing \"" + key + "\"");
  return *it;
}

inline const json& need_array(const json& j, const At& at) {
  if (!j.is_array()) at.fail("expected an array");
  return j;
}

inline std::string read_string(const json& j, const At& at) {
  if (!j.is_string()) at.fail("expected a string");
  return j.get<std::string>();
}

inline int read_int(const json& j, const At& at) {
  if (!j.is_number_integer()) at.fail("expected an integer");
  return j.get<int>();
}

inline TruthValue read_value(const json& j, const At& at) {
  try {
    if (j.is_string()) return TruthValue::parse(j.get<std::string>());
    if (j.is_number_integer()) return TruthValue(j.get<std::int64_t>(), 1);
  } catch (const std::exception& e) {
    at.fail(e.what());
  }
  at.fail("expected a truth value such as \"1/2\"");
}

inline std::vector<std::string> read_strings(const json& j, const At& at) {
  std::vector<std::string> out;
  need_array(j, at);
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_string(j[i], at / i));
  return out;
}

inline std::vector<int> read_ints(const json& j, const At& at) {
  std::vector<int> out;
  need_array(j, at);
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_int(j[i], at / i));
  return out;
}

inline std::vector<TruthValue> read_values(const json& j, const At& at) {
  std::vector<TruthValue> out;
  need_array(j, at);
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_value(j[i], at / i));
  return out;
}

inline FuzzySubset read_subset(const json& j, std::size_t n, const At& at) {
  auto v = read_values(j, at);
  if (v.size() != n) at.fail("expected " + std::to_string(n) + " memberships, got " + std::to_string(v.size()));
  return FuzzySubset(std::move(v));
}

inline ValueChain read_chain(const json& j, const At& at) {
  if (j.is_number_integer()) {
    int n = j.get<int>();
    if (n < 2) at.fail("chain needs at least 2 elements");
    return make_chain(n);
  }
  try {
    return ValueChain::from_values(read_values(j, at));
  } catch (const input_error&) {
    throw;
  } catch (const std::exception& e) {
    at.fail(e.what());
  }
}

inline std::vector<std::string> read_points(const json& j, const At& at) {
  if (j.is_number_integer()) return default_point_names(std::size_t(std::max(0, j.get<int>())));
  auto p = read_strings(j, at);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!seen.insert(p[i]).second) (at / i).fail("duplicate point '" + p[i] + "'");
  return p;
}

inline void expect_kind(const json& j, const std::string& kind, const At& at) {
  if (!j.is_object()) at.fail("expected an object");
  if (auto it = j.find("kind"); it != j.end() && (!it->is_string() || it->get<std::string>() != kind))
    at.fail("expected kind \"" + kind + "\"");
}

inline std::string kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw input_error("/: document has no \"kind\"");
  return j["kind"].get<std::string>();
}

// ---- writing helpers ----

inline json values_json(const std::vector<TruthValue>& vs) {
  json a = json::array();
  for (auto& v : vs) a.push_back(v.str());
  return a;
}

inline json chain_json(const ValueChain& c) { return values_json(c.values()); }

// ---- frames ----

inline json to_json(const FiniteFrame& f) {
  json order = json::array();
  for (auto [a, b] : f.poset.covers()) order.push_back({f.name(a), f.name(b)});
  return {{"kind", "frame"}, {"elements", f.poset.names}, {"order", order}};
}

// {"elements": [...], "order": [[below, above], ...]} or {"chain": k}.
inline FiniteFrame frame_from_json(const json& j, const At& at = {}) {
  expect_kind(j, "frame", at);
  if (j.contains("chain")) return chain_frame(read_int(j["chain"], at / "chain"));
  auto names = read_strings(need(j, "elements", at), at / "elements");
  if (names.empty()) (at / "elements").fail("empty carrier");
  std::map<std::string, Elem> idx;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], Elem(i)).second) (at / "elements" / i).fail("duplicate element '" + names[i] + "'");
  std::vector<std::pair<Elem, Elem>> edges;
  if (j.contains("order")) {
    auto o = at / "order";
    const auto& arr = need_array(j["order"], o);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto pr = read_strings(arr[i], o / i);
      if (pr.size() != 2) (o / i).fail("expected [below, above]");
      for (auto& nm : pr)
        if (!idx.count(nm)) (o / i).fail("unknown element '" + nm + "'");
      edges.emplace_back(idx[pr[0]], idx[pr[1]]);
    }
  }
  try {
    auto p = FinitePoset::from_edges(names, edges);
    if (auto r = p.check(); !r.ok()) at.fail("order is not a partial order: " + r.failures.front().law + " [" + r.failures.front().witness + "]");
    return FiniteFrame::from_poset(std::move(p));
  } catch (const structural_error& e) {
    at.fail(e.what());
  }
}

inline json graded_frame_json(const GradedFrame& g) {
  auto j = to_json(g.frame);
  j["kind"] = "graded-frame";
  json r = json::array();
  for (Elem a = 0; a < Elem(g.size()); ++a) {
    std::vector<TruthValue> row;
    for (Elem b = 0; b < Elem(g.size()); ++b) row.push_back(g.R(a, b));
    r.push_back(values_json(row));
  }
  j["r"] = r;
  return j;
}

inline std::vector<TruthValue> read_matrix(const json& j, std::size_t rows, std::size_t cols, const At& at) {
  std::vector<TruthValue> out;
  need_array(j, at);
  if (j.size() != rows) at.fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = read_values(j[i], at / i);
    if (row.size() != cols) (at / i).fail("expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

inline GradedFrame graded_frame_from_json(const json& j, const At& at = {}) {
  expect_kind(j, "graded-frame", at);
  auto plain = j;
  plain.erase("kind");
  GradedFrame g{frame_from_json(plain, at), {}};
  if (j.contains("r")) g.r = read_matrix(j["r"], g.size(), g.size(), at / "r");
  else g = crisp_graded(g.frame);
  return g;
}

// ---- spaces ----

inline json to_json(const FuzzyTopSpace& s) {
  json j{{"kind", "space"}, {"flavor", flavor_name(s.flavor)}, {"points", s.points}};
  if (s.chain) j["chain"] = chain_json(*s.chain);
  json opens = json::array();
  for (auto& t : s.opens) opens.push_back(values_json(t.m));
  j["opens"] = opens;
  return j;
}

inline FuzzyTopSpace space_from_json(const json& j, const At& at = {}) {
  expect_kind(j, "space", at);
  FuzzyTopSpace s;
  s.points = read_points(need(j, "points", at), at / "points");
  if (j.contains("flavor")) {
    try {
      s.flavor = parse_flavor(read_string(j["flavor"], at / "flavor"));
    } catch (const flavor_error& e) {
      (at / "flavor").fail(e.what());
    }
  }
  if (j.contains("chain")) s.chain = read_chain(j["chain"], at / "chain");
  const auto& opens = need_array(need(j, "opens", at), at / "opens");
  for (std::size_t i = 0; i < opens.size(); ++i) s.opens.push_back(read_subset(opens[i], s.size(), at / "opens" / i));
  if (j.value("generate", false)) {
    auto g = generate_topology(s.points, s.opens);
    g.flavor = s.flavor;
    g.chain = s.chain;
    return g;
  }
  s.normalize();
  return s;
}

// ---- systems ----

inline json sat_json(const FuzzyTopSystem& d) {
  json sat = json::array();
  for (std::size_t x = 0; x < d.npoints(); ++x) sat.push_back(values_json(d.row(x)));
  return sat;
}

inline json to_json(const FuzzyTopSystem& d) {
  auto f = to_json(d.frame);
  f.erase("kind");
  return {{"kind", "system"}, {"points", d.points}, {"frame", f}, {"sat", sat_json(d)}};
}

inline FuzzyTopSystem system_from_json(const json& j, const At& at = {}) {
  expect_kind(j, "system", at);
  FuzzyTopSystem d;
  d.points = read_points(need(j, "points", at), at / "points");
  d.frame = frame_from_json(need(j, "frame", at), at / "frame");
  d.sat = read_matrix(need(j, "sat", at), d.npoints(), d.nelems(), at / "sat");
  return d;
}

inline json to_json(const GradedFuzzyTopSystem& d) {
  auto j = to_json(d.base);
  j["kind"] = "graded-system";
  auto g = graded_frame_json(d.graded_frame());
  j["r"] = g["r"];
  return j;
}

inline GradedFuzzyTopSystem graded_system_from_json(const json& j, const At& at = {}) {
  expect_kind(j, "graded-system", at);
  auto plain = j;
  plain["kind"] = "system";
  GradedFuzzyTopSystem d{system_from_json(plain, at), {}};
  if (j.contains("r")) d.r = read_matrix(j["r"], d.base.nelems(), d.base.nelems(), at / "r");
  else d.r = column_inclusion(d.base);
  return d;
}

// ---- L-valued spaces and systems ----

inline FuzzObject fuzz_object_from_json(const json& j, const At& at) {
  FuzzObject o;
  o.points = read_points(need(j, "points", at), at / "points");
  o.chain = read_chain(need(j, "chain", at), at / "chain");
  o.membership = read_subset(need(j, "membership", at), o.size(), at / "membership");
  return o;
}

inline json to_json(const LTopSpace& s) {
  json opens = json::array();
  for (auto& t : s.opens) opens.push_back(values_json(t.m));
  return {{"kind", "l-space"}, {"points", s.obj.points}, {"chain", chain_json(s.obj.chain)},
          {"membership", values_json(s.obj.membership.m)}, {"opens", opens}};
}

inline LTopSpace l_space_from_json(const json& j, const At& at = {}) {
  expect_kind(j, "l-space", at);
  LTopSpace s{fuzz_object_from_json(j, at), {}};
  const auto& opens = need_array(need(j, "opens", at), at / "opens");
  for (std::size_t i = 0; i < opens.size(); ++i) s.opens.push_back(read_subset(opens[i], s.obj.size(), at / "opens" / i));
  s.normalize();
  return s;
}

inline json to_json(const LTopSystem& d) {
  auto j = to_json(d.base);
  j["kind"] = "l-system";
  j["chain"] = chain_json(d.obj.chain);
  j["membership"] = values_json(d.obj.membership.m);
  return j;
}

inline LTopSystem l_system_from_json(const json& j, const At& at = {}) {
  expect_kind(j, "l-system", at);
  auto plain = j;
  plain["kind"] = "system";
  LTopSystem d{fuzz_object_from_json(j, at), system_from_json(plain, at)};
  return d;
}

// ---- algebras and n-valued Boolean systems ----

inline json to_json(const LnAlgebra& A) {
  json j{{"kind", "algebra"}, {"n", A.n}};
  if (A.has_representation()) {
    j["x"] = A.xsize;
    j["elements"] = A.vec;
  } else {
    j["names"] = A.names;
    j["plus"] = A.plus_t;
    j["times"] = A.times_t;
    j["neg"] = A.neg_t;
    j["constants"] = A.constants;
  }
  return j;
}

// Forms: {"n", "x", "generators"} closes the generators; {"n", "x", "elements"} takes a closed
// set; {"n", "names", "plus", "times", "neg", "constants"} gives tables (row-major).
inline LnAlgebra algebra_from_json(const json& j, const At& at = {}) {
  expect_kind(j, "algebra", at);
  int n = read_int(need(j, "n", at), at / "n");
  if (n < 2 || n > 12) (at / "n").fail("n must lie in 2..12");
  auto read_vectors = [&](const json& arr, std::size_t x, const At& a) {
    std::vector<std::vector<int>> out;
    need_array(arr, a);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto v = read_ints(arr[i], a / i);
      if (v.size() != x) (a / i).fail("expected " + std::to_string(x) + " coordinates");
      for (int k : v)
        if (k < 0 || k >= n) (a / i).fail("coordinate outside 0.." + std::to_string(n - 1));
      out.push_back(v);
    }
    return out;
  };
  try {
    if (j.contains("names")) {
      auto names = read_strings(j["names"], at / "names");
      return algebra_from_tables(n, names, read_ints(need(j, "plus", at), at / "plus"), read_ints(need(j, "times", at), at / "times"),
                                 read_ints(need(j, "neg", at), at / "neg"), read_ints(need(j, "constants", at), at / "constants"));
    }
    auto x = std::size_t(j.contains("x") ? read_int(j["x"], at / "x") : 1);
    if (x < 1 || x > 6) (at / "x").fail("x must lie in 1..6");
    if (j.contains("elements")) {
      auto els = read_vectors(j["elements"], x, at / "elements");
      std::sort(els.begin(), els.end());
      els.erase(std::unique(els.begin(), els.end()), els.end());
      return algebra_of_functions(n, x, els);
    }
    std::vector<std::vector<int>> gens;
    if (j.contains("generators")) gens = read_vectors(j["generators"], x, at / "generators");
    return function_algebra(n, x, gens);
  } catch (const input_error&) {
    throw;
  } catch (const closure_error& e) {
    at.fail(std::string("elements are not closed under the operations: ") + e.what());
  } catch (const structural_error& e) {
    at.fail(e.what());
  }
}

inline json to_json(const FBSysN& d) {
  json sat = json::array();
  for (std::size_t x = 0; x < d.npoints(); ++x) sat.push_back(d.row(x));
  return {{"kind", "fbsys"}, {"points", d.points}, {"algebra", to_json(d.alg)}, {"sat", sat}};
}

// Grades are chain indices k, standing for k/(n-1).
inline FBSysN fbsys_from_json(const json& j, const At& at = {}) {
  expect_kind(j, "fbsys", at);
  FBSysN d;
  d.points = read_points(need(j, "points", at), at / "points");
  d.alg = algebra_from_json(need(j, "algebra", at), at / "algebra");
  const auto& sat = need_array(need(j, "sat", at), at / "sat");
  if (sat.size() != d.npoints()) (at / "sat").fail("expected one row per point");
  for (std::size_t x = 0; x < sat.size(); ++x) {
    auto row = read_ints(sat[x], at / "sat" / x);
    if (row.size() != d.nelems()) (at / "sat" / x).fail("expected one grade per algebra element");
    for (int v : row)
      if (v < 0 || v >= d.alg.n) (at / "sat" / x).fail("grade index outside the chain");
    d.sat.insert(d.sat.end(), row.begin(), row.end());
  }
  return d;
}

// ---- proofs ----

inline json to_json(const ProofNode& n) {
  json j{{"rule", n.rule}, {"sequent", to_string(n.conclusion)}};
  if (n.term) j["term"] = to_string(*n.term);
  if (!n.premises.empty()) {
    json ps = json::array();
    for (auto& p : n.premises) ps.push_back(to_json(p));
    j["premises"] = ps;
  }
  return j;
}

inline json proof_json(const ProofNode& root) {
  auto j = to_json(root);
  json out{{"kind", "proof"}};
  for (auto& [k, v] : j.items()) out[k] = v;
  return out;
}

inline ProofNode proof_from_json(const json& j, const std::set<std::string>& constants, const At& at = {}) {
  ProofNode n;
  n.rule = read_string(need(j, "rule", at), at / "rule");
  auto seq = read_string(need(j, "sequent", at), at / "sequent");
  try {
    n.conclusion = parse_sequent(seq, constants);
    if (j.contains("term")) n.term = parse_term(read_string(j["term"], at / "term"), constants);
  } catch (const parse_error& e) {
    (at / "sequent").fail(e.what());
  }
  if (j.contains("premises")) {
    const auto& ps = need_array(j["premises"], at / "premises");
    for (std::size_t i = 0; i < ps.size(); ++i) n.premises.push_back(proof_from_json(ps[i], constants, at / "premises" / i));
  }
  return n;
}

// ---- theories ----

inline std::string to_text(const Theory& th) {
  const auto& I = th.interp;
  std::ostringstream os;
  os << "domain:";
  for (auto& d : I.domain) os << " " << d;
  os << "\n";
  for (auto& [c, d] : I.constants) os << "const " << c << " = " << I.domain[d] << "\n";
  auto tuple = [&](std::size_t i, int arity) {
    auto t = I.tuple_at(i, arity);
    std::string s = arity == 1 ? "" : "(";
    for (int k = 0; k < arity; ++k) s += (k ? "," : "") + I.domain[t[k]];
    return s + (arity == 1 ? "" : ")");
  };
  for (auto& [f, fn] : I.functions) {
    os << "fun " << f << "(" << fn.arity << "):";
    for (std::size_t i = 0; i < fn.table.size(); ++i) os << (i ? ", " : " ") << tuple(i, fn.arity) << "->" << I.domain[fn.table[i]];
    os << "\n";
  }
  for (auto& [p, pr] : I.predicates) {
    os << "pred " << p << "(" << pr.arity << "):";
    if (pr.arity == 0) {
      os << " " << pr.table[0] << "\n";
      continue;
    }
    bool first = true;
    for (std::size_t i = 0; i < pr.table.size(); ++i)
      if (!pr.table[i].is_zero()) {
        os << (first ? " " : ", ") << tuple(i, pr.arity) << "=" << pr.table[i];
        first = false;
      }
    os << "\n";
  }
  for (auto& g : th.sequents) os << "seq: " << to_string(g.seq) << " @ " << g.grade << "\n";
  return os.str();
}

// ---- reports ----

inline json to_json(const Report& r) {
  json fs = json::array();
  for (auto& f : r.failures) fs.push_back({{"law", f.law}, {"witness", f.witness}});
  return {{"kind", "report"}, {"ok", r.ok()}, {"failures", fs}};
}

// ---- DOT ----

// Hasse diagram, bottom to top.
inline std::string to_dot(const FinitePoset& p, const std::string& name = "poset") {
  std::ostringstream os;
  auto q = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  os << "digraph " << q(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (auto& n : p.names) os << "  " << q(n) << ";\n";
  for (auto [a, b] : p.covers()) os << "  " << q(p.names[a]) << " -> " << q(p.names[b]) << ";\n";
  os << "}\n";
  return os.str();
}

// ---- files ----

// "-" and /dev/stdin read standard input once; later reads see the same text.
inline std::string read_file(const std::string& path) {
  if (path == "-" || path == "/dev/stdin") {
    static std::optional<std::string> stdin_text;
    if (!stdin_text) {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      stdin_text = ss.str();
    }
    return *stdin_text;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(origin + ": " + e.what());
  }
}

// "file.json" or "file.json#name", where the file holds {"kind": "workspace", "objects": {...}}.
inline json load_ref(const std::string& ref) {
  auto hash = ref.find('#');
  auto path = ref.substr(0, hash);
  auto doc = parse_json(read_file(path), path);
  if (hash == std::string::npos) {
    if (doc.is_object() && doc.value("kind", "") == "workspace") throw input_error(path + ": a workspace needs '#name'");
    return doc;
  }
  auto name = ref.substr(hash + 1);
  if (!doc.is_object() || doc.value("kind", "") != "workspace") throw input_error(path + ": '#" + name + "' needs a workspace file");
  const auto& objs = doc["objects"];
  if (!objs.is_object() || !objs.contains(name)) throw input_error(path + ": no object named '" + name + "'");
  return objs[name];
}

}  // namespace fuzzytop::io
