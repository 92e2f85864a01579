#include <fuzzytop/io.hpp>
#include <fuzzytop/laws.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fuzzytop;
using io::json;

namespace {

enum Exit { ok = 0, failed = 1, bad_input = 2 };

struct Globals {
  bool json = false;
  std::string out;
};

Globals G;

struct Doc {
  std::string ref;
  json j;
  std::string kind;
};

Doc load(const std::string& ref) {
  // A bare workspace file is checked as a whole; other verbs need file.json#name.
  bool whole = ref.find('#') == std::string::npos;
  Doc d{ref, whole ? io::parse_json(io::read_file(ref), ref) : io::load_ref(ref), {}};
  try {
    d.kind = io::kind_of(d.j);
  } catch (const io::input_error& e) {
    throw io::input_error(ref + ": " + e.what());
  }
  return d;
}

// Runs a reader, prefixing any diagnostic with the reference it came from.
template <class F>
auto read(const Doc& d, F f) {
  try {
    return f(d.j, io::At{});
  } catch (const io::input_error& e) {
    throw io::input_error(d.ref + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw io::input_error(d.ref + ": " + e.what());
  }
}

template <class F>
auto read_as(const std::string& ref, const std::string& kind, F f) {
  auto d = load(ref);
  if (d.kind != kind) throw io::input_error(ref + ": expected kind \"" + kind + "\", found \"" + d.kind + "\"");
  return read(d, f);
}

void emit_text(const std::string& s) {
  if (G.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(G.out, std::ios::binary);
  if (!f) throw io::input_error(G.out + ": cannot write");
  f << s;
}

void emit(const json& j) { emit_text(j.dump(2) + "\n"); }

int report_exit(const std::string& what, const Report& r, json extra = json::object()) {
  if (G.json) {
    auto j = io::to_json(r);
    j["object"] = what;
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(j);
  } else {
    std::ostringstream os;
    for (auto& [k, v] : extra.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    if (r.ok()) os << what << ": pass\n";
    else {
      os << what << ": " << r.failures.size() << " failed law" << (r.failures.size() == 1 ? "" : "s") << "\n";
      for (auto& f : r.failures) os << "  " << f.law << (f.witness.empty() ? "" : " [" + f.witness + "]") << "\n";
    }
    emit_text(os.str());
  }
  return r.ok() ? ok : failed;
}

// ---- theories ----

bool is_json_file(const std::string& ref) {
  auto text = io::read_file(ref.substr(0, ref.find('#')));
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

Theory load_theory(const std::string& ref) {
  auto path = ref.substr(0, ref.find('#'));
  std::string body = io::read_file(path);
  if (is_json_file(ref)) {
    auto d = load(ref);
    if (d.kind != "theory") throw io::input_error(ref + ": expected kind \"theory\"");
    body = read(d, [](const json& j, const io::At& at) { return io::read_string(io::need(j, "text", at), at / "text"); });
  }
  try {
    return parse_theory(body);
  } catch (const parse_error& e) {
    throw io::input_error(path + ":" + e.what());
  }
}

// ---- check ----

Report check_object(const Doc& d) {
  const auto& k = d.kind;
  if (k == "frame") return check_frame(read(d, io::frame_from_json));
  if (k == "graded-frame") return check_graded_frame(read(d, io::graded_frame_from_json));
  if (k == "space") return check_space(read(d, io::space_from_json));
  if (k == "system") return check_system(read(d, io::system_from_json));
  if (k == "graded-system") return check_graded_system(read(d, io::graded_system_from_json));
  if (k == "l-space") return check_L_space(read(d, io::l_space_from_json));
  if (k == "l-system") return check_L_system(read(d, io::l_system_from_json));
  if (k == "algebra") return check_lnc(read(d, io::algebra_from_json));
  if (k == "fbsys") return check_fbsys(read(d, io::fbsys_from_json));
  if (k == "theory") {
    Report r = check_interpretation(load_theory(d.ref).interp);
    return r;
  }
  if (k == "workspace") {
    Report r;
    const auto& objs = d.j.contains("objects") ? d.j["objects"] : json::object();
    if (!objs.is_object()) throw io::input_error(d.ref + ": /objects: expected an object");
    for (auto& [name, obj] : objs.items()) {
      Doc sub{d.ref + "#" + name, obj, {}};
      try {
        sub.kind = io::kind_of(obj);
      } catch (const io::input_error& e) {
        throw io::input_error(sub.ref + ": " + e.what());
      }
      r.merge(check_object(sub), name);
    }
    return r;
  }
  throw io::input_error(d.ref + ": cannot check kind \"" + k + "\"");
}

FuzzyTopSystem load_system(const std::string& ref) {
  auto d = load(ref);
  if (d.kind == "graded-system") return read(d, io::graded_system_from_json).base;
  if (d.kind != "system") throw io::input_error(ref + ": expected kind \"system\", found \"" + d.kind + "\"");
  return read(d, io::system_from_json);
}

std::optional<ValueChain> chain_option(int n, const std::string& values) {
  if (n && !values.empty()) throw io::input_error("give either --chain or --values");
  if (n) return make_chain(n);
  if (values.empty()) return std::nullopt;
  std::vector<TruthValue> vs;
  std::stringstream ss(values);
  for (std::string item; std::getline(ss, item, ',');) vs.push_back(TruthValue::parse(item));
  return ValueChain::from_values(vs);
}

std::string hom_str(const LnAlgebra& A, const LnHom& v) {
  std::string s;
  for (int a = 0; a < int(A.size()); ++a) s += (a ? " " : "") + A.names[a] + "->" + chain_ops::value(A.n, v[a]).str();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite fuzzy topological systems, frames, n-valued algebras and graded geometric logic"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", G.json, "Machine-readable report");
  app.add_option("-o,--output", G.out, "Write the result to a file instead of standard output");

  std::string ref, ref2, text;
  std::vector<std::string> refs;
  bool graded = false, fuzzy = false, list = false;
  int chain_n = 0, n = 3, xsize = 1;
  std::string values, alpha_at, suite = "all";
  std::uint64_t seed = gen::default_seed;
  std::size_t instances = 0;

  auto* c_check = app.add_subcommand("check", "Check the axioms of a frame, space, system, algebra, theory or workspace");
  c_check->add_option("object", ref, "file.json or file.json#name")->required();

  auto* c_ext = app.add_subcommand("ext", "Space of extents of a system");
  c_ext->add_option("system", ref)->required();
  c_ext->add_flag("--graded", graded, "Graded space of extents");

  auto* c_j = app.add_subcommand("j", "System of a space over its frame of opens");
  c_j->add_option("space", ref)->required();
  c_j->add_flag("--graded", graded, "Graded system with graded inclusion");

  auto* c_quot = app.add_subcommand("quotient", "Identify frame elements with equal extents");
  c_quot->add_option("system", ref)->required();
  c_quot->add_flag("--graded", graded, "Graded quotient");

  auto* c_sum = app.add_subcommand("sum", "Sum of systems");
  c_sum->add_option("systems", refs)->required()->expected(1, -1);

  auto* c_prod = app.add_subcommand("product", "Product of two systems");
  c_prod->add_option("left", ref)->required();
  c_prod->add_option("right", ref2)->required();

  auto* c_spec = app.add_subcommand("spectrum", "Frame homomorphisms into a chain, as a system");
  c_spec->add_option("object", ref, "frame, graded frame or system")->required();
  c_spec->add_option("--chain", chain_n, "Uniform chain with this many values");
  c_spec->add_option("--values", values, "Chain values, comma-separated (0 and 1 are added)");

  auto* c_grade = app.add_subcommand("grade", "Grade of a sequent in the interpretation of a theory");
  c_grade->add_option("theory", ref)->required();
  c_grade->add_option("sequent", text, "e.g. \"p(x) |- exists y. r(x,y)\"")->required();

  auto* c_derive = app.add_subcommand("derive", "Check a derivation from the graded sequents of a theory");
  c_derive->add_option("theory", ref)->required();
  c_derive->add_option("proof", ref2)->required();

  auto* c_laws = app.add_subcommand("laws", "Run law suites on generated instances");
  c_laws->add_option("--suite", suite, "Suite name, 'logic' or 'all'");
  c_laws->add_option("--seed", seed, "Random seed")->capture_default_str();
  c_laws->add_option("--instances", instances, "Instances per suite (default: each suite's own)");
  c_laws->add_flag("--list", list, "List suites");

  auto* c_alpha = app.add_subcommand("alpha", "Alpha-cut of an L-space or L-system");
  c_alpha->add_option("object", ref)->required();
  c_alpha->add_option("--at", alpha_at, "Cut value")->required();
  c_alpha->add_flag("--fuzzy", fuzzy, "Fuzzy cut (default: strict crisp cut)");

  auto* c_dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  c_dot->add_option("object", ref, "frame, space, system or algebra")->required();

  auto* c_mvn = app.add_subcommand("mvn", "n-valued algebras and Boolean systems");
  c_mvn->require_subcommand(1);
  c_mvn->fallthrough();
  auto* m_check = c_mvn->add_subcommand("check", "Axioms of an algebra");
  m_check->add_option("algebra", ref)->required();
  auto* m_homs = c_mvn->add_subcommand("homs", "Homomorphisms into the chain");
  m_homs->add_option("algebra", ref)->required();
  auto* m_filters = c_mvn->add_subcommand("filters", "Filters, with the prime ones marked");
  m_filters->add_option("algebra", ref)->required();
  auto* m_bij = c_mvn->add_subcommand("bijection", "Prime filters against homomorphisms");
  m_bij->add_option("algebra", ref)->required();
  auto* m_subs = c_mvn->add_subcommand("subalgebras", "Subalgebras of the n-chain to the power X");
  m_subs->add_option("--n", n)->capture_default_str();
  m_subs->add_option("--x", xsize)->capture_default_str();
  auto* m_chain = c_mvn->add_subcommand("chain", "The n-chain as an algebra");
  m_chain->add_option("n", n)->required();
  auto* m_extb = c_mvn->add_subcommand("ext-b", "Space of extents of a Boolean system");
  m_extb->add_option("fbsys", ref)->required();
  auto* m_jb = c_mvn->add_subcommand("j-b", "Boolean system of continuous maps of a space");
  m_jb->add_option("space", ref)->required();
  auto* m_sb = c_mvn->add_subcommand("s-b", "Boolean system of homomorphisms of an algebra");
  m_sb->add_option("algebra", ref)->required();
  auto* m_terms = c_mvn->add_subcommand("terms", "Tables of the characteristic terms and their laws");
  m_terms->add_option("algebra", ref)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (c_check->parsed()) {
      if (!is_json_file(ref)) return report_exit("theory " + ref, check_interpretation(load_theory(ref).interp));
      auto d = load(ref);
      return report_exit(d.kind + " " + ref, check_object(d));
    }
    if (c_ext->parsed()) {
      auto d = load_system(ref);
      emit(io::to_json(graded ? ext_g(d) : ext(d)));
      return ok;
    }
    if (c_j->parsed()) {
      auto s = read_as(ref, "space", io::space_from_json);
      if (graded) emit(io::to_json(j_g(s)));
      else emit(io::to_json(j(s)));
      return ok;
    }
    if (c_quot->parsed()) {
      auto d = load_system(ref);
      if (graded) emit(io::to_json(quotient_g(d).sys));
      else emit(io::to_json(quotient(d).sys));
      return ok;
    }
    if (c_sum->parsed()) {
      std::vector<FuzzyTopSystem> ds;
      for (auto& r : refs) ds.push_back(load_system(r));
      emit(io::to_json(system_sum(ds).sys));
      return ok;
    }
    if (c_prod->parsed()) {
      emit(io::to_json(system_product(load_system(ref), load_system(ref2)).sys));
      return ok;
    }
    if (c_spec->parsed()) {
      auto chain = chain_option(chain_n, values);
      auto d = load(ref);
      if (d.kind == "graded-frame") {
        if (!chain) throw io::input_error("spectrum of a frame needs --chain or --values");
        emit(io::to_json(spectrum_g(read(d, io::graded_frame_from_json), *chain)));
      } else if (d.kind == "frame") {
        if (!chain) throw io::input_error("spectrum of a frame needs --chain or --values");
        emit(io::to_json(spectrum(read(d, io::frame_from_json), *chain)));
      } else {
        auto sys = load_system(ref);
        emit(io::to_json(spectrum(sys.frame, chain ? *chain : occurring_chain(sys))));
      }
      return ok;
    }
    if (c_grade->parsed()) {
      auto th = load_theory(ref);
      Sequent q;
      try {
        q = parse_sequent(text, th.interp.constant_names());
        check_signature(q.lhs, th.interp);
        check_signature(q.rhs, th.interp);
      } catch (const parse_error& e) {
        throw io::input_error("sequent:" + std::string(e.what()));
      } catch (const std::exception& e) {
        throw io::input_error("sequent: " + std::string(e.what()));
      }
      auto g = sequent_grade(q, th.interp);
      if (G.json) emit(json{{"kind", "grade"}, {"sequent", to_string(q)}, {"grade", g.str()}});
      else emit_text(g.str() + "\n");
      return ok;
    }
    if (c_derive->parsed()) {
      auto th = load_theory(ref);
      auto d = load(ref2);
      if (d.kind != "proof") throw io::input_error(ref2 + ": expected kind \"proof\"");
      auto consts = th.interp.constant_names();
      auto tree = read(d, [&](const json& j, const io::At& at) { return io::proof_from_json(j, consts, at); });
      auto res = check_derivation(th.sequents, tree, &th.interp);
      auto sem = sequent_grade(tree.conclusion, th.interp);
      return report_exit("derivation of " + to_string(tree.conclusion), res.report,
                         json{{"bound", res.bound.str()}, {"semantic grade", sem.str()}});
    }
    if (c_laws->parsed()) {
      if (list) {
        std::ostringstream os;
        for (auto& s : laws::suites()) os << s.name << "  " << s.summary << "\n";
        emit_text(os.str());
        return ok;
      }
      laws::Options opt{seed, instances ? std::optional(instances) : std::nullopt};
      auto names = laws::group(suite);
      if (names.empty()) throw io::input_error("unknown suite '" + suite + "'");
      auto rs = laws::run(suite, opt);
      bool all = true;
      for (auto& r : rs) all = all && r.ok();
      if (G.json) emit(laws::to_json(rs, seed));
      else {
        std::ostringstream os;
        os << "seed " << seed << "\n";
        for (auto& r : rs) {
          os << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances, " << r.checks << " checks";
          if (r.skipped) os << ", " << r.skipped << " skipped";
          os << ")\n";
          for (auto& n : r.notes) os << "  note: " << n << "\n";
          for (auto& f : r.report.failures) os << "  " << f.law << (f.witness.empty() ? "" : " [" + f.witness + "]") << "\n";
        }
        emit_text(os.str());
      }
      return all ? ok : failed;
    }
    if (c_alpha->parsed()) {
      TruthValue a;
      try {
        a = TruthValue::parse(alpha_at);
      } catch (const std::exception& e) {
        throw io::input_error("--at: " + std::string(e.what()));
      }
      auto d = load(ref);
      if (d.kind == "l-space") {
        auto s = read(d, io::l_space_from_json);
        if (fuzzy) emit(io::to_json(alpha_subspace_fuzzy(s, a)));
        else emit(io::to_json(alpha_subspace_strict(s, a)));
      } else if (d.kind == "l-system") {
        auto s = read(d, io::l_system_from_json);
        if (fuzzy) emit(io::to_json(alpha_subsystem_fuzzy(s, a)));
        else emit(io::to_json(alpha_subsystem_strict(s, a)));
      } else {
        throw io::input_error(ref + ": alpha-cuts apply to l-space and l-system");
      }
      return ok;
    }
    if (c_dot->parsed()) {
      auto d = load(ref);
      std::string name = ref.substr(ref.find_last_of("/#") == std::string::npos ? 0 : ref.find_last_of("/#") + 1);
      if (d.kind == "frame") emit_text(io::to_dot(read(d, io::frame_from_json).poset, name));
      else if (d.kind == "graded-frame") emit_text(io::to_dot(read(d, io::graded_frame_from_json).frame.poset, name));
      else if (d.kind == "space") emit_text(io::to_dot(space_frame(read(d, io::space_from_json)).poset, name));
      else if (d.kind == "system" || d.kind == "graded-system") emit_text(io::to_dot(load_system(ref).frame.poset, name));
      else if (d.kind == "algebra") emit_text(io::to_dot(read(d, io::algebra_from_json).frame().poset, name));
      else throw io::input_error(ref + ": no order to draw for kind \"" + d.kind + "\"");
      return ok;
    }
    if (c_mvn->parsed()) {
      auto alg = [&] { return read_as(ref, "algebra", io::algebra_from_json); };
      if (m_check->parsed()) return report_exit("algebra " + ref, check_lnc(alg()));
      if (m_homs->parsed()) {
        auto A = alg();
        auto hs = enumerate_homs(A);
        if (G.json) {
          json arr = json::array();
          for (auto& h : hs) {
            json m = json::object();
            for (int a = 0; a < int(A.size()); ++a) m[A.names[a]] = chain_ops::value(A.n, h[a]).str();
            arr.push_back(m);
          }
          emit(json{{"kind", "homs"}, {"count", hs.size()}, {"homs", arr}});
        } else {
          std::ostringstream os;
          os << hs.size() << " homomorphisms into the " << A.n << "-chain\n";
          for (auto& h : hs) os << "  " << hom_str(A, h) << "\n";
          emit_text(os.str());
        }
        return ok;
      }
      if (m_filters->parsed()) {
        auto A = alg();
        auto fs = enumerate_nfilters(A);
        if (G.json) {
          json arr = json::array();
          for (auto& f : fs) {
            json els = json::array();
            for (int e : f.elems) els.push_back(A.names[e]);
            arr.push_back({{"elements", els}, {"prime", is_prime(A, f)}});
          }
          emit(json{{"kind", "filters"}, {"filters", arr}});
        } else {
          std::ostringstream os;
          for (auto& f : fs) os << filter_str(A, f) << (is_prime(A, f) ? "  prime" : "") << "\n";
          emit_text(os.str());
        }
        return ok;
      }
      if (m_bij->parsed()) {
        auto A = alg();
        return report_exit("prime filters and homomorphisms of " + ref, bijection_check(A),
                           json{{"prime filters", prime_filters(A).size()}, {"homomorphisms", enumerate_homs(A).size()}});
      }
      if (m_subs->parsed()) {
        if (n < 2 || n > 6 || xsize < 1 || xsize > 3) throw io::input_error("--n must lie in 2..6 and --x in 1..3");
        auto subs = enumerate_subalgebras(n, std::size_t(xsize));
        if (G.json) {
          json arr = json::array();
          for (auto& A : subs) arr.push_back(io::to_json(A));
          emit(json{{"kind", "subalgebras"}, {"count", subs.size()}, {"algebras", arr}});
        } else {
          std::ostringstream os;
          os << subs.size() << " subalgebras of " << n << "^" << xsize << "\n";
          for (auto& A : subs) {
            os << "  " << A.size() << ":";
            for (auto& nm : A.names) os << " " << nm;
            os << "\n";
          }
          emit_text(os.str());
        }
        return ok;
      }
      if (m_chain->parsed()) {
        if (n < 2 || n > 12) throw io::input_error("n must lie in 2..12");
        emit(io::to_json(chain_algebra(n)));
        return ok;
      }
      if (m_extb->parsed()) {
        emit(io::to_json(ext_B(read_as(ref, "fbsys", io::fbsys_from_json))));
        return ok;
      }
      if (m_jb->parsed()) {
        emit(io::to_json(j_B(read_as(ref, "space", io::space_from_json))));
        return ok;
      }
      if (m_sb->parsed()) {
        emit(io::to_json(s_B(alg())));
        return ok;
      }
      if (m_terms->parsed()) {
        auto A = alg();
        require_representation(A);
        std::ostringstream os;
        for (int k = 0; k < A.n; ++k) {
          os << "T_" << chain_ops::value(A.n, k) << ":";
          for (int a = 0; a < int(A.size()); ++a) os << " " << A.names[a] << "->" << A.names[t_term(A, k, a)];
          os << "\n";
        }
        for (int k = 1; k < A.n; ++k) {
          os << "S_" << chain_ops::value(A.n, k) << ":";
          for (int a = 0; a < int(A.size()); ++a) os << " " << A.names[a] << "->" << A.names[s_term(A, k, a)];
          os << "\n";
        }
        auto r = check_term_laws(A);
        if (!G.json) {
          emit_text(os.str());
          G.out.clear();
        }
        return report_exit("term laws of " + ref, r);
      }
    }
  } catch (const io::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  }
  return bad_input;
}
