// One line per acceptance criterion, PASS or FAIL, followed by indented detail.
// Exit status is 0 only when every criterion passes.
#include <fuzzytop/laws.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace fuzzytop;

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double limit_s;  // 0: no per-criterion limit
};

const Criterion criteria[] = {
    {1, "Goedel arrow laws: 10000 random triples and all of chain(5)", "arrow", 1.0},
    {2, "graded inclusion laws: 1000 triples on carriers of size <= 6", "inclusion", 5.0},
    {3, "system axioms: binary clauses agree with subset clauses on 200 systems", "system-axioms", 0},
    {4, "J -| Ext on 100 systems; Ext(J(space)) = space on 100 spaces", "j-ext", 0},
    {5, "spatial quotients with explicit isomorphisms on 100 systems", "spatial", 0},
    {6, "fm -| S transfer on 100 instances; unique mediating maps for |A| <= 6", "fm-s", 0},
    {7, "frame coproduct universal property to size 4; |3 (x) 3| = 6", "coproduct", 0},
    {8, "sums and products of 100 random pairs are systems", "sum-product", 0},
    {9, "chain algebras n = 2..6; term laws on subalgebras of 3^X, |X| <= 2", "mvn", 0},
    {10, "prime filters biject with homomorphisms, n <= 4, |X| <= 2", "spectrum", 0},
    {11, "Ext_B of 50 Boolean systems; double-dual maps are isomorphisms", "boolean", 0},
    {12, "rule soundness on 500 samples", "soundness", 0},
    {13, "local determination and substitution on 500 samples", "metatheorems", 0},
    {14, "0/1 predicates match classical satisfaction on 1000 samples", "classical", 0},
    {15, "Lindenbaum systems of 50 theories; theories of 50 graded spaces", "lindenbaum", 0},
    {16, "derivation bounds never exceed semantic grades on 100 trees", "derivation", 0},
};

constexpr double total_limit_s = 300.0;

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  laws::Options opt;
  int failed = 0;
  double total = 0;
  std::cout << "seed " << opt.seed << "\n";
  for (const auto& c : criteria) {
    auto t0 = clock::now();
    auto rs = laws::run(c.suite, opt);
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    total += secs;
    const auto& r = rs.at(0);
    bool in_time = c.limit_s == 0 || secs < c.limit_s;
    bool pass = r.ok() && in_time;
    if (!pass) ++failed;
    char line[64];
    std::snprintf(line, sizeof line, "%.3f s", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << line << ")\n";
    std::cout << "    " << r.instances << " instances, " << r.checks << " checks";
    if (r.skipped) std::cout << ", " << r.skipped << " skipped";
    std::cout << "\n";
    for (auto& n : r.notes) std::cout << "    note: " << n << "\n";
    for (auto& f : r.report.failures) std::cout << "    failed: " << f.law << (f.witness.empty() ? "" : " [" + f.witness + "]") << "\n";
    if (!in_time) std::cout << "    failed: time limit " << c.limit_s << " s\n";
  }
  bool total_ok = total < total_limit_s;
  if (!total_ok) ++failed;
  char line[64];
  std::snprintf(line, sizeof line, "%.2f s", total);
  std::cout << (total_ok ? "PASS" : "FAIL") << " total time under " << total_limit_s << " s (" << line << ")\n";
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " of " << std::size(criteria) + 1 << " lines failed\n";
  return failed ? 1 : 0;
}
