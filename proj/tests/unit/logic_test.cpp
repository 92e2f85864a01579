#include <fuzzytop/logic.hpp>

#include <gtest/gtest.h>

using namespace fuzzytop;

namespace {

TruthValue v(const char* s) { return TruthValue::parse(s); }

const char* towns = R"(# three towns
domain: a b c
const home = a
fun next(1): a->b, b->c, c->a
pred road(2): (a,b)=1, (b,c)=1/2, (c,a)=1/4
pred busy(1): (a)=1, (b)=1/2, (c)=1/4
seq: busy(x) |- exists y. road(x,y) @ 1/2
seq: road(x,y) |- busy(x) @ 1/4
)";

Theory theory() { return parse_theory(towns); }

TruthValue grade(const Theory& th, const char* q) { return sequent_grade(parse_sequent(q, th.interp.constant_names()), th.interp); }

ProofNode node(std::string rule, const char* seq, std::vector<ProofNode> premises = {}) {
  return {std::move(rule), parse_sequent(seq), std::move(premises), std::nullopt};
}

}  // namespace

TEST(Parser, PrintedFormulasReparseToTheSameTree) {
  for (const char* s : {"p(x) & q(f(x,y))", "exists y. (p(y) | q(y) | true)", "x = c & false", "(|)",
                        "exists x. exists y. r(x,y) & x = y", "(p(x) | q(x)) & r(x,x)"}) {
    auto f = parse_formula(s, {"c"});
    EXPECT_EQ(parse_formula(to_string(f), {"c"}), f) << s;
  }
}

TEST(Parser, ConstantsAreDistinguishedFromVariables) {
  auto t = parse_term("f(c, x)", {"c"});
  ASSERT_EQ(t.args.size(), 2u);
  EXPECT_EQ(t.args[0].kind, Term::Kind::constant);
  EXPECT_EQ(t.args[1].kind, Term::Kind::var);
}

TEST(Parser, ErrorsCarryLineAndColumn) {
  try {
    parse_formula("p(x & q");
    FAIL() << "no error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 1u);
  }
  try {
    parse_theory("domain: a b\npred p(1): (a)=1\nseq: p(x) |- p(x) @ 3/2\n");
    FAIL() << "no error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Theory, ParsesTablesAndSequents) {
  auto th = theory();
  EXPECT_EQ(th.interp.domain.size(), 3u);
  EXPECT_EQ(th.interp.constants.at("home"), 0);
  EXPECT_EQ(th.sequents.size(), 2u);
  EXPECT_EQ(th.sequents[0].grade, v("1/2"));
  EXPECT_TRUE(check_interpretation(th.interp).ok());
}

TEST(Grades, HandComputedOnTowns) {
  auto th = theory();
  EXPECT_EQ(grade(th, "road(x,y) |- road(x,y)"), v("1"));
  EXPECT_EQ(grade(th, "busy(x) |- exists y. road(x,y)"), v("1"));
  // (b,c): 1/2 -> busy(c) = 1/4 is the worst case
  EXPECT_EQ(grade(th, "road(x,y) |- busy(y)"), v("1/4"));
  // the diagonal has no roads
  EXPECT_EQ(grade(th, "x = y |- road(x,y)"), v("0"));
  // next has no fixed point
  EXPECT_EQ(grade(th, "next(x) = x |- false"), v("1"));
  EXPECT_EQ(grade(th, "true |- busy(home)"), v("1"));
  EXPECT_EQ(grade(th, "true |- busy(next(next(home)))"), v("1/4"));
}

TEST(Grades, ReflexiveSequentIsAlwaysOne) {
  auto th = theory();
  for (const char* f : {"busy(x)", "exists y. road(y,x) & busy(y)", "false", "x = next(y) | road(y,x)"}) {
    auto phi = parse_formula(f, th.interp.constant_names());
    EXPECT_EQ(sequent_grade(phi, phi, th.interp), v("1")) << f;
  }
}

TEST(Signature, UnknownSymbolsAndWrongArity) {
  auto th = theory();
  EXPECT_THROW(check_signature(parse_formula("nope(x)"), th.interp), signature_error);
  EXPECT_THROW(check_signature(parse_formula("road(x)"), th.interp), signature_error);
  EXPECT_THROW(check_signature(parse_formula("busy(next(x,y))"), th.interp), signature_error);
}

TEST(Frobenius, FailsWhenTheBoundVariableIsFreeOnTheLeft) {
  auto th = parse_theory("domain: a b\npred p(1): (a)=1\npred q(1): (b)=1\n");
  // p(y) & exists y. q(y) is p(y); nothing satisfies both p and q
  EXPECT_EQ(grade(th, "p(y) & exists y. q(y) |- exists y. (p(y) & q(y))"), v("0"));
  EXPECT_EQ(grade(th, "p(x) & exists y. q(y) |- exists y. (p(x) & q(y))"), v("1"));
  auto bad = check_derivation({}, node("frobenius", "p(y) & exists y. q(y) |- exists y. (p(y) & q(y))"));
  EXPECT_FALSE(bad.report.ok());
  auto good = check_derivation({}, node("frobenius", "p(x) & exists y. q(y) |- exists y. (p(x) & q(y))"));
  EXPECT_TRUE(good.report.ok());
}

TEST(Derivations, BoundIsTheLeastPremiseGrade) {
  auto th = theory();
  auto tree = node("cut", "road(x,y) |- exists y. road(x,y)",
                   {node("premise", "road(x,y) |- busy(x)"), node("premise", "busy(x) |- exists y. road(x,y)")});
  auto d = check_derivation(th.sequents, tree, &th.interp);
  EXPECT_TRUE(d.report.ok()) << d.report;
  EXPECT_EQ(d.bound, v("1/4"));
}

TEST(Derivations, MismatchedStepsAreReported) {
  auto th = theory();
  auto tree = node("cut", "road(x,y) |- busy(y)",
                   {node("premise", "road(x,y) |- busy(x)"), node("premise", "busy(x) |- exists y. road(x,y)")});
  EXPECT_FALSE(check_derivation(th.sequents, tree).report.ok());
  EXPECT_FALSE(check_derivation(th.sequents, node("premise", "busy(x) |- road(x,x)")).report.ok());
  EXPECT_FALSE(check_derivation(th.sequents, node("magic", "true |- true")).report.ok());
  EXPECT_TRUE(check_derivation({}, node("refl", "busy(x) |- busy(x)")).report.ok());
}

TEST(Substitution, FreeForAndCapture) {
  auto f = parse_formula("exists y. r(x,y)");
  EXPECT_FALSE(free_for(Term::v("y"), "x", f));
  EXPECT_TRUE(free_for(Term::v("z"), "x", f));
  EXPECT_EQ(to_string(subst_formula(f, Term::v("z"), "x")), "(exists y. r(z,y))");
  // bound occurrences are left alone
  EXPECT_EQ(subst_formula(f, Term::v("z"), "y"), f);
}

TEST(Classical, CrispPredicatesGiveCrispGrades) {
  auto th = parse_theory("domain: a b\npred p(1): (a)=1\npred r(2): (a,b)=1, (b,b)=1\n");
  auto f = parse_formula("exists y. r(x,y) & p(x)");
  for (auto& env : environments({"x"}, th.interp))
    EXPECT_EQ(grade_sat(env, f, th.interp), classical_sat(env, f, th.interp) ? v("1") : v("0"));
}

TEST(Lindenbaum, ClassesAreSpatialAndGraded) {
  auto th = theory();
  std::vector<Formula> fs;
  for (const char* s : {"busy(x)", "exists y. road(x,y)", "road(x,x)", "x = home"})
    fs.push_back(parse_formula(s, th.interp.constant_names()));
  auto L = lindenbaum(th.interp, fs);
  EXPECT_TRUE(check_graded_system(L.sys).ok());
  EXPECT_TRUE(is_spatial(L.sys.base));
  // busy(x) and exists y. road(x,y) both take 1, 1/2, 1/4 on a, b, c; road(x,x) is empty
  EXPECT_EQ(L.class_of[0], L.class_of[1]);
  EXPECT_NE(L.class_of[0], L.class_of[2]);
}

TEST(PropTheory, TheoryOfASpaceSatisfiesItsLaws) {
  auto s = generate_topology({"a", "b"}, {FuzzySubset({v("1/2"), v("1")}), FuzzySubset({v("1"), v("0")})});
  auto t = theory_from_space(s);
  EXPECT_EQ(t.vars.size(), s.opens.size());
  EXPECT_TRUE(check_prop_theory(t).ok());
}
