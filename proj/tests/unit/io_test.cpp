#include <fuzzytop/io.hpp>

#include <gtest/gtest.h>

using namespace fuzzytop;
using io::json;

namespace {

TruthValue v(const char* s) { return TruthValue::parse(s); }

FuzzyTopSpace two_point() {
  return generate_topology({"a", "b"}, {FuzzySubset({v("1/2"), v("1")}), FuzzySubset({v("1"), v("0")})});
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const io::input_error& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(Json, FrameRoundTrip) {
  auto f = FiniteFrame::from_edges({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto g = io::frame_from_json(io::to_json(f));
  EXPECT_EQ(g.poset.names, f.poset.names);
  EXPECT_EQ(g.poset.le, f.poset.le);
  EXPECT_EQ(io::frame_from_json(json{{"kind", "frame"}, {"chain", 4}}).size(), 4u);
}

TEST(Json, SpaceAndSystemRoundTrip) {
  auto s = two_point();
  EXPECT_EQ(io::space_from_json(io::to_json(s)), s);
  auto d = j(s);
  auto e = io::system_from_json(io::to_json(d));
  EXPECT_EQ(e.points, d.points);
  EXPECT_EQ(e.sat, d.sat);
  auto g = j_g(s);
  EXPECT_EQ(io::graded_system_from_json(io::to_json(g)).r, g.r);
}

TEST(Json, AlgebraAndBooleanSystemRoundTrip) {
  auto A = io::algebra_from_json(json::parse(R"({"kind":"algebra","n":3,"x":2,"generators":[[1,0]]})"));
  EXPECT_EQ(A.size(), 9u);
  EXPECT_EQ(io::algebra_from_json(io::to_json(A)).vec, A.vec);
  auto d = s_B(A);
  auto e = io::fbsys_from_json(io::to_json(d));
  EXPECT_EQ(e.sat, d.sat);
  EXPECT_TRUE(check_fbsys(e).ok());
}

TEST(Json, TheoryTextRoundTrip) {
  auto th = parse_theory("domain: a b\nconst c = b\nfun f(1): a->b, b->a\npred p(2): (a,b)=1/3\nseq: p(x,c) |- exists y. p(x,y) @ 2/3\n");
  auto again = parse_theory(io::to_text(th));
  EXPECT_EQ(again.interp.domain, th.interp.domain);
  EXPECT_EQ(again.interp.predicates.at("p").table, th.interp.predicates.at("p").table);
  ASSERT_EQ(again.sequents.size(), 1u);
  EXPECT_EQ(again.sequents[0].seq, th.sequents[0].seq);
  EXPECT_EQ(again.sequents[0].grade, v("2/3"));
}

TEST(Json, ProofRoundTrip) {
  ProofNode leaf{"premise", parse_sequent("p(x) |- q(x)"), {}, std::nullopt};
  ProofNode root{"cut", parse_sequent("p(x) |- r(x)"), {leaf, {"premise", parse_sequent("q(x) |- r(x)"), {}, std::nullopt}}, std::nullopt};
  auto back = io::proof_from_json(io::proof_json(root), {});
  EXPECT_EQ(back.rule, "cut");
  EXPECT_EQ(back.conclusion, root.conclusion);
  ASSERT_EQ(back.premises.size(), 2u);
  EXPECT_EQ(back.premises[1].conclusion, root.premises[1].conclusion);
}

TEST(Diagnostics, PointersNameTheOffendingField) {
  EXPECT_EQ(error_of([] { io::frame_from_json(json::parse(R"({"kind":"frame","elements":["0","a"],"order":[["0","q"]]})")); }),
            "/order/0: unknown element 'q'");
  EXPECT_NE(error_of([] {
              io::system_from_json(json::parse(R"({"kind":"system","points":["x"],"frame":{"chain":3},"sat":[[0,1]]})"));
            }).find("/sat"),
            std::string::npos);
  EXPECT_NE(error_of([] { io::space_from_json(json::parse(R"({"kind":"space","points":["a"],"opens":[["3/2"]]})")); })
                .find("/opens/0"),
            std::string::npos);
  EXPECT_NE(error_of([] { io::kind_of(json::parse("[1]")); }).find("kind"), std::string::npos);
  EXPECT_NE(error_of([] { io::space_from_json(json::parse(R"({"kind":"frame","chain":2})")); }).find("kind"), std::string::npos);
}

TEST(Dot, CoverEdgesOnly) {
  auto dot = io::to_dot(chain_frame(3).poset, "c3");
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("\"0\" -> \"1\""), std::string::npos);
  EXPECT_EQ(dot.find("\"0\" -> \"2\""), std::string::npos);
}

TEST(Report, JsonShape) {
  Report r;
  r.fail("meet clause", "x,a,b");
  auto j = io::to_json(r);
  EXPECT_EQ(j["kind"], "report");
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["failures"][0]["law"], "meet clause");
}
