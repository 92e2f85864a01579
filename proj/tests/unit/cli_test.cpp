// Runs the built command-line tool against the example data.
#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(FUZZYTOP_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string ex(const std::string& name) { return std::string(FUZZYTOP_EXAMPLES) + "/" + name; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("fuzzytop-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string tmp(const std::string& name) { return (dir / name).string(); }
  std::string write(const std::string& name, const std::string& text) {
    std::ofstream(tmp(name)) << text;
    return tmp(name);
  }
  // Builds an object with the given verb and checks that the output passes `check`.
  void round_trip(const std::string& verb, const std::string& name) {
    auto made = run(verb + " -o " + tmp(name));
    ASSERT_EQ(made.code, 0) << verb;
    auto checked = run("check " + tmp(name));
    EXPECT_EQ(checked.code, 0) << verb << "\n" << checked.out;
  }
  fs::path dir;
};

}  // namespace

TEST_F(Cli, ExamplesPassCheck) {
  for (auto f : {"space.json", "frame.json", "algebra.json", "cities.theory", "workspace.json"}) {
    auto r = run("check " + ex(f));
    EXPECT_EQ(r.code, 0) << f << "\n" << r.out;
    EXPECT_NE(r.out.find("pass"), std::string::npos);
  }
}

TEST_F(Cli, GradeOfReflexiveSequentIsOne) {
  auto r = run("grade " + ex("cities.theory") + " \"road(x,y) |- road(x,y)\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run("grade " + ex("cities.theory") + " \"road(x,y) |- busy(y)\"").out, "1/4\n");
}

TEST_F(Cli, ConstructionsReparseAndPassCheck) {
  round_trip("j " + ex("space.json"), "sys.json");
  auto sys = tmp("sys.json");
  round_trip("product " + sys + " " + sys, "product.json");
  round_trip("sum " + sys + " " + sys + " " + sys, "sum.json");
  round_trip("ext " + sys, "ext.json");
  round_trip("quotient " + sys, "quotient.json");
  round_trip("spectrum " + sys, "spectrum.json");
  round_trip("spectrum " + ex("frame.json") + " --values 1/3,2/3", "spectrum-frame.json");
  round_trip("j --graded " + ex("space.json"), "graded.json");
  round_trip("ext --graded " + tmp("graded.json"), "graded-ext.json");
  round_trip("quotient --graded " + tmp("graded.json"), "graded-quotient.json");
  round_trip("mvn s-b " + ex("algebra.json"), "fbsys.json");
  round_trip("mvn ext-b " + tmp("fbsys.json"), "boolean-space.json");
  round_trip("mvn j-b " + tmp("boolean-space.json"), "fbsys-again.json");
  round_trip("mvn chain 5", "chain.json");
  round_trip("alpha " + ex("workspace.json") + "#lifted --at 1/2", "cut.json");
  round_trip("alpha " + ex("workspace.json") + "#lifted --at 1/2 --fuzzy", "fuzzy-cut.json");
}

TEST_F(Cli, FailedLawsExitOneWithWitnesses) {
  auto f = write("bad-system.json", R"({"kind":"system","points":["x"],"frame":{"chain":3},"sat":[[0,1,"1/2"]]})");
  auto r = run("check " + f);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("meet clause [x,1,2]"), std::string::npos) << r.out;
  auto j = run("check --json " + f);
  EXPECT_EQ(j.code, 1);
  EXPECT_NE(j.out.find("\"ok\": false"), std::string::npos);
}

TEST_F(Cli, MalformedInputExitsTwoWithPosition) {
  auto f = write("bad-frame.json", R"({"kind":"frame","elements":["0","1"],"order":[["0","q"]]})");
  auto r = run("check " + f, true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("bad-frame.json: /order/0: unknown element 'q'"), std::string::npos) << r.out;

  auto t = write("bad.theory", "domain: a b\npred p(1): (a)=1\nseq: p(x) |- p(x @ 1\n");
  auto rt = run("check " + t, true);
  EXPECT_EQ(rt.code, 2);
  EXPECT_NE(rt.out.find("bad.theory:3:"), std::string::npos) << rt.out;

  EXPECT_EQ(run("check " + tmp("missing.json")).code, 2);
  EXPECT_EQ(run("grade " + ex("cities.theory") + " \"road(x |- true\"").code, 2);
  EXPECT_EQ(run("no-such-verb").code, 2);
  EXPECT_EQ(run("product " + ex("space.json") + " " + ex("space.json")).code, 2);
}

TEST_F(Cli, DerivationFromTheory) {
  auto r = run("derive " + ex("cities.theory") + " " + ex("proof.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("bound: 1/4"), std::string::npos);
}

TEST_F(Cli, LawsAreDeterministicAndReportJson) {
  auto a = run("laws --suite arrow --instances 200 --json");
  auto b = run("laws --suite arrow --instances 200 --json --seed 20240611");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"kind\": \"laws\""), std::string::npos);
  EXPECT_NE(a.out.find("\"seed\": 20240611"), std::string::npos);
  auto c = run("laws --suite logic --instances 20");
  EXPECT_EQ(c.code, 0) << c.out;
  EXPECT_EQ(run("laws --suite nonsense").code, 2);
}

TEST_F(Cli, DotGoesToStdout) {
  auto r = run("export-dot " + ex("frame.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_NE(r.out.find("\"p\" -> \"1\""), std::string::npos);
  EXPECT_EQ(run("export-dot " + ex("algebra.json")).code, 0);
}

TEST_F(Cli, AlgebraReports) {
  auto h = run("mvn homs " + ex("algebra.json"));
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out.rfind("2 homomorphisms", 0), 0u);
  EXPECT_EQ(run("mvn bijection " + ex("algebra.json")).code, 0);
  EXPECT_EQ(run("mvn terms " + ex("algebra.json")).code, 0);
  auto s = run("mvn subalgebras --n 3 --x 3");
  EXPECT_EQ(s.out.rfind("5 subalgebras", 0), 0u);
}

TEST_F(Cli, ChecksPipedInput) {
  std::string cli = FUZZYTOP_CLI;
  auto r = run("j " + ex("space.json") + " | " + cli + " check -");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, "system -: pass\n");
  auto t = run("check /dev/stdin < " + ex("cities.theory"));
  EXPECT_EQ(t.code, 0) << t.out;
}
