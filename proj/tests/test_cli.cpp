#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "test_util.hpp"

using namespace hopfrank;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

bool has_line(const std::string& s, const std::string& line) {
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(::testing::TempDir()) /
           ("hopfrank_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string standard(const std::string& name, const std::string& family = "d-taft") {
    const std::string p = path(family + "_" + name + ".json");
    EXPECT_EQ(run({"mod", "standard", "--name", name, "--family", family, "--out", p}).code, 0);
    return p;
  }

  std::string write(const std::string& name, const std::string& text) {
    const std::string p = path(name);
    std::ofstream(p) << text;
    return p;
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, InducedRankVarietyGolden) {
  const std::string f = path("induced_10.json");
  ASSERT_EQ(run({"mod", "induce", "--point", "1:0", "--out", f}).code, 0);
  auto r = run({"variety", "rank", "--module", f});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1:0\nvariety=rank\npoints=1\n");
  auto s = run({"variety", "compare", "--module", f});
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(has_line(s.out, "agree=yes")) << s.out;
  // scaled representatives normalize to the same point
  auto again = run({"mod", "induce", "--point", "3:0"});
  EXPECT_TRUE(has_line(again.out, "point=1:0")) << again.out;
}

TEST_F(CliTest, ExtDimsGolden) {
  const std::string k = standard("k");
  auto r = run({"ext", "dims", "--source", k, "--target", k, "--upto", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out), "1 0 3 0 5 0 7 0 9");
  EXPECT_TRUE(has_line(r.out, "upto=8"));
  auto a = run({"ext", "dims", "--source", standard("k+", "basic-A"), "--target", standard("k-", "basic-A"), "--upto",
                "4"});
  EXPECT_EQ(first_line(a.out), "0 2 0 4 0");
  auto mixed = run({"ext", "dims", "--source", k, "--target", standard("k+", "basic-A")});
  EXPECT_EQ(mixed.code, 2);
}

TEST_F(CliTest, SuiteGoldenAndDeterminism) {
  auto r = run({"suite", "tensor", "--trials", "100", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out;
  std::string last = r.out;
  last.pop_back();
  last = last.substr(last.rfind('\n') + 1);
  EXPECT_EQ(last, "PASS trials=100");
  EXPECT_EQ(run({"suite", "tensor", "--trials", "100", "--seed", "7"}).out, r.out);
  auto d1 = run({"suite", "dade", "--trials", "10", "--seed", "3"});
  EXPECT_EQ(d1.out, run({"suite", "dade", "--trials", "10", "--seed", "3"}).out);
  EXPECT_EQ(d1.out.find("seconds="), std::string::npos);
  auto timed = run({"suite", "dade", "--trials", "2", "--seed", "3", "--timing"});
  EXPECT_NE(timed.out.find("seconds="), std::string::npos);
  auto bad = run({"suite", "nonesuch"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.out, "");
  EXPECT_NE(bad.err.find("UnknownSuite"), std::string::npos) << bad.err;
}

TEST_F(CliTest, RandomIsDeterministic) {
  const std::string a = path("a.json"), b = path("b.json");
  auto r1 = run({"random", "--dim-hint", "2,3", "--seed", "11", "--out", a});
  auto r2 = run({"random", "--dim-hint", "2,3", "--seed", "11", "--out", b});
  ASSERT_EQ(r1.code, 0) << r1.err;
  EXPECT_EQ(r1.out.substr(0, r1.out.find("out=")), r2.out.substr(0, r2.out.find("out=")));
  std::ifstream fa(a), fb(b);
  std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(read_module_file(a).gens(), random_module(testutil::D2(), 2, 3, 11).gens());
}

TEST_F(CliTest, ModuleCommands) {
  const std::string k = standard("k"), km = standard("k-"), p = standard("P+");
  auto c = run({"mod", "check", "--module", p});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_TRUE(has_line(c.out, "dim=4"));
  EXPECT_TRUE(has_line(c.out, "top=k^1"));
  EXPECT_TRUE(has_line(c.out, "projective=yes"));
  const std::string t = path("t.json");
  auto tr = run({"mod", "tensor", "--module", km, "--with", km, "--out", t});
  EXPECT_TRUE(has_line(tr.out, "dim=1"));
  EXPECT_EQ(read_module_file(t).gens(), read_module_file(k).gens());
  auto rs = run({"mod", "restrict", "--module", p, "--point", "1:4"});
  EXPECT_TRUE(has_line(rs.out, "projective=yes")) << rs.out;
  auto rk = run({"mod", "restrict", "--module", k, "--point", "0:1"});
  EXPECT_TRUE(has_line(rk.out, "projective=no"));
  auto ind = run({"mod", "induce", "--point", "1:2", "--module", k});
  EXPECT_TRUE(has_line(ind.out, "dim=2"));
  EXPECT_EQ(run({"variety", "support", "--module", p}).out, "EMPTY\nvariety=support\npoints=0\n");
}

TEST_F(CliTest, AlgBuild) {
  const std::string out = path("d3.json");
  auto r = run({"alg", "build", "--family", "d-taft", "--n", "3", "--p", "163", "--out", out});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "dim=81"));
  EXPECT_TRUE(has_line(r.out, "hopf=verified"));
  std::ifstream in(out);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["dim"], 81);
  EXPECT_EQ(j["q"], 58);
  auto a = run({"alg", "build", "--family", "basic-A"});
  EXPECT_TRUE(has_line(a.out, "hopf=absent"));
  EXPECT_EQ(run({"alg", "build", "--n", "3", "--p", "17"}).code, 2);
  EXPECT_EQ(run({"alg", "build", "--p", "15"}).code, 2);
}

TEST_F(CliTest, ErrorsAndExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"variety", "rank"}).code, 2);
  const std::string bad = write("bad.json", R"({"p":17,"family":"d-taft","n":2,"dim":1,
    "generators":{"x":[[0]],"X":[[0]],"g":[[17]],"G":[[1]]}})");
  auto r = run({"mod", "check", "--module", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  const std::string rel = write("rel.json", R"({"p":17,"family":"d-taft","n":2,"dim":1,
    "generators":{"x":[[0]],"X":[[0]],"g":[[2]],"G":[[1]]}})");
  auto rv = run({"mod", "check", "--module", rel});
  EXPECT_EQ(rv.code, 2);
  EXPECT_NE(rv.err.find("RelationViolated"), std::string::npos) << rv.err;
  const std::string k = standard("k");
  EXPECT_EQ(run({"mod", "restrict", "--module", k, "--point", "0:0"}).code, 2);
  EXPECT_EQ(run({"mod", "restrict", "--module", k, "--point", "one:two"}).code, 2);
  EXPECT_EQ(run({"mod", "check", "--module", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliExitCodeTest, Mapping) {
  EXPECT_EQ(cli::exit_code_for(errc::parse_error), 2);
  EXPECT_EQ(cli::exit_code_for(errc::relation_violated), 2);
  EXPECT_EQ(cli::exit_code_for(errc::internal), 3);
  EXPECT_EQ(cli::exit_code_for(errc::lift_failed), 3);
}
