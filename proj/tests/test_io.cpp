#include "test_util.hpp"

using namespace hopfrank;
using testutil::A17;
using testutil::D2;

namespace {

const char* k_json = R"({"p":17,"family":"d-taft","n":2,"dim":1,
  "generators":{"x":[[0]],"X":[[0]],"g":[[1]],"G":[[1]]}})";

void expect_parse_error(const std::string& text, const std::string& mention) {
  try {
    parse_module_json(text);
    ADD_FAILURE() << "expected ParseError mentioning " << mention;
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parse_error) << e.what();
    EXPECT_NE(std::string(e.what()).find(mention), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(ModuleJsonTest, ParsesTrivialModule) {
  Rep k = parse_module_json(k_json);
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.alg().family, "d-taft");
  EXPECT_EQ(k.gen("g")(0, 0), 1u);
  EXPECT_TRUE(same_algebra(k.algebra(), D2()));
}

TEST(ModuleJsonTest, RoundTrip) {
  auto D = D2();
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rep m = random_module(D, 1 + s % 2, 1 + s % 4, s);
    const std::string text = write_module_json(m);
    Rep back = parse_module_json(text);
    EXPECT_EQ(back.gens(), m.gens());
    EXPECT_EQ(write_module_json(back), text);
  }
  for (const auto& [name, m] : standard_modules(A17())) {
    Rep back = parse_module_json(write_module_json(m));
    EXPECT_EQ(back.gens(), m.gens()) << name;
  }
}

TEST(ModuleJsonTest, RowMajorLayout) {
  auto H = subalgebra_H(D2(), ProjPoint::normalize(D2()->field, 1, 0));
  const std::string text = write_module_json(induce(H, sub_trivial(H)));
  EXPECT_NE(text.find(R"("X":[[0,0],[1,0]])"), std::string::npos) << text;
  EXPECT_NE(text.find(R"("g":[[1,0],[0,16]])"), std::string::npos) << text;
  EXPECT_EQ(text.back(), '\n');
}

TEST(ModuleJsonTest, RejectsBadInput) {
  expect_parse_error("{not json", "malformed");
  expect_parse_error("[1,2]", "object");
  expect_parse_error(R"({"family":"d-taft","n":2,"dim":1,"generators":{}})", "'p'");
  expect_parse_error(R"({"p":17,"family":"e8","n":2,"dim":1,"generators":{}})", "family");
  expect_parse_error(R"({"p":17,"family":"d-taft","n":2,"dim":1,
    "generators":{"x":[[0]],"X":[[0]],"g":[[17]],"G":[[1]]}})",
                     "generators.g[0][0]");
  expect_parse_error(R"({"p":17,"family":"d-taft","n":2,"dim":1,
    "generators":{"x":[[0]],"X":[[0]],"g":[[-1]],"G":[[1]]}})",
                     "residue");
  expect_parse_error(R"({"p":17,"family":"d-taft","n":2,"dim":1,
    "generators":{"x":[[0]],"X":[[0]],"g":[[1]]}})",
                     "generators.G");
  expect_parse_error(R"({"p":17,"family":"d-taft","n":2,"dim":1,
    "generators":{"x":[[0]],"X":[[0]],"g":[[1]],"G":[[1]],"h":[[1]]}})",
                     "generators.h");
  expect_parse_error(R"({"p":17,"family":"d-taft","n":2,"dim":2,
    "generators":{"x":[[0]],"X":[[0]],"g":[[1]],"G":[[1]]}})",
                     "rows");
}

TEST(ModuleJsonTest, RelationsAreChecked) {
  EXPECT_ERRC(parse_module_json(R"({"p":17,"family":"d-taft","n":2,"dim":1,
    "generators":{"x":[[0]],"X":[[0]],"g":[[2]],"G":[[1]]}})"),
              errc::relation_violated);
  EXPECT_ERRC(parse_module_json(R"({"p":17,"family":"d-taft","n":2,"dim":1,
    "generators":{"x":[[1]],"X":[[0]],"g":[[1]],"G":[[1]]}})"),
              errc::relation_violated);
  EXPECT_ERRC(parse_module_json(R"({"p":15,"family":"d-taft","n":2,"dim":1,
    "generators":{"x":[[0]],"X":[[0]],"g":[[1]],"G":[[1]]}})"),
              errc::not_prime);
}

TEST(ModuleJsonTest, Files) {
  const std::string path = ::testing::TempDir() + "hopfrank_io_k.json";
  write_module_file(standard_modules(D2()).at("P+"), path);
  EXPECT_EQ(read_module_file(path).dim(), 4u);
  EXPECT_ERRC(read_module_file(::testing::TempDir() + "does/not/exist.json"), errc::parse_error);
}

TEST(DescriptorTest, Fields) {
  auto j = algebra_descriptor(*D2());
  EXPECT_EQ(j["p"], 17);
  EXPECT_EQ(j["q"], 16);
  EXPECT_EQ(j["dim"], 16);
  EXPECT_EQ(j["family"], "d-taft");
  EXPECT_EQ(j["generators"].size(), 4u);
  EXPECT_EQ(j["basis"].size(), 16u);
  EXPECT_EQ(algebra_descriptor(*A17())["dim"], 8);
  EXPECT_ERRC(family_algebra("e8", 2, 17), errc::unsupported_algebra);
  EXPECT_EQ(family_algebra("d-taft", 2, 17).get(), D2().get());
}
