#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "brauer/cli.hpp"
#include "oracles.hpp"

using namespace brauer;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "brauer");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BRAUER_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("brauer-cli-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(Analyze, DiagonalIsCandidate) {
  const Invocation r = run({"analyze", "--B", data("diag12345.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["brauer_status"], "Candidate");
  EXPECT_EQ(j["s1_witness"], Json::array({"-1", "1"}));
  EXPECT_EQ(j["s2_witness"], "-3");
  EXPECT_EQ(j["disc"], "82944");
  EXPECT_EQ(j["f"], Json::array({"120", "274", "225", "85", "15", "1"}));
  EXPECT_TRUE(j["factor_type"].is_null());

  const Invocation exact = run({"analyze", "--A", data("identity.txt"), "--B", data("diag12345.txt"), "--exact"});
  ASSERT_EQ(exact.code, 0);
  EXPECT_EQ(Json::parse(exact.out)["factor_type"], Json::array({1, 1, 1, 1, 1}));
}

TEST(Analyze, ZeroPencilIsDegenerate) {
  const Invocation r = run({"analyze", "--B", data("zero.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["surface"], "Degenerate");
}

TEST(Analyze, SingularBaseMatrix) {
  const Invocation r = run({"analyze", "--A", data("singular.txt"), "--B", data("diag12345.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("det(A)=0"), std::string::npos);
}

TEST(Analyze, BadInputs) {
  EXPECT_EQ(run({"analyze", "--B", data("not_symmetric.txt")}).code, 2);
  EXPECT_EQ(run({"analyze", "--B", data("short.txt")}).code, 2);
  EXPECT_EQ(run({"analyze", "--B", data("missing.txt")}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"scan", "--P", "-1"}).code, 2);
  EXPECT_EQ(run({"scan", "--mode", "sideways"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Resolvent, Examples) {
  const Invocation zero = run({"resolvent", "--B", data("zero.txt")});
  ASSERT_EQ(zero.code, 0) << zero.err;
  Json expected = Json::array();
  for (int k = 0; k < 10; ++k) expected.push_back("0");
  expected.push_back("1");
  EXPECT_EQ(Json::parse(zero.out), expected);

  const Invocation diag = run({"resolvent", "--B", data("diag12345.txt")});
  ASSERT_EQ(diag.code, 0) << diag.err;
  const auto prod = oracle::linear_product({3, 4, 5, 5, 6, 6, 7, 7, 8, 9}, 1);
  Json want = Json::array();
  for (int k = 0; k <= 10; ++k) want.push_back(prod[k].get_str());
  EXPECT_EQ(Json::parse(diag.out), want);
}

TEST(Resolvent, LeadingCoefficientIsDetAFourth) {
  const Invocation r = run({"resolvent", "--A", data("indefinite.txt"), "--B", data("full_symmetric.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)[10], "1");
  const Invocation s = run({"resolvent", "--A", data("diag12345.txt"), "--B", data("full_symmetric.txt")});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(Json::parse(s.out)[10], std::to_string(120L * 120 * 120 * 120));
}

TEST(Scan, HeightZeroExhaustive) {
  TempDir dir;
  const Invocation r = run({"scan", "--P", "0", "--mode", "exhaustive", "--out", dir / "r.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total=1 "), std::string::npos);
  EXPECT_EQ(Json::parse(slurp(dir / "r.json"))["counts"]["total"], "1");
}

TEST(Scan, SampleRepeatsAreIdentical) {
  TempDir dir;
  for (const char* name : {"a.json", "b.json"}) {
    const Invocation r = run({"scan", "--P", "5", "--mode", "sample", "--samples", "1000", "--seed", "7", "--out", dir / name});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
  const Invocation w = run({"scan", "--P", "5", "--samples", "1000", "--seed", "7", "--workers", "3", "--out", dir / "c.json"});
  ASSERT_EQ(w.code, 0);
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "c.json"));
  const Invocation other = run({"scan", "--P", "5", "--samples", "1000", "--seed", "8", "--out", dir / "d.json"});
  ASSERT_EQ(other.code, 0);
  EXPECT_NE(slurp(dir / "a.json"), slurp(dir / "d.json"));
}

TEST(Scan, StdoutWhenNoOutFile) {
  const Invocation r = run({"scan", "--P", "2", "--samples", "200", "--seed", "1", "--A", data("indefinite.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["counts"]["total"], "200");
  EXPECT_NE(r.err.find("total=200"), std::string::npos);
}

TEST(Scan, BudgetExitCode) {
  const Invocation r = run({"scan", "--P", "3", "--mode", "exhaustive"});
  EXPECT_EQ(r.code, 4);
  EXPECT_FALSE(r.err.empty());
}

TEST(Scan, SingularBaseMatrix) {
  const Invocation r = run({"scan", "--A", data("singular.txt"), "--samples", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("det(A)=0"), std::string::npos);
}

TEST(Scan, SeriesWritesCsv) {
  TempDir dir;
  const Invocation r = run({"scan", "--samples", "300", "--seed", "3", "--series", "2,4,8", "--out", dir / "s.json", "--csv",
                     dir / "s.csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("series points=3"), std::string::npos);
  std::istringstream csv(slurp(dir / "s.csv"));
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  EXPECT_EQ(lines, 4);
}

TEST(Selfcheck, FreshBuildPasses) {
  const Invocation quiet = run({"selfcheck"});
  ASSERT_EQ(quiet.code, 0) << quiet.err;
  EXPECT_NE(quiet.out.find("suites passed"), std::string::npos);

  const Invocation verbose = run({"selfcheck", "--verbose"});
  ASSERT_EQ(verbose.code, 0) << verbose.err;
  std::istringstream lines(verbose.out);
  std::string line;
  int suites = 0;
  while (std::getline(lines, line)) suites += line.rfind("PASS ", 0) == 0;
  EXPECT_GE(suites, 6);
}

TEST(Selfcheck, CorruptedTemplatesAreCaught) {
  TempDir dir;
  ASSERT_EQ(run({"templates", "--out", dir / "t.json"}).code, 0);
  const Json good = Json::parse(slurp(dir / "t.json"));
  ASSERT_EQ(run({"selfcheck", "--templates", dir / "t.json"}).code, 0);

  // A wrong coefficient, and a term of degree five.
  Json bad_coeff = good;
  auto& term = bad_coeff["q"][5][0][0];
  term = BigInt(BigInt(term.get<std::string>()) + 1).get_str();
  Json bad_degree = good;
  bad_degree["q"][3].push_back(Json::array({"1", {5, 0, 0, 0, 0, 0}}));

  for (const Json& j : {bad_coeff, bad_degree}) {
    std::ofstream(dir / "bad.json") << j.dump();
    const Invocation r = run({"selfcheck", "--templates", dir / "bad.json"});
    EXPECT_EQ(r.code, 3);
    const bool named = r.err.find("DenominatorNotCleared") != std::string::npos ||
                       r.err.find("oracle mismatch") != std::string::npos;
    EXPECT_TRUE(named) << r.err;
  }

  std::ofstream(dir / "junk.json") << "{not json";
  EXPECT_EQ(run({"selfcheck", "--templates", dir / "junk.json"}).code, 2);
}

TEST(MatrixFile, FullFormRoundTrip) {
  const SymMat5 full = read_matrix_file(data("full_symmetric.txt"));
  const std::string upper = format_upper(full);
  const SymMat5 again = parse_matrix(upper);
  EXPECT_EQ(full, again);
  EXPECT_EQ(format_upper(again), upper);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    std::ostringstream text;
    SymMat5 m;
    for (std::size_t k = 0; k < SymMat5::kEntries; ++k) m.upper_mut(k) = oracle::uniform(rng, -1000000, 1000000);
    m.upper_mut(3) *= BigInt("100000000000000000000000");
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) text << m(r, c) << (c == 4 ? "\n" : " ");
    const SymMat5 parsed = parse_matrix(text.str());
    ASSERT_EQ(parsed, m);
    ASSERT_EQ(parse_matrix(format_upper(parsed)), m);
  }
}

TEST(MatrixFile, Comments) {
  EXPECT_EQ(read_matrix_file(data("identity.txt")), SymMat5::identity());
  EXPECT_THROW(parse_matrix("1 2 3"), Error);
  EXPECT_THROW(parse_matrix("1 2 3 4 5 6 7 8 9 10 11 12 13 14 x"), Error);
}
