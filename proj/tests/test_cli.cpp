#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "isod4/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "isod4-verify");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = isod4::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, VerifyAllSucceeds) {
  const Result r = run({"verify-all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("theorem: OBSTRUCTED"), std::string::npos);
  EXPECT_NE(r.out.find("erratum: (4-4) ω₄ read as ω₉"), std::string::npos);
  EXPECT_EQ(r.out.find("[fail]"), std::string::npos);
}

TEST(Cli, JsonKeyOrderAndSchema) {
  const Result r = run({"verify-all", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "theorem", "checks", "errata", "axioms", "summary"}));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["theorem"]["status"], "OBSTRUCTED");
  EXPECT_EQ(j["theorem"]["f_xi1"], "(-1,2k)");
  EXPECT_EQ(j["summary"]["total"], j["summary"]["passed"]);
  for (const auto &c : j["checks"]) {
    std::vector<std::string> ck;
    for (auto it = c.begin(); it != c.end(); ++it)
      ck.push_back(it.key());
    EXPECT_EQ(ck, (std::vector<std::string>{"id", "ref", "statement", "status", "detail"}));
  }
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  EXPECT_EQ(run({"verify-all", "--format", "json"}).out, run({"verify-all", "--format", "json"}).out);
}

TEST(Cli, DiagnosticExitsOne) {
  const Result r = run({"verify-all", "--no-symmetry"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("theorem: INCONCLUSIVE"), std::string::npos);
  EXPECT_NE(r.err.find("INCONCLUSIVE"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "no.such-check"}).code, 2);
  EXPECT_EQ(run({"verify-all", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify-all", "--window", "2"}).code, 2);
  EXPECT_EQ(run({"tables", "--which", "nope"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify-all"), std::string::npos);
}

TEST(Cli, VerifySingleCheck) {
  const Result r = run({"verify", "obstruct.contradiction"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 checks"), std::string::npos);
  EXPECT_NE(r.out.find("[pass] obstruct.contradiction"), std::string::npos);
  const Result skipped = run({"verify", "pontsolve.symmetry", "--no-symmetry"});
  EXPECT_EQ(skipped.code, 1);
}

TEST(Cli, WeylOrder) {
  const Result r = run({"weyl", "--order"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "192\n");
}

TEST(Cli, Tables) {
  const Result r = run({"tables", "--which", "4-2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p1(E_a7) = kt1 - kt2 + k3t3 - k4t4"), std::string::npos);
  EXPECT_NE(r.out.find("p1(E_a12) = kt1 + k3t2 - k4t3 - kt4"), std::string::npos);
}

TEST(Cli, RootsListsTwelve) {
  const Result r = run({"roots"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a12 = (1,0,0,1)"), std::string::npos);
  EXPECT_NE(r.out.find("n = 52"), std::string::npos);
}

TEST(Cli, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "isod4_report.json";
  const Result r = run({"verify-all", "--format", "json", "--out", path});
  ASSERT_EQ(r.code, 0);
  std::ifstream f(path, std::ios::binary);
  const std::string file((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(file, r.out);
}

TEST(Report, EmptyReport) {
  const isod4::VerificationReport empty;
  EXPECT_EQ(isod4::render_text(empty), "D4 isoparametric foliation, uniform multiplicity 4, ambient R^52\n0 checks\n");
  const auto j = isod4::report_to_json(empty);
  EXPECT_TRUE(j["checks"].empty());
  EXPECT_EQ(j["summary"]["total"], 0);
}
