#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qgrowth::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, InsertExample) {
  const auto r = run({"insert", "--algo", "qcol", "--tableau", "[[1,1,3,4],[3,5,8],[6,7],[8,8]]", "--ell", "8",
                      "--letter", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  bool found = false;
  for (const auto& e : doc["results"])
    if (e["chain"] == "∅≺2≺2≺31≺41≺421≺431≺432≺4422") {
      found = true;
      EXPECT_EQ(e["display"], "q*(1-q)^2/(1+q)");
    }
  EXPECT_TRUE(found);
}

TEST(Cli, ClassicalInsert) {
  const auto r = run({"insert", "--algo", "col", "--tableau", "[[1,1,3,4],[3,5,8],[6,7],[8,8]]", "--letter", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["result"]["display"], "∅≺2≺2≺31≺41≺42≺422≺432≺4422");
}

TEST(Cli, WordExample) {
  const auto r = run({"word", "--algo", "col", "--word", "31342", "--ell", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["p_rows"], json::parse("[[1,3,3],[2],[4]]"));
  EXPECT_EQ(doc["result"]["q_rows"], json::parse("[[1,2,5],[3],[4]]"));
}

TEST(Cli, WeightedWordIsDeterministic) {
  const auto a = run({"word", "--algo", "qcol", "--word", "2132"});
  const auto b = run({"word", "--algo", "qcol", "--word", "2,1,3,2", "--unmerged"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run({"word", "--algo", "qcol", "--word", "[2,1,3,2]"}).out);
  EXPECT_EQ(json::parse(a.out)["pairs"], json::parse(b.out)["pairs"]);
  EXPECT_EQ(json::parse(a.out)["total"], "1");
}

TEST(Cli, CheckSymmetryPasses) {
  const auto r = run({"check", "symmetry", "--algo", "qcol", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(doc["cases"], 6);
}

TEST(Cli, OtherChecks) {
  EXPECT_EQ(run({"check", "normalization", "--algo", "qrow", "--ell", "2", "--n", "3"}).code, 0);
  EXPECT_EQ(run({"check", "conditions", "--algo", "dyn3", "--n", "3"}).code, 0);
  EXPECT_EQ(run({"check", "qzero", "--algo", "qrow", "--word", "24313"}).code, 0);
  EXPECT_EQ(run({"check", "numeric", "--algo", "qcol", "--q", "1/3", "--n", "3"}).code, 0);
  EXPECT_EQ(run({"check", "duality", "--ell", "2", "--n", "3"}).code, 0);
  const auto failed = run({"check", "numeric", "--algo", "dyn3", "--q", "1/2", "--n", "3"});
  EXPECT_EQ(failed.code, 1);
  EXPECT_EQ(json::parse(failed.out)["status"], "fail");
}

TEST(Cli, GrowthExports) {
  const auto dot = run({"growth", "--algo", "qcol", "--perm", "1423", "--format", "dot"});
  ASSERT_EQ(dot.code, 0) << dot.err;
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
  EXPECT_NE(dot.out.find("q/(1+q)"), std::string::npos);
  EXPECT_NE(dot.out.find("1/(1+q)"), std::string::npos);
  const auto js = run({"growth", "--algo", "qrow", "--perm", "1423"});
  ASSERT_EQ(js.code, 0) << js.err;
  EXPECT_EQ(json::parse(js.out)["variant"], "qrow");
  EXPECT_EQ(run({"growth", "--algo", "col", "--perm", "1423"}).code, 0);
}

void expect_diagnostic(const std::vector<std::string>& args, const std::string& kind) {
  const auto r = run(args);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: " + kind + ":", 0), 0u) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, DistinctDiagnostics) {
  expect_diagnostic({"word", "--algo", "qfoo", "--word", "12"}, "unknown algorithm");
  expect_diagnostic({"word", "--algo", "qcol", "--word", "1x2"}, "malformed word");
  expect_diagnostic({"insert", "--algo", "qcol", "--tableau", "[[1,2],[1]]", "--letter", "1"}, "malformed tableau");
  expect_diagnostic({"insert", "--algo", "qcol", "--tableau", "[[1,2", "--letter", "1"}, "malformed tableau");
  expect_diagnostic({"word", "--algo", "qcol", "--word", "135", "--ell", "4"}, "letter out of range");
  expect_diagnostic({"growth", "--algo", "qcol", "--perm", "1224"}, "not a permutation");
  expect_diagnostic({"growth", "--algo", "qcol", "--perm", "1a"}, "malformed permutation");
  expect_diagnostic({"check", "numeric", "--algo", "qcol", "--q", "one"}, "malformed rational");
  expect_diagnostic({"growth", "--algo", "dyn3", "--perm", "12"}, "invalid argument");
  expect_diagnostic({"frobnicate"}, "usage");
  expect_diagnostic({}, "usage");
}

}  // namespace
