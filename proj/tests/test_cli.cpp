#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"

using json = nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
  json report() const {
    EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 1) << "one report per line";
    return json::parse(out);
  }
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = shfkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + "/" + name; }

}  // namespace

TEST(CliConstruct, FanoByteExact) {
  const Invocation r = run({"construct", "cyclic(7;0,1,3)", "--l", "2", "--w1", "2", "--w2", "5", "-o", tmp("e22.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(tmp("e22.mat")), slurp(fixtures::path("fano_strong.mat")));
  const json j = r.report();
  EXPECT_EQ(j["schema"], "shfkit-report/1");
  EXPECT_EQ(j["shf"], "SHF(7; 7, 4, {1^2, 5})");
  EXPECT_EQ(j["params"]["design"], "cyclic(7;0,1,3)");
}

TEST(CliConstruct, Sts9) {
  const Invocation r = run({"construct", "sts(9)", "-l", "2", "--w1", "2", "--w2", "7", "-o", tmp("s9.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["shf"], "SHF(12; 9, 4, {1^2, 7})");
}

TEST(CliConstruct, UncoveredTriple) {
  const Invocation r = run({"construct", "cyclic(7;0,1,3)", "--l", "3", "--w1", "1", "--w2", "2", "-o", tmp("bad.mat")});
  EXPECT_EQ(r.code, 1);
  const json j = r.report();
  EXPECT_EQ(j["error"], "coverage");
  EXPECT_EQ(j["subset"], json::array({0, 1, 2}));
}

TEST(CliConstruct, ExactModeRejectsCoverings) {
  std::ofstream(tmp("cover.hg")) << "HYPERGRAPH v1 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n";
  const Invocation r = run({"construct", tmp("cover.hg"), "--l", "2", "--w1", "1", "--w2", "2", "--exact", "-o", tmp("c.mat")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report()["mode"], "exactly_one");
  EXPECT_EQ(run({"construct", tmp("cover.hg"), "--l", "2", "--w1", "1", "--w2", "2", "-o", tmp("c.mat")}).code, 0);
}

TEST(CliConstruct, LegacyFileIsLogged) {
  const Invocation r = run({"construct", fixtures::path("sqs8_legacy.txt"), "--l", "3", "--w1", "3", "--w2", "5", "-o",
                     tmp("q.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("1-based"), std::string::npos);
  EXPECT_EQ(r.report()["shf"], "SHF(14; 8, 5, {1^3, 5})");
}

TEST(CliVerify, Examples) {
  const Invocation ok = run({"verify", fixtures::path("fano_strong.mat"), "--type", "{1^2,5}"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.report()["result"], "shf");

  const Invocation bad = run({"verify", fixtures::path("f1.mat"), "--type", "{2,2}"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.report()["witness"], json::parse("[[0,2],[1,3]]"));

  EXPECT_EQ(run({"verify", fixtures::path("f1.mat"), "--type", "{2}"}).code, 2);
  EXPECT_EQ(run({"verify", fixtures::path("f1.mat")}).code, 2);
}

TEST(CliVerify, MalformedFileReportsPosition) {
  std::ofstream(tmp("broken.mat")) << "SHF-MATRIX v1 2 2 3\n0 1\n0 5\n";
  const Invocation r = run({"verify", tmp("broken.mat"), "--type", "{1,1}"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3, column 3"), std::string::npos) << r.err;
}

TEST(CliBound, Upper) {
  const Invocation r = run({"bound", "--upper", "-N", "4", "-m", "4", "--type", "{2,2}"});
  ASSERT_EQ(r.code, 0);
  const json j = r.report();
  EXPECT_EQ(j["max_n"], 10);
  EXPECT_EQ(j["sources"], json::array({"Thm3.10"}));
}

TEST(CliBound, OtherKinds) {
  EXPECT_EQ(run({"bound", "--lower", "--w1", "2", "--w2", "5", "-m", "4"}).report()["min_N"], 7);
  EXPECT_EQ(run({"bound", "--covering", "-n", "11", "-k", "5", "-l", "4"}).report()["value"], 66);
  EXPECT_EQ(run({"bound", "--schonheim", "-n", "19", "-k", "4", "-l", "2"}).report()["value"], 29);
  EXPECT_EQ(run({"bound", "--upper", "--lower", "-N", "4", "-m", "4", "--type", "{2,2}"}).code, 2);
}

TEST(CliSearch, ExhaustedIsExitOne) {
  const Invocation r = run({"search", "-N", "4", "-n", "11", "-m", "4", "--type", "{2,2}", "--mode", "certified"});
  EXPECT_EQ(r.code, 1);
  const json j = r.report();
  EXPECT_EQ(j["result"], "exhausted");
  EXPECT_EQ(j["audit"], true);
  EXPECT_EQ(j["params"]["n"], 11);
}

TEST(CliSearch, FoundAndAudit) {
  const Invocation r = run({"search", "-N", "4", "-n", "10", "-m", "4", "--type", "{2,2}", "--threads", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["result"], "found");
  EXPECT_EQ(r.report()["audit"], false);
  const Invocation h = run({"search", "-N", "4", "-n", "10", "-m", "4", "--type", "{2,2}", "--mode", "heuristic"});
  EXPECT_EQ(h.report()["audit"], false);
}

TEST(CliSearch, NodeBudgetFromEnvironment) {
  ::setenv("SHFKIT_NODE_BUDGET", "500", 1);
  const Invocation r = run({"search", "-N", "4", "-n", "11", "-m", "4", "--type", "{2,2}"});
  ::unsetenv("SHFKIT_NODE_BUDGET");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.report()["result"], "inconclusive");
  EXPECT_EQ(r.report()["params"]["node_budget"], 500);
}

TEST(CliSearch, MaxN) {
  const Invocation r = run({"search", "-N", "2", "-m", "2", "--type", "{1,1}", "--max-n"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["n_star"], 4);
  EXPECT_EQ(run({"search", "-N", "2", "-m", "2", "--type", "{1,1}"}).code, 2);
}

TEST(CliCanon, ColumnShuffledCopy) {
  std::ofstream(tmp("shuffled.mat")) << "SHF-MATRIX v1 4 10 4\n"
                                        "3 2 2 2 1 1 1 0 0 0\n"
                                        "3 2 1 0 2 1 0 2 1 0\n"
                                        "3 1 0 2 0 2 1 2 1 0\n"
                                        "3 0 2 1 1 0 2 2 1 0\n";
  const Invocation r = run({"canon", fixtures::path("optimal_4x10.mat"), tmp("shuffled.mat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["isomorphic"], true);
  const Invocation no = run({"canon", fixtures::path("optimal_4x10.mat"), fixtures::path("fano_strong.mat")});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(run({"canon", fixtures::path("f1.mat")}).report()["canonical"]["N"], 4);
}

TEST(CliScan, Examples) {
  const Invocation hit = run({"scan", fixtures::path("f1.mat")});
  EXPECT_EQ(hit.code, 1);
  EXPECT_EQ(hit.report()["forbidden"]["id"], "F1");
  const Invocation clean = run({"scan", fixtures::path("optimal_4x10.mat")});
  EXPECT_EQ(clean.code, 0);
  EXPECT_TRUE(clean.report()["forbidden"].is_null());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "/nonexistent.mat", "--type", "{2,2}"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
