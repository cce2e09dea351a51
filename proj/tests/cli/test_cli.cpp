#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "saxl/errors.hpp"
#include "saxl_cli/app.hpp"
#include "saxl_cli/sweeps.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = saxl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json rational(long num, long den) { return {{"num", num}, {"den", den}}; }

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, AnalyzeCatalogueFixture) {
  const auto r = run({"analyze", "--catalogue", "M11_2S4", "--no-cliques"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["regular_count"], 1);
  EXPECT_EQ(j["q_exact"], rational(39, 55));
  EXPECT_TRUE(j["clique"].is_null());
}

TEST(Cli, AnalyzePgl8) {
  const auto r = run({"analyze", "--psl2", "c2", "--q", "8", "--variant", "pgl"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["q_exact"], rational(11, 18));
  EXPECT_EQ(j["regular_count"], 1);
  EXPECT_EQ(j["star"]["holds"], true);
  EXPECT_EQ(j["clique"]["size"], 8);
}

TEST(Cli, AnalyzeAlternatingPairs) {
  const auto r = run({"analyze", "--ksubsets", "5", "2", "--alternating", "--cross-check"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["clique"]["size"], 4);
  EXPECT_EQ(j["independence"]["size"], 2);
  EXPECT_EQ(j["q_by_pairs"], j["q_exact"]);
}

TEST(Cli, ReportIsDeterministic) {
  const std::vector<std::string> args{"analyze", "--psl2", "c3", "--q", "9", "--variant", "psigmal"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, GraphEdgeListAndDot) {
  const auto edges = run({"graph", "--ksubsets", "5", "2", "--alternating", "--format", "edges"});
  ASSERT_EQ(edges.code, 0);
  EXPECT_EQ(std::count(edges.out.begin(), edges.out.end(), '\n'), 30);
  const auto dot = run({"graph", "--ksubsets", "5", "2", "--alternating"});
  EXPECT_EQ(dot.out.rfind("graph {\n", 0), 0u);
  EXPECT_NE(dot.out.find("  0 -- "), std::string::npos);
  EXPECT_EQ(dot.out, run({"graph", "--ksubsets", "5", "2", "--alternating"}).out);
}

TEST(Cli, GraphWithNonMaximalStabiliserWarns) {
  const auto r = run({"graph", "--psl2", "c2", "--q", "5", "--variant", "pgl", "--format", "edges"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("not maximal"), std::string::npos);
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, GraphToFile) {
  const auto path = temp_file("saxl_cli_graph.txt");
  const auto r = run({"graph", "--psl2", "c2", "--q", "8", "--variant", "pgl", "--format", "edges", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_FALSE(first.empty());
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"analyze", "--psl2", "c2", "--q", "9", "--point-cap", "10"}).code, 2);
  EXPECT_EQ(run({"graph", "--psl2", "c2", "--q", "27", "--graph-cap", "5"}).code, 2);
  EXPECT_EQ(run({"analyze", "--psl2", "c2", "--q", "12"}).code, 1);
  EXPECT_EQ(run({"analyze", "--catalogue", "NOPE"}).code, 1);
  EXPECT_EQ(run({"analyze", "--catalogue", "M11"}).code, 1);  // no subgroup
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"analyze", "--q", "9", "--psl2", "c2", "--ksubsets", "5", "2"}).code, 1);
  EXPECT_EQ(run({"verify", "no-such-sweep"}).code, 1);
  EXPECT_EQ(run({"analyze", "--ksubsets", "5", "2", "--exact-cap", "0"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyTableRows) {
  const auto r = run({"verify", "table-rows"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["checks"].size(), 8u);
}

TEST(Cli, VerifyFailureGivesNonzeroExit) {
  const auto rows = temp_file("saxl_bad_rows.txt");
  {
    std::ofstream out(rows);
    out << "S7_AGL17 1 1/2\n";
  }
  const auto r = run({"verify", "table-rows", "--rows-file", rows.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["checks"][0]["status"], "fail");
  std::filesystem::remove(rows);
}

TEST(Cli, VerifyOracleSmallRange) {
  const auto r = run({"verify", "c2-oracle", "--qmax", "13"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_GT(json::parse(r.out)["checks"].size(), 3u);
}

TEST(Cli, ThreadsFromEnvironment) {
  ::setenv("SAXL_THREADS", "2", 1);
  const auto two = run({"graph", "--psl2", "c3", "--q", "11", "--format", "edges"});
  ::setenv("SAXL_THREADS", "x", 1);
  EXPECT_EQ(run({"graph", "--psl2", "c3", "--q", "11"}).code, 1);
  ::unsetenv("SAXL_THREADS");
  EXPECT_EQ(two.out, run({"graph", "--psl2", "c3", "--q", "11", "--format", "edges"}).out);
}

TEST(TableRows, ParseErrors) {
  const auto path = temp_file("saxl_rows_parse.txt");
  {
    std::ofstream out(path);
    out << "# comment\n\nA 1 1/2\nB two 1/3\n";
  }
  try {
    saxl::cli::load_table_rows(path.string());
    FAIL() << "expected ParseError";
  } catch (const saxl::ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  std::filesystem::remove(path);
}
