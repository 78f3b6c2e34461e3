#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "thetabar/cli.hpp"

using namespace thetabar;

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(THETABAR_TEST_DIR) + "/data/" + name; }

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, EvalHandWorkedExample) {
  const Outcome r = run({"--system", "A1", "eval", "--points", data("a1_example.points"), "--poly", data("a1_example.poly")});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "val=-1\n");
  const Outcome d = run({"--system", "A1", "eval", "--points", data("a1_example.points"), "--poly", data("a1_example.poly"),
                     "--decimals", "3"});
  EXPECT_EQ(d.out, "val=-1 abs=2.000\n");
  const Outcome b = run({"--system", "A1", "--base", "10", "eval", "--points", data("a1_example.points"), "--poly",
                     data("a1_example.poly"), "--decimals", "1"});
  EXPECT_EQ(b.out, "val=-1 abs=10.0\n");
}

TEST(Cli, EvalGaussAndBoundary) {
  EXPECT_EQ(run({"--system", "A1", "eval", "--points", data("a1_gauss.points"), "--poly", data("a1_gauss.poly")}).out,
            "val=-3\n");
  EXPECT_EQ(run({"--system", "A1", "eval", "--points", data("a1_boundary.points"), "--poly", data("a1_chi_neg.poly")}).out,
            "val=inf\n");
}

TEST(Cli, Classify) {
  const Outcome r = run({"--system", "A2", "classify", "--points", data("a2_classify.points")});
  EXPECT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string l1, l2, l3;
  std::getline(lines, l1);
  std::getline(lines, l2);
  std::getline(lines, l3);
  EXPECT_EQ(l1.substr(0, 22), "tau=10 chart=[] kind=b");
  EXPECT_EQ(l2.substr(0, 20), "tau=00 chart=[0] kin");
  EXPECT_EQ(l3.substr(0, 20), "tau=11 chart=[] kind");
}

TEST(Cli, PosetNodeCounts) {
  for (const auto& [system, nodes] : std::vector<std::pair<std::string, std::size_t>>{{"A1", 2}, {"A2", 4}, {"G2", 4}, {"B2xA1", 8}}) {
    const Outcome r = run({"--system", system, "poset"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("digraph closure_poset {", 0), 0u);
    const std::regex node(R"(^  "[01]+";$)");
    std::size_t found = 0;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);) found += std::regex_match(line, node);
    EXPECT_EQ(found, nodes) << r.out;
  }
}

TEST(Cli, PlotChambersAndOverlay) {
  EXPECT_EQ(count(run({"--system", "A2", "plot"}).out, "\nchamber,"), 6u);
  EXPECT_EQ(count(run({"--system", "B2", "plot"}).out, "\nchamber,"), 8u);
  EXPECT_EQ(count(run({"--system", "A2", "plot"}).out, "\nbase_point,"), 0u);
  EXPECT_EQ(count(run({"--system", "A2", "plot", "--overlay"}).out, "\nbase_point,"), 4u);
  const Outcome bad = run({"--system", "A3", "plot"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(bad.err.rfind("error[domain]", 0), 0u);

  const auto prefix = std::filesystem::temp_directory_path() / "thetabar_plot_test";
  const Outcome file = run({"--system", "G2", "--out", prefix.string(), "plot", "--overlay"});
  EXPECT_EQ(file.status, 0) << file.err;
  EXPECT_TRUE(std::filesystem::exists(prefix.string() + ".csv"));
  EXPECT_TRUE(std::filesystem::exists(prefix.string() + ".svg"));
  std::filesystem::remove(prefix.string() + ".csv");
  std::filesystem::remove(prefix.string() + ".svg");
}

TEST(Cli, VerifyIsByteIdenticalForAFixedSeed) {
  const std::vector<std::string> args{"--system", "B2", "--seed", "17", "verify", "--samples", "5"};
  const Outcome a = run(args), b = run(args);
  EXPECT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(count(a.out, "\n"), 6u);
  EXPECT_EQ(count(a.out, "elapsed_ms"), 0u);
  const Outcome t = run({"--system", "A1", "verify", "--suite", "seminorm", "--samples", "3", "--timing"});
  EXPECT_EQ(count(t.out, "elapsed_ms"), 1u);
}

TEST(Cli, UsageErrors) {
  const Outcome suite = run({"verify", "--suite", "bogus"});
  EXPECT_EQ(suite.status, 2);
  EXPECT_EQ(suite.err.rfind("error[usage]", 0), 0u);
  const Outcome base = run({"--system", "A1", "--base", "1", "eval", "--points", data("a1_example.points"), "--poly",
                        data("a1_example.poly")});
  EXPECT_EQ(base.status, 2);
  EXPECT_EQ(base.err.rfind("error[usage]", 0), 0u);
  EXPECT_EQ(run({"--prime", "3", "--tadic", "poset"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"--prime", "4", "verify", "--samples", "1"}).status, 2);
  const Outcome sys = run({"--system", "Z9", "poset"});
  EXPECT_EQ(sys.status, 1);
  EXPECT_EQ(sys.err.rfind("error[root-system]", 0), 0u);
}

TEST(Cli, ParseErrorsNameTheLine) {
  const Outcome r = run({"--system", "A2", "classify", "--points", data("bad_line.points")});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.err.rfind("error[parse]", 0), 0u);
  EXPECT_NE(r.err.find("bad_line.points:4:"), std::string::npos) << r.err;
  const Outcome ring = run({"--system", "A2", "eval", "--points", data("a2_classify.points"), "--poly", data("bad_ring.poly")});
  EXPECT_EQ(ring.status, 1);
  EXPECT_NE(ring.err.find("bad_ring.poly:2:"), std::string::npos) << ring.err;
  EXPECT_EQ(run({"--system", "A2", "classify", "--points", data("missing.points")}).status, 1);
}

TEST(Cli, DefaultVerifyOnA2HasNoFailures) {
  const Outcome r = run({"--system", "A2", "verify"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(count(r.out, "\"status\":\"pass\""), 6u);
}
