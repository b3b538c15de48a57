#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pentaheesch/json_io.hpp"
#include "pentaheesch/tools/cli.hpp"

namespace pentaheesch::tools {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "pentaheesch");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pentaheesch_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(Cli, SolvePrintsTwoDecimals) {
  const CliRun r = run({"solve", "5", "--n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("A B C D E: 129.13 90.00 101.74 135.00 84.13"), std::string::npos) << r.out;
  const CliRun t = run({"solve", "2"});
  EXPECT_NE(t.out.find("141.33 77.34 122.00 116.00 83.33"), std::string::npos) << t.out;
}

TEST_F(Cli, SolveWritesJson) {
  const fs::path out = dir_ / "p.json";
  ASSERT_EQ(run({"solve", "13", "--out", out.string()}).code, kExitOk);
  const Json j = Json::parse(slurp(out));
  EXPECT_EQ(j["category"], 13);
  EXPECT_TRUE(j["trace"].contains("method"));
}

TEST_F(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run({"solve", "8", "--n", "0"}).code, kExitBadInput);
  EXPECT_EQ(run({"solve", "18"}).code, kExitBadInput);
  EXPECT_EQ(run({"solve", "3"}).code, kExitBadInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitBadInput);
  EXPECT_EQ(run({"heesch", "6", "--mode", "loose"}).code, kExitBadInput);
  const fs::path empty = dir_ / "empty.json";
  std::ofstream(empty) << "{}";
  EXPECT_EQ(run({"render", empty.string()}).code, kExitBadInput);
  EXPECT_EQ(run({"render", (dir_ / "missing.json").string()}).code, kExitBadInput);
}

TEST_F(Cli, BudgetExitsThree) {
  EXPECT_EQ(run({"heesch", "3", "--n", "1", "--budget", "20"}).code, kExitBudget);
}

TEST_F(Cli, SpotsCsv) {
  const CliRun r = run({"spots", "9"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("multiset,sum,class,witness-cycle\n", 0), 0u);
  EXPECT_NE(r.out.find("\n4C,"), std::string::npos);
  const CliRun s = run({"spots", "17", "--n", "2"});
  EXPECT_NE(s.out.find("\n6B+C,360.000000000,EEC,"), std::string::npos);
  EXPECT_NE(s.out.find("\n9B,360.000000000,EEC,"), std::string::npos);
}

TEST_F(Cli, HeeschReports) {
  const CliRun six = run({"heesch", "6"});
  EXPECT_EQ(six.code, kExitOk);
  EXPECT_NE(six.out.find("layers completed: 1"), std::string::npos) << six.out;
  EXPECT_NE(six.out.find("dead spot:"), std::string::npos);
  const fs::path out = dir_ / "h.json";
  const CliRun four = run({"heesch", "4", "--m", "2", "--n", "1", "--layers", "2", "--out", out.string()});
  EXPECT_EQ(four.code, kExitOk);
  EXPECT_EQ(Json::parse(slurp(out))["layers_completed"], 2);
}

TEST_F(Cli, CoronaRenderPipeline) {
  const fs::path patch = dir_ / "c.json";
  const fs::path svg = dir_ / "c.svg";
  const CliRun c = run({"corona", "1", "--out", patch.string()});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_NE(c.out.find("4 first coronas"), std::string::npos) << c.out;
  ASSERT_EQ(run({"render", patch.string(), "--out", svg.string()}).code, kExitOk);
  const std::string a = slurp(svg);
  EXPECT_NE(a.find("class=\"kernel\""), std::string::npos);
  ASSERT_EQ(run({"render", patch.string(), "--out", svg.string()}).code, kExitOk);
  EXPECT_EQ(slurp(svg), a);
  EXPECT_EQ(run({"corona", "1", "--index", "9", "--out", patch.string()}).code, kExitBadInput);
}

TEST_F(Cli, ClusterRenders) {
  const fs::path report = dir_ / "k.json";
  const CliRun r = run({"cluster", "10", "--out", report.string()});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(run({"render", report.string()}).code, kExitOk);
}

}  // namespace
}  // namespace pentaheesch::tools
