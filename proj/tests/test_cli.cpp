#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(LTLCORE_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string data(const std::string& name) {
  return std::string(LTLCORE_TEST_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, RunningExampleExitsOneAndRendersTrueRows) {
  CliResult r = run_cli(data("running_example.rules") + " --minimize");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("unsat"), std::string::npos);
  EXPECT_NE(r.output.find("core: r3.a r3.b r3.c"), std::string::npos);
  EXPECT_NE(r.output.find("TRUE"), std::string::npos);
  EXPECT_NE(r.output.find("core check: unsat confirmed"), std::string::npos);
}

TEST(Cli, SatRuleExitsZeroWithWitness) {
  std::string path = write_temp("sat_p.rules", "r: p\n");
  CliResult r = run_cli(path);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("sat"), std::string::npos);
  EXPECT_NE(r.output.find("loop=[{p}]"), std::string::npos);
}

TEST(Cli, ParseErrorExitsTwoWithDiagnostics) {
  std::string path = write_temp("bad.rules", "r: F(\n");
  CliResult r = run_cli(path);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("line 1"), std::string::npos);
}

TEST(Cli, StepLimitExitsTwoAsUnknown) {
  CliResult r = run_cli(data("running_example.rules") + " --max-steps 3");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("unknown"), std::string::npos);
}

TEST(Cli, JsonOutputParses) {
  CliResult r = run_cli(data("running_example.rules") + " --json --minimize");
  EXPECT_EQ(r.exit_code, 1);
  nlohmann::json j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["result"], "unsat");
  EXPECT_EQ(j["core"].size(), 3u);
  EXPECT_TRUE(j["stats"].contains("distinct_fpis"));
}

TEST(Cli, MinimizeOnTwoRuleCore) {
  std::string path = write_temp("minpair.rules", "r: F(a)\ns: G(!a)\n");
  CliResult r = run_cli(path + " --minimize --json");
  EXPECT_EQ(r.exit_code, 1);
  nlohmann::json j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["core"].get<std::vector<std::string>>(),
            (std::vector<std::string>{"r", "s"}));
}

TEST(Cli, DumpGraphWritesDot) {
  std::string out = ::testing::TempDir() + "graph.dot";
  std::string path = write_temp("dump.rules", "f: F(i)\ng: G(!i)\n");
  CliResult r = run_cli(path + " --dump-graph " + out);
  EXPECT_EQ(r.exit_code, 1);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("digraph"), std::string::npos);
  EXPECT_NE(text.find("color=red"), std::string::npos);
}

TEST(Cli, OracleCheckAgreesOnBothVerdicts) {
  std::string sat_path = write_temp("oc_sat.rules", "r: F(a)\n");
  CliResult r1 = run_cli(sat_path + " --oracle-check");
  EXPECT_EQ(r1.exit_code, 0);
  EXPECT_NE(r1.output.find("(agrees)"), std::string::npos);
  std::string unsat_path = write_temp("oc_unsat.rules", "r: F(a)\ns: G(!a)\n");
  CliResult r2 = run_cli(unsat_path + " --oracle-check");
  EXPECT_EQ(r2.exit_code, 1);
  EXPECT_NE(r2.output.find("(agrees)"), std::string::npos);
}
