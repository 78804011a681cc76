#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cayleyspec/commands.hpp"

using cayleyspec::RunConfig;
using cayleyspec::run_command;

namespace {

RunConfig config(std::string command, int n, int k, int r) {
  RunConfig cfg;
  cfg.command = std::move(command);
  cfg.n = n;
  cfg.k = k;
  cfg.r = r;
  return cfg;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(CAYLEYSPEC_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, SpectrumReportsAlphaTwo) {
  auto res = run_command(config("spectrum", 6, 5, 2));
  EXPECT_EQ(res.exit_code, cayleyspec::kExitOk);
  EXPECT_TRUE(has_line(res.output, "alpha2: 12 multiplicity 50")) << res.output;
}

TEST(Cli, SpectrumDegreeOfThreeCycles) {
  auto res = run_command(config("spectrum", 6, 3, 1));
  EXPECT_TRUE(has_line(res.output, "degree: 20")) << res.output;
}

TEST(Cli, OracleModeMatchesIrrepMode) {
  auto cfg = config("spectrum", 5, 4, 1);
  cfg.mode = "oracle";
  auto res = run_command(cfg);
  EXPECT_EQ(res.exit_code, cayleyspec::kExitOk) << res.output;
  cfg.command = "oracle-compare";
  EXPECT_EQ(run_command(cfg).exit_code, cayleyspec::kExitOk);
}

TEST(Cli, AldousExitCodes) {
  EXPECT_EQ(run_command(config("aldous", 6, 5, 1)).exit_code, cayleyspec::kExitVerdictFalse);
  EXPECT_EQ(run_command(config("aldous", 7, 6, 3)).exit_code, cayleyspec::kExitVerdictFalse);
  EXPECT_EQ(run_command(config("aldous", 7, 6, 5)).exit_code, cayleyspec::kExitOk);
}

TEST(Cli, Table1Rows) {
  auto seven = run_command(config("table1", 7, 0, 0));
  EXPECT_EQ(seven.exit_code, cayleyspec::kExitOk);
  EXPECT_NE(seven.output.find("r=2 [n odd, 2<=r<n/2]\n  predicted: value 120, partitions (2,1,1,1,1,1), multiplicity 6"),
            std::string::npos)
      << seven.output;
  EXPECT_NE(seven.output.find("r=5 [n odd, n/2<r<=n-2]\n  predicted: value 120, partitions (6,1), multiplicity 6"),
            std::string::npos);
  auto six = run_command(config("table1", 6, 0, 0));
  EXPECT_NE(six.output.find("computed:  value 18, partitions (5,1) (2,1,1,1,1), multiplicity 20"), std::string::npos)
      << six.output;
}

TEST(Cli, VerifySuites) {
  auto cfg = config("verify", 0, 0, 0);
  cfg.suite = "recurrence";
  cfg.n_max = 30;
  auto rec = run_command(cfg);
  EXPECT_EQ(rec.exit_code, cayleyspec::kExitOk) << rec.output;
  EXPECT_NE(rec.output.find("recurrence"), std::string::npos);
  cfg.suite = "table2";
  cfg.n_max = 0;
  cfg.n = 9;
  EXPECT_EQ(run_command(cfg).exit_code, cayleyspec::kExitOk);
}

TEST(Cli, ParameterErrorsAreUsageErrors) {
  EXPECT_EQ(run_command(config("spectrum", 5, 5, 5)).exit_code, cayleyspec::kExitUsage);
  EXPECT_EQ(run_command(config("spectrum", 9, 4, 1)).exit_code, cayleyspec::kExitUsage);
  auto bad_mode = config("spectrum", 5, 4, 1);
  bad_mode.mode = "fast";
  EXPECT_EQ(run_command(bad_mode).exit_code, cayleyspec::kExitUsage);
  auto bad_output = config("spectrum", 5, 4, 1);
  bad_output.output = "xml";
  EXPECT_EQ(run_command(bad_output).exit_code, cayleyspec::kExitUsage);
  auto bad_suite = config("verify", 0, 0, 0);
  bad_suite.suite = "nope";
  EXPECT_EQ(run_command(bad_suite).exit_code, cayleyspec::kExitUsage);
}

TEST(Cli, FullModeReportsPartialResult) {
  auto cfg = config("spectrum", 6, 5, 2);
  cfg.mode = "full";
  cfg.dim_cap = 8;
  EXPECT_EQ(run_command(cfg).exit_code, cayleyspec::kExitPartial);
  cfg.dim_cap = 512;
  EXPECT_EQ(run_command(cfg).exit_code, cayleyspec::kExitOk);
}

TEST(Cli, StructuredOutputIsWorkerIndependent) {
  auto cfg = config("spectrum", 6, 4, 2);
  cfg.output = "structured";
  auto one = run_command(cfg);
  cfg.workers = 3;
  auto three = run_command(cfg);
  EXPECT_EQ(one.output, three.output);
  auto doc = nlohmann::json::parse(one.output);
  EXPECT_EQ(doc.at("schema_version"), 1);
  EXPECT_EQ(doc.at("degree"), 36);
}

TEST(Cli, CsvHeader) {
  auto cfg = config("spectrum", 5, 4, 1);
  cfg.output = "csv";
  auto res = run_command(cfg);
  EXPECT_EQ(res.output.substr(0, res.output.find('\n')),
            "partition,dimension,eigenvalue,block_multiplicity,graph_multiplicity,snapped");
}

TEST(Cli, GoldenStructuredAndCsv) {
  auto cfg = config("spectrum", 5, 4, 1);
  cfg.output = "structured";
  EXPECT_EQ(run_command(cfg).output, read_file(std::string(GOLDEN_DIR) + "/spectrum_5_4_1.json"));
  cfg.output = "csv";
  EXPECT_EQ(run_command(cfg).output, read_file(std::string(GOLDEN_DIR) + "/spectrum_5_4_1.csv"));
}

TEST(Cli, Mu2Command) {
  auto res = run_command(config("mu2", 6, 5, 2));
  EXPECT_EQ(res.exit_code, cayleyspec::kExitOk);
  EXPECT_NE(res.output.find("12"), std::string::npos);
}

TEST(Cli, OutFlagWritesFile) {
  auto cfg = config("aldous", 6, 5, 2);
  cfg.out_path = testing::TempDir() + "aldous_6_5_2.txt";
  auto res = run_command(cfg);
  EXPECT_EQ(res.exit_code, cayleyspec::kExitOk);
  EXPECT_NE(read_file(cfg.out_path).find("aldous: true"), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(run_binary("aldous --n 6 --k 5 --r 2"), 0);
  EXPECT_EQ(run_binary("aldous --n 6 --k 5 --r 1"), 1);
  EXPECT_EQ(run_binary(""), 2);
  EXPECT_EQ(run_binary("spectrum --n five"), 2);
  EXPECT_EQ(run_binary("frobnicate"), 2);
  EXPECT_EQ(run_binary("spectrum --n 5 --k 4 --r 4"), 2);
}
