#pragma once

#include <cstddef>
#include <string>

namespace cayleyspec {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFalse = 1,
  kExitUsage = 2,
  kExitPartial = 3,
};

struct RunConfig {
  std::string command;  // spectrum, aldous, table1, verify, oracle-compare, mu2
  int n = 0;
  int k = 0;
  int r = 0;
  std::string mode = "irrep";   // irrep, full, oracle
  double tol = 1e-6;
  std::size_t dim_cap = 512;
  int workers = 1;
  std::string output = "text";  // text, structured, csv
  std::string out_path;
  std::string suite = "all";    // verify only
  int n_max = 0;                // verify only
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
};

/// Validates the configuration, runs the command and renders its report.
/// Parameter errors come back as kExitUsage with the message as output.
CommandResult run_command(const RunConfig& cfg);

CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_aldous(const RunConfig& cfg);
CommandResult cmd_table1(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_oracle_compare(const RunConfig& cfg);
CommandResult cmd_mu2(const RunConfig& cfg);

}  // namespace cayleyspec
