#include <iostream>

#include <CLI11.hpp>

#include "cayleyspec/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Spectra of Cayley graphs of S_n generated by k-cycles"};
  app.require_subcommand(1);
  cayleyspec::RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "degree of the symmetric group");
    sub->add_option("--k", cfg.k, "cycle length");
    sub->add_option("--r", cfg.r, "points 1..r must be moved");
    sub->add_option("--mode", cfg.mode, "irrep, full or oracle");
    sub->add_option("--tol", cfg.tol, "snapping tolerance base");
    sub->add_option("--dim-cap", cfg.dim_cap, "largest irrep dimension evaluated");
    sub->add_option("--workers", cfg.workers, "worker threads");
    sub->add_option("--output", cfg.output, "text, structured or csv");
    sub->add_option("--out", cfg.out_path, "write the report to this file");
  };
  for (const char* name : {"spectrum", "aldous", "table1", "verify", "oracle-compare", "mu2"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    if (std::string(name) == "verify") {
      sub->add_option("--suite", cfg.suite, "suite name or all");
      sub->add_option("--n-max", cfg.n_max, "upper end of the suite's n range");
    }
    sub->callback([&cfg, name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cayleyspec::kExitUsage;
  }
  const cayleyspec::CommandResult result = cayleyspec::run_command(cfg);
  (result.exit_code == cayleyspec::kExitUsage ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
