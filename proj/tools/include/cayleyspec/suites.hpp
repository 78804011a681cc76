#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cayleyspec {

/// Outcome of one invariant suite: how many individual checks ran, how many
/// failed, and the first few failure descriptions.
struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;

  bool passed() const { return checks > 0 && failures == 0; }
  void expect(bool ok, const std::string& what);
};

/// Knobs for the suites; zero means the suite's default range.
struct SuiteLimits {
  int n_max = 0;
  int n = 0;
  int workers = 1;
};

SuiteResult suite_partitions(const SuiteLimits& limits = {});
SuiteResult suite_yor(const SuiteLimits& limits = {});
SuiteResult suite_characters(const SuiteLimits& limits = {});
SuiteResult suite_table2(const SuiteLimits& limits = {});
SuiteResult suite_slice(const SuiteLimits& limits = {});
SuiteResult suite_closed_forms(const SuiteLimits& limits = {});
SuiteResult suite_quotient(const SuiteLimits& limits = {});
SuiteResult suite_recurrence(const SuiteLimits& limits = {});
SuiteResult suite_spectra(const SuiteLimits& limits = {});
SuiteResult suite_weyl(const SuiteLimits& limits = {});
SuiteResult suite_recursive(const SuiteLimits& limits = {});
SuiteResult suite_components(const SuiteLimits& limits = {});
SuiteResult suite_oracle(const SuiteLimits& limits = {});

/// Names accepted by run_suite, in default execution order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteLimits& limits = {});

}  // namespace cayleyspec
