#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vfkit::verification {

/// Outcome of one built-in acceptance check.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  /// Runtime bound in seconds; 0 means unbounded.
  double time_limit = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  /// Randomized cases per property suite.
  unsigned property_cases = 200;
  /// Randomized ideals and membership queries for the oracle comparison.
  unsigned random_ideals = 24;
  unsigned membership_queries = 120;
};

struct Check {
  int id;
  std::string name;
  double time_limit;
  std::function<CheckResult(const SuiteOptions&)> run;
};

/// The eleven built-in checks, in order. All fixtures are embedded.
const std::vector<Check>& acceptance_checks();

/// Runs one check, timing it and turning exceptions into failures.
CheckResult run_check(const Check& check, const SuiteOptions& options = {});

std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& options = {});

}  // namespace vfkit::verification
