#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromalg/json_io.hpp"

namespace chromalg {

struct CheckResult {
  bool ok = true;
  std::string detail;
};

// Each check is a pure function of its JSON input, so a failure replays from
// the counterexample alone.
CheckResult run_check(const std::string& check, const Json& input);
std::vector<std::string> check_names();

// Suites: oracle, hopf, tables, r-closure, polynomial, specializations.
// Unset sizes (-1) take the suite's default.
struct VerifyOptions {
  std::string suite;
  int n = -1;
  int trials = -1;
  std::uint64_t seed = 1;
  int r = 2;
  int threads = 1;
  int max_counterexamples = 5;
};

struct VerifyReport {
  std::string suite;
  long checks = 0;
  long failures = 0;
  std::vector<Json> counterexamples;  // {"suite","check","input","detail"}
  bool ok() const { return failures == 0; }
};

VerifyReport run_suite(const VerifyOptions& opt);
std::vector<std::string> suite_names();
VerifyReport replay(const Json& counterexample);
Json to_json(const VerifyReport& report);

// Seed of the i-th trial; stable across platforms.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace chromalg
