#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genform/harness/json_io.hpp"

namespace genform::harness {

struct SuiteFailure {
  std::string case_id;
  json inputs;
  json residual;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::vector<SuiteFailure> failures;
  double wall_time_s = 0.0;
  /// Suite-specific fields merged into the report object.
  json extra = json::object();

  bool pass() const { return failures.empty(); }
  json to_json() const;
};

struct SuiteOptions {
  std::size_t dim = 2;
  /// When empty each trial draws its epsilon from the cycle 0, 1, -1, 2, -2, 1/2.
  std::optional<Rational> epsilon;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

/// Runs every suite and combines them; the combined report lists each suite
/// under "suites".
SuiteReport run_all_suites(const SuiteOptions& options);

/// Report with the wall-time field removed, for determinism comparisons.
json strip_timing(json report);

}  // namespace genform::harness
