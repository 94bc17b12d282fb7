#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nchydro/constants.hpp"

namespace nchydro::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  int K = 200;            // series truncation
  int grid_points = 2000; // operator-oracle base grid
  std::uint64_t seed = 12345;
  bool with_monte_carlo = false;  // extra statistical moment cross-check
  ConstantsTable constants = ConstantsTable::codata2018();
};

/// Runs the full oracle/invariant suite; one result per named check.
std::vector<CheckResult> run_all(const Options& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace nchydro::verify
