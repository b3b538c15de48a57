#pragma once

#include <string>
#include <vector>

#include "pentaheesch/json_io.hpp"

namespace pentaheesch::tools {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> failures;
  Json details;
};

struct VerifyOptions {
  std::uint64_t budget = 10'000'000;
  double spot_tolerance_deg = kSpotTolDeg;
};

// Full regression over the catalog: reference tables, closed forms, family
// generators, spot labels, Heesch bounds, the category 1 census, the Type 7
// sweep and three-tile clusters. Output contains no timings, so repeated runs
// serialize identically.
std::vector<CheckResult> verify_all(const VerifyOptions& options = {});
Json verify_json(const std::vector<CheckResult>& checks);

}  // namespace pentaheesch::tools
