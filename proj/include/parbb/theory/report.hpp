#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace parbb::theory {

struct Violation {
  std::string point;
  double value;
  double bound;
};

/// Outcome of checking an inequality over a parameter grid.
///
/// max_slack is the largest value/bound ratio met on the grid, so a passing
/// report has max_slack <= 1 up to the stated tolerance. Only the first
/// violations are listed; violation_count has the total.
struct LemmaReport {
  std::string lemma;
  std::string statement;
  std::string grid;
  double tolerance = 0.0;
  std::uint64_t points_checked = 0;
  double max_slack = 0.0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  nlohmann::json details = nlohmann::json::object();
  bool pass = false;
};

nlohmann::json to_json(const LemmaReport& report);

}  // namespace parbb::theory
