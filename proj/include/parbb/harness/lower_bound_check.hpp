#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "parbb/harness/csv.hpp"
#include "parbb/theory/bounds.hpp"

namespace parbb::harness {

struct BoundViolation {
  std::uint64_t run_id = 0;
  std::size_t n = 0;
  std::size_t lambda = 0;
  std::uint64_t first_hit_evaluation = 0;
  double threshold = 0.0;
};

struct LowerBoundReport {
  std::string bound_id;
  double safety = 1.0;
  double delta = 0.5;
  std::size_t rows = 0;
  /// Rows that hit the target and were compared.
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  /// First violations only.
  std::vector<BoundViolation> violations;
  /// Smallest first_hit / threshold ratio among checked rows.
  double min_ratio = 0.0;
  bool pass = true;
};

/// A hitting run violates the bound when first_hit_evaluation < safety *
/// bound(n, lambda, delta). Rows that never hit are skipped. ConfigError for
/// bounds stated only asymptotically or a negative safety factor.
LowerBoundReport check_lower_bound(const std::vector<CsvRow>& rows, const theory::BoundSpec& bound,
                                   double safety = 1.0, double delta = 0.5);

nlohmann::json to_json(const LowerBoundReport& report);

}  // namespace parbb::harness
