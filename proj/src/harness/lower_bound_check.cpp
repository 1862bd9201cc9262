#include "parbb/harness/lower_bound_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parbb/errors.hpp"

namespace parbb::harness {

namespace {
constexpr std::size_t kListed = 50;
}

LowerBoundReport check_lower_bound(const std::vector<CsvRow>& rows, const theory::BoundSpec& bound,
                                   double safety, double delta) {
  if (bound.asymptotic_only)
    throw ConfigError("bound '" + bound.id + "' holds only asymptotically and cannot be checked per run");
  if (!(safety >= 0.0 && std::isfinite(safety))) throw ConfigError("safety factor must be a non-negative number");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  LowerBoundReport report;
  report.bound_id = bound.id;
  report.safety = safety;
  report.delta = delta;
  report.rows = rows.size();
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    if (!row.hit_target || !row.first_hit_evaluation) continue;
    const double value =
        bound.evaluate({static_cast<double>(row.n), static_cast<double>(row.lambda), delta});
    const double threshold = safety * value;
    const double hit = static_cast<double>(*row.first_hit_evaluation);
    ++report.checked;
    if (threshold > 0.0) min_ratio = std::min(min_ratio, hit / threshold);
    if (hit < threshold) {
      ++report.violation_count;
      if (report.violations.size() < kListed)
        report.violations.push_back({row.run_id, row.n, row.lambda, *row.first_hit_evaluation, threshold});
    }
  }
  report.min_ratio = report.checked && std::isfinite(min_ratio) ? min_ratio : 0.0;
  report.pass = report.violation_count == 0;
  return report;
}

nlohmann::json to_json(const LowerBoundReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"run_id", v.run_id},
                          {"n", v.n},
                          {"lambda", v.lambda},
                          {"first_hit_evaluation", v.first_hit_evaluation},
                          {"threshold", v.threshold}});
  return {{"bound", report.bound_id},
          {"safety", report.safety},
          {"delta", report.delta},
          {"rows", report.rows},
          {"checked", report.checked},
          {"violation_count", report.violation_count},
          {"violations", std::move(violations)},
          {"min_ratio", report.min_ratio},
          {"pass", report.pass}};
}

}  // namespace parbb::harness
