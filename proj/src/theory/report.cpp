#include "parbb/theory/report.hpp"

namespace parbb::theory {

nlohmann::json to_json(const LemmaReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"point", v.point}, {"value", v.value}, {"bound", v.bound}});
  return {{"lemma", report.lemma},
          {"statement", report.statement},
          {"grid", report.grid},
          {"tolerance", report.tolerance},
          {"points_checked", report.points_checked},
          {"max_slack", report.max_slack},
          {"violation_count", report.violation_count},
          {"violations", std::move(violations)},
          {"details", report.details},
          {"pass", report.pass}};
}

}  // namespace parbb::theory
