#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "parbb/objective.hpp"

namespace parbb::harness {

/// Builds an objective from a descriptor such as {"name": "jump", "n": 50,
/// "k": 3}. Generated instances take a "seed"; explicit instances go under
/// "instance". ConfigError for unknown names or bad parameters.
Objective make_objective(const nlohmann::json& descriptor);

/// Every name make_objective accepts.
std::vector<std::string> objective_names();

/// Target set from {"kind": "global-optima" | "local-optima" |
/// "within-distance" | "none", "base": ..., "d": ...}. "none" gives no
/// target (runs use their whole budget).
std::optional<TargetSet> make_target(const Objective& obj, const nlohmann::json& target);

}  // namespace parbb::harness
