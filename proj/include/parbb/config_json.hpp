#pragma once

#include "json.hpp"
#include "parbb/one_plus_lambda.hpp"

namespace parbb {

/// {"algorithm": "one-plus-lambda-fixed", "n": 100, "lambda": 8, "p": "1/n",
///  "budget": 100000, "seed": 1, "initial": "0101...", "mirrored": false}
/// Missing "p" means 1/n; missing "budget" means 1000 * n * max(lambda, n).
AlgoConfig algo_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AlgoConfig& cfg);

/// Budget used when a configuration does not give one.
std::uint64_t default_budget(std::size_t n, std::size_t lambda);

}  // namespace parbb
