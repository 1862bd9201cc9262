#include "parbb/config_json.hpp"

#include <algorithm>

#include "parbb/errors.hpp"
#include "parbb/operator_json.hpp"

namespace parbb {

std::uint64_t default_budget(std::size_t n, std::size_t lambda) {
  return std::uint64_t{1000} * n * std::max(lambda, n);
}

AlgoConfig algo_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("algorithm configuration must be a JSON object");
  AlgoConfig cfg;
  try {
    cfg.algorithm = algorithm_from_string(j.value("algorithm", std::string("one-plus-lambda-fixed")));
    cfg.n = j.at("n").get<std::size_t>();
    cfg.lambda = j.value("lambda", std::size_t{1});
    if (j.contains("p")) cfg.p = resolve_probability(j.at("p"), cfg.n);
    cfg.budget = j.contains("budget") ? j.at("budget").get<std::uint64_t>() : default_budget(cfg.n, cfg.lambda);
    cfg.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("initial")) cfg.initial = BitString::from_string(j.at("initial").get<std::string>());
    cfg.mirrored = j.value("mirrored", false);
    cfg.record_trajectory = j.value("record_trajectory", false);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed algorithm configuration: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid algorithm configuration: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

nlohmann::json to_json(const AlgoConfig& cfg) {
  nlohmann::json j{{"algorithm", to_string(cfg.algorithm)},
                   {"n", cfg.n},
                   {"lambda", cfg.lambda},
                   {"budget", cfg.budget},
                   {"seed", cfg.seed}};
  if (cfg.p) j["p"] = *cfg.p;
  if (cfg.initial) j["initial"] = cfg.initial->to_string();
  if (cfg.mirrored) j["mirrored"] = true;
  if (cfg.record_trajectory) j["record_trajectory"] = true;
  return j;
}

}  // namespace parbb
