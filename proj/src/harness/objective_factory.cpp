#include "parbb/harness/objective_factory.hpp"

#include <cstdint>

#include "parbb/catalogue.hpp"
#include "parbb/errors.hpp"
#include "parbb/instance_json.hpp"
#include "parbb/local_optima.hpp"

namespace parbb::harness {
namespace {

using nlohmann::json;

std::size_t get_size(const json& d, const char* key) {
  if (!d.contains(key)) throw ConfigError(std::string("objective descriptor needs \"") + key + "\"");
  const json& v = d.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ConfigError(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::uint64_t seed_of(const json& d) { return d.value("seed", std::uint64_t{0}); }

GraphInstance graph_of(const json& d, std::size_t n) {
  if (d.contains("instance")) return graph_from_json(d.at("instance"));
  const std::string graph = d.value("graph", std::string("cycle"));
  if (graph == "cycle") return gen_cycle(n);
  if (graph == "two-cliques") return gen_two_cliques(n);
  throw ConfigError("unknown graph family '" + graph + "' (cycle, two-cliques or an explicit instance)");
}

Objective build(const json& d) {
  const std::string name = d.at("name").get<std::string>();
  if (name == "onemax") return make_onemax(get_size(d, "n"));
  if (name == "leadingones") return make_leading_ones(get_size(d, "n"));
  if (name == "leadingzeros") return make_leading_zeros(get_size(d, "n"));
  if (name == "twomax") return make_twomax(get_size(d, "n"));
  if (name == "twomax-prime") return make_twomax_prime(get_size(d, "n"));
  if (name == "hiff") return make_hiff(get_size(d, "n"));
  if (name == "jump") return make_jump(get_size(d, "n"), get_size(d, "k"));
  if (name == "cliff") return make_cliff(get_size(d, "n"), get_size(d, "d"));
  if (name == "vertex-colouring" || name == "ising") {
    const std::size_t n = d.contains("instance") ? 0 : get_size(d, "n");
    return make_vertex_colouring(graph_of(d, n), name == "ising" ? Direction::minimise : Direction::maximise);
  }
  if (name == "mincut") {
    const std::size_t n = d.contains("instance") ? 0 : get_size(d, "n");
    return make_mincut(graph_of(d, n));
  }
  if (name == "mincut-two-cliques") return make_mincut_two_cliques(get_size(d, "n"));
  if (name == "partition") {
    if (d.contains("instance")) return make_partition(partition_from_json(d.at("instance")));
    const std::string dist = d.value("distribution", std::string("uniform"));
    SizeDistribution sd;
    if (dist == "uniform")
      sd = SizeDistribution::uniform;
    else if (dist == "exponential")
      sd = SizeDistribution::exponential;
    else
      throw ConfigError("unknown size distribution '" + dist + "'");
    return make_partition(gen_partition_random(get_size(d, "n"), sd, seed_of(d)));
  }
  if (name == "knapsack") return make_knapsack(knapsack_from_json(d.at("instance")));
  if (name == "knapsack-hard") return make_knapsack_hard(get_size(d, "n"));
  if (name == "maxsat-hard") return make_maxsat_hard(get_size(d, "n"));
  if (name == "maxsat-hard-enum") return make_maxsat_hard_enumerated(get_size(d, "n"));
  if (name == "planted-3sat") {
    if (d.contains("instance")) return make_planted_sat(sat_from_json(d.at("instance")));
    PlantedSatOptions options;
    options.c1 = d.value("c1", options.c1);
    options.c3 = d.value("c3", options.c3);
    return make_planted_sat(gen_planted_3sat(get_size(d, "n"), get_size(d, "m"), seed_of(d), options));
  }
  if (name == "nearest-peak" || name == "weighted-nearest-peak") {
    std::vector<PeakSpec> peaks = d.contains("instance")
                                      ? peaks_from_json(d.at("instance"))
                                      : gen_random_peaks(get_size(d, "n"), get_size(d, "peaks"), seed_of(d));
    return name == "nearest-peak" ? make_nearest_peak(std::move(peaks)) : make_weighted_nearest_peak(std::move(peaks));
  }
  if (name == "monotone-poly") {
    const std::size_t n = get_size(d, "n");
    MonotonePolynomial poly = d.contains("instance")
                                  ? poly_from_json(d.at("instance"), n)
                                  : gen_random_monotone_poly(n, get_size(d, "monomials"),
                                                             d.value("max_degree", std::size_t{3}), seed_of(d));
    return make_monotone_poly(n, std::move(poly));
  }
  throw ConfigError("unknown objective '" + name + "'");
}

}  // namespace

std::vector<std::string> objective_names() {
  return {"onemax",         "leadingones",      "leadingzeros",  "twomax",       "twomax-prime",
          "hiff",           "jump",             "cliff",         "vertex-colouring", "ising",
          "mincut",         "mincut-two-cliques", "partition",   "knapsack",     "knapsack-hard",
          "maxsat-hard",    "maxsat-hard-enum", "planted-3sat",  "nearest-peak", "weighted-nearest-peak",
          "monotone-poly"};
}

Objective make_objective(const nlohmann::json& descriptor) {
  if (!descriptor.is_object() || !descriptor.contains("name"))
    throw ConfigError("objective descriptor must be an object with a \"name\"");
  try {
    return build(descriptor);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed objective descriptor: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid objective parameters: ") + e.what());
  } catch (const DimensionError& e) {
    throw ConfigError(std::string("invalid objective parameters: ") + e.what());
  }
}

std::optional<TargetSet> make_target(const Objective& obj, const nlohmann::json& target) {
  std::string kind;
  try {
    kind = target.is_string() ? target.get<std::string>() : target.value("kind", std::string("global-optima"));
    if (kind == "none") return std::nullopt;
    if (kind == "global-optima") return obj.global_optima();
    if (kind == "local-optima") return local_optima(obj);
    if (kind == "within-distance") {
      const std::string base = target.value("base", std::string("global-optima"));
      const std::size_t d = target.value("d", std::size_t{0});
      if (base == "global-optima") return within_distance(obj.global_optima(), d);
      if (base == "local-optima") return within_distance(local_optima(obj), d);
      throw ConfigError("unknown base target '" + base + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed target: ") + e.what());
  } catch (const CapacityError& e) {
    throw ConfigError(std::string("target set unavailable: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid target: ") + e.what());
  }
  throw ConfigError("unknown target kind '" + kind + "'");
}

}  // namespace parbb::harness
