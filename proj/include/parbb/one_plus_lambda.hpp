#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parbb/objective.hpp"
#include "parbb/rng.hpp"

namespace parbb {

enum class Algorithm { one_plus_lambda_fixed, one_plus_lambda_adaptive, rls, generic_parallel };

std::string to_string(Algorithm algorithm);
/// ConfigError for unknown names.
Algorithm algorithm_from_string(const std::string& name);

struct AlgoConfig {
  Algorithm algorithm = Algorithm::one_plus_lambda_fixed;
  std::size_t n = 0;
  std::size_t lambda = 1;
  /// Mutation probability of the fixed variant; 1/n when absent.
  std::optional<double> p;
  /// Hard cap on evaluations, including the initial batch.
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  /// Forced initial point; the initial batch is then lambda copies of it.
  std::optional<BitString> initial;
  /// Generic framework only: also query the complement of every offspring
  /// without charging an evaluation.
  bool mirrored = false;
  bool record_trajectory = false;

  /// ConfigError when the configuration is unusable.
  void validate() const;
  double fixed_rate() const { return p ? *p : 1.0 / static_cast<double>(n); }
};

struct RunRecord {
  std::uint64_t evaluations = 0;
  std::uint64_t generations = 0;
  bool hit_target = false;
  std::optional<std::uint64_t> first_hit_evaluation;
  Fitness best_fitness = 0.0;
  std::uint64_t seed = 0;
  /// The adaptive rate was driven by n - round(fitness) on a non-OneMax objective.
  bool heuristic_rate = false;
  /// Best-so-far fitness after the initial batch and after every generation,
  /// when requested.
  std::vector<Fitness> trajectory;
};

/// (1+lambda) EA with fixed or adaptive mutation rate. The run stops after
/// the first generation that queries a member of `target` (if given) or
/// before a generation that would exceed the budget.
RunRecord run_one_plus_lambda(const AlgoConfig& cfg, const Objective& obj, Rng& rng,
                              const std::optional<TargetSet>& target);
/// Same with the objective's global optima as target.
RunRecord run_one_plus_lambda(const AlgoConfig& cfg, const Objective& obj, Rng& rng);

/// Randomised local search: single-bit variation, accept if not worse. With
/// lambda > 1 each generation tries lambda single-bit flips of the parent.
RunRecord run_rls(const AlgoConfig& cfg, const Objective& obj, Rng& rng,
                  const std::optional<TargetSet>& target);
RunRecord run_rls(const AlgoConfig& cfg, const Objective& obj, Rng& rng);

/// Dispatches on cfg.algorithm. The generic variant runs the (1+lambda)
/// policy inside the lambda-parallel framework.
RunRecord run_algorithm(const AlgoConfig& cfg, const Objective& obj, Rng& rng,
                        const std::optional<TargetSet>& target);

/// Label of the mutation-rate mode written to result tables.
std::string p_mode_label(const AlgoConfig& cfg, const Objective& obj);

}  // namespace parbb
