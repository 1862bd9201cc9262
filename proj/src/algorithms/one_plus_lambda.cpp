#include "parbb/one_plus_lambda.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "parbb/adaptive_rate.hpp"
#include "parbb/errors.hpp"
#include "parbb/framework.hpp"
#include "parbb/variation.hpp"

namespace parbb {

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::one_plus_lambda_fixed:
      return "one-plus-lambda-fixed";
    case Algorithm::one_plus_lambda_adaptive:
      return "one-plus-lambda-adaptive";
    case Algorithm::rls:
      return "rls";
    case Algorithm::generic_parallel:
      return "generic-parallel";
  }
  return "unknown";
}

Algorithm algorithm_from_string(const std::string& name) {
  for (auto a : {Algorithm::one_plus_lambda_fixed, Algorithm::one_plus_lambda_adaptive, Algorithm::rls,
                 Algorithm::generic_parallel})
    if (to_string(a) == name) return a;
  throw ConfigError("unknown algorithm '" + name + "'");
}

void AlgoConfig::validate() const {
  if (n == 0) throw ConfigError("n must be at least 1");
  if (lambda == 0) throw ConfigError("lambda must be at least 1");
  if (budget < lambda)
    throw ConfigError("budget " + std::to_string(budget) + " is smaller than lambda " + std::to_string(lambda));
  if (p && !(*p > 0.0 && *p < 1.0)) throw ConfigError("fixed mutation probability must lie in (0, 1)");
  if (initial && initial->size() != n) throw ConfigError("initial point has the wrong length");
}

namespace {

void check_against(const AlgoConfig& cfg, const Objective& obj) {
  cfg.validate();
  if (cfg.n != obj.n())
    throw ConfigError("configured n = " + std::to_string(cfg.n) + " but objective has n = " +
                      std::to_string(obj.n()));
}

bool is_hit(const std::optional<TargetSet>& target, const BitString& x, Fitness f) {
  if (!target) return false;
  if (target->fitness_level()) return f == *target->fitness_level();
  return target->contains(x);
}

// Uniform choice among equally good candidates, one candidate at a time.
struct ArgBest {
  Fitness value = 0.0;
  std::uint64_t ties = 0;

  template <class Better>
  bool offer(Fitness f, Better&& better, Rng& rng) {
    if (ties == 0 || better(f, value)) {
      value = f;
      ties = 1;
      return true;
    }
    if (f == value) {
      ++ties;
      return rng.uniform_below(ties) == 0;
    }
    return false;
  }
};

using KernelFn = std::function<UnaryOperator(Fitness parent_fitness)>;

// Elitist (1+lambda) loop shared by the EA variants and RLS.
RunRecord elitist_run(const AlgoConfig& cfg, const Objective& obj, Rng& rng,
                      const std::optional<TargetSet>& target, const KernelFn& kernel) {
  check_against(cfg, obj);
  const std::size_t n = cfg.n;
  const auto better = [&obj](Fitness a, Fitness b) { return obj.better(a, b); };
  RunRecord rec;
  rec.seed = cfg.seed;

  auto note_hit = [&](const BitString& y, Fitness f, std::uint64_t evaluation) {
    if (!rec.hit_target && is_hit(target, y, f)) {
      rec.hit_target = true;
      rec.first_hit_evaluation = evaluation;
    }
  };

  BitString x(n);
  ArgBest init;
  for (std::size_t k = 0; k < cfg.lambda; ++k) {
    BitString y = cfg.initial ? *cfg.initial : BitString::random(n, rng);
    const Fitness f = obj(y);
    ++rec.evaluations;
    note_hit(y, f, rec.evaluations);
    if (init.offer(f, better, rng)) x = std::move(y);
  }
  Fitness fx = init.value;
  if (cfg.record_trajectory) rec.trajectory.push_back(fx);

  BitString child(n);
  while (!rec.hit_target && rec.evaluations + cfg.lambda <= cfg.budget) {
    const UnaryOperator op = kernel(fx);
    ArgBest best;
    for (std::size_t k = 0; k < cfg.lambda; ++k) {
      // mutate the parent in place and undo afterwards
      const std::size_t r = draw_radius(op, n, rng);
      std::span<const std::uint32_t> positions;
      if (r == n) {
        x.flip_all();
      } else {
        positions = rng.sample_positions(n, r);
        for (const auto i : positions) x.flip(i);
      }
      const Fitness f = obj(x);
      ++rec.evaluations;
      note_hit(x, f, rec.evaluations);
      if (best.offer(f, better, rng)) child = x;
      if (r == n) {
        x.flip_all();
      } else {
        for (const auto i : positions) x.flip(i);
      }
    }
    ++rec.generations;
    if (!better(fx, best.value)) {
      x = child;
      fx = best.value;
    }
    if (cfg.record_trajectory) rec.trajectory.push_back(fx);
  }
  rec.best_fitness = fx;
  return rec;
}

std::size_t rate_zero_count(Fitness f, std::size_t n) {
  const double i = static_cast<double>(n) - std::round(f);
  return static_cast<std::size_t>(std::clamp(i, 1.0, static_cast<double>(n)));
}

}  // namespace

RunRecord run_one_plus_lambda(const AlgoConfig& cfg, const Objective& obj, Rng& rng,
                              const std::optional<TargetSet>& target) {
  KernelFn kernel;
  bool heuristic = false;
  if (cfg.algorithm == Algorithm::one_plus_lambda_adaptive) {
    const std::size_t n = cfg.n;
    const std::size_t lambda = cfg.lambda;
    kernel = [n, lambda](Fitness f) {
      return UnaryOperator::standard_mutation(adaptive_rate(rate_zero_count(f, n), n, lambda));
    };
    heuristic = obj.name() != "onemax";
  } else {
    const UnaryOperator op = UnaryOperator::standard_mutation(cfg.fixed_rate());
    kernel = [op](Fitness) { return op; };
  }
  RunRecord rec = elitist_run(cfg, obj, rng, target, kernel);
  rec.heuristic_rate = heuristic;
  return rec;
}

RunRecord run_one_plus_lambda(const AlgoConfig& cfg, const Objective& obj, Rng& rng) {
  return run_one_plus_lambda(cfg, obj, rng, obj.global_optima());
}

RunRecord run_rls(const AlgoConfig& cfg, const Objective& obj, Rng& rng,
                  const std::optional<TargetSet>& target) {
  const UnaryOperator op = UnaryOperator::single_bit();
  return elitist_run(cfg, obj, rng, target, [op](Fitness) { return op; });
}

RunRecord run_rls(const AlgoConfig& cfg, const Objective& obj, Rng& rng) {
  return run_rls(cfg, obj, rng, obj.global_optima());
}

RunRecord run_algorithm(const AlgoConfig& cfg, const Objective& obj, Rng& rng,
                        const std::optional<TargetSet>& target) {
  switch (cfg.algorithm) {
    case Algorithm::one_plus_lambda_fixed:
    case Algorithm::one_plus_lambda_adaptive:
      return run_one_plus_lambda(cfg, obj, rng, target);
    case Algorithm::rls:
      return run_rls(cfg, obj, rng, target);
    case Algorithm::generic_parallel: {
      OnePlusLambdaPolicy policy(UnaryOperator::standard_mutation(cfg.fixed_rate()));
      return run_generic_parallel(policy, cfg, obj, rng, target, FrameworkOptions{cfg.mirrored, nullptr});
    }
  }
  throw ConfigError("unknown algorithm");
}

std::string p_mode_label(const AlgoConfig& cfg, const Objective& obj) {
  switch (cfg.algorithm) {
    case Algorithm::one_plus_lambda_adaptive:
      return obj.name() == "onemax" ? "adaptive" : "adaptive-heuristic";
    case Algorithm::rls:
      return "single-bit";
    case Algorithm::one_plus_lambda_fixed:
    case Algorithm::generic_parallel:
      break;
  }
  const double p = cfg.fixed_rate();
  if (!cfg.p) return "1/n";
  return "p=" + std::to_string(p);
}

}  // namespace parbb
