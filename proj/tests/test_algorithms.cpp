#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "parbb/adaptive_rate.hpp"
#include "parbb/catalogue.hpp"
#include "parbb/config_json.hpp"
#include "parbb/errors.hpp"
#include "parbb/framework.hpp"
#include "parbb/one_plus_lambda.hpp"
#include "parbb/potential.hpp"

using namespace parbb;

namespace {

AlgoConfig config(Algorithm algorithm, std::size_t n, std::size_t lambda, std::uint64_t seed) {
  AlgoConfig cfg;
  cfg.algorithm = algorithm;
  cfg.n = n;
  cfg.lambda = lambda;
  cfg.budget = default_budget(n, lambda);
  cfg.seed = seed;
  return cfg;
}

RunRecord run(const AlgoConfig& cfg, const Objective& obj) {
  Rng rng(cfg.seed);
  return run_algorithm(cfg, obj, rng, obj.global_optima());
}

// Textbook (1+1) EA on OneMax with its own generator and bit vector.
std::uint64_t reference_one_plus_one(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution flip(1.0 / static_cast<double>(n));
  std::vector<bool> x(n);
  std::size_t fx = 0;
  for (std::size_t i = 0; i < n; ++i) fx += (x[i] = coin(gen));
  std::uint64_t evals = 1;
  while (fx < n) {
    std::vector<bool> y = x;
    std::size_t fy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (flip(gen)) y[i] = !y[i];
      fy += y[i];
    }
    ++evals;
    if (fy >= fx) {
      x = std::move(y);
      fx = fy;
    }
  }
  return evals;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

class FixedParentPolicy : public Policy {
 public:
  explicit FixedParentPolicy(std::size_t count, std::size_t parent) : count_(count), parent_(parent) {}
  std::vector<Query> choose(const History&, std::size_t, Rng&) override {
    return std::vector<Query>(count_, Query{parent_, UnaryOperator::single_bit()});
  }

 private:
  std::size_t count_;
  std::size_t parent_;
};

// Asks for a point of the round that is about to be generated.
class PeekingPolicy : public Policy {
 public:
  std::vector<Query> choose(const History& history, std::size_t lambda, Rng&) override {
    (void)history.at(history.size() + lambda - 1);
    return {};
  }
};

}  // namespace

TEST(AdaptiveRate, Examples) {
  for (std::size_t lambda : {1u, 2u, 3u, 10u, 1000u})
    EXPECT_DOUBLE_EQ(adaptive_rate(100, 100, lambda), std::max(std::log(static_cast<double>(lambda)), 1.0) / 100.0);
  for (std::size_t i = 1; i <= 50; ++i) EXPECT_DOUBLE_EQ(adaptive_rate(i, 50, 1), 1.0 / 50.0);
  // lambda is integral, so e^4 is bracketed by 54 and 55
  EXPECT_LT(adaptive_rate(100, 100, 54), 0.04);
  EXPECT_GT(adaptive_rate(100, 100, 55), 0.04);
  EXPECT_NEAR(adaptive_rate(100, 100, 55), std::log(55.0) / 100.0, 1e-15);
}

TEST(AdaptiveRate, FormulaRangeAndMonotonicity) {
  for (std::size_t n : {10u, 100u, 1000u}) {
    for (std::size_t lambda : {3u, 8u, 64u, 512u}) {
      double prev = 0.0;
      for (std::size_t i = 1; i <= n; ++i) {
        const double p = adaptive_rate(i, n, lambda);
        const double oracle = std::max(std::log(static_cast<double>(lambda)) /
                                           (n * std::log(std::numbers::e * n / static_cast<double>(i))),
                                       1.0 / n);
        EXPECT_NEAR(p, oracle, 1e-15);
        EXPECT_GE(p, 1.0 / n);
        EXPECT_LE(p, std::log(static_cast<double>(lambda)) / n + 1e-15);
        EXPECT_GE(p, prev);
        prev = p;
      }
    }
  }
  EXPECT_THROW(adaptive_rate(0, 10, 4), ContractViolation);
  EXPECT_THROW(adaptive_rate(11, 10, 4), DomainError);
  EXPECT_THROW(adaptive_rate(5, 10, 0), DomainError);
}

TEST(OnePlusLambda, StartAtOptimum) {
  auto cfg = config(Algorithm::one_plus_lambda_fixed, 30, 1, 1);
  cfg.initial = BitString::ones(30);
  const auto rec = run(cfg, make_onemax(30));
  EXPECT_TRUE(rec.hit_target);
  EXPECT_EQ(rec.generations, 0u);
  EXPECT_EQ(rec.evaluations, 1u);
  EXPECT_EQ(rec.first_hit_evaluation, 1u);
  cfg.algorithm = Algorithm::rls;
  EXPECT_EQ(run(cfg, make_onemax(30)).evaluations, 1u);
}

TEST(OnePlusLambda, OnePlusOneMatchesReference) {
  const std::size_t n = 100;
  const int runs = 100;
  double ours = 0.0, ref = 0.0;
  for (int i = 0; i < runs; ++i) {
    ours += static_cast<double>(run(config(Algorithm::one_plus_lambda_fixed, n, 1, 1000 + i), make_onemax(n)).evaluations);
    ref += static_cast<double>(reference_one_plus_one(n, 5000 + i));
  }
  ours /= runs;
  ref /= runs;
  const double scale = std::numbers::e * n * std::log(static_cast<double>(n));
  EXPECT_GE(ours, 0.5 * scale);
  EXPECT_LE(ours, 2.0 * scale);
  EXPECT_NEAR(ours / ref, 1.0, 0.12);
}

TEST(Rls, CouponCollectorRange) {
  const std::size_t n = 200;
  const int runs = 100;
  double mean = 0.0;
  for (int i = 0; i < runs; ++i) {
    auto cfg = config(Algorithm::rls, n, 1, 70 + i);
    cfg.record_trajectory = true;
    const auto rec = run(cfg, make_onemax(n));
    ASSERT_TRUE(rec.hit_target);
    for (std::size_t t = 1; t < rec.trajectory.size(); ++t) {
      const double step = rec.trajectory[t] - rec.trajectory[t - 1];
      ASSERT_TRUE(step == 0.0 || step == 1.0);
    }
    mean += static_cast<double>(rec.evaluations);
  }
  mean /= runs;
  const double estimate = n * std::log(static_cast<double>(n)) + 0.58 * n;
  EXPECT_GE(mean, 0.8 * estimate);
  EXPECT_LE(mean, 1.3 * estimate);
  // n H_{n/2} is the expected time from exactly n/2 zeros
  EXPECT_NEAR(mean / (n * oracle::harmonic(n / 2)), 1.0, 0.1);
}

TEST(OnePlusLambda, AccountingAndSelectionInvariants) {
  std::vector<Objective> objs{make_onemax(40), make_leading_ones(40), make_jump(40, 3), make_twomax(40),
                              make_maxsat_hard(40), make_mincut_two_cliques(40), make_knapsack_hard(41)};
  for (const auto& obj : objs) {
    for (auto algo : {Algorithm::one_plus_lambda_fixed, Algorithm::one_plus_lambda_adaptive, Algorithm::rls,
                      Algorithm::generic_parallel}) {
      for (std::size_t lambda : {1u, 5u, 16u}) {
        auto cfg = config(algo, obj.n(), lambda, 3 * lambda + 11);
        cfg.budget = 2000 + lambda / 2;
        cfg.record_trajectory = true;
        const auto rec = run(cfg, obj);
        EXPECT_LE(rec.evaluations, cfg.budget);
        EXPECT_EQ(rec.evaluations, lambda * (rec.generations + 1)) << obj.name();
        if (!rec.hit_target) {
          EXPECT_GT(rec.evaluations + lambda, cfg.budget);
          EXPECT_FALSE(rec.first_hit_evaluation);
        } else {
          ASSERT_TRUE(rec.first_hit_evaluation);
          EXPECT_LE(*rec.first_hit_evaluation, rec.evaluations);
          EXPECT_GT(*rec.first_hit_evaluation + lambda, rec.evaluations);
        }
        ASSERT_EQ(rec.trajectory.size(), rec.generations + 1);
        for (std::size_t t = 1; t < rec.trajectory.size(); ++t)
          EXPECT_FALSE(obj.better(rec.trajectory[t - 1], rec.trajectory[t])) << obj.name();
        EXPECT_EQ(rec.best_fitness, rec.trajectory.back());
      }
    }
  }
}

TEST(OnePlusLambda, Deterministic) {
  for (auto algo : {Algorithm::one_plus_lambda_fixed, Algorithm::one_plus_lambda_adaptive, Algorithm::rls,
                    Algorithm::generic_parallel}) {
    auto cfg = config(algo, 64, 7, 99);
    cfg.record_trajectory = true;
    const auto a = run(cfg, make_onemax(64));
    const auto b = run(cfg, make_onemax(64));
    EXPECT_EQ(a.evaluations, b.evaluations);
    EXPECT_EQ(a.trajectory, b.trajectory);
    EXPECT_EQ(a.first_hit_evaluation, b.first_hit_evaluation);
  }
}

TEST(OnePlusLambda, ConfigValidation) {
  auto cfg = config(Algorithm::one_plus_lambda_fixed, 10, 8, 1);
  cfg.budget = 7;
  EXPECT_THROW(run(cfg, make_onemax(10)), ConfigError);
  cfg.budget = 100;
  cfg.p = 1.0;
  EXPECT_THROW(run(cfg, make_onemax(10)), ConfigError);
  cfg.p.reset();
  EXPECT_THROW(run(cfg, make_onemax(11)), ConfigError);
  cfg.lambda = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  EXPECT_THROW(algorithm_from_string("simulated-annealing"), ConfigError);
  for (auto a : {Algorithm::one_plus_lambda_fixed, Algorithm::one_plus_lambda_adaptive, Algorithm::rls,
                 Algorithm::generic_parallel})
    EXPECT_EQ(algorithm_from_string(to_string(a)), a);
}

TEST(OnePlusLambda, HeuristicRateLabel) {
  auto cfg = config(Algorithm::one_plus_lambda_adaptive, 20, 4, 1);
  EXPECT_FALSE(run(cfg, make_onemax(20)).heuristic_rate);
  EXPECT_TRUE(run(cfg, make_leading_ones(20)).heuristic_rate);
  EXPECT_EQ(p_mode_label(cfg, make_onemax(20)), "adaptive");
  EXPECT_EQ(p_mode_label(cfg, make_leading_ones(20)), "adaptive-heuristic");
}

TEST(ConfigJson, RoundTripAndDefaults) {
  const auto cfg = algo_config_from_json(nlohmann::json::parse(
      R"({"algorithm": "one-plus-lambda-fixed", "n": 50, "lambda": 4, "p": "2/n", "seed": 9})"));
  EXPECT_DOUBLE_EQ(*cfg.p, 0.04);
  EXPECT_EQ(cfg.budget, default_budget(50, 4));
  const auto again = algo_config_from_json(to_json(cfg));
  EXPECT_EQ(again.n, cfg.n);
  EXPECT_EQ(again.lambda, cfg.lambda);
  EXPECT_EQ(again.p, cfg.p);
  EXPECT_EQ(again.seed, cfg.seed);
  EXPECT_THROW(algo_config_from_json(nlohmann::json::parse(R"({"lambda": 4})")), ConfigError);
  EXPECT_THROW(algo_config_from_json(nlohmann::json::parse(R"({"n": 5, "budget": 2, "lambda": 4})")), ConfigError);
}

// two code paths, same law: compare hitting generations with a two-sample KS test
TEST(Framework, GenericReproducesOnePlusLambda) {
  const std::size_t n = 50, lambda = 8;
  const int runs = 400;
  std::vector<double> ea, generic;
  for (int i = 0; i < runs; ++i) {
    ea.push_back(static_cast<double>(run(config(Algorithm::one_plus_lambda_fixed, n, lambda, 10000 + i), make_onemax(n)).generations));
    generic.push_back(static_cast<double>(run(config(Algorithm::generic_parallel, n, lambda, 20000 + i), make_onemax(n)).generations));
  }
  // critical value of the two-sample KS statistic at significance 1e-3
  const double critical = 1.949 * std::sqrt(2.0 / runs);
  EXPECT_LT(ks_statistic(ea, generic), critical);
}

TEST(Framework, LambdaOneIsSequential) {
  const auto obj = make_onemax(30);
  auto cfg = config(Algorithm::generic_parallel, 30, 1, 5);
  cfg.record_trajectory = true;
  const auto rec = run(cfg, obj);
  EXPECT_TRUE(rec.hit_target);
  EXPECT_EQ(rec.evaluations, rec.generations + 1);
  EXPECT_EQ(*rec.first_hit_evaluation, rec.evaluations);
}

TEST(Framework, MirroredKeepsPotentialsEqual) {
  const std::size_t n = 60;
  const auto obj = make_onemax(n);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto cfg = config(Algorithm::generic_parallel, n, 6, seed);
    cfg.budget = 3000;
    OnePlusLambdaPolicy policy(UnaryOperator::standard_mutation(1.0 / n));
    PotentialTracker tracker(n);
    Rng rng(seed);
    const auto rec = run_generic_parallel(policy, cfg, obj, rng, obj.global_optima(), {true, &tracker});
    // free complements are not charged
    EXPECT_EQ(rec.evaluations, cfg.lambda * (rec.generations + 1));
    ASSERT_EQ(tracker.trajectory().size(), rec.generations + 1);
    for (const auto& sample : tracker.trajectory()) EXPECT_EQ(sample.s0, sample.s1);
    for (std::size_t t = 1; t < tracker.trajectory().size(); ++t)
      EXPECT_LE(tracker.trajectory()[t].s(), tracker.trajectory()[t - 1].s());
    EXPECT_LE(tracker.s(), n / 2);
  }
}

TEST(Framework, MirroredHitIsChargedToPaidQuery) {
  // the complement of the all-zeros start is the optimum
  const std::size_t n = 12;
  auto cfg = config(Algorithm::generic_parallel, n, 3, 1);
  cfg.initial = BitString::zeros(n);
  OnePlusLambdaPolicy policy(UnaryOperator::single_bit());
  Rng rng(1);
  const auto obj = make_onemax(n);
  const auto rec = run_generic_parallel(policy, cfg, obj, rng, obj.global_optima(), {true, nullptr});
  EXPECT_TRUE(rec.hit_target);
  EXPECT_EQ(rec.first_hit_evaluation, 1u);
  EXPECT_EQ(rec.evaluations, 3u);
}

TEST(Framework, ContractViolations) {
  const auto obj = make_onemax(10);
  auto cfg = config(Algorithm::generic_parallel, 10, 4, 1);
  Rng rng(1);
  FixedParentPolicy wrong_count(3, 0);
  EXPECT_THROW(run_generic_parallel(wrong_count, cfg, obj, rng, obj.global_optima()), ContractViolation);
  FixedParentPolicy future_parent(4, 4);
  EXPECT_THROW(run_generic_parallel(future_parent, cfg, obj, rng, obj.global_optima()), ContractViolation);
  PeekingPolicy peek;
  EXPECT_THROW(run_generic_parallel(peek, cfg, obj, rng, obj.global_optima()), ContractViolation);
  FixedParentPolicy fine(4, 3);
  EXPECT_NO_THROW(run_generic_parallel(fine, cfg, obj, rng, obj.global_optima()));
}

TEST(Potential, Examples) {
  PotentialTracker t(8);
  EXPECT_EQ(t.s(), 8u);
  const std::vector<BitString> first{BitString::from_string("11000000"), BitString::from_string("11111100")};
  track_potential(t, first);
  EXPECT_EQ(t.s0(), 2u);
  EXPECT_EQ(t.s1(), 2u);
  const std::vector<BitString> second{BitString::ones(8)};
  track_potential(t, second);
  EXPECT_EQ(t.s(), 0u);
  EXPECT_EQ(t.s1(), 2u);
  const std::vector<BitString> bad{BitString(7)};
  EXPECT_THROW(t.update(bad), DimensionError);
}

TEST(Potential, NeverIncreases) {
  Rng rng(4);
  PotentialTracker t(50);
  for (int step = 0; step < 300; ++step) {
    std::vector<BitString> batch;
    for (int k = 0; k < 3; ++k) batch.push_back(BitString::random(50, rng));
    const auto before = t.s();
    t.update(batch);
    EXPECT_LE(t.s(), before);
  }
}

TEST(Potential, RandomInitialBatchSitsBelowHalf) {
  const std::size_t n = 1000;
  const double root = std::sqrt(static_cast<double>(n));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    PotentialTracker t(n);
    std::vector<BitString> batch;
    for (int k = 0; k < 10; ++k) batch.push_back(BitString::random(n, rng));
    t.update(batch);
    EXPECT_LT(static_cast<double>(t.s()), n / 2.0 - 0.25 * root);
    EXPECT_GT(static_cast<double>(t.s()), n / 2.0 - 4.0 * root);
  }
}
