#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parbb/objective.hpp"
#include "parbb/one_plus_lambda.hpp"
#include "parbb/potential.hpp"
#include "parbb/rng.hpp"
#include "parbb/variation.hpp"

namespace parbb {

/// One variation request: vary the history entry `parent` with `op`.
struct Query {
  std::size_t parent;
  UnaryOperator op;
};

struct HistoryEntry {
  BitString x;
  Fitness fitness;
  /// Complement queried for free under mirrored sampling.
  bool free = false;
};

/// Every point queried in completed rounds. Policies only ever see a const
/// History that ends with the previous round, so a choice for round t+1
/// cannot depend on round t+1 evaluations.
class History {
 public:
  History(std::size_t n, Direction direction) : n_(n), direction_(direction) {}

  std::size_t n() const noexcept { return n_; }
  Direction direction() const noexcept { return direction_; }
  bool better(Fitness a, Fitness b) const noexcept {
    return direction_ == Direction::maximise ? a > b : a < b;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t rounds() const noexcept { return round_start_.size(); }
  /// ContractViolation for an index not yet in the history.
  const HistoryEntry& at(std::size_t index) const;
  /// Index range [first, last) of round t.
  std::pair<std::size_t, std::size_t> round(std::size_t t) const;

  void append_round(std::vector<HistoryEntry> entries);

 private:
  std::size_t n_;
  Direction direction_;
  std::vector<HistoryEntry> entries_;
  std::vector<std::size_t> round_start_;
};

/// Decides the lambda queries of the next round from completed rounds.
class Policy {
 public:
  virtual ~Policy() = default;
  /// Called once before the initial round of every run.
  virtual void reset() {}
  virtual std::vector<Query> choose(const History& history, std::size_t lambda, Rng& rng) = 0;
};

/// Elitist (1+lambda) selection: keeps the best-so-far parent, replacing it
/// by the best offspring of the last round (uniform among ties) unless that
/// offspring is strictly worse, and varies it lambda times with `op`.
class OnePlusLambdaPolicy : public Policy {
 public:
  explicit OnePlusLambdaPolicy(UnaryOperator op) : op_(op) {}
  void reset() override { parent_.reset(); }
  std::vector<Query> choose(const History& history, std::size_t lambda, Rng& rng) override;

 private:
  UnaryOperator op_;
  std::optional<std::size_t> parent_;
};

struct FrameworkOptions {
  bool mirrored = false;
  /// Fed every round, free complements included.
  PotentialTracker* tracker = nullptr;
};

/// The lambda-parallel unary unbiased framework. Round 0 queries lambda
/// uniform points (or copies of cfg.initial); every later round queries the
/// policy's choices. Stops after the first round that hits `target` or
/// before a round that would exceed the budget. ContractViolation if the
/// policy returns the wrong number of queries or refers to a point that is
/// not in the history.
RunRecord run_generic_parallel(Policy& policy, const AlgoConfig& cfg, const Objective& obj, Rng& rng,
                               const std::optional<TargetSet>& target, FrameworkOptions options = {});

}  // namespace parbb
