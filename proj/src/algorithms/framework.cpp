#include "parbb/framework.hpp"

#include <string>

#include "parbb/errors.hpp"

namespace parbb {

const HistoryEntry& History::at(std::size_t index) const {
  if (index >= entries_.size())
    throw ContractViolation("history index " + std::to_string(index) +
                            " refers to a point that has not been evaluated in a completed round");
  return entries_[index];
}

std::pair<std::size_t, std::size_t> History::round(std::size_t t) const {
  if (t >= round_start_.size()) throw ContractViolation("round " + std::to_string(t) + " is not complete");
  const std::size_t last = t + 1 < round_start_.size() ? round_start_[t + 1] : entries_.size();
  return {round_start_[t], last};
}

void History::append_round(std::vector<HistoryEntry> entries) {
  round_start_.push_back(entries_.size());
  for (auto& e : entries) entries_.push_back(std::move(e));
}

std::vector<Query> OnePlusLambdaPolicy::choose(const History& history, std::size_t lambda, Rng& rng) {
  const auto [first, last] = history.round(history.rounds() - 1);
  std::optional<std::size_t> best;
  std::uint64_t ties = 0;
  for (std::size_t i = first; i < last; ++i) {
    const HistoryEntry& e = history.at(i);
    if (e.free) continue;
    if (!best || history.better(e.fitness, history.at(*best).fitness)) {
      best = i;
      ties = 1;
    } else if (e.fitness == history.at(*best).fitness) {
      ++ties;
      if (rng.uniform_below(ties) == 0) best = i;
    }
  }
  if (!parent_ || !history.better(history.at(*parent_).fitness, history.at(*best).fitness)) parent_ = best;
  return std::vector<Query>(lambda, Query{*parent_, op_});
}

namespace {

bool is_hit(const std::optional<TargetSet>& target, const BitString& x, Fitness f) {
  if (!target) return false;
  if (target->fitness_level()) return f == *target->fitness_level();
  return target->contains(x);
}

}  // namespace

RunRecord run_generic_parallel(Policy& policy, const AlgoConfig& cfg, const Objective& obj, Rng& rng,
                               const std::optional<TargetSet>& target, FrameworkOptions options) {
  cfg.validate();
  if (cfg.n != obj.n()) throw ConfigError("configured n does not match the objective");
  const std::size_t n = cfg.n;
  policy.reset();
  History history(n, obj.direction());
  RunRecord rec;
  rec.seed = cfg.seed;
  std::optional<Fitness> best;

  // Evaluates one round of points (free complements added when mirrored).
  auto run_round = [&](std::vector<BitString> points) {
    std::vector<HistoryEntry> entries;
    entries.reserve(points.size() * (options.mirrored ? 2 : 1));
    for (auto& y : points) {
      ++rec.evaluations;
      const std::uint64_t charged = rec.evaluations;
      auto record = [&](BitString z, bool free) {
        const Fitness f = obj(z);
        if (!best || obj.better(f, *best)) best = f;
        if (!rec.hit_target && is_hit(target, z, f)) {
          rec.hit_target = true;
          rec.first_hit_evaluation = charged;
        }
        entries.push_back(HistoryEntry{std::move(z), f, free});
      };
      if (options.mirrored) {
        BitString c = complement(y);
        record(std::move(y), false);
        record(std::move(c), true);
      } else {
        record(std::move(y), false);
      }
    }
    if (options.tracker) {
      std::vector<BitString> batch;
      batch.reserve(entries.size());
      for (const auto& e : entries) batch.push_back(e.x);
      options.tracker->update(batch);
    }
    history.append_round(std::move(entries));
    if (cfg.record_trajectory) rec.trajectory.push_back(*best);
  };

  std::vector<BitString> initial;
  initial.reserve(cfg.lambda);
  for (std::size_t k = 0; k < cfg.lambda; ++k)
    initial.push_back(cfg.initial ? *cfg.initial : BitString::random(n, rng));
  run_round(std::move(initial));

  while (!rec.hit_target && rec.evaluations + cfg.lambda <= cfg.budget) {
    const std::vector<Query> queries = policy.choose(history, cfg.lambda, rng);
    if (queries.size() != cfg.lambda)
      throw ContractViolation("policy returned " + std::to_string(queries.size()) + " queries, expected " +
                              std::to_string(cfg.lambda));
    std::vector<BitString> points;
    points.reserve(queries.size());
    for (const Query& q : queries) {
      const HistoryEntry& parent = history.at(q.parent);
      points.push_back(apply(q.op, parent.x, rng));
    }
    run_round(std::move(points));
    ++rec.generations;
  }
  rec.best_fitness = *best;
  return rec;
}

}  // namespace parbb
