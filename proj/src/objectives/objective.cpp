#include "parbb/objective.hpp"

#include <limits>
#include <memory>
#include <utility>

#include "parbb/errors.hpp"

namespace parbb {

std::string to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::global_optima:
      return "global-optima";
    case TargetKind::local_optima:
      return "local-optima";
    case TargetKind::within_distance:
      return "within-distance";
  }
  return "unknown";
}

TargetSet::TargetSet(TargetKind kind, std::size_t n, Predicate contains, BigCount size_bound,
                     Distance distance, std::size_t radius)
    : kind_(kind),
      n_(n),
      contains_(std::move(contains)),
      size_bound_(std::move(size_bound)),
      distance_(std::move(distance)),
      radius_(radius) {
  if (!contains_) throw ConfigError("target set needs a membership predicate");
}

std::size_t TargetSet::distance_to(const BitString& x) const {
  if (!distance_) throw ConfigError("target set has no distance function");
  return distance_(x);
}

std::vector<BitString> enumerate_members(const TargetSet& set) {
  if (set.n() > kExhaustiveLimit)
    throw CapacityError("exhaustive enumeration is limited to n <= " +
                        std::to_string(kExhaustiveLimit));
  std::vector<BitString> members;
  const std::uint64_t total = std::uint64_t{1} << set.n();
  for (std::uint64_t i = 0; i < total; ++i) {
    BitString x = BitString::from_index(set.n(), i);
    if (set.contains(x)) members.push_back(std::move(x));
  }
  return members;
}

TargetSet within_distance(const TargetSet& base, std::size_t d) {
  const std::size_t n = base.n();
  if (d > n) throw DomainError("within_distance: radius exceeds dimension");
  TargetSet::Distance distance;
  if (base.has_distance()) {
    distance = [base](const BitString& x) { return base.distance_to(x); };
  } else {
    auto members = std::make_shared<const std::vector<BitString>>(enumerate_members(base));
    if (members->empty()) throw DomainError("within_distance: base target set is empty");
    distance = [members](const BitString& x) {
      std::size_t best = x.size();
      for (const auto& m : *members) best = std::min(best, hamming_distance(x, m));
      return best;
    };
  }
  auto contains = [distance, d](const BitString& x) { return distance(x) <= d; };
  BigCount bound = base.size_bound() * hamming_ball_size(n, d);
  const BigCount cube = power_of_two(n);
  if (bound > cube) bound = cube;
  return TargetSet(TargetKind::within_distance, n, std::move(contains), std::move(bound), distance, d);
}

Objective::Objective(Spec spec) : spec_(std::move(spec)) {
  if (spec_.n == 0) throw DomainError("objective dimension must be at least 1");
  if (!spec_.evaluate) throw ConfigError("objective '" + spec_.name + "' has no evaluation function");
}

Fitness Objective::operator()(const BitString& x) const {
  if (x.size() != spec_.n)
    throw DimensionError("objective '" + spec_.name + "' expects length " + std::to_string(spec_.n) +
                         ", got " + std::to_string(x.size()));
  return spec_.evaluate(x);
}

Fitness Objective::worst() const noexcept {
  return spec_.direction == Direction::maximise ? -std::numeric_limits<Fitness>::infinity()
                                                : std::numeric_limits<Fitness>::infinity();
}

Fitness Objective::best_fitness() const {
  if (spec_.optimum_value) return *spec_.optimum_value;
  if (spec_.n > kExhaustiveLimit)
    throw CapacityError("optimum of '" + spec_.name + "' is unknown in closed form and n = " +
                        std::to_string(spec_.n) + " is too large to enumerate");
  Fitness best = worst();
  const std::uint64_t total = std::uint64_t{1} << spec_.n;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Fitness f = spec_.evaluate(BitString::from_index(spec_.n, i));
    if (better(f, best)) best = f;
  }
  return best;
}

TargetSet Objective::global_optima() const {
  const Fitness best = best_fitness();
  auto evaluate = spec_.evaluate;
  auto contains = [evaluate, best](const BitString& x) { return evaluate(x) == best; };
  BigCount bound = spec_.optima_bound ? *spec_.optima_bound : power_of_two(spec_.n);
  TargetSet set(TargetKind::global_optima, spec_.n, std::move(contains), std::move(bound),
                spec_.optima_distance);
  set.set_fitness_level(best);
  return set;
}

}  // namespace parbb
