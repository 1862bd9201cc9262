#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parbb/big_count.hpp"
#include "parbb/bitstring.hpp"
#include "parbb/functions.hpp"

namespace parbb {

enum class Direction { maximise, minimise };

enum class TargetKind { global_optima, local_optima, within_distance };

std::string to_string(TargetKind kind);

/// Set of search points whose first hit defines a stopping time.
///
/// `size_bound` is an upper bound on the number of members. `distance`, when
/// present, returns the Hamming distance from a point to the nearest member
/// and is what within_distance() needs to grow the set.
class TargetSet {
 public:
  using Predicate = std::function<bool(const BitString&)>;
  using Distance = std::function<std::size_t(const BitString&)>;

  TargetSet(TargetKind kind, std::size_t n, Predicate contains, BigCount size_bound,
            Distance distance = {}, std::size_t radius = 0);

  TargetKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  /// Radius of a within-distance set, 0 otherwise.
  std::size_t radius() const noexcept { return radius_; }
  const BigCount& size_bound() const noexcept { return size_bound_; }
  bool has_distance() const noexcept { return static_cast<bool>(distance_); }

  bool contains(const BitString& x) const { return contains_(x); }
  std::size_t distance_to(const BitString& x) const;

  /// Set when membership is exactly "fitness equals this value", which lets
  /// runners test hits without re-evaluating.
  const std::optional<Fitness>& fitness_level() const noexcept { return fitness_level_; }
  void set_fitness_level(Fitness level) { fitness_level_ = level; }

 private:
  TargetKind kind_;
  std::size_t n_;
  Predicate contains_;
  BigCount size_bound_;
  Distance distance_;
  std::size_t radius_;
  std::optional<Fitness> fitness_level_;
};

/// Largest n for which target sets and landscapes may be enumerated.
inline constexpr std::size_t kExhaustiveLimit = 20;

/// Every member of the set, by enumeration of {0,1}^n. CapacityError beyond
/// kExhaustiveLimit.
std::vector<BitString> enumerate_members(const TargetSet& set);

/// All points within Hamming distance d of `base`. Uses the base's distance
/// function, or enumerates the base when n <= kExhaustiveLimit. The size bound
/// is |base| * hamming_ball_size(n, d).
TargetSet within_distance(const TargetSet& base, std::size_t d);

/// A black-box fitness function with its target sets.
///
/// Immutable after construction; evaluation is pure and safe to call from
/// any number of threads.
class Objective {
 public:
  using Evaluate = std::function<Fitness(const BitString&)>;

  struct Spec {
    std::string name;
    std::size_t n = 0;
    Direction direction = Direction::maximise;
    Evaluate evaluate;
    /// Best attainable fitness when known in closed form.
    std::optional<Fitness> optimum_value;
    /// Upper bound on the number of global optima (defaults to 2^n).
    std::optional<BigCount> optima_bound;
    /// Distance to the set of global optima, when known in closed form.
    TargetSet::Distance optima_distance;
    /// Closed-form characterisation of the Hamming-1 local optima.
    TargetSet::Predicate local_optima;
    std::optional<BigCount> local_optima_bound;
    TargetSet::Distance local_optima_distance;
  };

  explicit Objective(Spec spec);

  const std::string& name() const noexcept { return spec_.name; }
  std::size_t n() const noexcept { return spec_.n; }
  Direction direction() const noexcept { return spec_.direction; }

  /// Fitness of x. Throws DimensionError if x has the wrong length.
  Fitness operator()(const BitString& x) const;
  Fitness evaluate(const BitString& x) const { return (*this)(x); }

  /// True iff a is strictly better than b under the objective's direction.
  bool better(Fitness a, Fitness b) const noexcept {
    return spec_.direction == Direction::maximise ? a > b : a < b;
  }
  /// Worst representable fitness under the objective's direction.
  Fitness worst() const noexcept;

  const std::optional<Fitness>& optimum_value() const noexcept { return spec_.optimum_value; }

  /// Best fitness, from the closed form or by enumeration for small n.
  /// CapacityError if neither is available.
  Fitness best_fitness() const;

  /// Global optima as a target set.
  TargetSet global_optima() const;

  const TargetSet::Predicate& local_optima_closed_form() const noexcept { return spec_.local_optima; }
  const std::optional<BigCount>& local_optima_bound() const noexcept { return spec_.local_optima_bound; }
  const TargetSet::Distance& local_optima_distance() const noexcept {
    return spec_.local_optima_distance;
  }

 private:
  Spec spec_;
};

}  // namespace parbb
