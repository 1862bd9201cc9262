#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "parbb/bitstring.hpp"

namespace parbb {

/// Zero- and one-potential of a query history: the fewest zeros and the
/// fewest ones seen in any queried point.
class PotentialTracker {
 public:
  struct Sample {
    std::size_t s0;
    std::size_t s1;
    std::size_t s() const noexcept { return s0 < s1 ? s0 : s1; }
  };

  /// Starts from the empty history, where both potentials are n.
  explicit PotentialTracker(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t s0() const noexcept { return s0_; }
  std::size_t s1() const noexcept { return s1_; }
  std::size_t s() const noexcept { return s0_ < s1_ ? s0_ : s1_; }
  /// One sample per update, taken after the update.
  const std::vector<Sample>& trajectory() const noexcept { return trajectory_; }

  void update(std::span<const BitString> batch);

 private:
  std::size_t n_;
  std::size_t s0_;
  std::size_t s1_;
  std::vector<Sample> trajectory_;
};

PotentialTracker& track_potential(PotentialTracker& tracker, std::span<const BitString> batch);

}  // namespace parbb
