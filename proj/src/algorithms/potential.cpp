#include "parbb/potential.hpp"

#include <algorithm>

#include "parbb/errors.hpp"

namespace parbb {

PotentialTracker::PotentialTracker(std::size_t n) : n_(n), s0_(n), s1_(n) {
  if (n == 0) throw DomainError("potential tracker needs n >= 1");
}

void PotentialTracker::update(std::span<const BitString> batch) {
  for (const BitString& x : batch) {
    if (x.size() != n_) throw DimensionError("potential tracker fed a point of the wrong length");
    const std::size_t ones = x.count_ones();
    s0_ = std::min(s0_, n_ - ones);
    s1_ = std::min(s1_, ones);
  }
  trajectory_.push_back(Sample{s0_, s1_});
}

PotentialTracker& track_potential(PotentialTracker& tracker, std::span<const BitString> batch) {
  tracker.update(batch);
  return tracker;
}

}  // namespace parbb
