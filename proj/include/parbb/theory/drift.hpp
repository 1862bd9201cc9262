#pragma once

#include <cstdint>
#include <functional>

namespace parbb::theory {

/// g0 / alpha: the expected hitting time bound of additive drift, an upper
/// bound when alpha bounds the drift from below and a lower bound when it
/// bounds it from above. DomainError unless alpha > 0.
double additive_bounds(double g0, double alpha);

/// A probability bound with its unclamped value.
struct TailBound {
  double value;          // clamped to [0, 1]
  double raw;            // may exceed 1 or overflow to infinity
  long double log_raw;   // ln(raw), finite even when raw overflows
};

using BetaSequence = std::function<double(std::uint64_t)>;

/// P(T_a > t) < (prod_{r<t} beta(r)) e^{gamma (g0 - ga)}. DomainError for
/// t = 0, gamma <= 0 or a non-positive beta.
TailBound tail_upper(const BetaSequence& beta, double gamma, double g0, double ga, std::uint64_t t);

/// P(T_a < t) <= (sum_{s=1}^{t-1} prod_{r<s} beta(r)) e^{-gamma (g0 - ga)},
/// or (prod_{r<t} beta(r)) e^{-gamma (g0 - ga)} when the target region is
/// absorbing. Returns 0 for t = 0.
TailBound tail_lower(const BetaSequence& beta, double gamma, double g0, double ga, std::uint64_t t,
                     bool absorbing);

}  // namespace parbb::theory
