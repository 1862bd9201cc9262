#include "parbb/theory/drift.hpp"

#include <algorithm>
#include <cmath>

#include "parbb/errors.hpp"
#include "parbb/theory/hypergeometric.hpp"

namespace parbb::theory {
namespace {

long double log_beta(const BetaSequence& beta, std::uint64_t r) {
  const double b = beta(r);
  if (!(b > 0.0)) throw DomainError("drift theorem needs positive beta values");
  return std::log(static_cast<long double>(b));
}

TailBound make_bound(long double log_raw) {
  const double raw = static_cast<double>(std::exp(log_raw));
  return {std::clamp(raw, 0.0, 1.0), raw, log_raw};
}

}  // namespace

double additive_bounds(double g0, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("additive drift needs alpha > 0");
  return g0 / alpha;
}

TailBound tail_upper(const BetaSequence& beta, double gamma, double g0, double ga, std::uint64_t t) {
  if (!(gamma > 0.0)) throw DomainError("drift theorem needs gamma > 0");
  if (t == 0) throw DomainError("the upper tail bound holds for t > 0 only");
  long double log_prod = 0.0L;
  for (std::uint64_t r = 0; r < t; ++r) log_prod += log_beta(beta, r);
  return make_bound(log_prod + static_cast<long double>(gamma) * (g0 - ga));
}

TailBound tail_lower(const BetaSequence& beta, double gamma, double g0, double ga, std::uint64_t t,
                     bool absorbing) {
  if (!(gamma > 0.0)) throw DomainError("drift theorem needs gamma > 0");
  if (t == 0) return {0.0, 0.0, kLogZero};
  const long double shift = -static_cast<long double>(gamma) * (g0 - ga);
  long double log_prod = 0.0L;
  if (absorbing) {
    for (std::uint64_t r = 0; r < t; ++r) log_prod += log_beta(beta, r);
    return make_bound(log_prod + shift);
  }
  long double log_sum = kLogZero;
  for (std::uint64_t s = 1; s < t; ++s) {
    log_prod += log_beta(beta, s - 1);
    log_sum = log_add(log_sum, log_prod);
  }
  if (log_sum == kLogZero) return {0.0, 0.0, kLogZero};
  return make_bound(log_sum + shift);
}

}  // namespace parbb::theory
