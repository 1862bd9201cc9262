#include "parbb/rng.hpp"

#include <numeric>

#include "parbb/errors.hpp"

namespace parbb {

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = splitmix64(master);
  for (const std::uint64_t step : path) h = splitmix64(h ^ splitmix64(step + 0xD1B54A32D192ED03ULL));
  return h;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below: bound must be positive");
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

double Rng::uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

std::size_t Rng::binomial(std::size_t n, double p) {
  if (p <= 0.0 || n == 0) return 0;
  if (p >= 1.0) return n;
  return std::binomial_distribution<std::size_t>(n, p)(engine_);
}

std::span<const std::uint32_t> Rng::sample_positions(std::size_t n, std::size_t r) {
  if (r > n) throw DomainError("sample_positions: r exceeds n");
  if (identity_.size() != n) {
    identity_.resize(n);
    std::iota(identity_.begin(), identity_.end(), std::uint32_t{0});
  }
  partial_fisher_yates(
      std::span<std::uint32_t>(identity_), r,
      [this](std::size_t lo, std::size_t hi) { return lo + uniform_below(hi - lo); }, picked_,
      swaps_);
  return picked_;
}

}  // namespace parbb
