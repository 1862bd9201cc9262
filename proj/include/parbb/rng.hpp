#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace parbb {

/// SplitMix64 finaliser; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for the stream addressed by `path` below `master`, e.g.
/// derive_seed(master, {lambda_index, repetition}).
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept;

/// Selects r distinct entries of `perm` by partial Fisher-Yates and writes
/// them to `out`. `perm` is left exactly as it was on entry (every swap is
/// undone), so a single identity permutation can be reused for O(r) draws.
/// `pick(lo, hi)` must return a uniform integer in [lo, hi).
template <class Pick>
void partial_fisher_yates(std::span<std::uint32_t> perm, std::size_t r, Pick&& pick,
                          std::vector<std::uint32_t>& out, std::vector<std::uint32_t>& swaps) {
  const std::size_t n = perm.size();
  out.clear();
  swaps.clear();
  for (std::size_t i = 0; i < r; ++i) {
    const auto j = static_cast<std::size_t>(pick(i, n));
    std::swap(perm[i], perm[j]);
    swaps.push_back(static_cast<std::uint32_t>(j));
    out.push_back(perm[i]);
  }
  for (std::size_t i = r; i-- > 0;) std::swap(perm[i], perm[swaps[i]]);
}

/// Per-worker random stream: a 64-bit Mersenne twister plus the scratch space
/// needed for O(r) sampling of r distinct bit positions.
///
/// Not thread-safe; every worker owns its own instance.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  /// Uniform real in [0, 1).
  double uniform01();
  bool bernoulli(double p) { return uniform01() < p; }
  /// Binomial(n, p) sample.
  std::size_t binomial(std::size_t n, double p);

  /// r distinct positions from {0, ..., n-1}, uniformly over all r-subsets.
  /// The returned view is valid until the next call.
  std::span<const std::uint32_t> sample_positions(std::size_t n, std::size_t r);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::vector<std::uint32_t> identity_;
  std::vector<std::uint32_t> picked_;
  std::vector<std::uint32_t> swaps_;
};

}  // namespace parbb
