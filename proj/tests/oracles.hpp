#pragma once

// Slow, independent reference computations used to check the library.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline std::vector<std::vector<long double>> pascal(std::size_t n) {
  std::vector<std::vector<long double>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1.0L);
    for (std::size_t k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
  }
  return c;
}

inline long double choose(std::size_t n, std::size_t k) {
  if (k > n) return 0.0L;
  long double v = 1.0L;
  for (std::size_t i = 1; i <= k; ++i) v = v * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return v;
}

// Draws every r-subset of n positions (the first m are red) and counts red balls.
inline std::vector<double> hypergeom_by_subsets(unsigned n, unsigned m, unsigned r) {
  std::vector<double> counts(r + 1, 0.0);
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != r) continue;
    const unsigned red = static_cast<unsigned>(__builtin_popcount(mask & ((1u << m) - 1u)));
    counts[red] += 1.0;
    total += 1.0;
  }
  for (auto& c : counts) c /= total;
  return counts;
}

// Law of the zero-count reduction when flipping r uniform positions of a
// string with m zeros, floored at s - m relative to the potential, by
// enumeration of flip sets.
inline std::vector<double> delta0_by_subsets(unsigned n, unsigned s, unsigned m, unsigned r) {
  std::vector<double> counts(n + 1, 0.0);
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != r) continue;
    const int flipped_zeros = __builtin_popcount(mask & ((1u << m) - 1u));
    const int new_zeros = static_cast<int>(m) - flipped_zeros + (static_cast<int>(r) - flipped_zeros);
    const int progress = static_cast<int>(s) - new_zeros;
    counts[progress > 0 ? progress : 0] += 1.0;
    total += 1.0;
  }
  for (auto& c : counts) c /= total;
  return counts;
}

inline double harmonic(std::size_t n) {
  double h = 0.0;
  for (std::size_t i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

}  // namespace oracle
