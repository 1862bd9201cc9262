#include "parbb/functions.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "parbb/errors.hpp"

namespace parbb {
namespace {

void require_length(std::size_t expected, const BitString& x, const char* what) {
  if (x.size() != expected)
    throw DimensionError(std::string(what) + ": expected length " + std::to_string(expected) +
                         ", got " + std::to_string(x.size()));
}

}  // namespace

Fitness onemax(const BitString& x) { return static_cast<Fitness>(x.count_ones()); }

Fitness leading_ones(const BitString& x) { return static_cast<Fitness>(x.leading_ones()); }

Fitness leading_zeros(const BitString& x) { return static_cast<Fitness>(x.leading_zeros()); }

Fitness twomax(const BitString& x) {
  const std::size_t ones = x.count_ones();
  return static_cast<Fitness>(std::max(ones, x.size() - ones));
}

Fitness twomax_prime(const BitString& x) {
  const std::size_t ones = x.count_ones();
  return static_cast<Fitness>(std::max(ones, x.size() - ones) + (ones == x.size() ? 1 : 0));
}

Fitness hiff(const BitString& x) {
  const std::size_t n = x.size();
  if (!std::has_single_bit(n)) throw DomainError("hiff: n must be a power of two");
  // state: 0 = all zeros, 1 = all ones, 2 = mixed
  std::vector<std::uint8_t> level(n);
  for (std::size_t i = 0; i < n; ++i) level[i] = x.test(i) ? 1 : 0;
  double total = static_cast<double>(n);
  double block = 1.0;
  while (level.size() > 1) {
    block *= 2.0;
    std::vector<std::uint8_t> next(level.size() / 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
      const auto a = level[2 * i];
      const auto b = level[2 * i + 1];
      next[i] = (a == b && a != 2) ? a : 2;
      if (next[i] != 2) total += block;
    }
    level.swap(next);
  }
  return total;
}

Fitness jump(const BitString& x, std::size_t k) {
  const std::size_t n = x.size();
  if (k < 1 || k > n) throw DomainError("jump: gap width k must lie in [1, n]");
  const std::size_t ones = x.count_ones();
  if (ones <= n - k || ones == n) return static_cast<Fitness>(k + ones);
  return static_cast<Fitness>(n - ones);
}

Fitness cliff(const BitString& x, std::size_t d) {
  const std::size_t n = x.size();
  if (d < 1 || d > n) throw DomainError("cliff: depth d must lie in [1, n]");
  const std::size_t ones = x.count_ones();
  if (ones <= n - d) return static_cast<Fitness>(ones);
  return static_cast<Fitness>(ones) - static_cast<Fitness>(d) + 0.5;
}

Fitness bichromatic_edges(const GraphInstance& g, const BitString& x) {
  require_length(g.n, x, "bichromatic_edges");
  std::size_t count = 0;
  for (const auto& [u, v] : g.edges) count += x.test(u) != x.test(v) ? 1 : 0;
  return static_cast<Fitness>(count);
}

Fitness mincut_value(const GraphInstance& g, const BitString& x) {
  require_length(g.n, x, "mincut_value");
  const std::size_t ones = x.count_ones();
  if (ones == 0 || ones == x.size()) return static_cast<Fitness>(g.edges.size() + 1);
  return bichromatic_edges(g, x);
}

Fitness partition_makespan(const PartitionInstance& inst, const BitString& x) {
  require_length(inst.sizes.size(), x, "partition_makespan");
  double load[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < inst.sizes.size(); ++i) load[x.test(i) ? 1 : 0] += inst.sizes[i];
  return std::max(load[0], load[1]);
}

Fitness knapsack_value(const KnapsackInstance& inst, const BitString& x) {
  require_length(inst.weights.size(), x, "knapsack_value");
  std::int64_t weight = 0;
  std::int64_t value = 0;
  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    if (!x.test(i)) continue;
    weight += inst.weights[i];
    value += inst.values[i];
  }
  if (weight <= inst.capacity) return static_cast<Fitness>(value);
  return static_cast<Fitness>(inst.capacity - weight);
}

Fitness maxsat_hard(const BitString& x) {
  const auto n = static_cast<std::int64_t>(x.size());
  if (n < 3) throw DomainError("maxsat_hard needs n >= 3");
  const auto ones = static_cast<std::int64_t>(x.count_ones());
  const std::int64_t zeros = n - ones;
  const std::int64_t clauses = n * ((n - 1) * (n - 2) / 2);
  const std::int64_t violated = zeros * (ones * (ones - 1) / 2);
  return static_cast<Fitness>(clauses - violated + ones);
}

Fitness maxsat_hard_enumerated(const BitString& x) {
  const std::size_t n = x.size();
  if (n < 3) throw DomainError("maxsat_hard needs n >= 3");
  std::size_t satisfied = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (k == i) continue;
        if (x.test(i) || !x.test(j) || !x.test(k)) ++satisfied;
      }
    }
    if (x.test(i)) ++satisfied;
  }
  return static_cast<Fitness>(satisfied);
}

Fitness sat_count(const SatInstance& inst, const BitString& x) {
  require_length(inst.n, x, "sat_count");
  std::size_t satisfied = 0;
  for (const Clause& c : inst.clauses)
    satisfied += (c[0].satisfied_by(x) || c[1].satisfied_by(x) || c[2].satisfied_by(x)) ? 1 : 0;
  return static_cast<Fitness>(satisfied);
}

std::size_t nearest_peak_index(std::span<const PeakSpec> peaks, const BitString& x) {
  if (peaks.empty()) throw DomainError("nearest peak function needs at least one peak");
  std::size_t best = 0;
  std::size_t best_distance = hamming_distance(x, peaks[0].centre);
  for (std::size_t p = 1; p < peaks.size(); ++p) {
    const std::size_t d = hamming_distance(x, peaks[p].centre);
    if (d < best_distance || (d == best_distance && peaks[p].height > peaks[best].height)) {
      best = p;
      best_distance = d;
    }
  }
  return best;
}

Fitness nearest_peak(std::span<const PeakSpec> peaks, const BitString& x) {
  const PeakSpec& p = peaks[nearest_peak_index(peaks, x)];
  return p.height - p.slope * static_cast<double>(hamming_distance(x, p.centre));
}

Fitness weighted_nearest_peak(std::span<const PeakSpec> peaks, const BitString& x) {
  if (peaks.empty()) throw DomainError("nearest peak function needs at least one peak");
  double best = peaks[0].height - peaks[0].slope * static_cast<double>(hamming_distance(x, peaks[0].centre));
  for (std::size_t p = 1; p < peaks.size(); ++p)
    best = std::max(best, peaks[p].height -
                              peaks[p].slope * static_cast<double>(hamming_distance(x, peaks[p].centre)));
  return best;
}

Fitness monotone_poly(const MonotonePolynomial& poly, const BitString& x) {
  double total = 0.0;
  for (const Monomial& m : poly.monomials) {
    bool all = true;
    for (const auto v : m.variables) {
      if (v >= x.size()) throw DomainError("monomial variable index out of range");
      if (!x.test(v)) {
        all = false;
        break;
      }
    }
    if (all) total += m.weight;
  }
  return total;
}

}  // namespace parbb
