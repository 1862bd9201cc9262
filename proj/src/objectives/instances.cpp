#include "parbb/instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "parbb/errors.hpp"
#include "parbb/rng.hpp"

namespace parbb {

void validate(const PeakSpec& peak) {
  if (!(peak.height > 0.0)) throw DomainError("peak height must be positive");
  if (!(peak.slope > 0.0)) throw DomainError("peak slope must be positive");
}

void validate(const SatInstance& inst) {
  if (inst.n == 0) throw DomainError("SAT instance needs at least one variable");
  for (const Clause& c : inst.clauses) {
    for (const Literal& l : c)
      if (l.variable >= inst.n) throw DomainError("clause variable index out of range");
    if (c[0].variable == c[1].variable || c[0].variable == c[2].variable ||
        c[1].variable == c[2].variable)
      throw DomainError("clause variables must be distinct");
  }
  if (inst.planted) {
    if (inst.planted->size() != inst.n) throw DimensionError("planted assignment has wrong length");
    for (const Clause& c : inst.clauses)
      if (matching_literals(c, *inst.planted) == 0)
        throw DomainError("planted assignment violates a clause");
  }
}

void validate(const GraphInstance& g) {
  if (g.n == 0) throw DomainError("graph needs at least one vertex");
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto [u, v] : g.edges) {
    if (u >= g.n || v >= g.n) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) throw DomainError("duplicate edge");
  }
}

void validate(const PartitionInstance& inst) {
  if (inst.sizes.empty()) throw DomainError("partition instance needs at least one job");
  for (const double s : inst.sizes)
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("job sizes must be positive and finite");
}

void validate(const KnapsackInstance& inst) {
  if (inst.weights.size() != inst.values.size())
    throw DimensionError("knapsack weights and values differ in length");
  if (inst.weights.empty()) throw DomainError("knapsack instance needs at least one object");
  if (inst.capacity <= 0) throw DomainError("knapsack capacity must be positive");
  for (std::size_t i = 0; i < inst.weights.size(); ++i)
    if (inst.weights[i] <= 0 || inst.values[i] <= 0)
      throw DomainError("knapsack weights and values must be positive");
}

void validate(const MonotonePolynomial& poly, std::size_t n) {
  for (const Monomial& m : poly.monomials) {
    if (!(m.weight > 0.0)) throw DomainError("monomial weights must be strictly positive");
    if (m.variables.empty()) throw DomainError("monomials must contain at least one variable");
    for (const auto v : m.variables)
      if (v >= n) throw DomainError("monomial variable index out of range");
  }
}

GraphInstance gen_two_cliques(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw DomainError("two-clique instance needs an even n >= 4");
  GraphInstance g;
  g.n = n;
  const std::size_t half = n / 2;
  for (std::size_t base : {std::size_t{0}, half})
    for (std::size_t u = 0; u < half; ++u)
      for (std::size_t v = u + 1; v < half; ++v)
        g.edges.emplace_back(static_cast<std::uint32_t>(base + u), static_cast<std::uint32_t>(base + v));
  return g;
}

GraphInstance gen_cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  GraphInstance g;
  g.n = n;
  for (std::size_t u = 0; u < n; ++u)
    g.edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>((u + 1) % n));
  return g;
}

PartitionInstance gen_partition_random(std::size_t n, SizeDistribution dist, std::uint64_t seed) {
  if (n == 0) throw DomainError("partition instance needs n >= 1");
  Rng rng(derive_seed(seed, {0x5041525449ULL}));
  PartitionInstance inst;
  inst.sizes.reserve(n);
  while (inst.sizes.size() < n) {
    double s = 0.0;
    if (dist == SizeDistribution::uniform) {
      s = 1.0 - rng.uniform01();  // (0, 1]
    } else {
      s = std::exponential_distribution<double>(1.0)(rng.engine());
    }
    if (s > 0.0) inst.sizes.push_back(s);
  }
  return inst;
}

KnapsackInstance knapsack_hard_instance(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw DomainError("hard knapsack instance needs an odd n >= 3");
  KnapsackInstance inst;
  const auto small = static_cast<std::int64_t>(n);
  const std::size_t small_count = (n + 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t w = i < small_count ? small : small + 1;
    inst.weights.push_back(w);
    inst.values.push_back(w);
  }
  inst.capacity = static_cast<std::int64_t>(small_count) * small;
  return inst;
}

std::size_t matching_literals(const Clause& clause, const BitString& planted) {
  std::size_t k = 0;
  for (const Literal& l : clause) k += l.satisfied_by(planted) ? 1 : 0;
  return k;
}

SatInstance gen_planted_3sat(std::size_t n, std::size_t m, std::uint64_t seed,
                             const PlantedSatOptions& options) {
  if (n < 3) throw DomainError("planted 3-SAT needs n >= 3");
  if (m < 1) throw DomainError("planted 3-SAT needs m >= 1");
  if (!(options.c1 >= 0.0) || !(options.c3 >= 0.0) || options.c1 + options.c3 > 1.0)
    throw DomainError("clause-type probabilities need c1, c3 >= 0 and c1 + c3 <= 1");
  Rng rng(derive_seed(seed, {0x33534154ULL}));
  SatInstance inst;
  inst.n = n;
  if (options.planted) {
    if (options.planted->size() != n) throw DimensionError("planted assignment has wrong length");
    inst.planted = *options.planted;
  } else {
    inst.planted = BitString::random(n, rng);
  }
  const BitString& star = *inst.planted;
  inst.clauses.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    const double u = rng.uniform01();
    const std::size_t matches = u < options.c1 ? 1 : (u < options.c1 + options.c3 ? 3 : 2);
    // Which of the three slots carry a matching literal.
    std::array<bool, 3> match{false, false, false};
    std::array<std::uint32_t, 3> slots{0, 1, 2};
    for (std::size_t k = 0; k < matches; ++k) {
      std::swap(slots[k], slots[k + rng.uniform_below(3 - k)]);
      match[slots[k]] = true;
    }
    const auto vars = rng.sample_positions(n, 3);
    Clause clause{};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::uint32_t v = vars[k];
      const bool bit = star.test(v);
      // A literal matches the planted point when it evaluates to true there.
      clause[k] = Literal{v, match[k] ? !bit : bit};
    }
    inst.clauses.push_back(clause);
  }
  return inst;
}

std::vector<PeakSpec> gen_random_peaks(std::size_t n, std::size_t count, std::uint64_t seed,
                                       double max_height, double min_slope) {
  if (count == 0) throw DomainError("need at least one peak");
  if (!(max_height >= 1.0) || !(min_slope > 0.0) || min_slope > 1.0)
    throw DomainError("invalid peak generator ranges");
  Rng rng(derive_seed(seed, {0x5045414BULL}));
  std::vector<PeakSpec> peaks;
  peaks.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BitString centre = BitString::random(n, rng);
    const double height = 1.0 + (max_height - 1.0) * rng.uniform01();
    const double slope = min_slope + (1.0 - min_slope) * (1.0 - rng.uniform01());
    peaks.push_back(PeakSpec{std::move(centre), height, slope});
  }
  return peaks;
}

MonotonePolynomial gen_random_monotone_poly(std::size_t n, std::size_t count,
                                            std::size_t max_degree, std::uint64_t seed) {
  if (max_degree == 0 || max_degree > n) throw DomainError("max_degree must lie in [1, n]");
  Rng rng(derive_seed(seed, {0x4D4F4E4FULL}));
  MonotonePolynomial poly;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t degree = 1 + rng.uniform_below(max_degree);
    const auto vars = rng.sample_positions(n, degree);
    Monomial m{1.0 - rng.uniform01(), {vars.begin(), vars.end()}};
    std::sort(m.variables.begin(), m.variables.end());
    poly.monomials.push_back(std::move(m));
  }
  return poly;
}

}  // namespace parbb
