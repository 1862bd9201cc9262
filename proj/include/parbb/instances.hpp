#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "parbb/bitstring.hpp"

namespace parbb {

/// Peak of a (weighted) nearest peak function.
struct PeakSpec {
  BitString centre;
  double height;
  double slope;
};

struct Literal {
  std::uint32_t variable;  // 0-based
  bool negated;

  bool satisfied_by(const BitString& x) const noexcept { return x.test(variable) != negated; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct SatInstance {
  std::size_t n = 0;
  std::vector<Clause> clauses;
  std::optional<BitString> planted;
};

struct GraphInstance {
  std::size_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct PartitionInstance {
  std::vector<double> sizes;
};

struct KnapsackInstance {
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> values;
  std::int64_t capacity = 0;
};

struct Monomial {
  double weight;
  std::vector<std::uint32_t> variables;
};

struct MonotonePolynomial {
  std::vector<Monomial> monomials;
};

// Invariant checks; each throws DomainError (or DimensionError) on failure.
void validate(const PeakSpec& peak);
void validate(const SatInstance& inst);
void validate(const GraphInstance& g);
void validate(const PartitionInstance& inst);
void validate(const KnapsackInstance& inst);
void validate(const MonotonePolynomial& poly, std::size_t n);

enum class SizeDistribution { uniform, exponential };

/// Two disjoint cliques on n/2 vertices each (vertices 0..n/2-1 and n/2..n-1).
GraphInstance gen_two_cliques(std::size_t n);
/// Simple cycle 0-1-...-(n-1)-0.
GraphInstance gen_cycle(std::size_t n);

/// n i.i.d. job sizes from uniform(0,1] or exponential(1), fixed by seed.
PartitionInstance gen_partition_random(std::size_t n, SizeDistribution dist, std::uint64_t seed);

/// (n+1)/2 small objects of weight and value n followed by (n-1)/2 big
/// objects of weight and value n+1; capacity (n+1)/2 * n.
KnapsackInstance knapsack_hard_instance(std::size_t n);

struct PlantedSatOptions {
  double c1 = 3.0 / 7.0;  // probability of exactly one literal matching the planted point
  double c3 = 1.0 / 7.0;  // probability of all three literals matching
  std::optional<BitString> planted;  // drawn uniformly from the seed if absent
};

/// Random planted 3-SAT: m independent clauses, each satisfied by the planted
/// assignment, with three distinct variables.
SatInstance gen_planted_3sat(std::size_t n, std::size_t m, std::uint64_t seed,
                             const PlantedSatOptions& options = {});

/// `count` peaks with uniform random centres, heights in [1, max_height]
/// and slopes in [min_slope, 1].
std::vector<PeakSpec> gen_random_peaks(std::size_t n, std::size_t count, std::uint64_t seed,
                                       double max_height = 10.0, double min_slope = 0.1);

/// Random monotone polynomial with `count` monomials of degree in [1, max_degree].
MonotonePolynomial gen_random_monotone_poly(std::size_t n, std::size_t count,
                                            std::size_t max_degree, std::uint64_t seed);

/// Number of matching literals of a clause under the planted assignment.
std::size_t matching_literals(const Clause& clause, const BitString& planted);

}  // namespace parbb
