#pragma once

#include <cstddef>
#include <span>

#include "parbb/bitstring.hpp"
#include "parbb/instances.hpp"

namespace parbb {

/// Fitness values; exact for every integer-valued function used here.
using Fitness = double;

Fitness onemax(const BitString& x);
Fitness leading_ones(const BitString& x);
Fitness leading_zeros(const BitString& x);
/// max(|x|_1, |x|_0).
Fitness twomax(const BitString& x);
/// twomax plus one on the all-ones string.
Fitness twomax_prime(const BitString& x);

/// Hierarchical if-and-only-if: every aligned block of size 2^l whose bits
/// are all equal contributes 2^l. Requires n to be a power of two.
Fitness hiff(const BitString& x);

/// k + |x|_1 on the slope and at 1^n, n - |x|_1 inside the gap. 1 <= k <= n.
Fitness jump(const BitString& x, std::size_t k);

/// |x|_1 up to n - d, |x|_1 - d + 1/2 beyond. 1 <= d <= n.
Fitness cliff(const BitString& x, std::size_t d);

/// Number of edges whose endpoints receive different bits.
Fitness bichromatic_edges(const GraphInstance& g, const BitString& x);

/// Cut size for MinCut (to be minimised). The two assignments that leave one
/// side empty are infeasible and score |E| + 1.
Fitness mincut_value(const GraphInstance& g, const BitString& x);

/// Load of the fuller machine (to be minimised).
Fitness partition_makespan(const PartitionInstance& inst, const BitString& x);

/// Total value if the selection fits, otherwise capacity - total weight.
Fitness knapsack_value(const KnapsackInstance& inst, const BitString& x);

/// Satisfied clauses of the hard MaxSat instance with clauses
/// (x_i or not x_j or not x_k) for distinct i, {j, k} plus unit clauses (x_i),
/// via the closed form n*C(n-1,2) - |x|_0 * C(|x|_1, 2) + |x|_1.
Fitness maxsat_hard(const BitString& x);
/// Same count by explicit clause enumeration, O(n^3). Test oracle.
Fitness maxsat_hard_enumerated(const BitString& x);

/// Number of satisfied clauses.
Fitness sat_count(const SatInstance& inst, const BitString& x);

/// Index of the peak that determines the nearest-peak fitness: minimal
/// Hamming distance, ties broken by greater height and then lower index.
std::size_t nearest_peak_index(std::span<const PeakSpec> peaks, const BitString& x);
/// height - slope * distance of the nearest peak.
Fitness nearest_peak(std::span<const PeakSpec> peaks, const BitString& x);
/// max over all peaks of height - slope * distance.
Fitness weighted_nearest_peak(std::span<const PeakSpec> peaks, const BitString& x);

/// Sum of weight * product of the monomial's variables.
Fitness monotone_poly(const MonotonePolynomial& poly, const BitString& x);

}  // namespace parbb
