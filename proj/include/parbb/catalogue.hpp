#pragma once

#include <cstddef>
#include <vector>

#include "parbb/instances.hpp"
#include "parbb/objective.hpp"

namespace parbb {

// Factories for every named benchmark. Each attaches the closed-form optimum,
// the global-optima count bound and, where one is known, the Hamming-1
// local-optima characterisation.

Objective make_onemax(std::size_t n);
Objective make_leading_ones(std::size_t n);
Objective make_leading_zeros(std::size_t n);
Objective make_twomax(std::size_t n);
Objective make_twomax_prime(std::size_t n);
Objective make_hiff(std::size_t n);
Objective make_jump(std::size_t n, std::size_t k);
Objective make_cliff(std::size_t n, std::size_t d);

/// Two-colouring by bichromatic edges. Maximising is vertex colouring,
/// minimising is the Ising formulation. The optimum is known in closed form
/// for bipartite graphs (and always when minimising).
Objective make_vertex_colouring(GraphInstance g, Direction direction = Direction::maximise);

/// MinCut with the infeasibility penalty, on an arbitrary graph.
Objective make_mincut(GraphInstance g);
/// MinCut on gen_two_cliques(n), with its closed-form optima and local optima.
Objective make_mincut_two_cliques(std::size_t n);

Objective make_partition(PartitionInstance inst);
Objective make_knapsack(KnapsackInstance inst);
Objective make_knapsack_hard(std::size_t n);

Objective make_maxsat_hard(std::size_t n);
/// Same landscape evaluated by clause enumeration.
Objective make_maxsat_hard_enumerated(std::size_t n);

Objective make_planted_sat(SatInstance inst);

Objective make_nearest_peak(std::vector<PeakSpec> peaks);
Objective make_weighted_nearest_peak(std::vector<PeakSpec> peaks);

Objective make_monotone_poly(std::size_t n, MonotonePolynomial poly);

}  // namespace parbb
