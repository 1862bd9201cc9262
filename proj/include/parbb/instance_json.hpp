#pragma once

#include <vector>

#include "json.hpp"
#include "parbb/instances.hpp"

namespace parbb {

using Json = nlohmann::json;

// Clauses are lists of three signed 1-based variable indices (DIMACS style),
// bit strings are "0101" strings, edges are [u, v] pairs.

Json to_json(const SatInstance& inst);
Json to_json(const GraphInstance& g);
Json to_json(const PartitionInstance& inst);
Json to_json(const KnapsackInstance& inst);
Json to_json(const MonotonePolynomial& poly);
Json to_json(const std::vector<PeakSpec>& peaks);

// Parsers validate the result and throw ConfigError on malformed documents.
SatInstance sat_from_json(const Json& j);
GraphInstance graph_from_json(const Json& j);
PartitionInstance partition_from_json(const Json& j);
KnapsackInstance knapsack_from_json(const Json& j);
MonotonePolynomial poly_from_json(const Json& j, std::size_t n);
std::vector<PeakSpec> peaks_from_json(const Json& j);

}  // namespace parbb
