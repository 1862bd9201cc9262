#pragma once

#include <vector>

#include "parbb/objective.hpp"

namespace parbb {

/// True iff no Hamming-1 neighbour of x has strictly better fitness.
bool is_local_optimum(const Objective& obj, const BitString& x);

/// Every Hamming-1 local optimum by exhaustive scan. CapacityError beyond
/// kExhaustiveLimit.
std::vector<BitString> enumerate_local_optima(const Objective& obj);

/// Local optima as a target set. Membership uses the objective's closed form
/// when it has one and the neighbourhood test otherwise; the size bound is
/// the closed-form count or 2^n.
TargetSet local_optima(const Objective& obj);

}  // namespace parbb
