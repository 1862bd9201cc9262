#pragma once

#include <cstddef>

namespace parbb {

/// max{ln(lambda) / (n ln(en/i)), 1/n} for a parent with i zeros.
/// ContractViolation for i = 0 (the parent is already optimal), DomainError
/// for i > n or lambda = 0.
double adaptive_rate(std::size_t i, std::size_t n, std::size_t lambda);

}  // namespace parbb
