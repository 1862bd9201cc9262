#include "parbb/adaptive_rate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parbb/errors.hpp"

namespace parbb {

double adaptive_rate(std::size_t i, std::size_t n, std::size_t lambda) {
  if (i == 0) throw ContractViolation("adaptive_rate: a parent without zeros must not be mutated");
  if (i > n) throw DomainError("adaptive_rate: zero count exceeds n");
  if (lambda == 0) throw DomainError("adaptive_rate: lambda must be at least 1");
  const double nn = static_cast<double>(n);
  const double ln_ratio = std::log(std::numbers::e * nn / static_cast<double>(i));
  return std::max(std::log(static_cast<double>(lambda)) / (nn * ln_ratio), 1.0 / nn);
}

}  // namespace parbb
