#include "parbb/big_count.hpp"

#include <cmath>
#include <string>

#include "parbb/errors.hpp"

namespace parbb {

BigCount binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return c;
}

BigCount power_of_two(std::size_t n) {
  BigCount one = 1;
  return one << n;
}

BigCount hamming_ball_size(std::size_t n, std::size_t d) {
  if (d > n)
    throw DomainError("hamming_ball_size: radius " + std::to_string(d) + " exceeds dimension " +
                      std::to_string(n));
  BigCount term = 1;
  BigCount total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    term *= n - i;
    term /= i + 1;
    total += term;
  }
  return total;
}

double log_count(const BigCount& value) {
  if (value <= 0) throw DomainError("log_count of a non-positive value");
  const std::size_t msb = boost::multiprecision::msb(value);
  if (msb < 1000) return std::log(value.convert_to<double>());
  const std::size_t shift = msb - 60;
  const BigCount top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double to_double(const BigRational& value) { return value.convert_to<double>(); }

}  // namespace parbb
