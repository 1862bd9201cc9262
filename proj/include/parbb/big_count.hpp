#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace parbb {

/// Exact non-negative integer used for counting bit strings.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(n, k); zero when k > n.
BigCount binomial(std::size_t n, std::size_t k);

/// 2^n.
BigCount power_of_two(std::size_t n);

/// Exact sum_{i=0}^{d} C(n, i). Throws DomainError when d > n.
BigCount hamming_ball_size(std::size_t n, std::size_t d);

/// Natural logarithm of a positive count, accurate for values far beyond
/// the range of double. Throws DomainError for zero.
double log_count(const BigCount& value);

/// Nearest double to a rational (may overflow to infinity).
double to_double(const BigRational& value);

}  // namespace parbb
