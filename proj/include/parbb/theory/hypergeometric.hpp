#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "parbb/big_count.hpp"

namespace parbb::theory {

inline constexpr long double kLogZero = -std::numeric_limits<long double>::infinity();

/// ln k! for 0 <= k <= max_n, tabulated with lgammal.
class LogFactorial {
 public:
  explicit LogFactorial(std::size_t max_n);

  std::size_t max_n() const noexcept { return table_.size() - 1; }
  long double operator()(std::size_t k) const { return table_.at(k); }
  /// ln C(n, k); kLogZero when k > n.
  long double log_binomial(std::size_t n, std::size_t k) const;

 private:
  std::vector<long double> table_;
};

/// ln(e^a + e^b) without overflow.
long double log_add(long double a, long double b);

/// P(Z = z) for Z ~ Hypergeometric(n balls, m red, r drawn); 0 outside the support.
BigRational hypergeom_pmf_exact(std::size_t n, std::size_t m, std::size_t r, std::size_t z);
long double hypergeom_log_pmf(const LogFactorial& lf, std::size_t n, std::size_t m, std::size_t r,
                              std::size_t z);
double hypergeom_pmf(std::size_t n, std::size_t m, std::size_t r, std::size_t z);

/// Potential s, zero count m of the varied parent and radius r.
struct ProgressParams {
  std::size_t n;
  std::size_t s;
  std::size_t m;
  std::size_t r;

  /// DomainError unless s <= n/2, s <= m <= n - s and r <= n.
  void validate() const;
};

/// Distribution on {0, ..., max_value()}.
class Pmf {
 public:
  enum class Mode { log_space, exact };

  Mode mode() const noexcept { return mode_; }
  std::size_t max_value() const noexcept { return log_p_.size() - 1; }

  long double log_probability(std::size_t z) const;
  double probability(std::size_t z) const;
  /// Exact mode only; DomainError otherwise.
  BigRational exact_probability(std::size_t z) const;
  /// ln P(X > 0), summed over the positive support.
  long double log_tail_positive() const;

  static Pmf from_log(std::vector<long double> log_p);
  static Pmf from_exact(std::vector<BigRational> p);

 private:
  Mode mode_ = Mode::log_space;
  std::vector<long double> log_p_;
  std::vector<BigRational> exact_;
};

/// Law of max{2Z - r + s - m, 0} with Z ~ Hypergeometric(n, m, r).
Pmf delta0_pmf(const ProgressParams& p, Pmf::Mode mode = Pmf::Mode::log_space);
/// Log-space variant reusing a caller-owned table (max_n >= p.n).
Pmf delta0_pmf(const ProgressParams& p, const LogFactorial& lf);

/// ln P(Delta_0(s, m, r) = z) for z >= 1, without building the whole pmf.
long double delta0_log_prob(const LogFactorial& lf, std::size_t n, std::size_t s, std::size_t m,
                            std::size_t r, std::size_t z);

}  // namespace parbb::theory
