#include "parbb/theory/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parbb/errors.hpp"

namespace parbb::theory {

LogFactorial::LogFactorial(std::size_t max_n) : table_(max_n + 1) {
  for (std::size_t k = 0; k <= max_n; ++k) table_[k] = std::lgamma(static_cast<long double>(k) + 1.0L);
}

long double LogFactorial::log_binomial(std::size_t n, std::size_t k) const {
  if (k > n) return kLogZero;
  return (*this)(n) - (*this)(k) - (*this)(n - k);
}

long double log_add(long double a, long double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  const long double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

namespace {

bool in_support(std::size_t n, std::size_t m, std::size_t r, std::size_t z) {
  if (m > n || r > n) return false;
  if (z > m || z > r) return false;
  return r - z <= n - m;
}

}  // namespace

BigRational hypergeom_pmf_exact(std::size_t n, std::size_t m, std::size_t r, std::size_t z) {
  if (m > n || r > n) throw DomainError("hypergeometric parameters need m, r <= n");
  if (!in_support(n, m, r, z)) return BigRational(0);
  return BigRational(binomial(m, z) * binomial(n - m, r - z), binomial(n, r));
}

long double hypergeom_log_pmf(const LogFactorial& lf, std::size_t n, std::size_t m, std::size_t r,
                              std::size_t z) {
  if (m > n || r > n) throw DomainError("hypergeometric parameters need m, r <= n");
  if (n > lf.max_n()) throw DomainError("log-factorial table too small");
  if (!in_support(n, m, r, z)) return kLogZero;
  return lf.log_binomial(m, z) + lf.log_binomial(n - m, r - z) - lf.log_binomial(n, r);
}

double hypergeom_pmf(std::size_t n, std::size_t m, std::size_t r, std::size_t z) {
  const LogFactorial lf(n);
  return static_cast<double>(std::exp(hypergeom_log_pmf(lf, n, m, r, z)));
}

void ProgressParams::validate() const {
  if (2 * s > n || m < s || m + s > n || r > n)
    throw DomainError("progress parameters need s <= n/2, s <= m <= n - s and r <= n (n=" + std::to_string(n) +
                      ", s=" + std::to_string(s) + ", m=" + std::to_string(m) + ", r=" + std::to_string(r) + ")");
}

long double Pmf::log_probability(std::size_t z) const {
  if (z >= log_p_.size()) return kLogZero;
  return log_p_[z];
}

double Pmf::probability(std::size_t z) const {
  return static_cast<double>(std::exp(log_probability(z)));
}

BigRational Pmf::exact_probability(std::size_t z) const {
  if (mode_ != Mode::exact) throw DomainError("pmf was computed in log-space mode");
  if (z >= exact_.size()) return BigRational(0);
  return exact_[z];
}

long double Pmf::log_tail_positive() const {
  long double total = kLogZero;
  for (std::size_t z = 1; z < log_p_.size(); ++z) total = log_add(total, log_p_[z]);
  return total;
}

Pmf Pmf::from_log(std::vector<long double> log_p) {
  Pmf p;
  p.mode_ = Mode::log_space;
  p.log_p_ = std::move(log_p);
  return p;
}

Pmf Pmf::from_exact(std::vector<BigRational> values) {
  Pmf p;
  p.mode_ = Mode::exact;
  p.log_p_.reserve(values.size());
  for (const auto& v : values) {
    if (v == 0) {
      p.log_p_.push_back(kLogZero);
      continue;
    }
    // ln(num) - ln(den) via the exact integers, safe for huge values
    const long double ln_num = static_cast<long double>(log_count(boost::multiprecision::numerator(v)));
    const long double ln_den = static_cast<long double>(log_count(boost::multiprecision::denominator(v)));
    p.log_p_.push_back(ln_num - ln_den);
  }
  p.exact_ = std::move(values);
  return p;
}

namespace {

// Support of Z and the progress each value produces.
struct Range {
  std::size_t z_lo;
  std::size_t z_hi;
  std::size_t max_delta;
};

Range progress_range(const ProgressParams& p) {
  const std::size_t z_lo = p.r > p.n - p.m ? p.r - (p.n - p.m) : 0;
  const std::size_t z_hi = std::min(p.m, p.r);
  const auto top = 2 * static_cast<long long>(z_hi) - static_cast<long long>(p.r) + static_cast<long long>(p.s) -
                   static_cast<long long>(p.m);
  return {z_lo, z_hi, static_cast<std::size_t>(std::max(top, 0LL))};
}

std::size_t delta_of(const ProgressParams& p, std::size_t z) {
  const auto v = 2 * static_cast<long long>(z) - static_cast<long long>(p.r) + static_cast<long long>(p.s) -
                 static_cast<long long>(p.m);
  return static_cast<std::size_t>(std::max(v, 0LL));
}

}  // namespace

Pmf delta0_pmf(const ProgressParams& p, const LogFactorial& lf) {
  p.validate();
  if (p.n > lf.max_n()) throw DomainError("log-factorial table too small");
  const Range range = progress_range(p);
  std::vector<long double> log_p(range.max_delta + 1, kLogZero);
  for (std::size_t z = range.z_lo; z <= range.z_hi; ++z) {
    auto& slot = log_p[delta_of(p, z)];
    slot = log_add(slot, hypergeom_log_pmf(lf, p.n, p.m, p.r, z));
  }
  return Pmf::from_log(std::move(log_p));
}

Pmf delta0_pmf(const ProgressParams& p, Pmf::Mode mode) {
  p.validate();
  if (mode == Pmf::Mode::log_space) return delta0_pmf(p, LogFactorial(p.n));
  const Range range = progress_range(p);
  const BigCount denominator = binomial(p.n, p.r);
  std::vector<BigCount> numerators(range.max_delta + 1, BigCount(0));
  for (std::size_t z = range.z_lo; z <= range.z_hi; ++z)
    numerators[delta_of(p, z)] += binomial(p.m, z) * binomial(p.n - p.m, p.r - z);
  std::vector<BigRational> values;
  values.reserve(numerators.size());
  for (const auto& num : numerators) values.emplace_back(num, denominator);
  return Pmf::from_exact(std::move(values));
}

long double delta0_log_prob(const LogFactorial& lf, std::size_t n, std::size_t s, std::size_t m, std::size_t r,
                            std::size_t z) {
  if (z == 0) throw DomainError("delta0_log_prob is for positive progress only");
  const std::size_t twice = z + r + m;
  if (twice < s || (twice - s) % 2 != 0) return kLogZero;
  return hypergeom_log_pmf(lf, n, m, r, (twice - s) / 2);
}

}  // namespace parbb::theory
