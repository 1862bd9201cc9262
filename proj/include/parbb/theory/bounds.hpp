#pragma once

#include <cstddef>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parbb/rng.hpp"

namespace parbb::theory {

/// max(1, ln x). DomainError for x <= 0.
double ln_plus(double x);

namespace constants {
inline constexpr double c = 1.0 / 60.0;
/// ln((3/4) sqrt 2)
inline const double gamma = std::log(0.75 * std::sqrt(2.0));
inline const double eta_progress = std::log(4.0 / 3.0);
inline const double d_progress = 9.0 + 6.0 * std::sqrt(2.0);
inline const double eta_geometric = std::log(1.5);
inline constexpr double d_geometric = 2.0;
}  // namespace constants

/// n / (2^13 ln n).
double n_star(double n);

// Runtime bound curves. Domain violations throw DomainError.
double lb_unique(double n, double lambda, double delta);  // max{lambda n / (60 ln+ lambda), (1-delta) n ln n}
double lb_lambda_term(double n, double lambda);          // lambda n / (60 ln+ lambda)
double lb_nlogn(double n, double delta);                 // (1-delta) n ln n
double lb_LO(double n, double lambda);                   // lambda n / ln+(lambda/n) + n^2
double ub_LO(double n, double lambda);                   // lambda n + n^2
double hcy(double n, double lambda);                     // n lambda ln+(ln+ lambda) / ln+ lambda + n ln n
double adaptive_ub(double n, double lambda);             // (3+e) lambda n / ln lambda + e n (2 + ln n)
double cutoff_onemax(double n);                          // ln n ln ln n
double cutoff_LO(double n);                              // n
double cutoff_fixed_ea(double n);                        // ln n ln ln n / ln ln ln n

struct BoundArgs {
  double n = 0.0;
  double lambda = 1.0;
  double delta = 0.5;
};

/// A bound curve with its constants. Curves from Omega/O/Theta statements
/// carry constant 1 and asymptotic_only = true; they are for plotting only.
struct BoundSpec {
  std::string id;
  std::string formula;
  bool asymptotic_only = false;
  bool uses_lambda = true;
  bool uses_delta = false;
  std::map<std::string, double> constants;
  std::function<double(const BoundArgs&)> evaluate;
};

const std::vector<BoundSpec>& bound_registry();
/// ConfigError for unknown ids.
const BoundSpec& find_bound(std::string_view id);

/// (ln(D lambda) + 1) / eta, the bound on the expected maximum of lambda
/// variables whose moment generating function at eta is at most D.
double expected_max_bound(double eta, double d, double lambda);

/// Exact E[max of lambda i.i.d. Geometric(1/2) on {0, 1, ...}].
double expected_max_geometric(std::size_t lambda);

struct MaxGeometricCheck {
  std::size_t lambda = 0;
  std::size_t trials = 0;
  double sample_mean = 0.0;
  double exact_mean = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// Samples maxima of lambda i.i.d. Geometric(1/2) variables and compares the
/// sample mean against expected_max_bound(ln 1.5, 2, lambda).
MaxGeometricCheck mc_check_max_geometric(std::size_t lambda, std::size_t trials, Rng& rng);

struct CouponBound {
  double threshold;   // (1-delta)(n-1) ln n
  double prob_bound;  // (1 - n^{-(1-delta)})^{n*/2}
};

/// DomainError unless 0 < delta <= 1 and n >= 2.
CouponBound coupon_bound(double n, double delta);

}  // namespace parbb::theory
