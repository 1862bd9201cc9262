#include "parbb/theory/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "parbb/errors.hpp"

namespace parbb::theory {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void require_n_lambda(double n, double lambda) {
  require(n >= 3.0, "bound needs n >= 3");
  require(lambda >= 1.0, "bound needs lambda >= 1");
}

}  // namespace

double ln_plus(double x) {
  require(x > 0.0, "ln+ needs a positive argument");
  return std::max(1.0, std::log(x));
}

double n_star(double n) {
  require(n > 1.0, "n* needs n > 1");
  return n / (8192.0 * std::log(n));
}

double lb_lambda_term(double n, double lambda) {
  require_n_lambda(n, lambda);
  return constants::c * lambda * n / ln_plus(lambda);
}

double lb_nlogn(double n, double delta) {
  require(n >= 3.0, "bound needs n >= 3");
  require(delta > 0.0 && delta < 1.0, "bound needs 0 < delta < 1");
  return (1.0 - delta) * n * std::log(n);
}

double lb_unique(double n, double lambda, double delta) {
  return std::max(lb_lambda_term(n, lambda), lb_nlogn(n, delta));
}

double lb_LO(double n, double lambda) {
  require_n_lambda(n, lambda);
  return lambda * n / ln_plus(lambda / n) + n * n;
}

double ub_LO(double n, double lambda) {
  require_n_lambda(n, lambda);
  return lambda * n + n * n;
}

double hcy(double n, double lambda) {
  require_n_lambda(n, lambda);
  const double l = ln_plus(lambda);
  return n * lambda * ln_plus(l) / l + n * std::log(n);
}

double adaptive_ub(double n, double lambda) {
  require(n >= 3.0, "bound needs n >= 3");
  require(lambda >= 2.0, "adaptive upper bound needs lambda >= 2 (it divides by ln lambda)");
  const double e = std::numbers::e;
  return (3.0 + e) * lambda * n / std::log(lambda) + e * n * (2.0 + std::log(n));
}

double cutoff_onemax(double n) {
  require(n >= 3.0, "cut-off needs n >= 3");
  return std::log(n) * std::log(std::log(n));
}

double cutoff_LO(double n) {
  require(n >= 3.0, "cut-off needs n >= 3");
  return n;
}

double cutoff_fixed_ea(double n) {
  require(n >= 16.0, "cut-off of the fixed-rate EA needs n >= 16 (ln ln ln n must be positive)");
  const double l = std::log(n);
  return l * std::log(l) / std::log(std::log(l));
}

const std::vector<BoundSpec>& bound_registry() {
  static const std::vector<BoundSpec> registry = [] {
    std::vector<BoundSpec> r;
    r.push_back({"lb-unique", "max{lambda n / (60 ln+ lambda), (1-delta) n ln n}", false, true, true,
                 {{"c", constants::c}},
                 [](const BoundArgs& a) { return lb_unique(a.n, a.lambda, a.delta); }});
    r.push_back({"lb-lambda-term", "lambda n / (60 ln+ lambda)", false, true, false, {{"c", constants::c}},
                 [](const BoundArgs& a) { return lb_lambda_term(a.n, a.lambda); }});
    r.push_back({"lb-nlogn", "(1-delta) n ln n", false, false, true, {},
                 [](const BoundArgs& a) { return lb_nlogn(a.n, a.delta); }});
    r.push_back({"lb-LO", "lambda n / ln+(lambda/n) + n^2", true, true, false, {{"constant", 1.0}},
                 [](const BoundArgs& a) { return lb_LO(a.n, a.lambda); }});
    r.push_back({"ub-LO", "lambda n + n^2", true, true, false, {{"constant", 1.0}},
                 [](const BoundArgs& a) { return ub_LO(a.n, a.lambda); }});
    r.push_back({"hcy", "n lambda ln+(ln+ lambda) / ln+ lambda + n ln n", true, true, false,
                 {{"constant", 1.0}}, [](const BoundArgs& a) { return hcy(a.n, a.lambda); }});
    r.push_back({"adaptive-ub", "(3+e) lambda n / ln lambda + e n (2 + ln n)", false, true, false,
                 {{"3+e", 3.0 + std::numbers::e}, {"e", std::numbers::e}},
                 [](const BoundArgs& a) { return adaptive_ub(a.n, a.lambda); }});
    r.push_back({"cutoff-onemax", "ln n ln ln n", true, false, false, {{"constant", 1.0}},
                 [](const BoundArgs& a) { return cutoff_onemax(a.n); }});
    r.push_back({"cutoff-LO", "n", true, false, false, {{"constant", 1.0}},
                 [](const BoundArgs& a) { return cutoff_LO(a.n); }});
    r.push_back({"cutoff-fixed-ea", "ln n ln ln n / ln ln ln n", true, false, false, {{"constant", 1.0}},
                 [](const BoundArgs& a) { return cutoff_fixed_ea(a.n); }});
    return r;
  }();
  return registry;
}

const BoundSpec& find_bound(std::string_view id) {
  for (const auto& b : bound_registry())
    if (b.id == id) return b;
  throw ConfigError("unknown bound id '" + std::string(id) + "'");
}

double expected_max_bound(double eta, double d, double lambda) {
  require(eta > 0.0, "eta must be positive");
  require(d >= 1.0, "D must be at least 1");
  require(lambda >= 1.0, "lambda must be at least 1");
  return (std::log(d * lambda) + 1.0) / eta;
}

double expected_max_geometric(std::size_t lambda) {
  require(lambda >= 1, "lambda must be at least 1");
  // E[max] = sum_{k>=1} P(max >= k) = sum_{k>=1} 1 - (1 - 2^{-k})^lambda
  const auto l = static_cast<double>(lambda);
  double total = 0.0;
  for (int k = 1; k < 1100; ++k) {
    const double term = -std::expm1(l * std::log1p(-std::ldexp(1.0, -k)));
    total += term;
    if (term < 1e-18 * total) break;
  }
  return total;
}

MaxGeometricCheck mc_check_max_geometric(std::size_t lambda, std::size_t trials, Rng& rng) {
  require(lambda >= 1 && trials >= 1, "need lambda >= 1 and trials >= 1");
  std::geometric_distribution<std::uint64_t> geometric(0.5);
  double sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < lambda; ++i) best = std::max(best, geometric(rng.engine()));
    sum += static_cast<double>(best);
  }
  MaxGeometricCheck out;
  out.lambda = lambda;
  out.trials = trials;
  out.sample_mean = sum / static_cast<double>(trials);
  out.exact_mean = expected_max_geometric(lambda);
  out.bound = expected_max_bound(constants::eta_geometric, constants::d_geometric, static_cast<double>(lambda));
  out.pass = out.sample_mean <= out.bound;
  return out;
}

CouponBound coupon_bound(double n, double delta) {
  require(n >= 2.0, "coupon bound needs n >= 2");
  require(delta > 0.0 && delta <= 1.0, "coupon bound needs 0 < delta <= 1");
  const double threshold = (1.0 - delta) * (n - 1.0) * std::log(n);
  const double miss = std::pow(n, -(1.0 - delta));
  // (1 - miss)^{n*/2} in log space
  const double prob = std::exp(n_star(n) / 2.0 * std::log1p(-std::min(miss, 1.0)));
  return {threshold, miss >= 1.0 ? 0.0 : prob};
}

}  // namespace parbb::theory
