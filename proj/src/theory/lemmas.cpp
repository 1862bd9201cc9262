#include "parbb/theory/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <sstream>
#include <string>

#include "parbb/errors.hpp"
#include "parbb/parallel.hpp"
#include "parbb/rng.hpp"
#include "parbb/theory/bounds.hpp"
#include "parbb/theory/hypergeometric.hpp"

namespace parbb::theory {
namespace {

constexpr std::size_t kListedViolations = 50;
constexpr long double kLn2 = std::numbers::ln2_v<long double>;

// Max-ratio and violation bookkeeping for one slice of a grid.
class Checker {
 public:
  explicit Checker(long double relative_tolerance) : log_tol_(std::log1p(relative_tolerance)) {}

  template <class Describe>
  void check(long double log_value, long double log_bound, Describe&& where) {
    ++points_;
    if (log_value == kLogZero) return;
    const long double gap = log_value - log_bound;
    if (gap > max_log_ratio_) max_log_ratio_ = gap;
    if (gap > log_tol_) {
      ++violation_count_;
      if (violations_.size() < kListedViolations)
        violations_.push_back({where(), static_cast<double>(std::exp(log_value)),
                               static_cast<double>(std::exp(log_bound))});
    }
  }

  void merge(const Checker& other) {
    points_ += other.points_;
    max_log_ratio_ = std::max(max_log_ratio_, other.max_log_ratio_);
    violation_count_ += other.violation_count_;
    for (const auto& v : other.violations_)
      if (violations_.size() < kListedViolations) violations_.push_back(v);
  }

  void fill(LemmaReport& report) const {
    report.points_checked += points_;
    report.max_slack = std::max(report.max_slack, static_cast<double>(std::exp(max_log_ratio_)));
    report.violation_count += violation_count_;
    for (const auto& v : violations_)
      if (report.violations.size() < kListedViolations) report.violations.push_back(v);
  }

 private:
  long double log_tol_;
  std::uint64_t points_ = 0;
  long double max_log_ratio_ = kLogZero;
  std::uint64_t violation_count_ = 0;
  std::vector<Violation> violations_;
};

// Runs body(i, checker) for i in [0, count) across workers and merges the
// slices in index order.
template <class Body>
Checker fan_out(std::size_t count, long double tolerance, Body&& body) {
  std::vector<Checker> slices(count, Checker(tolerance));
  parallel_for(count, default_worker_count(), [&](std::size_t i) { body(i, slices[i]); });
  Checker total(tolerance);
  for (const auto& c : slices) total.merge(c);
  return total;
}

std::string point(std::initializer_list<std::pair<const char*, std::size_t>> coords) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, value] : coords) {
    out << (first ? "" : ",") << name << "=" << value;
    first = false;
  }
  return out.str();
}

void finish(LemmaReport& report, const Checker& checker) {
  checker.fill(report);
  report.pass = report.violation_count == 0;
}

// Distinct integers in [lo, hi] spaced geometrically, both ends included.
std::vector<std::size_t> geometric_grid(std::size_t lo, std::size_t hi, std::size_t points) {
  std::vector<std::size_t> grid;
  if (lo > hi) return grid;
  grid.push_back(lo);
  const double a = static_cast<double>(std::max<std::size_t>(lo, 1));
  const double b = static_cast<double>(hi);
  for (std::size_t k = 0; k < points; ++k) {
    const double t = points == 1 ? 1.0 : static_cast<double>(k) / static_cast<double>(points - 1);
    grid.push_back(static_cast<std::size_t>(std::llround(a * std::pow(b / a, t))));
  }
  grid.push_back(hi);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  grid.erase(std::remove_if(grid.begin(), grid.end(), [&](std::size_t v) { return v < lo || v > hi; }),
             grid.end());
  return grid;
}

}  // namespace

LemmaReport verify_hypergeom_tail(std::size_t n) {
  if (n < 1 || n > 512) throw DomainError("hypergeometric tail check supports 1 <= n <= 512");
  LemmaReport report;
  report.lemma = "hypergeom-tail";
  report.statement = "P(Z=z) <= C(r,z)(m/n)^z for all z; P(Z=z) <= (4m/n)^z for z >= r/2";
  report.grid = "m in [0,n], r in [0,n], z in [0,r], n=" + std::to_string(n);
  report.tolerance = 1e-12;
  const LogFactorial lf(n);
  const long double nn = static_cast<long double>(n);
  const Checker total = fan_out(n + 1, report.tolerance, [&](std::size_t m, Checker& c) {
    const long double log_frac = m == 0 ? kLogZero : std::log(static_cast<long double>(m) / nn);
    const long double log_four = m == 0 ? kLogZero : std::log(4.0L * static_cast<long double>(m) / nn);
    for (std::size_t r = 0; r <= n; ++r) {
      for (std::size_t z = 0; z <= r; ++z) {
        const long double lp = hypergeom_log_pmf(lf, n, m, r, z);
        const auto zz = static_cast<long double>(z);
        const long double first = z == 0 ? 0.0L : lf.log_binomial(r, z) + zz * log_frac;
        c.check(lp, first, [&] { return point({{"m", m}, {"r", r}, {"z", z}}) + " (binomial form)"; });
        if (2 * z >= r) {
          const long double second = z == 0 ? 0.0L : zz * log_four;
          c.check(lp, second, [&] { return point({{"m", m}, {"r", r}, {"z", z}}) + " (4m/n form)"; });
        }
      }
    }
  });
  finish(report, total);
  return report;
}

LemmaReport verify_improve_prob(std::size_t n) {
  if (n < 8) throw DomainError("improvement probability check needs n >= 8");
  LemmaReport report;
  report.lemma = "improve-prob";
  report.statement = "P(Delta0(s,m,r)=z) <= (1/2)^(z/2) for s <= m <= n/8, 1 <= r <= n, z >= 1";
  const std::size_t top = n / 8;
  report.grid = "s <= m <= " + std::to_string(top) + ", r in [1," + std::to_string(n) + "], z in [1,n]";
  report.tolerance = 1e-12;
  const LogFactorial lf(n);
  const Checker total = fan_out(top + 1, report.tolerance, [&](std::size_t m, Checker& c) {
    for (std::size_t s = 0; s <= m; ++s) {
      for (std::size_t r = 1; r <= n; ++r) {
        const Pmf pmf = delta0_pmf(ProgressParams{n, s, m, r}, lf);
        for (std::size_t z = 1; z <= n; ++z)
          c.check(pmf.log_probability(z), -0.5L * static_cast<long double>(z) * kLn2,
                  [&] { return point({{"s", s}, {"m", m}, {"r", r}, {"z", z}}); });
      }
    }
  });
  finish(report, total);
  return report;
}

LemmaReport verify_chvatal(std::size_t n) {
  if (n < 2) throw DomainError("Chvatal check needs n >= 2");
  LemmaReport report;
  report.lemma = "chvatal";
  report.statement = "P(Delta0(s,m,r) > 0) <= exp(-(m-s)^2/(2r)) for s <= m <= n/2, 1 <= r <= n";
  report.grid = "s <= m <= " + std::to_string(n / 2) + ", r in [1," + std::to_string(n) + "]";
  report.tolerance = 1e-12;
  const LogFactorial lf(n);
  const Checker total = fan_out(n / 2 + 1, report.tolerance, [&](std::size_t m, Checker& c) {
    for (std::size_t s = 0; s <= m; ++s) {
      const auto gap = static_cast<long double>(m - s);
      for (std::size_t r = 1; r <= n; ++r) {
        const Pmf pmf = delta0_pmf(ProgressParams{n, s, m, r}, lf);
        c.check(pmf.log_tail_positive(), -gap * gap / (2.0L * static_cast<long double>(r)),
                [&] { return point({{"s", s}, {"m", m}, {"r", r}}); });
      }
    }
  });
  finish(report, total);
  return report;
}

LemmaReport verify_multibit_progress(std::size_t n) {
  const double nstar = n >= 3 ? n_star(static_cast<double>(n)) : 0.0;
  if (nstar < 2.0)
    throw DomainError("multi-bit progress check needs n* = n/(2^13 ln n) >= 2; n = " + std::to_string(n) +
                      " gives n* = " + std::to_string(nstar) + " (n >= 2^18 or so is required)");
  LemmaReport report;
  report.lemma = "multibit";
  report.statement =
      "P(Delta0(s,m,r)=z) <= (16n*/n)^2 2^-z for m in [s,2n*] u [n-2n*,n-s], 2 <= r <= n-2, 1 <= z; "
      "Chvatal route bound exp(-(m'-s)^2/(2r')) in between";
  report.tolerance = 1e-9;
  const std::size_t two_nstar = static_cast<std::size_t>(std::floor(2.0 * nstar));
  const std::size_t z_max = 200;

  std::vector<std::size_t> radii = geometric_grid(2, n - 2, 64);
  const std::size_t base = radii.size();
  for (std::size_t k = 0; k < base; ++k) radii.push_back(n - radii[k]);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  std::vector<std::size_t> middle = geometric_grid(two_nstar + 1, n / 2, 32);
  const std::size_t half = middle.size();
  for (std::size_t k = 0; k < half; ++k) middle.push_back(n - middle[k]);
  std::sort(middle.begin(), middle.end());
  middle.erase(std::unique(middle.begin(), middle.end()), middle.end());

  struct Row {
    std::size_t s;
    std::size_t m;
    bool edge;
  };
  std::vector<Row> rows;
  std::size_t s_max = std::min<std::size_t>(2, static_cast<std::size_t>(std::floor(nstar)));
  for (std::size_t s = 0; s <= s_max; ++s) {
    for (const auto m : geometric_grid(s, two_nstar, 64)) {
      rows.push_back({s, m, true});
      rows.push_back({s, n - m, true});
    }
    for (const auto m : middle)
      if (m > two_nstar && m < n - two_nstar) rows.push_back({s, m, false});
  }

  std::ostringstream grid;
  grid << "n=" << n << ", n*=" << nstar << ", s in [0," << s_max << "], " << rows.size()
       << " (s,m) rows (all m within 2n* of either end, 64-point geometric grid in between), " << radii.size()
       << " radii (64-point geometric grid in [2,n-2] and mirrors), z in [1," << z_max << "]";
  report.grid = grid.str();
  report.details["n_star"] = nstar;

  const LogFactorial lf(n);
  const long double log_scale = 2.0L * std::log(16.0L * static_cast<long double>(nstar) / static_cast<long double>(n));
  const Checker total = fan_out(rows.size(), report.tolerance, [&](std::size_t i, Checker& c) {
    const Row row = rows[i];
    for (const auto r : radii) {
      if (row.edge) {
        for (std::size_t z = 1; z <= z_max; ++z)
          c.check(delta0_log_prob(lf, n, row.s, row.m, r, z), log_scale - static_cast<long double>(z) * kLn2,
                  [&] { return point({{"s", row.s}, {"m", row.m}, {"r", r}, {"z", z}}); });
      } else {
        const bool low = 2 * row.m <= n;
        const auto m1 = static_cast<long double>(low ? row.m : n - row.m);
        const auto r1 = static_cast<long double>(low ? r : n - r);
        const long double bound = -(m1 - row.s) * (m1 - row.s) / (2.0L * r1);
        for (std::size_t z = 1; z <= z_max; ++z)
          c.check(delta0_log_prob(lf, n, row.s, row.m, r, z), bound,
                  [&] { return point({{"s", row.s}, {"m", row.m}, {"r", r}, {"z", z}}) + " (middle)"; });
      }
    }
  });
  finish(report, total);
  return report;
}

LemmaReport verify_mgf_bound(std::size_t n, const std::vector<std::size_t>& lambdas) {
  if (n < 8) throw DomainError("mgf check needs n >= 8");
  LemmaReport report;
  report.lemma = "mgf";
  report.statement =
      "P(Delta0(s,m,r)=z) + P(Delta0(s,m,n-r)=z) <= 2^(1-z/2) for s <= n/8; "
      "sum_z lambda 2^(1-z/2) e^(gamma z) = 8 lambda";
  const std::size_t top = n / 8;
  report.grid = "s in [0," + std::to_string(top) + "], m in [s," + std::to_string(top) + "] u [" +
                std::to_string(n - top) + ",n-s], r in [1,n], z in [1,n], n=" + std::to_string(n);
  report.tolerance = 1e-12;
  const LogFactorial lf(n);
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  for (std::size_t s = 0; s <= top; ++s) {
    for (std::size_t m = s; m <= top; ++m) rows.emplace_back(s, m);
    for (std::size_t m = n - top; m + s <= n; ++m)
      if (m > top) rows.emplace_back(s, m);
  }
  Checker total = fan_out(rows.size(), report.tolerance, [&](std::size_t i, Checker& c) {
    const auto [s, m] = rows[i];
    for (std::size_t r = 1; r <= n; ++r) {
      const Pmf forward = delta0_pmf(ProgressParams{n, s, m, r}, lf);
      const Pmf mirrored = delta0_pmf(ProgressParams{n, s, m, n - r}, lf);
      for (std::size_t z = 1; z <= n; ++z)
        c.check(log_add(forward.log_probability(z), mirrored.log_probability(z)),
                (1.0L - 0.5L * static_cast<long double>(z)) * kLn2,
                [&] { return point({{"s", s}, {"m", m}, {"r", r}, {"z", z}}); });
    }
  });

  const double ratio = 0.5 * std::sqrt(2.0) * std::exp(constants::gamma);  // 2^{-1/2} e^gamma = 3/4
  nlohmann::json series = nlohmann::json::array();
  bool series_ok = true;
  for (const auto lambda : lambdas) {
    const double l = static_cast<double>(lambda);
    double sum = 0.0;
    double term = 2.0 * l;
    for (int z = 0; z < 400 && term > 1e-30 * sum; ++z) {
      sum += term;
      term *= ratio;
    }
    const double expected = 8.0 * l;
    const double rel = std::abs(sum - expected) / expected;
    const bool ok = rel <= 1e-9;
    series_ok = series_ok && ok;
    series.push_back({{"lambda", lambda}, {"series", sum}, {"expected", expected}, {"relative_error", rel}, {"pass", ok}});
  }
  report.details["series"] = series;
  report.details["series_tolerance"] = 1e-9;
  finish(report, total);
  report.pass = report.pass && series_ok;
  return report;
}

LemmaReport verify_mgf_max(std::size_t n, const std::vector<std::size_t>& lambdas, std::size_t mc_lambda,
                           std::size_t mc_trials, std::uint64_t seed) {
  if (n < 8) throw DomainError("mgf-max check needs n >= 8");
  LemmaReport report;
  report.lemma = "mgf-max";
  report.statement =
      "P(Delta0=z) <= (1/2)^(z/2); sum_z (1/2)^(z/2)(4/3)^z = 9+6sqrt2; E[e^(eta Delta0)] <= D; "
      "E[max of lambda copies] <= (ln(D lambda)+1)/eta with eta=ln(4/3), D=9+6sqrt2";
  const std::size_t top = n / 8;
  report.grid = "s <= m <= " + std::to_string(top) + ", r in [1,n], n=" + std::to_string(n);
  report.tolerance = 1e-12;
  const double eta = constants::eta_progress;
  const double d = constants::d_progress;
  const LogFactorial lf(n);

  std::vector<double> caps;
  for (const auto lambda : lambdas) caps.push_back(expected_max_bound(eta, d, static_cast<double>(lambda)));

  Checker total = fan_out(top + 1, report.tolerance, [&](std::size_t m, Checker& c) {
    for (std::size_t s = 0; s <= m; ++s) {
      for (std::size_t r = 1; r <= n; ++r) {
        const Pmf pmf = delta0_pmf(ProgressParams{n, s, m, r}, lf);
        long double mgf = kLogZero;
        for (std::size_t z = 0; z <= pmf.max_value(); ++z) {
          const long double lp = pmf.log_probability(z);
          if (z >= 1)
            c.check(lp, -0.5L * static_cast<long double>(z) * kLn2,
                    [&] { return point({{"s", s}, {"m", m}, {"r", r}, {"z", z}}) + " (premise)"; });
          mgf = log_add(mgf, lp + static_cast<long double>(eta) * static_cast<long double>(z));
        }
        c.check(mgf, std::log(static_cast<long double>(d)),
                [&] { return point({{"s", s}, {"m", m}, {"r", r}}) + " (mgf)"; });
        // E[max] = sum_{k>=1} 1 - F(k-1)^lambda for i.i.d. copies
        for (std::size_t li = 0; li < lambdas.size(); ++li) {
          const auto l = static_cast<long double>(lambdas[li]);
          long double cdf = 0.0L;
          long double expectation = 0.0L;
          for (std::size_t k = 1; k <= pmf.max_value(); ++k) {
            cdf += std::exp(pmf.log_probability(k - 1));
            const long double below = std::min(cdf, 1.0L);
            expectation += -std::expm1(l * std::log(below));
          }
          c.check(std::log(std::max(expectation, 1e-300L)), std::log(static_cast<long double>(caps[li])),
                  [&] { return point({{"s", s}, {"m", m}, {"r", r}, {"lambda", lambdas[li]}}) + " (max)"; });
        }
      }
    }
  });

  double series = 0.0;
  const double q = 4.0 / (3.0 * std::sqrt(2.0));
  double term = 1.0;
  for (int z = 0; z < 2000 && term > 1e-30 * series; ++z) {
    series += term;
    term *= q;
  }
  const double series_rel = std::abs(series - d) / d;
  const bool series_ok = series_rel <= 1e-9;

  Rng rng(seed);
  const MaxGeometricCheck mc = mc_check_max_geometric(mc_lambda, mc_trials, rng);
  report.details["series"] = {{"value", series}, {"expected", d}, {"relative_error", series_rel}, {"pass", series_ok}};
  report.details["expected_max_bounds"] = nlohmann::json::array();
  for (std::size_t li = 0; li < lambdas.size(); ++li)
    report.details["expected_max_bounds"].push_back({{"lambda", lambdas[li]}, {"bound", caps[li]}});
  report.details["monte_carlo"] = {{"lambda", mc.lambda},      {"trials", mc.trials},
                                   {"sample_mean", mc.sample_mean}, {"exact_mean", mc.exact_mean},
                                   {"bound", mc.bound},        {"seed", seed},
                                   {"pass", mc.pass}};
  finish(report, total);
  report.pass = report.pass && series_ok && mc.pass;
  return report;
}

LemmaReport verify_coupon(std::size_t n) {
  if (n < 2) throw DomainError("coupon check needs n >= 2");
  LemmaReport report;
  report.lemma = "coupon";
  report.statement = "(1-1/n)^((1-delta)(n-1) ln n) >= n^-(1-delta); final bound (1-n^-(1-delta))^(n*/2)";
  report.grid = "delta in {0.05, 0.10, ..., 1.00}, n=" + std::to_string(n);
  report.tolerance = 1e-12;
  Checker c(report.tolerance);
  const long double nn = static_cast<long double>(n);
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 1; k <= 20; ++k) {
    const double delta = 0.05 * k;
    const CouponBound cb = coupon_bound(static_cast<double>(n), delta);
    const long double log_survival = static_cast<long double>(cb.threshold) * std::log1p(-1.0L / nn);
    const long double log_target = -(1.0L - delta) * std::log(nn);
    // survival >= target  <=>  -survival <= -target
    c.check(-log_survival, -log_target, [&] { return "delta=" + std::to_string(delta); });
    rows.push_back({{"delta", delta},
                    {"threshold", cb.threshold},
                    {"log_survival", static_cast<double>(log_survival)},
                    {"log_target", static_cast<double>(log_target)},
                    {"prob_bound", cb.prob_bound}});
  }
  report.details["rows"] = rows;
  finish(report, c);
  return report;
}

LemmaReport verify_delta_symmetry(std::size_t n) {
  if (n < 1 || n > 200) throw DomainError("exact symmetry check supports 1 <= n <= 200");
  LemmaReport report;
  report.lemma = "delta-symmetry";
  report.statement = "delta0_pmf(s,m,r) = delta0_pmf(s,n-m,n-r) exactly";
  report.grid = "s in [0,n/2], m in [s,n-s], r in [0,n], n=" + std::to_string(n);
  std::vector<std::uint64_t> checked(n / 2 + 1, 0);
  std::vector<std::vector<Violation>> found(n / 2 + 1);
  parallel_for(n / 2 + 1, default_worker_count(), [&](std::size_t s) {
    for (std::size_t m = s; m + s <= n; ++m) {
      for (std::size_t r = 0; r <= n; ++r) {
        const Pmf a = delta0_pmf(ProgressParams{n, s, m, r}, Pmf::Mode::exact);
        const Pmf b = delta0_pmf(ProgressParams{n, s, n - m, n - r}, Pmf::Mode::exact);
        ++checked[s];
        bool equal = a.max_value() == b.max_value();
        for (std::size_t z = 0; equal && z <= a.max_value(); ++z)
          equal = a.exact_probability(z) == b.exact_probability(z);
        if (!equal) found[s].push_back({point({{"s", s}, {"m", m}, {"r", r}}), 0.0, 0.0});
      }
    }
  });
  for (std::size_t s = 0; s <= n / 2; ++s) {
    report.points_checked += checked[s];
    report.violation_count += found[s].size();
    for (const auto& v : found[s])
      if (report.violations.size() < kListedViolations) report.violations.push_back(v);
  }
  report.max_slack = report.violation_count == 0 ? 1.0 : std::numeric_limits<double>::max();
  report.pass = report.violation_count == 0;
  return report;
}

}  // namespace parbb::theory
