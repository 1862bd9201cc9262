#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <map>
#include <numeric>

#include "oracles.hpp"
#include "parbb/big_count.hpp"
#include "parbb/errors.hpp"
#include "parbb/operator_json.hpp"
#include "parbb/variation.hpp"

using namespace parbb;

namespace {

using Distribution = std::map<std::uint64_t, BigRational>;

BitString transform(const BitString& x, const std::vector<std::size_t>& perm, const BitString& mask) {
  BitString y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y.set(perm[i], x.test(i) != mask.test(perm[i]));
  return y;
}

std::vector<UnaryOperator> operators_for(std::size_t n) {
  std::vector<UnaryOperator> ops{UnaryOperator::single_bit(), UnaryOperator::complement(),
                                 UnaryOperator::standard_mutation(0.3), UnaryOperator::standard_mutation(1.0 / n)};
  for (std::size_t r = 0; r <= n; ++r) ops.push_back(UnaryOperator::flip_exact(r));
  return ops;
}

BigRational total(const Distribution& d) {
  BigRational t = 0;
  for (const auto& [k, v] : d) t += v;
  return t;
}

}  // namespace

TEST(Apply, Examples) {
  Rng rng(1);
  const auto x = BitString::from_string("1011001110");
  EXPECT_EQ(apply(UnaryOperator::flip_exact(0), x, rng), x);
  EXPECT_EQ(apply(UnaryOperator::complement(), BitString::from_string("101"), rng).to_string(), "010");
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(hamming_distance(apply(UnaryOperator::flip_exact(3), x, rng), x), 3u);
    EXPECT_EQ(hamming_distance(apply(UnaryOperator::single_bit(), x, rng), x), 1u);
  }
  EXPECT_EQ(apply(UnaryOperator::flip_exact(10), x, rng), complement(x));
}

TEST(Apply, InPlaceReportsRadius) {
  Rng rng(4);
  BitString x = BitString::random(300, rng);
  for (int i = 0; i < 200; ++i) {
    const BitString before = x;
    const auto r = apply_in_place(UnaryOperator::standard_mutation(0.02), x, rng);
    EXPECT_EQ(hamming_distance(before, x), r);
  }
}

TEST(Apply, RejectsInvalidParameters) {
  Rng rng(1);
  BitString x(5);
  EXPECT_THROW(apply(UnaryOperator::flip_exact(6), x, rng), DomainError);
  EXPECT_THROW(apply(UnaryOperator::standard_mutation(-0.1), x, rng), DomainError);
  EXPECT_THROW(apply(UnaryOperator::standard_mutation(1.5), x, rng), DomainError);
}

TEST(SampleRadius, Extremes) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(sample_radius(0.0, 50, rng), 0u);
    EXPECT_EQ(sample_radius(1.0, 50, rng), 50u);
  }
}

TEST(SampleRadius, BinomialMoments) {
  Rng rng(3);
  const int samples = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto r = static_cast<double>(sample_radius(0.01, 100, rng));
    sum += r;
    sq += r * r;
  }
  const double mean = sum / samples;
  EXPECT_GE(mean, 0.97);
  EXPECT_LE(mean, 1.03);
  EXPECT_NEAR(sq / samples - mean * mean, 100 * 0.01 * 0.99, 0.03);
}

TEST(StandardMutation, PerBitFlipFrequency) {
  Rng rng(8);
  const std::size_t n = 20;
  std::vector<int> flips(n, 0);
  const BitString x(n);
  const int samples = 200000;
  for (int i = 0; i < samples; ++i) {
    const auto y = apply(UnaryOperator::standard_mutation(0.1), x, rng);
    for (std::size_t j = 0; j < n; ++j) flips[j] += y.test(j);
  }
  // 5 standard deviations of a Binomial(2e5, 0.1) count
  for (int f : flips) EXPECT_NEAR(f, 20000, 5 * std::sqrt(samples * 0.09));
}

TEST(Mirrored, PairIsComplementary) {
  Rng rng(5);
  const auto x = BitString::random(40, rng);
  for (int i = 0; i < 200; ++i) {
    const auto [y, ybar] = mirrored(UnaryOperator::standard_mutation(0.05), x, rng);
    EXPECT_EQ(hamming_distance(y, ybar), 40u);
    EXPECT_EQ(y.count_zeros(), ybar.count_ones());
  }
}

TEST(ExactDistribution, MatchesClosedForms) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Rng rng(n);
    const auto x = BitString::random(n, rng);
    for (std::size_t r = 0; r <= n; ++r) {
      const auto d = exact_distribution(UnaryOperator::flip_exact(r), x);
      EXPECT_EQ(d.size(), static_cast<std::size_t>(oracle::choose(n, r)));
      const BigRational each(BigCount(1), binomial(n, r));
      for (const auto& [index, prob] : d) {
        EXPECT_EQ(hamming_distance(BitString::from_index(n, index), x), r);
        EXPECT_EQ(prob, each);
      }
    }
    const double p = 0.3;
    const BigRational q = exact_rational(p);
    const auto sm = exact_distribution(UnaryOperator::standard_mutation(p), x);
    EXPECT_EQ(sm.size(), std::size_t{1} << n);
    for (const auto& [index, prob] : sm) {
      const auto dist = hamming_distance(BitString::from_index(n, index), x);
      BigRational expect = 1;
      for (std::size_t i = 0; i < dist; ++i) expect *= q;
      for (std::size_t i = dist; i < n; ++i) expect *= (1 - q);
      EXPECT_EQ(prob, expect);
    }
    EXPECT_EQ(total(sm), 1);
  }
  EXPECT_THROW(exact_distribution(UnaryOperator::single_bit(), BitString(9)), DomainError);
}

TEST(ExactDistribution, StandardMutationIsBinomialMixture) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto x = BitString::from_index(n, (std::uint64_t{1} << n) / 3);
    for (double p : {0.25, 1.0 / static_cast<double>(n), 0.9}) {
      const BigRational q = exact_rational(p);
      Distribution mix;
      for (std::size_t r = 0; r <= n; ++r) {
        BigRational w = BigRational(binomial(n, r));
        for (std::size_t i = 0; i < r; ++i) w *= q;
        for (std::size_t i = r; i < n; ++i) w *= (1 - q);
        if (w == 0) continue;
        for (const auto& [index, prob] : exact_distribution(UnaryOperator::flip_exact(r), x)) mix[index] += w * prob;
      }
      EXPECT_EQ(exact_distribution(UnaryOperator::standard_mutation(p), x), mix) << n << " " << p;
    }
  }
}

// P(op(pi(x) ^ m) = y) = P(pi(op(x)) ^ m = y) for every permutation and mask
TEST(ExactDistribution, ConjugationInvariance) {
  Rng rng(17);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng.engine());
      const auto mask = BitString::random(n, rng);
      const auto x = BitString::random(n, rng);
      for (const auto& op : operators_for(n)) {
        const auto lhs = exact_distribution(op, transform(x, perm, mask));
        Distribution rhs;
        for (const auto& [index, prob] : exact_distribution(op, x))
          rhs[transform(BitString::from_index(n, index), perm, mask).to_index()] += prob;
        EXPECT_EQ(lhs, rhs) << to_string(op.kind) << " n=" << n;
        EXPECT_EQ(total(lhs), 1);
      }
    }
  }
}

TEST(Unbiasedness, SphereIsUniformChiSquare) {
  const std::size_t n = 8;
  const int samples = 200000;
  Rng rng(99);
  const auto x = BitString::from_string("10110010");
  for (std::size_t r : {1u, 2u, 3u}) {
    std::map<std::uint64_t, int> counts;
    for (int i = 0; i < samples; ++i) ++counts[apply(UnaryOperator::flip_exact(r), x, rng).to_index()];
    const double cells = oracle::choose(n, r);
    ASSERT_EQ(counts.size(), static_cast<std::size_t>(cells));
    const double expected = samples / cells;
    double chi2 = 0.0;
    for (const auto& [k, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
    const boost::math::chi_squared dist(cells - 1);
    EXPECT_LT(chi2, boost::math::quantile(boost::math::complement(dist, 1e-3))) << "r=" << r;
  }
}

TEST(OperatorJson, SymbolicProbability) {
  const auto op = operator_from_json(nlohmann::json::parse(R"({"kind": "standard-mutation", "p": "1/n"})"), 50);
  EXPECT_EQ(op.kind, OperatorKind::standard_mutation);
  EXPECT_DOUBLE_EQ(op.p, 0.02);
  EXPECT_DOUBLE_EQ(resolve_probability("3/n", 100), 0.03);
  EXPECT_DOUBLE_EQ(resolve_probability(0.5, 100), 0.5);
  EXPECT_THROW(resolve_probability("2/n", 1), ConfigError);
  EXPECT_THROW(resolve_probability("x/n", 10), ConfigError);
  EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"kind": "flip-exact", "r": 11})"), 10), ConfigError);
  EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"kind": "crossover"})"), 10), ConfigError);
  for (const auto& o : operators_for(5)) EXPECT_EQ(operator_from_json(to_json(o), 5), o);
}
