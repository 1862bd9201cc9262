#include "parbb/variation.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "parbb/errors.hpp"

namespace parbb {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::flip_exact:
      return "flip-exact";
    case OperatorKind::standard_mutation:
      return "standard-mutation";
    case OperatorKind::single_bit:
      return "single-bit";
    case OperatorKind::complement:
      return "complement";
  }
  return "unknown";
}

void UnaryOperator::validate(std::size_t n) const {
  if (kind == OperatorKind::flip_exact && radius > n)
    throw DomainError("flip radius " + std::to_string(radius) + " exceeds length " + std::to_string(n));
  if (kind == OperatorKind::standard_mutation && !(p >= 0.0 && p <= 1.0))
    throw DomainError("mutation probability must lie in [0, 1]");
}

std::size_t sample_radius(double p, std::size_t n, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("mutation probability must lie in [0, 1]");
  return rng.binomial(n, p);
}

std::size_t draw_radius(const UnaryOperator& op, std::size_t n, Rng& rng) {
  switch (op.kind) {
    case OperatorKind::flip_exact:
      return op.radius;
    case OperatorKind::standard_mutation:
      return sample_radius(op.p, n, rng);
    case OperatorKind::single_bit:
      return 1;
    case OperatorKind::complement:
      return n;
  }
  return 0;
}

void flip_random_positions(BitString& x, std::size_t r, Rng& rng) {
  if (r == x.size()) {
    x.flip_all();
    return;
  }
  for (const auto i : rng.sample_positions(x.size(), r)) x.flip(i);
}

std::size_t apply_in_place(const UnaryOperator& op, BitString& x, Rng& rng) {
  op.validate(x.size());
  const std::size_t r = draw_radius(op, x.size(), rng);
  flip_random_positions(x, r, rng);
  return r;
}

BitString apply(const UnaryOperator& op, const BitString& x, Rng& rng) {
  BitString y = x;
  apply_in_place(op, y, rng);
  return y;
}

std::pair<BitString, BitString> mirrored(const UnaryOperator& op, const BitString& x, Rng& rng) {
  BitString y = apply(op, x, rng);
  BitString z = parbb::complement(y);
  return {std::move(y), std::move(z)};
}

BigRational exact_rational(double value) {
  if (!std::isfinite(value)) throw DomainError("exact_rational needs a finite value");
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an integer for every double
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  BigRational q{BigCount(scaled)};
  exponent -= 53;
  if (exponent >= 0)
    q *= BigRational(power_of_two(static_cast<std::size_t>(exponent)));
  else
    q /= BigRational(power_of_two(static_cast<std::size_t>(-exponent)));
  return q;
}

namespace {

// Distribution of flipping r positions exactly as the sampler does: every
// sequence of picks (j_0, ..., j_{r-1}) with j_i uniform in [i, n).
void add_sphere(const BitString& x, std::size_t r, const BigRational& weight,
                std::map<std::uint64_t, BigRational>& out) {
  const std::size_t n = x.size();
  if (r == n) {
    out[complement(x).to_index()] += weight;
    return;
  }
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::size_t> choice(r, 0);
  for (std::size_t i = 0; i < r; ++i) choice[i] = i;
  BigCount sequences = 1;
  for (std::size_t i = 0; i < r; ++i) sequences *= n - i;
  const BigRational each = weight / BigRational(sequences);
  std::vector<std::uint32_t> picked;
  std::vector<std::uint32_t> swaps;
  while (true) {
    std::size_t step = 0;
    partial_fisher_yates(std::span<std::uint32_t>(perm), r,
                         [&](std::size_t, std::size_t) { return choice[step++]; }, picked, swaps);
    BitString y = x;
    for (const auto i : picked) y.flip(i);
    out[y.to_index()] += each;
    // odometer over choice[i] in [i, n)
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (++choice[i] < n) break;
      choice[i] = i;
      if (i == 0) return;
    }
    if (r == 0) return;
  }
}

}  // namespace

std::map<std::uint64_t, BigRational> exact_distribution(const UnaryOperator& op, const BitString& x) {
  const std::size_t n = x.size();
  if (n > 8) throw DomainError("exact_distribution is limited to n <= 8");
  op.validate(n);
  std::map<std::uint64_t, BigRational> out;
  switch (op.kind) {
    case OperatorKind::flip_exact:
      add_sphere(x, op.radius, BigRational(1), out);
      break;
    case OperatorKind::single_bit:
      add_sphere(x, 1, BigRational(1), out);
      break;
    case OperatorKind::complement:
      add_sphere(x, n, BigRational(1), out);
      break;
    case OperatorKind::standard_mutation: {
      const BigRational p = exact_rational(op.p);
      const BigRational q = BigRational(1) - p;
      for (std::size_t r = 0; r <= n; ++r) {
        BigRational w(binomial(n, r));
        for (std::size_t i = 0; i < r; ++i) w *= p;
        for (std::size_t i = r; i < n; ++i) w *= q;
        if (w != 0) add_sphere(x, r, w, out);
      }
      break;
    }
  }
  return out;
}

}  // namespace parbb
