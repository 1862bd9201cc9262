#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "parbb/big_count.hpp"
#include "parbb/bitstring.hpp"
#include "parbb/rng.hpp"

namespace parbb {

enum class OperatorKind { flip_exact, standard_mutation, single_bit, complement };

std::string to_string(OperatorKind kind);

/// Unary unbiased variation operator. Every kind is a law on the flip radius
/// followed by a uniformly random choice of that many distinct positions.
struct UnaryOperator {
  OperatorKind kind = OperatorKind::standard_mutation;
  std::size_t radius = 0;  // flip_exact only
  double p = 0.0;          // standard_mutation only

  static UnaryOperator flip_exact(std::size_t r) { return {OperatorKind::flip_exact, r, 0.0}; }
  static UnaryOperator standard_mutation(double p) { return {OperatorKind::standard_mutation, 0, p}; }
  static UnaryOperator single_bit() { return {OperatorKind::single_bit, 0, 0.0}; }
  static UnaryOperator complement() { return {OperatorKind::complement, 0, 0.0}; }

  /// DomainError unless the parameters are valid for length n.
  void validate(std::size_t n) const;

  friend bool operator==(const UnaryOperator&, const UnaryOperator&) = default;
};

/// Binomial(n, p) radius. DomainError unless p lies in [0, 1].
std::size_t sample_radius(double p, std::size_t n, Rng& rng);

/// Radius drawn from the operator's radius law.
std::size_t draw_radius(const UnaryOperator& op, std::size_t n, Rng& rng);

/// Flips r distinct uniformly chosen positions of x in place.
void flip_random_positions(BitString& x, std::size_t r, Rng& rng);

/// Applies op to x in place and returns the radius used.
std::size_t apply_in_place(const UnaryOperator& op, BitString& x, Rng& rng);

BitString apply(const UnaryOperator& op, const BitString& x, Rng& rng);

/// (y, complement(y)) with y = apply(op, x, rng).
std::pair<BitString, BitString> mirrored(const UnaryOperator& op, const BitString& x, Rng& rng);

/// Exact output distribution of apply(op, x, .) keyed by BitString::to_index().
///
/// Built by enumerating every pick sequence of the partial Fisher-Yates
/// sampler that apply() uses, mixed over the operator's radius law, so it is
/// the distribution of the implementation rather than of the definition.
/// Standard mutation's p is taken as the exact binary value of the double.
/// DomainError for n > 8.
std::map<std::uint64_t, BigRational> exact_distribution(const UnaryOperator& op, const BitString& x);

/// The exact rational value of a finite double.
BigRational exact_rational(double value);

}  // namespace parbb
