#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parbb/theory/report.hpp"

namespace parbb::theory {

/// P(Z = z) <= C(r, z) (m/n)^z for all m, r, z, and P(Z = z) <= (4m/n)^z
/// for z >= r/2, with Z hypergeometric. Full grid, n <= 512.
LemmaReport verify_hypergeom_tail(std::size_t n);

/// P(Delta_0(s, m, r) = z) <= (1/2)^{z/2} for s <= m <= n/8, 1 <= r <= n,
/// z >= 1. Full grid.
LemmaReport verify_improve_prob(std::size_t n);

/// P(Delta_0(s, m, r) > 0) <= exp(-(m - s)^2 / (2r)) for s <= m <= n/2,
/// 1 <= r <= n. Full grid.
LemmaReport verify_chvatal(std::size_t n);

/// P(Delta_0(s, m, r) = z) <= (16 n*/n)^2 2^{-z} for m within 2n* of either
/// end and 2 <= r <= n - 2, with n* = n / (2^13 ln n), on a sampled grid;
/// in between, the Chvatal route bound. DomainError when n* < 2.
LemmaReport verify_multibit_progress(std::size_t n);

/// Premise P(Delta(s, m, r) = z) <= 2^{1 - z/2} for s <= n/8 on the full
/// grid (both orientations, union bound), then the series
/// sum_z lambda 2^{1 - z/2} e^{gamma z} = 8 lambda for each lambda.
LemmaReport verify_mgf_bound(std::size_t n, const std::vector<std::size_t>& lambdas = {1, 64, 4096});

/// The explicit chain behind the logarithmic expected progress: premise
/// (1/2)^{z/2}, series value 9 + 6 sqrt 2, exact E[e^{eta Delta_0}] <= D
/// with eta = ln(4/3), exact expected maxima of lambda i.i.d. copies against
/// (ln(D lambda) + 1)/eta, and the Monte-Carlo check of that bound for
/// maxima of geometric variables.
LemmaReport verify_mgf_max(std::size_t n, const std::vector<std::size_t>& lambdas = {1, 64, 4096},
                           std::size_t mc_lambda = 100, std::size_t mc_trials = 10000,
                           std::uint64_t seed = 1);

/// (1 - 1/n)^{(1-delta)(n-1) ln n} >= n^{-(1-delta)} for delta on a grid in
/// (0, 1], reporting the threshold and final probability expression.
LemmaReport verify_coupon(std::size_t n);

/// Exact equality delta0_pmf(s, m, r) = delta0_pmf(s, n - m, n - r) for all
/// valid (s, m, r).
LemmaReport verify_delta_symmetry(std::size_t n);

}  // namespace parbb::theory
