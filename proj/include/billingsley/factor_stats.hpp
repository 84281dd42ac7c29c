#pragma once

#include <cstdint>
#include <vector>

#include "billingsley/box.hpp"
#include "billingsley/powers.hpp"
#include "billingsley/primes.hpp"
#include "billingsley/smoothcount.hpp"

namespace billingsley {

/// A draw N from [1, n] with its k largest prime factors (with
/// multiplicity, padded with 1) and their scaled logs L_i = log p_i / log n.
struct FactorVector {
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  std::vector<std::uint64_t> p;
  std::vector<double> L;
};

/// The k largest prime factors of N, descending, padded with 1.
std::vector<std::uint64_t> ranked_factors(const PrimeSieve& sieve,
                                          std::uint64_t N, std::size_t k);

FactorVector factor_vector(const PrimeSieve& sieve, std::uint64_t n,
                           std::uint64_t N, std::size_t k);

/// Exact count of m <= n in a box, with the ratio count / n.
struct BoxCount {
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  double ratio() const noexcept {
    return total ? static_cast<double>(count) / static_cast<double>(total) : 0.0;
  }
};

/// Integer ranges [ceil n^t_i, floor n^(t_i + dt_i)] for each coordinate.
/// Every method below classifies prime factors through these.
std::vector<IntRange> box_prime_ranges(std::uint64_t n, const BoxSpec& box);

/// Counts m <= n whose i-th largest prime factor lies in the i-th closed
/// range for every i, by factoring each m.
BoxCount box_probability_exact(const PrimeSieve& sieve, std::uint64_t n,
                               const BoxSpec& box);

/// Same count as a sum of Psi(floor(n / (p_1...p_k)), p_k) over
/// non-increasing prime tuples drawn from the coordinate ranges. The ranges
/// must exclude 1 (t_i > 0), since padded factors have no tuple.
BoxCount box_probability_via_psi(const PrimeSieve& sieve, std::uint64_t n,
                                 const BoxSpec& box);
BoxCount box_probability_via_psi(const PrimeSieve& sieve, PsiCounter& counter,
                                 std::uint64_t n, const BoxSpec& box);

struct EmpiricalEstimate {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  double p_hat = 0.0;
  double std_err = 0.0;
  std::uint64_t seed = 0;
};

/// p_hat = hits / total, std_err = sqrt(p_hat (1 - p_hat) / total).
EmpiricalEstimate make_estimate(std::uint64_t hits, std::uint64_t total,
                                std::uint64_t seed);

/// Monte-Carlo estimate of the box probability. Sample s draws N from the
/// counter stream (seed, s), so the result is independent of `threads`.
EmpiricalEstimate sample_box_probability(const PrimeSieve& sieve,
                                         std::uint64_t n, const BoxSpec& box,
                                         std::uint64_t samples,
                                         std::uint64_t seed,
                                         unsigned threads = 1);

/// `count` uniform draws N <= n and their factor vectors.
std::vector<FactorVector> sample_factors(const PrimeSieve& sieve,
                                         std::uint64_t n, std::uint64_t count,
                                         std::size_t k, std::uint64_t seed);

/// P(L_1(n) <= 1/t) = Psi(n, n^(1/t)) / n, t >= 1.
double marginal_L1_cdf(std::uint64_t n, double t);
double marginal_L1_cdf(PsiCounter& counter, std::uint64_t n, double t);

}  // namespace billingsley
