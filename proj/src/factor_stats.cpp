#include "billingsley/factor_stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "billingsley/errors.hpp"
#include "billingsley/parallel.hpp"
#include "billingsley/random.hpp"

namespace billingsley {

namespace {

// Prime factors of m ascending, into a fixed buffer. Omega(m) < 64.
struct Factorization {
  std::array<std::uint64_t, 64> f{};
  std::size_t count = 0;

  // i-th largest (0-based), or 1 past Omega.
  std::uint64_t ranked(std::size_t i) const noexcept {
    return i < count ? f[count - 1 - i] : 1;
  }
};

Factorization factorize(const PrimeSieve& sieve, std::uint64_t m) {
  Factorization out;
  while (m > 1) {
    const std::uint64_t p = sieve.smallest_prime_factor(m);
    out.f[out.count++] = p;
    m /= p;
  }
  return out;
}

bool in_box(const Factorization& fz, const std::vector<IntRange>& ranges) {
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (!ranges[i].contains(fz.ranked(i))) return false;
  }
  return true;
}

void check_n(const PrimeSieve& sieve, std::uint64_t n) {
  if (n < 1 || n > sieve.limit()) {
    throw DomainError("n = " + std::to_string(n) + " must lie in [1, " +
                      std::to_string(sieve.limit()) + "]");
  }
}

}  // namespace

std::vector<std::uint64_t> ranked_factors(const PrimeSieve& sieve,
                                          std::uint64_t N, std::size_t k) {
  if (N < 1 || N > sieve.limit()) {
    throw DomainError("ranked_factors: N = " + std::to_string(N) +
                      " outside sieve range [1, " + std::to_string(sieve.limit()) + "]");
  }
  const Factorization fz = factorize(sieve, N);
  std::vector<std::uint64_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = fz.ranked(i);
  return out;
}

FactorVector factor_vector(const PrimeSieve& sieve, std::uint64_t n,
                           std::uint64_t N, std::size_t k) {
  if (n < 2) throw DomainError("factor_vector needs n >= 2");
  if (N < 1 || N > n) throw DomainError("factor_vector needs 1 <= N <= n");
  FactorVector v;
  v.n = n;
  v.N = N;
  v.p = ranked_factors(sieve, N, k);
  const double ln = std::log(static_cast<double>(n));
  v.L.reserve(k);
  for (std::uint64_t p : v.p) v.L.push_back(std::log(static_cast<double>(p)) / ln);
  return v;
}

std::vector<IntRange> box_prime_ranges(std::uint64_t n, const BoxSpec& box) {
  std::vector<IntRange> ranges;
  ranges.reserve(box.k());
  for (std::size_t i = 0; i < box.k(); ++i) {
    IntRange r = power_range(n, box.lower(i), box.upper(i));
    r.hi = std::min(r.hi, n);
    ranges.push_back(r);
  }
  return ranges;
}

BoxCount box_probability_exact(const PrimeSieve& sieve, std::uint64_t n,
                               const BoxSpec& box) {
  check_n(sieve, n);
  const auto ranges = box_prime_ranges(n, box);
  BoxCount out{0, n};
  for (const auto& r : ranges) {
    if (r.empty()) return out;
  }
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (in_box(factorize(sieve, m), ranges)) ++out.count;
  }
  return out;
}

namespace {

struct TupleSum {
  const PrimeSieve& sieve;
  PsiCounter& counter;
  const std::vector<IntRange>& ranges;
  std::uint64_t n;

  // Tuples p_1 >= ... >= p_k, p_i in ranges[i]; `cap` bounds p_depth from
  // above, `prod` is p_1 ... p_{depth-1}.
  std::uint64_t run(std::size_t depth, std::uint64_t cap, std::uint64_t prod) {
    const IntRange& r = ranges[depth];
    const std::uint64_t hi = std::min(r.hi, cap);
    if (r.lo > hi) return 0;
    const auto primes = sieve.primes();
    std::uint64_t total = 0;
    for (std::size_t idx = sieve.prime_count(r.lo - 1); idx < primes.size(); ++idx) {
      const std::uint64_t p = primes[idx];
      if (p > hi) break;
      const std::uint64_t rest = n / prod;
      if (p > rest) break;
      if (depth + 1 == ranges.size()) {
        total += counter.count(rest / p, p);
      } else {
        total += run(depth + 1, p, prod * p);
      }
    }
    return total;
  }
};

}  // namespace

BoxCount box_probability_via_psi(const PrimeSieve& sieve, PsiCounter& counter,
                                 std::uint64_t n, const BoxSpec& box) {
  if (n < 1) throw DomainError("box probability needs n >= 1");
  const auto ranges = box_prime_ranges(n, box);
  BoxCount out{0, n};
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const IntRange& r = ranges[i];
    if (r.empty()) return out;
    if (r.lo <= 1) {
      throw PreconditionError("coordinate " + std::to_string(i + 1) +
                              " admits the padding value 1; the prime-tuple "
                              "sum needs t_i > 0");
    }
    if (std::min(r.hi, n) > sieve.limit()) {
      throw DomainError("prime range up to " + std::to_string(r.hi) +
                        " exceeds sieve limit " + std::to_string(sieve.limit()));
    }
  }
  TupleSum sum{sieve, counter, ranges, n};
  out.count = sum.run(0, n, 1);
  return out;
}

BoxCount box_probability_via_psi(const PrimeSieve& sieve, std::uint64_t n,
                                 const BoxSpec& box) {
  PsiCounter counter(sieve);
  return box_probability_via_psi(sieve, counter, n, box);
}

EmpiricalEstimate make_estimate(std::uint64_t hits, std::uint64_t total,
                                std::uint64_t seed) {
  EmpiricalEstimate e;
  e.hits = hits;
  e.total = total;
  e.seed = seed;
  if (total > 0) {
    e.p_hat = static_cast<double>(hits) / static_cast<double>(total);
    e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(total));
  }
  return e;
}

EmpiricalEstimate sample_box_probability(const PrimeSieve& sieve,
                                         std::uint64_t n, const BoxSpec& box,
                                         std::uint64_t samples,
                                         std::uint64_t seed, unsigned threads) {
  if (samples < 1) throw ParameterError("sample count must be at least 1");
  check_n(sieve, n);
  const auto ranges = box_prime_ranges(n, box);
  const bool empty = std::any_of(ranges.begin(), ranges.end(),
                                 [](const IntRange& r) { return r.empty(); });
  if (empty) return make_estimate(0, samples, seed);

  const auto hits = parallel_reduce<std::uint64_t>(
      samples, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t h = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
          CounterRng rng(seed, StreamTag::kBoxSampling, s);
          const std::uint64_t N = uniform_int(rng, 1, n);
          if (in_box(factorize(sieve, N), ranges)) ++h;
        }
        return h;
      });
  return make_estimate(hits, samples, seed);
}

std::vector<FactorVector> sample_factors(const PrimeSieve& sieve,
                                         std::uint64_t n, std::uint64_t count,
                                         std::size_t k, std::uint64_t seed) {
  check_n(sieve, n);
  std::vector<FactorVector> out;
  out.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    CounterRng rng(seed, StreamTag::kFactorSampling, s);
    out.push_back(factor_vector(sieve, n, uniform_int(rng, 1, n), k));
  }
  return out;
}

double marginal_L1_cdf(PsiCounter& counter, std::uint64_t n, double t) {
  if (n < 2) throw DomainError("marginal_L1_cdf needs n >= 2");
  if (!(t >= 1.0) || !std::isfinite(t)) throw DomainError("marginal_L1_cdf needs t >= 1");
  const std::uint64_t y = std::max<std::uint64_t>(1, floor_power(n, 1.0 / t));
  return static_cast<double>(counter.count(n, y)) / static_cast<double>(n);
}

double marginal_L1_cdf(std::uint64_t n, double t) {
  if (n < 2) throw DomainError("marginal_L1_cdf needs n >= 2");
  if (!(t >= 1.0) || !std::isfinite(t)) throw DomainError("marginal_L1_cdf needs t >= 1");
  const std::uint64_t y = std::max<std::uint64_t>(1, floor_power(n, 1.0 / t));
  return static_cast<double>(psi_exact(n, y)) / static_cast<double>(n);
}

}  // namespace billingsley
