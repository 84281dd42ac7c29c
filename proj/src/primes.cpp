#include "billingsley/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "billingsley/errors.hpp"
#include "billingsley/powers.hpp"

namespace billingsley {

PrimeSieve build_sieve(std::uint64_t limit, std::size_t budget_bytes) {
  if (limit < 2 || limit > kMaxSieveLimit) {
    throw ParameterError("sieve limit must lie in [2, 2^31], got " +
                         std::to_string(limit));
  }
  // spf table plus a prime list bounded by 1.26 x / ln x.
  const double lx = std::log(static_cast<double>(limit));
  const double est = (static_cast<double>(limit) + 1.0) * 4.0 +
                     1.26 * static_cast<double>(limit) / lx * 4.0;
  if (est > static_cast<double>(budget_bytes)) {
    throw ResourceError("sieve up to " + std::to_string(limit) + " needs ~" +
                        std::to_string(static_cast<std::uint64_t>(est)) +
                        " bytes, budget is " + std::to_string(budget_bytes));
  }

  PrimeSieve s;
  s.limit_ = limit;
  s.spf_.assign(limit + 1, 0);
  s.primes_.reserve(static_cast<std::size_t>(1.26 * static_cast<double>(limit) / lx) + 16);
  auto& spf = s.spf_;
  auto& primes = s.primes_;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t pi = spf[i];
    for (const std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (p > pi || ip > limit) break;
      spf[ip] = p;
    }
  }
  return s;
}

void PrimeSieve::check_range(std::uint64_t m) const {
  if (m < 1 || m > limit_) {
    throw DomainError(std::to_string(m) + " is outside the sieve range [1, " +
                      std::to_string(limit_) + "]");
  }
}

void PrimeSieve::spf_range_error(std::uint64_t m) const {
  if (m < 2) throw DomainError("smallest prime factor needs m >= 2");
  throw DomainError(std::to_string(m) + " is outside the sieve range [1, " +
                    std::to_string(limit_) + "]");
}

bool PrimeSieve::is_prime(std::uint64_t m) const {
  if (m < 2) return false;
  check_range(m);
  return spf_[m] == m;
}

std::size_t PrimeSieve::prime_count(std::uint64_t x) const {
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), x,
                       [](std::uint64_t v, std::uint32_t p) { return v < p; }) -
      primes_.begin());
}

std::vector<std::uint64_t> PrimeSieve::factor(std::uint64_t m) const {
  check_range(m);
  std::vector<std::uint64_t> out;
  while (m > 1) {
    const std::uint32_t p = spf_[m];
    out.push_back(p);
    m /= p;
  }
  return out;
}

std::uint64_t PrimeSieve::largest_prime_factor(std::uint64_t m) const {
  check_range(m);
  std::uint64_t last = 1;
  while (m > 1) {
    last = spf_[m];
    m /= last;
  }
  return last;
}

double mertens_accumulate(const PrimeSieve& sieve, std::uint64_t a,
                          std::uint64_t b, double init) {
  if (a < 2 || b < a || b > sieve.limit()) {
    throw DomainError("prime reciprocal range [" + std::to_string(a) + ", " +
                      std::to_string(b) + "] must satisfy 2 <= a <= b <= " +
                      std::to_string(sieve.limit()));
  }
  const auto primes = sieve.primes();
  auto it = std::lower_bound(primes.begin(), primes.end(), a,
                             [](std::uint32_t p, std::uint64_t v) { return p < v; });
  double sum = init;
  for (; it != primes.end() && *it <= b; ++it) sum += 1.0 / static_cast<double>(*it);
  return sum;
}

double mertens_sum(const PrimeSieve& sieve, std::uint64_t a, std::uint64_t b) {
  return mertens_accumulate(sieve, a, b, 0.0);
}

double mertens_constant_estimate(const PrimeSieve& sieve, std::uint64_t x) {
  if (x < 3) throw DomainError("mertens constant estimate needs x >= 3");
  return mertens_sum(sieve, 2, x) - std::log(std::log(static_cast<double>(x)));
}

double mertens_exponent_sum(const PrimeSieve& sieve, std::uint64_t n, double t,
                            double dt) {
  IntRange r = power_range(n, t, t + dt);
  r.lo = std::max<std::uint64_t>(r.lo, 2);
  if (r.empty()) return 0.0;
  return mertens_sum(sieve, r.lo, r.hi);
}

}  // namespace billingsley
