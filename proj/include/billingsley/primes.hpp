#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace billingsley {

inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 31;
inline constexpr std::size_t kDefaultSieveBudgetBytes = std::size_t{2} << 30;

/// Smallest-prime-factor table for 2..limit plus the ascending prime list.
/// Immutable after construction.
class PrimeSieve {
 public:
  std::uint64_t limit() const noexcept { return limit_; }

  std::uint32_t smallest_prime_factor(std::uint64_t m) const {
    if (m < 2 || m > limit_) spf_range_error(m);
    return spf_[m];
  }
  bool is_prime(std::uint64_t m) const;

  /// All primes <= limit(), ascending.
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  /// Number of primes <= x (x may exceed limit only if clamped by caller).
  std::size_t prime_count(std::uint64_t x) const;

  /// Prime factors of m with multiplicity, ascending. m = 1 gives none.
  std::vector<std::uint64_t> factor(std::uint64_t m) const;

  std::uint64_t largest_prime_factor(std::uint64_t m) const;

  std::size_t memory_bytes() const noexcept {
    return spf_.size() * sizeof(std::uint32_t) +
           primes_.size() * sizeof(std::uint32_t);
  }

 private:
  friend PrimeSieve build_sieve(std::uint64_t limit, std::size_t budget_bytes);

  void check_range(std::uint64_t m) const;
  [[noreturn]] void spf_range_error(std::uint64_t m) const;

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Linear sieve up to limit (2 <= limit <= 2^31). Throws ResourceError when
/// the table would exceed budget_bytes.
PrimeSieve build_sieve(std::uint64_t limit,
                       std::size_t budget_bytes = kDefaultSieveBudgetBytes);

/// Sum of 1/p over primes a <= p <= b, accumulated in ascending p.
double mertens_sum(const PrimeSieve& sieve, std::uint64_t a, std::uint64_t b);

/// Continues an ascending accumulation from `init`; mertens_sum(a, b) is
/// mertens_accumulate(a, b, 0.0), so splitting a range at m and carrying the
/// partial sum reproduces the whole-range value bit for bit.
double mertens_accumulate(const PrimeSieve& sieve, std::uint64_t a,
                          std::uint64_t b, double init);

/// mertens_sum(2, x) - log log x.
double mertens_constant_estimate(const PrimeSieve& sieve, std::uint64_t x);

/// Sum of 1/p over primes p with n^t <= p <= n^(t + dt), endpoints settled
/// exactly. Empty ranges give 0.
double mertens_exponent_sum(const PrimeSieve& sieve, std::uint64_t n, double t,
                            double dt);

}  // namespace billingsley
