#include "billingsley/smoothcount.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "billingsley/errors.hpp"

namespace billingsley {

namespace {

// m is y-smooth iff stripping smallest prime factors <= y reaches a cofactor <= y.
// Sieve limits stay below 2^32, so the division runs in 32 bits.
bool is_smooth(const PrimeSieve& sieve, std::uint32_t m, std::uint64_t y) {
  while (m > y) {
    const std::uint32_t p = sieve.smallest_prime_factor(m);
    if (p > y) return false;
    m /= p;
  }
  return true;
}

}  // namespace

std::uint64_t psi_bruteforce(const PrimeSieve& sieve, std::uint64_t x,
                             std::uint64_t y) {
  if (x < 1 || y < 1) throw DomainError("psi needs x >= 1 and y >= 1");
  if (x > sieve.limit()) {
    throw DomainError("psi_bruteforce: x = " + std::to_string(x) +
                      " exceeds sieve limit " + std::to_string(sieve.limit()));
  }
  std::uint64_t count = 0;
  for (std::uint64_t m = 1; m <= x; ++m) {
    if (is_smooth(sieve, static_cast<std::uint32_t>(m), y)) ++count;
  }
  return count;
}

PsiCounter::PsiCounter(const PrimeSieve& sieve, std::size_t memo_cap)
    : primes_(sieve.primes().begin(), sieve.primes().end()),
      coverage_(sieve.limit()),
      cap_(memo_cap) {}

bool PsiCounter::lookup(const Key& k, std::uint64_t& out) {
  const auto it = index_.find(k);
  if (it == index_.end()) return false;
  lru_.splice(lru_.begin(), lru_, it->second);
  out = it->second->second;
  return true;
}

void PsiCounter::store(const Key& k, std::uint64_t v) {
  if (cap_ == 0) return;
  if (index_.size() >= cap_) {
    index_.erase(lru_.back().first);
    lru_.pop_back();
  }
  lru_.emplace_front(k, v);
  index_.emplace(k, lru_.begin());
}

// Psi(x, p_j) with p_1 < p_2 < ... the stored primes; j = 0 means y < 2.
std::uint64_t PsiCounter::psi(std::uint64_t x, std::size_t j) {
  if (x == 0) return 0;
  if (j == 0 || x == 1) return 1;
  if (primes_[j - 1] >= x) return x;

  // Small memo keys are cheaper to recompute than to look up.
  const bool memo = x >= 256;
  const Key key{x, static_cast<std::uint32_t>(j)};
  std::uint64_t cached = 0;
  if (memo && lookup(key, cached)) return cached;

  // Unrolled recursion: Psi(x, p_j) = 1 + sum_{i <= j} Psi(x / p_i, p_i).
  // Once p_i^2 > x the quotient is below p_i and every cofactor is smooth.
  std::uint64_t total = 1;
  std::size_t i = 0;
  for (; i < j; ++i) {
    const std::uint64_t p = primes_[i];
    const std::uint64_t q = x / p;
    if (q < p) break;
    total += psi(q, i + 1);
  }
  for (; i < j; ++i) total += x / primes_[i];

  if (memo) store(key, total);
  return total;
}

std::uint64_t PsiCounter::count(std::uint64_t x, std::uint64_t y) {
  if (x < 1 || y < 1) throw DomainError("psi needs x >= 1 and y >= 1");
  if (y >= x) return x;
  if (y > coverage_) {
    throw DomainError("psi: prime table covers up to " +
                      std::to_string(coverage_) + ", query needs " +
                      std::to_string(y));
  }
  const auto j = static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), y) - primes_.begin());
  return psi(x, j);
}

std::uint64_t psi_exact(std::uint64_t x, std::uint64_t y, std::size_t memo_cap) {
  if (x < 1 || y < 1) throw DomainError("psi needs x >= 1 and y >= 1");
  if (y >= x) return x;
  if (y < 2) return 1;
  if (y > kMaxSieveLimit) {
    throw ResourceError("psi_exact: prime table up to " + std::to_string(y) +
                        " exceeds the supported sieve range");
  }
  PsiCounter counter(build_sieve(y), memo_cap);
  return counter.count(x, y);
}

double psi_dickman(const DickmanTable& table, double x, double y) {
  if (!(y >= 2.0) || !(x >= y)) throw DomainError("psi_dickman needs x >= y >= 2");
  return x * rho(table, std::log(x) / std::log(y));
}

}  // namespace billingsley
