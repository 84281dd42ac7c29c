#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <unordered_map>
#include <vector>

#include "billingsley/dickman.hpp"
#include "billingsley/primes.hpp"

namespace billingsley {

/// Psi(x, y) by scanning largest prime factors of 1..x. Counts m = 1.
std::uint64_t psi_bruteforce(const PrimeSieve& sieve, std::uint64_t x,
                             std::uint64_t y);

inline constexpr std::size_t kDefaultPsiMemoEntries = std::size_t{1} << 22;

/// Exact Psi(x, y) by the recursion Psi(x, p_j) = Psi(x, p_{j-1}) +
/// Psi(floor(x / p_j), p_j), memoized on (floor x, j) with least-recently-used
/// eviction once the memo holds `memo_cap` entries.
///
/// Holds mutable memo state: one instance per thread. Results do not depend
/// on the memo contents.
class PsiCounter {
 public:
  /// Uses the primes of `sieve`; queries need min(x, y) <= sieve.limit().
  explicit PsiCounter(const PrimeSieve& sieve,
                      std::size_t memo_cap = kDefaultPsiMemoEntries);

  std::uint64_t count(std::uint64_t x, std::uint64_t y);

  std::size_t memo_size() const noexcept { return index_.size(); }
  std::size_t memo_capacity() const noexcept { return cap_; }

 private:
  struct Key {
    std::uint64_t x;
    std::uint32_t j;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.x * 0x9E3779B97F4A7C15ULL ^ k.j);
    }
  };
  using Entry = std::pair<Key, std::uint64_t>;

  std::uint64_t psi(std::uint64_t x, std::size_t j);
  bool lookup(const Key& k, std::uint64_t& out);
  void store(const Key& k, std::uint64_t v);

  std::vector<std::uint64_t> primes_;
  std::uint64_t coverage_;
  std::size_t cap_;
  std::list<Entry> lru_;
  std::unordered_map<Key, std::list<Entry>::iterator, KeyHash> index_;
};

/// Exact Psi(x, y) with its own prime table up to min(x, y). Throws
/// ResourceError when that table exceeds the sieve memory budget.
std::uint64_t psi_exact(std::uint64_t x, std::uint64_t y,
                        std::size_t memo_cap = kDefaultPsiMemoEntries);

/// Dickman estimate x * rho(log x / log y), for x >= y >= 2.
double psi_dickman(const DickmanTable& table, double x, double y);

}  // namespace billingsley
