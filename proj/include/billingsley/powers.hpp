#pragma once

#include <cstdint>

namespace billingsley {

/// Inclusive integer range; empty when lo > hi.
struct IntRange {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;

  bool empty() const noexcept { return lo > hi; }
  bool contains(std::uint64_t m) const noexcept { return lo <= m && m <= hi; }
};

/// Sign of m - n^t, decided exactly.
///
/// Outside a 1e-12 band the double-precision logarithms decide. Inside the
/// band t is read as the lowest-denominator rational a/b within 1e-14 of it
/// (denominator up to 10^4) and m^b is compared with n^a in big integers, so
/// boundary cases such as 7 = 49^0.5 classify the same way in every caller.
int compare_to_power(std::uint64_t m, std::uint64_t n, double t);

/// Smallest integer m >= 0 with m >= n^t, saturating at kPowerCap.
std::uint64_t ceil_power(std::uint64_t n, double t);

/// Largest integer m >= 0 with m <= n^t, saturating at kPowerCap.
std::uint64_t floor_power(std::uint64_t n, double t);

/// Integers m with n^t_lo <= m <= n^t_hi.
IntRange power_range(std::uint64_t n, double t_lo, double t_hi);

inline constexpr std::uint64_t kPowerCap = std::uint64_t{1} << 62;

}  // namespace billingsley
