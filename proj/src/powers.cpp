#include "billingsley/powers.hpp"

#include <gmpxx.h>

#include <cmath>
#include <optional>

#include "billingsley/errors.hpp"

namespace billingsley {

namespace {

constexpr double kLogBand = 1e-12;
constexpr double kRationalTol = 1e-14;
constexpr std::int64_t kMaxDenominator = 10000;

struct Rational {
  std::int64_t num;
  std::int64_t den;
};

// Continued-fraction convergents of t; the first within tolerance wins.
std::optional<Rational> recover_rational(double t) {
  if (!std::isfinite(t) || std::abs(t) > 1e6) return std::nullopt;
  const double tol = kRationalTol * std::max(1.0, std::abs(t));
  long double x = t;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a = std::floor(x);
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > kMaxDenominator) return std::nullopt;
    if (std::abs(static_cast<double>(p2) / static_cast<double>(q2) - t) <= tol) {
      return Rational{p2, q2};
    }
    const long double frac = x - a;
    if (frac == 0.0L) return std::nullopt;
    x = 1.0L / frac;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return std::nullopt;
}

int sign(long double v) { return (v > 0) - (v < 0); }

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return z;
}

// Exact sign of m - n^(num/den) for m >= 1, n >= 2, den >= 1.
int compare_rational_power(std::uint64_t m, std::uint64_t n, Rational r) {
  // m^den vs n^num; a negative num moves n's power to the left side.
  mpz_class lhs, rhs;
  const mpz_class zm = to_mpz(m), zn = to_mpz(n);
  mpz_pow_ui(lhs.get_mpz_t(), zm.get_mpz_t(), static_cast<unsigned long>(r.den));
  if (r.num >= 0) {
    mpz_pow_ui(rhs.get_mpz_t(), zn.get_mpz_t(), static_cast<unsigned long>(r.num));
  } else {
    mpz_class extra;
    mpz_pow_ui(extra.get_mpz_t(), zn.get_mpz_t(), static_cast<unsigned long>(-r.num));
    lhs *= extra;
    rhs = 1;
  }
  return sgn(lhs - rhs);
}

}  // namespace

int compare_to_power(std::uint64_t m, std::uint64_t n, double t) {
  if (!std::isfinite(t)) throw DomainError("exponent must be finite");
  if (m == 0) return -1;
  if (n == 0) throw DomainError("power base must be positive");
  if (n == 1 || t == 0.0) return m > 1 ? 1 : (m == 1 ? 0 : -1);

  const long double lm = std::log(static_cast<long double>(m));
  const long double rhs = static_cast<long double>(t) *
                          std::log(static_cast<long double>(n));
  const long double diff = lm - rhs;
  if (std::abs(diff) > kLogBand) return sign(diff);
  if (const auto r = recover_rational(t)) return compare_rational_power(m, n, *r);
  return sign(diff);
}

std::uint64_t floor_power(std::uint64_t n, double t) {
  if (!std::isfinite(t)) throw DomainError("exponent must be finite");
  const long double est = std::pow(static_cast<long double>(n), static_cast<long double>(t));
  if (!(est < static_cast<long double>(kPowerCap))) return kPowerCap;
  auto c = static_cast<std::uint64_t>(std::floor(est));
  while (c > 0 && compare_to_power(c, n, t) > 0) --c;
  while (c < kPowerCap && compare_to_power(c + 1, n, t) <= 0) ++c;
  return c;
}

std::uint64_t ceil_power(std::uint64_t n, double t) {
  if (!std::isfinite(t)) throw DomainError("exponent must be finite");
  const std::uint64_t f = floor_power(n, t);
  if (f >= kPowerCap) return kPowerCap;
  return compare_to_power(f, n, t) == 0 ? f : f + 1;
}

IntRange power_range(std::uint64_t n, double t_lo, double t_hi) {
  return {ceil_power(n, t_lo), floor_power(n, t_hi)};
}

}  // namespace billingsley
