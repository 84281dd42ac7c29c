#include <doctest.h>

#include <cmath>
#include <vector>

#include "billingsley/errors.hpp"
#include "billingsley/primes.hpp"

using namespace billingsley;

namespace {

bool trial_division_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small sieve") {
  const auto s = build_sieve(10);
  CHECK(std::vector<std::uint32_t>(s.primes().begin(), s.primes().end()) ==
        std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(s.smallest_prime_factor(9) == 3);
  CHECK(s.smallest_prime_factor(7) == 7);
  CHECK(s.prime_count(10) == 4);
  CHECK_THROWS_AS(s.smallest_prime_factor(11), DomainError);
  CHECK_THROWS_AS(s.smallest_prime_factor(1), DomainError);
}

TEST_CASE("sieve against trial division") {
  const auto s = build_sieve(100000);
  CHECK(s.smallest_prime_factor(35) == 5);
  std::size_t count = 0;
  for (std::uint64_t m = 1; m <= 100000; ++m) {
    const bool p = trial_division_prime(m);
    if (p) ++count;
    REQUIRE(s.is_prime(m) == p);
    if (m >= 2) REQUIRE(m % s.smallest_prime_factor(m) == 0);
  }
  CHECK(count == 9592);
  CHECK(s.prime_count(100000) == 9592);
  CHECK(s.prime_count(1) == 0);
}

TEST_CASE("factorization") {
  const auto s = build_sieve(1000);
  CHECK(s.factor(360) == std::vector<std::uint64_t>{2, 2, 2, 3, 3, 5});
  CHECK(s.factor(1).empty());
  CHECK(s.factor(997) == std::vector<std::uint64_t>{997});
  CHECK(s.largest_prime_factor(360) == 5);
  CHECK(s.largest_prime_factor(1) == 1);
}

TEST_CASE("limits and budget") {
  CHECK_THROWS_AS(build_sieve(1), ParameterError);
  CHECK_THROWS_AS(build_sieve(kMaxSieveLimit + 1), ParameterError);
  CHECK_THROWS_AS(build_sieve(1000000, 1000), ResourceError);
  CHECK(build_sieve(1000).memory_bytes() > 0);
}

TEST_CASE("mertens sums") {
  const auto s = build_sieve(1000);
  CHECK(std::abs(mertens_sum(s, 2, 10) - (1.0 / 2 + 1.0 / 3 + 1.0 / 5 + 1.0 / 7)) < 1e-15);
  CHECK(mertens_sum(s, 2, 2) == 0.5);
  CHECK(mertens_sum(s, 24, 28) == 0.0);
  CHECK_THROWS_AS(mertens_sum(s, 10, 5), DomainError);
  CHECK_THROWS_AS(mertens_sum(s, 1, 5), DomainError);
  CHECK_THROWS_AS(mertens_sum(s, 2, 1001), DomainError);

  CHECK(std::abs(mertens_constant_estimate(s, 3) - (5.0 / 6 - std::log(std::log(3.0)))) < 1e-15);
  CHECK(std::abs(mertens_constant_estimate(s, 10) - 0.3421) < 1e-3);
  CHECK_THROWS_AS(mertens_constant_estimate(s, 2), DomainError);
}

TEST_CASE("mertens additivity in summation order") {
  const auto s = build_sieve(100000);
  for (std::uint64_t m : {2ull, 97ull, 1000ull, 4321ull, 99999ull}) {
    const double left = mertens_sum(s, 2, m);
    CHECK(mertens_accumulate(s, m + 1, 100000, left) == mertens_sum(s, 2, 100000));
    const double split = left + mertens_sum(s, m + 1, 100000);
    CHECK(std::abs(split - mertens_sum(s, 2, 100000)) < 1e-12);
  }
}
