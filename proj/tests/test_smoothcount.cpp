#include <doctest.h>

#include <cmath>

#include "billingsley/dickman.hpp"
#include "billingsley/errors.hpp"
#include "billingsley/primes.hpp"
#include "billingsley/smoothcount.hpp"

using namespace billingsley;

namespace {

const PrimeSieve& sieve() {
  static const PrimeSieve s = build_sieve(100000);
  return s;
}

}  // namespace

TEST_CASE("brute-force counts") {
  CHECK(psi_bruteforce(sieve(), 10, 2) == 4);
  CHECK(psi_bruteforce(sieve(), 100, 1) == 1);
  CHECK(psi_bruteforce(sieve(), 37, 37) == 37);
  CHECK(psi_bruteforce(sieve(), 10, 3) == 7);
  CHECK(psi_bruteforce(sieve(), 10000, 10) == 338);
  CHECK_THROWS_AS(psi_bruteforce(sieve(), 100001, 5), DomainError);
}

TEST_CASE("recursive counts") {
  CHECK(psi_exact(1, 7) == 1);
  CHECK(psi_exact(10, 3) == 7);
  CHECK(psi_exact(10000, 10) == 338);
  CHECK(psi_exact(10000, 10) == psi_bruteforce(sieve(), 10000, 10));
  CHECK(psi_exact(37, 37) == 37);
  CHECK_THROWS_AS(psi_exact(0, 3), DomainError);
}

TEST_CASE("recursion equals enumeration on a grid") {
  PsiCounter counter(sieve());
  for (std::uint64_t x = 1; x <= 3000; ++x) {
    for (std::uint64_t y : std::initializer_list<std::uint64_t>{1, 2, 3, 5, 7, 11, 13, x}) {
      REQUIRE(counter.count(x, y) == psi_bruteforce(sieve(), x, y));
    }
  }
  for (std::uint64_t x : {99991ull, 100000ull}) {
    for (std::uint64_t y : {17ull, 101ull, 316ull, 5003ull}) {
      CHECK(counter.count(x, y) == psi_bruteforce(sieve(), x, y));
    }
  }
}

TEST_CASE("monotone and sandwiched") {
  PsiCounter counter(sieve());
  for (std::uint64_t x = 1; x <= 20000; x += 113) {
    CHECK(counter.count(x, 1) == 1);
    CHECK(counter.count(x, x) == x);
    std::uint64_t prev = 0;
    for (std::uint64_t y = 1; y <= x; y = y * 2 + 1) {
      const auto c = counter.count(x, y);
      REQUIRE(c >= prev);
      REQUIRE(c <= x);
      REQUIRE(c <= counter.count(x + 50, y));
      prev = c;
    }
  }
}

TEST_CASE("memo cap is honoured") {
  PsiCounter counter(sieve(), 64);
  const auto a = counter.count(1000000, 1000);
  CHECK(counter.memo_size() <= 64);
  PsiCounter roomy(sieve());
  CHECK(roomy.count(1000000, 1000) == a);
  CHECK(a == 344299);
}

TEST_CASE("smooth count beyond the prime table") {
  const auto s = build_sieve(100);
  PsiCounter counter(s);
  CHECK_THROWS_AS(counter.count(100000, 200), DomainError);
  CHECK(counter.count(50, 200) == 50);
}

TEST_CASE("Dickman approximation") {
  const auto table = build_rho_table();
  CHECK(psi_dickman(table, 1000.0, 1000.0) == 1000.0);
  CHECK(std::abs(psi_dickman(table, 1e6, 1e3) - 306852.8194400547) < 1e-6);
  CHECK(std::abs(psi_dickman(table, 1e7, std::pow(10.0, 7.0 / 3.0)) - 486083.88291) < 1e-3);
  CHECK_THROWS_AS(psi_dickman(table, 10.0, 1.0), DomainError);
  CHECK_THROWS_AS(psi_dickman(table, 1e30, 2.0), DomainError);
}
