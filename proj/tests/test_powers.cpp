#include <doctest.h>

#include <cmath>

#include "billingsley/errors.hpp"
#include "billingsley/powers.hpp"

using namespace billingsley;

TEST_CASE("exact boundary cases") {
  CHECK(compare_to_power(7, 49, 0.5) == 0);
  CHECK(compare_to_power(6, 49, 0.5) < 0);
  CHECK(compare_to_power(8, 49, 0.5) > 0);
  CHECK(compare_to_power(10, 1000, 1.0 / 3.0) == 0);
  CHECK(compare_to_power(100, 1000, 2.0 / 3.0) == 0);
  CHECK(compare_to_power(1000, 1000000, 0.5) == 0);
  CHECK(compare_to_power(1, 12345, 0.0) == 0);
  CHECK(compare_to_power(2, 2, 1.0) == 0);
}

TEST_CASE("floor and ceil powers") {
  CHECK(floor_power(49, 0.5) == 7);
  CHECK(ceil_power(49, 0.5) == 7);
  CHECK(floor_power(50, 0.5) == 7);
  CHECK(ceil_power(50, 0.5) == 8);
  CHECK(floor_power(1000, 1.0 / 3.0) == 10);
  CHECK(floor_power(999, 1.0 / 3.0) == 9);
  CHECK(floor_power(10000000, 1.0 / 3.0) == 215);
  CHECK(ceil_power(100, 0.9) == 64);
  CHECK(floor_power(100, 0.9) == 63);
  CHECK(floor_power(2, 100.0) == kPowerCap);
  CHECK_THROWS_AS(floor_power(0, 0.5), DomainError);
  CHECK_THROWS_AS(floor_power(10, NAN), DomainError);
}

TEST_CASE("power_range is the closed interval") {
  const auto r = power_range(100, 0.5, 0.9);
  CHECK(r.lo == 10);
  CHECK(r.hi == 63);
  CHECK(r.contains(10));
  CHECK_FALSE(r.contains(64));
  CHECK(power_range(10, 0.2, 0.25).empty());
}

TEST_CASE("agrees with direct comparison away from the boundary") {
  for (std::uint64_t n = 2; n < 3000; n += 37) {
    for (double t : {0.13, 0.31, 0.5, 0.77, 1.0}) {
      const double x = std::pow(static_cast<double>(n), t);
      const auto f = floor_power(n, t);
      REQUIRE(static_cast<double>(f) <= x * (1 + 1e-12));
      REQUIRE(static_cast<double>(f + 1) > x * (1 - 1e-12));
    }
  }
}
