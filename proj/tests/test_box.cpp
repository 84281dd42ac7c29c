#include <doctest.h>

#include <cmath>

#include "billingsley/box.hpp"
#include "billingsley/errors.hpp"
#include "billingsley/suite.hpp"

using namespace billingsley;

TEST_CASE("parse and geometry") {
  const auto b = BoxSpec::parse("0.45,0.1;0.15,0.1");
  CHECK(b.k() == 2);
  CHECK(b.lower(0) == 0.45);
  CHECK(b.upper(1) == doctest::Approx(0.25));
  CHECK(b.volume() == doctest::Approx(0.01));
  CHECK(b.diameter() == doctest::Approx(0.1 * std::sqrt(2.0)));
  CHECK(b.alpha() == doctest::Approx(0.2));
  CHECK(b.u0() == doctest::Approx(0.4 / 0.15));
  CHECK(b.inside_region());
  CHECK(b.region_violation().empty());
  CHECK(BoxSpec::parse(b.to_string()).t() == b.t());
  CHECK(BoxSpec::parse(" 0.5 , 0.1 ").k() == 1);
}

TEST_CASE("malformed boxes") {
  CHECK_THROWS_AS(BoxSpec::parse(""), ParameterError);
  CHECK_THROWS_AS(BoxSpec::parse("0.5"), ParameterError);
  CHECK_THROWS_AS(BoxSpec::parse("0.5,x"), ParameterError);
  CHECK_THROWS_AS(BoxSpec::parse("0.5,-0.1"), ParameterError);
  CHECK_THROWS_AS(BoxSpec({0.5, 0.2}, {0.1}), ParameterError);
  CHECK_THROWS_AS(BoxSpec({INFINITY}, {0.1}), ParameterError);
}

TEST_CASE("region membership") {
  CHECK_FALSE(BoxSpec({1.1}, {0.1}).inside_region());
  CHECK_FALSE(BoxSpec({0.0}, {0.1}).inside_region());
  CHECK_FALSE(BoxSpec({0.5}, {0.5}).inside_region());
  CHECK_FALSE(BoxSpec({0.2, 0.3}, {0.01, 0.01}).inside_region());
  CHECK_FALSE(BoxSpec({0.3, 0.25}, {0.05, 0.05}).inside_region());
  CHECK_FALSE(BoxSpec({0.5, 0.3}, {0.1, 0.1}).inside_region());
  CHECK_FALSE(BoxSpec({0.3, 0.25}, {0.05, 0.05}).region_violation().empty());
  CHECK(BoxSpec({0.5, 0.3}, {0.1, 0.05}).inside_region());
}

TEST_CASE("shrinking keeps the centre") {
  const BoxSpec b({0.4, 0.2}, {0.1, 0.04});
  const auto s = b.shrunk(0.5);
  CHECK(s.lower(0) == doctest::Approx(0.425));
  CHECK(s.upper(0) == doctest::Approx(0.475));
  CHECK(s.lower(1) == doctest::Approx(0.21));
  CHECK(b.shrunk(0.0).volume() == 0.0);
  CHECK_THROWS_AS(b.shrunk(1.5), ParameterError);
}

TEST_CASE("fixed regression boxes lie in U") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto boxes = identity_boxes(k);
    CHECK(boxes.size() == 3);
    for (const auto& b : boxes) {
      CAPTURE(b.to_string());
      CHECK(b.k() == k);
      CHECK(b.inside_region());
    }
  }
  for (const auto& b : criterion_boxes()) CHECK(b.inside_region());
}
