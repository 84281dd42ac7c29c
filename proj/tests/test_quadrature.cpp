#include <doctest.h>

#include <cmath>

#include "billingsley/errors.hpp"
#include "billingsley/quadrature.hpp"

using namespace billingsley;

TEST_CASE("polynomials integrate exactly") {
  const auto r = adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0, {});
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("smooth and kinked integrands") {
  const auto r = adaptive_simpson([](double x) { return 1.0 / x; }, 1.0, 10.0, {});
  CHECK(std::abs(r.value - std::log(10.0)) < 1e-10);

  const auto k = adaptive_simpson([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, {});
  CHECK(std::abs(k.value - (0.045 + 0.245)) < 1e-10);
}

TEST_CASE("non-convergence is reported, not hidden") {
  QuadratureConfig cfg;
  cfg.max_depth = 3;
  cfg.rel_tol = 1e-14;
  cfg.abs_tol = 1e-300;
  const auto r = adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, cfg);
  CHECK_FALSE(r.converged);
  CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-2);
}

TEST_CASE("invalid configuration") {
  QuadratureConfig cfg;
  cfg.rel_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg = {};
  cfg.max_depth = 0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
}
