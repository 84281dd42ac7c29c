#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "billingsley/dickman.hpp"
#include "billingsley/errors.hpp"
#include "billingsley/pd_process.hpp"
#include "billingsley/quadrature.hpp"

using namespace billingsley;

namespace {

const DickmanTable& table() {
  static const DickmanTable t = build_rho_table();
  return t;
}

double density(std::vector<double> p) { return pd_density(table(), p); }

}  // namespace

TEST_CASE("density values") {
  CHECK(density({0.6}) == doctest::Approx(1.0 / 0.6).epsilon(1e-14));
  CHECK(std::abs(density({0.4}) - 1.48633722972958896) < 1e-12);
  CHECK(density({0.2, 0.3}) == 0.0);
  CHECK(density({0.5, 0.5}) == 0.0);
  CHECK(density({0.5, 0.2}) > 0.0);
  CHECK_THROWS_AS(density({}), DomainError);
  CHECK_THROWS_AS(density({0.01}), DomainError);
}

TEST_CASE("density vanishes off U") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double a = 0.2 + 0.5 * u01(gen), b = 0.05 + 0.1 * u01(gen);
    REQUIRE(density({b, a}) == 0.0);               // ordering
    REQUIRE(density({a, -b}) == 0.0);              // positivity
    REQUIRE(density({1.0 + b}) == 0.0);            // simplex, k = 1
    REQUIRE(density({a, 1.0 - a + b / 10}) == 0.0);  // simplex with ordering kept
    REQUIRE(density({a, a}) == 0.0);               // boundary of U
  }
}

TEST_CASE("k = 1 density integrates to one") {
  // Below t = 1/21 the rho argument exceeds the table; that tail is < 1e-28.
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  double total = 0.0;
  for (int j = 21; j > 1; --j) {
    const auto r = adaptive_simpson(
        [](double t) { return density({t}); }, 1.0 / j, 1.0 / (j - 1), cfg);
    total += r.value;
  }
  CHECK(std::abs(total - 1.0) < 1e-6);
}

TEST_CASE("GEM samples") {
  for (std::uint64_t seed : {1ull, 42ull, 1234567ull}) {
    const auto s = pd_sample(seed, 60, 3);
    CHECK(s.components.size() == 60);
    CHECK(s.truncation == 60);
    double sum = s.tail_mass;
    for (std::size_t i = 0; i < s.components.size(); ++i) {
      sum += s.components[i];
      if (i) REQUIRE(s.components[i] <= s.components[i - 1]);
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
  CHECK(pd_sample(5, 60, 8).components == pd_sample(5, 60, 8).components);
  CHECK_THROWS_AS(pd_sample(5, 0), ParameterError);
}

TEST_CASE("truncation tail") {
  // -log tail_mass ~ Gamma(60, 1); P(tail_mass >= 2^-20) = P(Gamma(60) <= 20 log 2).
  const double x = 20 * std::log(2.0);
  double term = std::exp(-x), cdf = 0.0;
  for (int j = 1; j <= 400; ++j) {
    term *= x / j;
    if (j >= 60) cdf += term;
  }
  CHECK(cdf < 1e-6);

  const double bound = std::ldexp(1.0, -20);
  int over = 0;
  for (std::uint64_t i = 0; i < 100000; ++i) over += pd_sample(42, 60, i).tail_mass >= bound;
  CHECK(over == 0);
}

TEST_CASE("marginal of the largest component") {
  const auto est = pd_event_frequency(
      [](std::span<const double> c) { return c[0] <= 0.5; }, 1, 100000, 42);
  const double r2 = 1.0 - std::log(2.0);
  CHECK(std::abs(est.p_hat - r2) <= 3 * std::sqrt(r2 * (1 - r2) / 1e5));
  const auto threaded = pd_event_frequency(
      [](std::span<const double> c) { return c[0] <= 0.5; }, 1, 100000, 42, 60, 4);
  CHECK(threaded.hits == est.hits);
}

TEST_CASE("box integrals") {
  const auto r = pd_box_probability(table(), BoxSpec({0.5}, {0.1}), 200);
  CHECK(std::abs(r.value - std::log(1.2)) < 1e-6);
  CHECK(pd_box_probability(table(), BoxSpec({0.5, 0.2}, {0.0, 0.1}), 50).value == 0.0);
  CHECK_THROWS_AS(pd_box_probability(table(), BoxSpec({1.2}, {0.1}), 50), PreconditionError);
  CHECK_THROWS_AS(pd_box_probability(table(), BoxSpec({0.5}, {0.1}), 0), ParameterError);
}

TEST_CASE("sampler agrees with the density") {
  const std::vector<BoxSpec> boxes{
      BoxSpec({0.5}, {0.1}),
      BoxSpec({0.3}, {0.1}),
      BoxSpec({0.15}, {0.1}),
      BoxSpec({0.45, 0.15}, {0.1, 0.1}),
      BoxSpec({0.35, 0.1}, {0.15, 0.15}),
  };
  std::uint64_t seed = 100;
  for (const auto& b : boxes) {
    CAPTURE(b.to_string());
    const double exact = pd_box_probability(table(), b, 400).value;
    const auto est = pd_box_frequency(b, 1000000, seed++, 60, 4);
    const double se = std::sqrt(exact * (1 - exact) / 1e6);
    CHECK(std::abs(est.p_hat - exact) < 4 * se);
  }
}
