#include "billingsley/pd_process.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "billingsley/errors.hpp"
#include "billingsley/parallel.hpp"
#include "billingsley/random.hpp"

namespace billingsley {

double pd_density(const DickmanTable& table, std::span<const double> point) {
  if (point.empty()) throw DomainError("pd_density needs at least one coordinate");
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    const double t = point[i];
    if (!std::isfinite(t)) throw DomainError("pd_density needs finite coordinates");
    if (!(t > 0.0)) return 0.0;
    if (i > 0 && !(point[i - 1] > t)) return 0.0;
    sum += t;
    prod *= t;
  }
  if (!(sum < 1.0)) return 0.0;
  const double u = (1.0 - sum) / point.back();
  if (u > table.u_max()) {
    throw DomainError("pd_density: rho argument " + std::to_string(u) +
                      " exceeds table u_max " + std::to_string(table.u_max()) +
                      "; build a larger table");
  }
  return table(u) / prod;
}

namespace {

// Unranked sticks into `out`; returns the tail mass.
double break_sticks(CounterRng& rng, int truncation, std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(truncation));
  double residual = 1.0;
  for (int i = 0; i < truncation; ++i) {
    const double u = uniform_open01(rng);
    out[static_cast<std::size_t>(i)] = residual * (1.0 - u);
    residual *= u;
  }
  return residual;
}

}  // namespace

PDSample pd_sample(std::uint64_t seed, int truncation, std::uint64_t index) {
  if (truncation < 1) throw ParameterError("truncation must be at least 1");
  CounterRng rng(seed, StreamTag::kPoissonDirichlet, index);
  PDSample s;
  s.truncation = truncation;
  s.tail_mass = break_sticks(rng, truncation, s.components);
  std::sort(s.components.begin(), s.components.end(), std::greater<>());
  return s;
}

EmpiricalEstimate pd_event_frequency(
    const std::function<bool(std::span<const double>)>& event, std::size_t k,
    std::uint64_t samples, std::uint64_t seed, int truncation,
    unsigned threads) {
  if (samples < 1) throw ParameterError("sample count must be at least 1");
  if (truncation < 1) throw ParameterError("truncation must be at least 1");
  if (k < 1 || k > static_cast<std::size_t>(truncation)) {
    throw ParameterError("k must lie in [1, truncation]");
  }
  const auto hits = parallel_reduce<std::uint64_t>(
      samples, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<double> sticks;
        std::uint64_t h = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
          CounterRng rng(seed, StreamTag::kPoissonDirichlet, s);
          break_sticks(rng, truncation, sticks);
          std::partial_sort(sticks.begin(), sticks.begin() + static_cast<std::ptrdiff_t>(k),
                            sticks.end(), std::greater<>());
          if (event(std::span<const double>(sticks.data(), k))) ++h;
        }
        return h;
      });
  return make_estimate(hits, samples, seed);
}

EmpiricalEstimate pd_box_frequency(const BoxSpec& box, std::uint64_t samples,
                                   std::uint64_t seed, int truncation,
                                   unsigned threads) {
  const auto in_box = [&](std::span<const double> x) {
    for (std::size_t i = 0; i < box.k(); ++i) {
      if (x[i] < box.lower(i) || x[i] > box.upper(i)) return false;
    }
    return true;
  };
  return pd_event_frequency(in_box, box.k(), samples, seed, truncation, threads);
}

namespace {

double midpoint_rule(const DickmanTable& table, const BoxSpec& box, int grid) {
  const std::size_t k = box.k();
  std::vector<double> h(k), point(k);
  for (std::size_t i = 0; i < k; ++i) h[i] = box.dt()[i] / grid;
  std::vector<int> idx(k, 0);
  double sum = 0.0;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) {
      point[i] = box.lower(i) + (idx[i] + 0.5) * h[i];
    }
    sum += pd_density(table, point);
    std::size_t d = 0;
    while (d < k && ++idx[d] == grid) idx[d++] = 0;
    if (d == k) break;
  }
  return sum * box.volume() / std::pow(static_cast<double>(grid), static_cast<double>(k));
}

}  // namespace

BoxIntegral pd_box_probability(const DickmanTable& table, const BoxSpec& box,
                               int grid) {
  if (grid < 1) throw ParameterError("quadrature grid must be at least 1");
  if (box.volume() == 0.0) return {};
  if (!box.inside_region()) {
    throw PreconditionError("pd_box_probability: box not inside U: " +
                            box.region_violation());
  }
  BoxIntegral out;
  out.value = midpoint_rule(table, box, grid);
  if (grid >= 2) {
    const int coarse = grid / 2;
    const double ratio = static_cast<double>(grid) / coarse;
    out.error_estimate =
        std::abs(midpoint_rule(table, box, coarse) - out.value) / (ratio * ratio - 1.0);
  } else {
    out.error_estimate = std::abs(out.value);
  }
  return out;
}

}  // namespace billingsley
