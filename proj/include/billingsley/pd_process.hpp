#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "billingsley/box.hpp"
#include "billingsley/dickman.hpp"
#include "billingsley/factor_stats.hpp"

namespace billingsley {

/// Ranked stick-breaking sample. components are descending and strictly
/// positive; tail_mass is the unbroken remainder prod U_i.
struct PDSample {
  std::vector<double> components;
  double tail_mass = 1.0;
  int truncation = 0;
};

inline constexpr int kDefaultTruncation = 60;

/// Density of the first k ranked Poisson-Dirichlet coordinates,
/// (1 / (t_1 ... t_k)) rho((1 - sum t) / t_k) on U and 0 elsewhere,
/// including the boundary of U.
double pd_density(const DickmanTable& table, std::span<const double> point);

/// Sample number `index` of the counter stream `seed`: sticks
/// 1 - U_1, U_1 (1 - U_2), ... over `truncation` uniforms, ranked.
PDSample pd_sample(std::uint64_t seed, int truncation = kDefaultTruncation,
                   std::uint64_t index = 0);

/// Fraction of `samples` draws whose first k ranked components satisfy
/// `event`. Independent of `threads`.
EmpiricalEstimate pd_event_frequency(
    const std::function<bool(std::span<const double>)>& event, std::size_t k,
    std::uint64_t samples, std::uint64_t seed,
    int truncation = kDefaultTruncation, unsigned threads = 1);

/// Sampler hit frequency of a closed box.
EmpiricalEstimate pd_box_frequency(const BoxSpec& box, std::uint64_t samples,
                                   std::uint64_t seed,
                                   int truncation = kDefaultTruncation,
                                   unsigned threads = 1);

struct BoxIntegral {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Integral of the density over a box inside U by the tensor midpoint rule
/// with `grid` points per axis. The error estimate extrapolates from a
/// half-resolution pass assuming the rule's h^2 behaviour.
BoxIntegral pd_box_probability(const DickmanTable& table, const BoxSpec& box,
                               int grid);

}  // namespace billingsley
