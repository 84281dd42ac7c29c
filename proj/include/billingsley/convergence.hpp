#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "billingsley/box.hpp"
#include "billingsley/dickman.hpp"
#include "billingsley/factor_stats.hpp"
#include "billingsley/primes.hpp"

namespace billingsley {

/// Tolerance epsilon and the diameter-to-distance ratio R of the box
/// criterion.
struct BoxCriterion {
  double epsilon = 0.25;
  double R = 2.0;
  std::size_t k = 1;

  /// R = k / (2 epsilon).
  static BoxCriterion for_dimension(std::size_t k, double epsilon);
  void validate() const;
};

/// Exact Euclidean distance from a closed box inside U to the complement of
/// U. Throws PreconditionError when the box touches or leaves U.
double distance_to_complement(const BoxSpec& box);

/// R diam(B) < d(B, U^c).
bool box_admissible(const BoxSpec& box, const BoxCriterion& crit);

/// Certified lower bound on the density over the box. Each 1/t_i factor is
/// bounded at the right endpoint and the rho factor at the all-left corner.
/// With refine > 1 the same bound is applied on each cell of a refine^k
/// subdivision and the smallest cell bound is returned, which is still a
/// lower bound and never below the single-cell one.
double inf_density_on_box(const DickmanTable& table, const BoxSpec& box,
                          int refine = 1);

struct LadderEntry {
  std::uint64_t n = 0;
  std::string method;  // "exact" or "mc"
  double p = 0.0;
  std::optional<double> std_err;
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  bool verdict = false;
};

struct ConvergenceReport {
  BoxSpec box;
  BoxCriterion criterion;
  bool admissible = false;
  double lower_bound = 0.0;
  double limit_probability = 0.0;
  std::vector<LadderEntry> entries;
  /// |p_n - limit_probability| non-increasing along the ladder.
  bool trend = false;

  bool all_verdicts() const noexcept;
};

struct CriterionOptions {
  /// Ladder entries with n at or below this use the prime-tuple identity;
  /// larger n are sampled.
  std::uint64_t exact_threshold = 1000000;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  /// Margin in standard errors subtracted from the bound for sampled entries.
  double stat_margin = 4.0;
  int limit_grid = 400;
};

/// Checks P(X_n in B) >= (1 - epsilon) vol(B) inf_B f at each ladder n.
/// The sieve must reach max(ladder) for sampled entries.
ConvergenceReport run_criterion(const PrimeSieve& sieve,
                                const DickmanTable& table,
                                const std::vector<std::uint64_t>& ladder,
                                const BoxSpec& box, const BoxCriterion& crit,
                                const CriterionOptions& opts = {});

}  // namespace billingsley
