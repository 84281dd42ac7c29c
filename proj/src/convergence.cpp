#include "billingsley/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "billingsley/errors.hpp"
#include "billingsley/pd_process.hpp"

namespace billingsley {

BoxCriterion BoxCriterion::for_dimension(std::size_t k, double epsilon) {
  BoxCriterion c;
  c.epsilon = epsilon;
  c.k = k;
  c.R = static_cast<double>(k) / (2.0 * epsilon);
  c.validate();
  return c;
}

void BoxCriterion::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1)");
  }
  if (!(R >= 0.0) || !std::isfinite(R)) throw ParameterError("R must be finite and >= 0");
  if (k < 1) throw ParameterError("criterion dimension must be at least 1");
}

double distance_to_complement(const BoxSpec& box) {
  const std::size_t k = box.k();
  // Facets of U: t_k = 0, t_i = t_{i+1} (unit normal (e_i - e_{i+1}) / sqrt 2),
  // and sum t = 1 (unit normal 1 / sqrt k). Each signed distance is affine,
  // so its minimum over B sits at the worst corner.
  double d = box.lower(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    d = std::min(d, (box.lower(i) - box.upper(i + 1)) / std::sqrt(2.0));
  }
  d = std::min(d, box.alpha() / std::sqrt(static_cast<double>(k)));
  if (!(d > 0.0)) {
    throw PreconditionError("box is not inside U: " +
                            (box.region_violation().empty()
                                 ? std::string("touches the boundary")
                                 : box.region_violation()));
  }
  return d;
}

bool box_admissible(const BoxSpec& box, const BoxCriterion& crit) {
  crit.validate();
  return crit.R * box.diameter() < distance_to_complement(box);
}

namespace {

double cell_bound(const DickmanTable& table, const std::vector<double>& lo,
                  const std::vector<double>& hi) {
  double prod = 1.0;
  double sum_lo = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    prod *= hi[i];
    sum_lo += lo[i];
  }
  const double u = (1.0 - sum_lo) / lo.back();
  if (u > table.u_max()) {
    throw DomainError("inf_density_on_box: rho argument " + std::to_string(u) +
                      " exceeds table u_max");
  }
  return table(u) / prod;
}

}  // namespace

double inf_density_on_box(const DickmanTable& table, const BoxSpec& box,
                          int refine) {
  if (refine < 1) throw ParameterError("refine must be at least 1");
  distance_to_complement(box);  // precondition
  const std::size_t k = box.k();
  std::vector<double> lo(k), hi(k);
  std::vector<int> idx(k, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t i = 0; i < k; ++i) {
      const double w = box.dt()[i] / refine;
      lo[i] = box.lower(i) + idx[i] * w;
      hi[i] = idx[i] + 1 == refine ? box.upper(i) : lo[i] + w;
    }
    best = std::min(best, cell_bound(table, lo, hi));
    std::size_t d = 0;
    while (d < k && ++idx[d] == refine) idx[d++] = 0;
    if (d == k) break;
  }
  return best;
}

bool ConvergenceReport::all_verdicts() const noexcept {
  return std::all_of(entries.begin(), entries.end(),
                     [](const LadderEntry& e) { return e.verdict; });
}

ConvergenceReport run_criterion(const PrimeSieve& sieve,
                                const DickmanTable& table,
                                const std::vector<std::uint64_t>& ladder,
                                const BoxSpec& box, const BoxCriterion& crit,
                                const CriterionOptions& opts) {
  crit.validate();
  if (crit.k != box.k()) {
    throw ParameterError("criterion dimension does not match the box");
  }
  const double dist = distance_to_complement(box);
  const double lhs = crit.R * box.diameter();
  if (!(lhs < dist)) {
    std::ostringstream msg;
    msg << "box is not admissible: R diam(B) = " << lhs
        << " is not below d(B, U^c) = " << dist;
    throw PreconditionError(msg.str());
  }

  ConvergenceReport report{box, crit, true, 0.0, 0.0, {}, false};
  report.lower_bound =
      (1.0 - crit.epsilon) * box.volume() * inf_density_on_box(table, box);
  report.limit_probability = pd_box_probability(table, box, opts.limit_grid).value;

  PsiCounter counter(sieve);
  for (const std::uint64_t n : ladder) {
    LadderEntry e;
    e.n = n;
    if (n <= opts.exact_threshold) {
      const BoxCount c = box_probability_via_psi(sieve, counter, n, box);
      e.method = "exact";
      e.p = c.ratio();
      e.hits = c.count;
      e.total = c.total;
      e.verdict = e.p >= report.lower_bound;
    } else {
      const EmpiricalEstimate est =
          sample_box_probability(sieve, n, box, opts.samples, opts.seed, opts.threads);
      e.method = "mc";
      e.p = est.p_hat;
      e.std_err = est.std_err;
      e.hits = est.hits;
      e.total = est.total;
      e.verdict = e.p >= report.lower_bound - opts.stat_margin * est.std_err;
    }
    report.entries.push_back(std::move(e));
  }
  report.trend = true;
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    const double prev = std::abs(report.entries[i - 1].p - report.limit_probability);
    const double cur = std::abs(report.entries[i].p - report.limit_probability);
    if (cur > prev) report.trend = false;
  }
  return report;
}

}  // namespace billingsley
