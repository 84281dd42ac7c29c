#include "billingsley/suite.hpp"

#include <algorithm>
#include <cmath>

#include "billingsley/convergence.hpp"
#include "billingsley/errors.hpp"
#include "billingsley/factor_stats.hpp"
#include "billingsley/io.hpp"
#include "billingsley/pd_process.hpp"
#include "billingsley/smoothcount.hpp"

namespace billingsley {

using json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kSuiteSieveLimit = 10000000;

double rho2() { return 1.0 - std::log(2.0); }

SuiteCheck dickman_analytic(SuiteContext& ctx) {
  const DickmanTable& table = ctx.table();
  double worst = 0.0;
  double worst_u = 1.0;
  for (int j = 0; j <= 1000; ++j) {
    const double u = 1.0 + j * 1e-3;
    const double err = std::abs(rho(table, u) - (1.0 - std::log(u)));
    if (err > worst) {
      worst = err;
      worst_u = u;
    }
  }
  const double tol = 1e-9;
  return {"dickman_analytic", worst < tol,
          json{{"max_abs_err", worst}, {"at_u", worst_u}, {"tolerance", tol}}};
}

SuiteCheck alternating_sum(SuiteContext& ctx) {
  const DickmanTable& table = ctx.table();
  const double tol = 1e-6;
  bool ok = true;
  json rows = json::array();
  for (const double u : {1.5, 2.5, 3.5}) {
    const double direct = rho(table, u);
    const double alt = rho_via_alternating_sum(u);
    const double diff = std::abs(direct - alt);
    ok = ok && diff < tol;
    rows.push_back({{"u", u}, {"rho", direct}, {"alternating_sum", alt}, {"abs_diff", diff}});
  }
  return {"alternating_sum", ok, json{{"tolerance", tol}, {"points", rows}}};
}

SuiteCheck psi_oracle(SuiteContext& ctx) {
  const PrimeSieve& sieve = ctx.sieve();
  std::uint64_t compared = 0;
  json first_mismatch = nullptr;
  for (std::uint64_t x = 1; x <= 10000 && first_mismatch.is_null(); ++x) {
    for (const std::uint64_t y : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3},
                                  std::uint64_t{5}, std::uint64_t{7}, std::uint64_t{11},
                                  std::uint64_t{13}, x}) {
      const auto exact = psi_exact(x, y);
      const auto brute = psi_bruteforce(sieve, x, y);
      ++compared;
      if (exact != brute) {
        first_mismatch = {{"x", x}, {"y", y}, {"exact", exact}, {"brute", brute}};
        break;
      }
    }
  }
  return {"psi_oracle", first_mismatch.is_null(),
          json{{"pairs_compared", compared}, {"first_mismatch", first_mismatch}}};
}

SuiteCheck prime_tuple_identity(SuiteContext& ctx) {
  const PrimeSieve& sieve = ctx.sieve();
  PsiCounter counter(sieve);
  bool ok = true;
  json rows = json::array();
  for (const std::uint64_t n : {std::uint64_t{1000}, std::uint64_t{10000}, std::uint64_t{100000}}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (const BoxSpec& box : identity_boxes(k)) {
        const BoxCount exact = box_probability_exact(sieve, n, box);
        const BoxCount via_psi = box_probability_via_psi(sieve, counter, n, box);
        ok = ok && exact.count == via_psi.count;
        rows.push_back({{"n", n}, {"box", box.to_string()},
                        {"exact", exact.count}, {"via_psi", via_psi.count}});
      }
    }
  }
  return {"prime_tuple_identity", ok, json{{"cases", rows}}};
}

SuiteCheck box_geometry(SuiteContext&) {
  const double tol = 1e-12;
  json rows = json::array();
  bool ok = true;
  const auto expect = [&](const std::string& what, double got, double want) {
    const bool pass = std::abs(got - want) <= tol;
    ok = ok && pass;
    rows.push_back({{"case", what}, {"value", got}, {"expected", want}, {"passed", pass}});
  };
  const auto expect_bool = [&](const std::string& what, bool got, bool want) {
    ok = ok && got == want;
    rows.push_back({{"case", what}, {"value", got}, {"expected", want}, {"passed", got == want}});
  };

  const BoxSpec one({0.4}, {0.1});
  const BoxSpec two({0.5, 0.2}, {0.05, 0.05});
  expect("distance k=1 [0.4,0.5]", distance_to_complement(one), 0.4);
  expect("distance k=2 [0.5,0.55]x[0.2,0.25]", distance_to_complement(two),
         0.2 / std::sqrt(2.0));

  BoxCriterion zero = BoxCriterion::for_dimension(1, 0.25);
  zero.R = 0.0;
  expect_bool("R=0 admits every box in U", box_admissible(one, zero), true);
  expect_bool("eps=0.25 admits [0.4,0.5]",
              box_admissible(one, BoxCriterion::for_dimension(1, 0.25)), true);
  expect_bool("eps=0.01 rejects [0.4,0.5]",
              box_admissible(one, BoxCriterion::for_dimension(1, 0.01)), false);

  bool touching_rejected = false;
  try {
    distance_to_complement(BoxSpec({0.5, 0.0}, {0.1, 0.1}));
  } catch (const PreconditionError&) {
    touching_rejected = true;
  }
  expect_bool("box touching t_k = 0 is a precondition error", touching_rejected, true);
  return {"box_geometry", ok, json{{"tolerance", tol}, {"cases", rows}}};
}

SuiteCheck dickman_ladder(SuiteContext& ctx) {
  PsiCounter counter(ctx.sieve());
  const double target = rho2();
  json rows = json::array();
  std::vector<double> errs;
  for (const std::uint64_t n : {std::uint64_t{10000}, std::uint64_t{100000},
                                std::uint64_t{1000000}, std::uint64_t{10000000}}) {
    const std::uint64_t y = floor_power(n, 0.5);
    const std::uint64_t psi = counter.count(n, y);
    const double ratio = static_cast<double>(psi) / static_cast<double>(n);
    errs.push_back(std::abs(ratio - target));
    rows.push_back({{"n", n}, {"y", y}, {"psi", psi}, {"psi_over_n", ratio}, {"abs_err", errs.back()}});
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < errs.size(); ++i) decreasing = decreasing && errs[i] < errs[i - 1];
  const bool ok = decreasing && errs.back() <= 0.05;
  return {"dickman_ladder", ok,
          json{{"rho2", target}, {"strictly_decreasing", decreasing}, {"final_bound", 0.05}, {"ladder", rows}}};
}

SuiteCheck mertens_stabilization(SuiteContext& ctx) {
  const double a = mertens_constant_estimate(ctx.sieve(), 1000000);
  const double b = mertens_constant_estimate(ctx.sieve(), 10000000);
  const double diff = std::abs(b - a);
  return {"mertens_stabilization", diff < 0.005,
          json{{"estimate_1e6", a}, {"estimate_1e7", b}, {"abs_diff", diff}, {"tolerance", 0.005}}};
}

SuiteCheck mertens_range(SuiteContext& ctx) {
  const std::uint64_t n = 10000000;
  const double t = 0.3, dt = 0.05;
  const double sum = mertens_exponent_sum(ctx.sieve(), n, t, dt);
  const double limit = std::log(1.0 + dt / t);
  const double diff = std::abs(sum - limit);
  return {"mertens_range", diff < 0.05,
          json{{"n", n}, {"t", t}, {"dt", dt}, {"prime_sum", sum}, {"log_ratio", limit},
               {"abs_diff", diff}, {"tolerance", 0.05}}};
}

SuiteCheck pd_marginal(SuiteContext& ctx) {
  const std::uint64_t samples = 100000;
  const auto est = pd_event_frequency(
      [](std::span<const double> x) { return x[0] <= 0.5; }, 1, samples,
      ctx.config().seed, kDefaultTruncation, ctx.config().threads);
  const double target = rho2();
  const double bound = 3.0 * std::sqrt(target * (1.0 - target) / static_cast<double>(samples));
  const double diff = std::abs(est.p_hat - target);
  return {"pd_marginal", diff <= bound,
          json{{"samples", samples}, {"seed", est.seed}, {"hits", est.hits}, {"p_hat", est.p_hat},
               {"rho2", target}, {"abs_diff", diff}, {"bound", bound}}};
}

SuiteCheck box_convergence(SuiteContext& ctx) {
  const BoxSpec box({0.45, 0.15}, {0.1, 0.1});
  const BoxIntegral limit = pd_box_probability(ctx.table(), box, 400);
  PsiCounter counter(ctx.sieve());
  json rows = json::array();
  std::vector<double> gaps;
  for (const std::uint64_t n : {std::uint64_t{10000}, std::uint64_t{100000}, std::uint64_t{1000000}}) {
    const BoxCount c = box_probability_via_psi(ctx.sieve(), counter, n, box);
    gaps.push_back(std::abs(c.ratio() - limit.value));
    rows.push_back({{"n", n}, {"count", c.count}, {"p", c.ratio()}, {"abs_gap", gaps.back()}});
  }
  bool monotone = true;
  for (std::size_t i = 1; i < gaps.size(); ++i) monotone = monotone && gaps[i] < gaps[i - 1];
  const double rel = gaps.back() / limit.value;
  return {"box_convergence", monotone && rel < 0.05,
          json{{"box", box.to_string()}, {"pd_probability", limit.value},
               {"pd_error_estimate", limit.error_estimate}, {"monotone", monotone},
               {"final_relative_gap", rel}, {"relative_bound", 0.05}, {"ladder", rows}}};
}

json report_json(const ConvergenceReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json row{{"n", e.n}, {"method", e.method}, {"p", e.p}};
    if (e.std_err) row["std_err"] = *e.std_err;
    row["verdict"] = e.verdict;
    entries.push_back(row);
  }
  return {{"box", r.box.to_string()}, {"epsilon", r.criterion.epsilon}, {"R", r.criterion.R},
          {"admissible", r.admissible}, {"lower_bound", r.lower_bound},
          {"limit_probability", r.limit_probability}, {"entries", entries}, {"trend", r.trend}};
}

SuiteCheck box_criterion(SuiteContext& ctx) {
  CriterionOptions opts;
  opts.seed = ctx.config().seed;
  opts.threads = ctx.config().threads;
  opts.exact_threshold = 1000000;
  opts.samples = 1000000;
  const std::vector<std::uint64_t> ladder{10000, 100000, 1000000, 10000000};
  bool ok = true;
  json reports = json::array();
  for (const BoxSpec& box : criterion_boxes()) {
    const auto crit = BoxCriterion::for_dimension(box.k(), 0.25);
    const auto report = run_criterion(ctx.sieve(), ctx.table(), ladder, box, crit, opts);
    ok = ok && report.admissible && report.all_verdicts();
    reports.push_back(report_json(report));
  }
  return {"box_criterion", ok, json{{"epsilon", 0.25}, {"reports", reports}}};
}

}  // namespace

SuiteContext::SuiteContext(SuiteConfig config) : config_(std::move(config)) {}

const DickmanTable& SuiteContext::table() {
  if (!table_) table_ = cached_rho_table(config_.cache_dir, kDefaultRhoUMax, kDefaultRhoStep);
  return *table_;
}

const PrimeSieve& SuiteContext::sieve() {
  if (!sieve_) sieve_ = build_sieve(kSuiteSieveLimit);
  return *sieve_;
}

std::vector<BoxSpec> identity_boxes(std::size_t k) {
  switch (k) {
    case 1:
      return {BoxSpec({0.5}, {0.3}), BoxSpec({0.3}, {0.2}), BoxSpec({0.15}, {0.1})};
    case 2:
      return {BoxSpec({0.4, 0.2}, {0.1, 0.1}), BoxSpec({0.45, 0.15}, {0.1, 0.1}),
              BoxSpec({0.35, 0.1}, {0.15, 0.15})};
    case 3:
      return {BoxSpec({0.4, 0.2, 0.08}, {0.1, 0.1, 0.07}),
              BoxSpec({0.35, 0.2, 0.1}, {0.1, 0.05, 0.05}),
              BoxSpec({0.3, 0.15, 0.05}, {0.15, 0.1, 0.05})};
    default:
      throw ParameterError("identity boxes exist for k = 1, 2, 3");
  }
}

std::vector<BoxSpec> criterion_boxes() {
  return {BoxSpec({0.5}, {0.1}), BoxSpec({0.3}, {0.05}), BoxSpec({0.2}, {0.05}),
          BoxSpec({0.5, 0.2}, {0.025, 0.025}), BoxSpec({0.48, 0.2}, {0.03, 0.03})};
}

std::vector<NamedCheck> identity_checks() {
  return {{"dickman_analytic", dickman_analytic},
          {"alternating_sum", alternating_sum},
          {"psi_oracle", psi_oracle},
          {"prime_tuple_identity", prime_tuple_identity},
          {"box_geometry", box_geometry}};
}

std::vector<NamedCheck> convergence_checks() {
  return {{"dickman_ladder", dickman_ladder},
          {"mertens_stabilization", mertens_stabilization},
          {"mertens_range", mertens_range},
          {"pd_marginal", pd_marginal},
          {"box_convergence", box_convergence},
          {"box_criterion", box_criterion}};
}

std::vector<NamedCheck> suite_checks(std::string_view name) {
  if (name == "identities") return identity_checks();
  if (name == "convergence") return convergence_checks();
  if (name == "all") {
    auto checks = identity_checks();
    auto more = convergence_checks();
    checks.insert(checks.end(), more.begin(), more.end());
    return checks;
  }
  throw ParameterError("unknown suite '" + std::string(name) +
                       "' (expected identities, convergence or all)");
}

bool SuiteResult::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

const SuiteCheck* SuiteResult::first_failure() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

SuiteResult run_suite(std::string_view name, const SuiteConfig& config) {
  const auto checks = suite_checks(name);
  SuiteContext ctx(config);
  SuiteResult result{std::string(name), {}};
  for (const auto& check : checks) result.checks.push_back(check.run(ctx));
  return result;
}

json suite_report(const SuiteResult& result, const SuiteConfig& config) {
  json checks = json::array();
  for (const auto& c : result.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"version", kReportVersion},
          {"command", "suite"},
          {"config", {{"name", result.name}, {"seed", config.seed}}},
          {"results", {{"passed", result.passed()}, {"checks", checks}}}};
}

}  // namespace billingsley
