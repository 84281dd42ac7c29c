// Command-line front end: one subcommand per computation, plus `suite`,
// which runs the acceptance bundles and writes a JSON report.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "billingsley/convergence.hpp"
#include "billingsley/dickman.hpp"
#include "billingsley/errors.hpp"
#include "billingsley/factor_stats.hpp"
#include "billingsley/format.hpp"
#include "billingsley/io.hpp"
#include "billingsley/pd_process.hpp"
#include "billingsley/primes.hpp"
#include "billingsley/smoothcount.hpp"
#include "billingsley/suite.hpp"

namespace {

using namespace billingsley;
using json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::optional<std::string> cache_dir;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  int digits = 6;
  std::string format = "text";
  std::optional<std::string> out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "10000000", "1e7", "1.5e6"; rejects non-integral values.
std::uint64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse integer '" + text + "'");
  }
  if (used != text.size() || !(v >= 0.0) || v != std::floor(v) || v > 9.2e18) {
    throw UsageError("'" + text + "' is not a non-negative integer");
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> parse_ladder(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_count(item));
  if (out.empty()) throw UsageError("empty ladder");
  return out;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse coordinate '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty point");
  return out;
}

BoxSpec parse_box(const std::string& text) {
  try {
    return BoxSpec::parse(text);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

// Writes to standard output and, with --out, the same bytes to the file.
void emit(const RunConfig& cfg, const std::string& content) {
  std::cout << content;
  std::cout.flush();
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) throw DomainError("cannot open output file " + *cfg.out);
    file << content;
  }
}

json envelope(const std::string& command, json config, json results) {
  return {{"version", kReportVersion},
          {"command", command},
          {"config", std::move(config)},
          {"results", std::move(results)}};
}

// Scalar results: a primary value plus named fields, rendered per --format.
void emit_scalar(const RunConfig& cfg, const std::string& command, const json& config,
                 const std::vector<std::pair<std::string, json>>& fields,
                 const std::string& primary) {
  std::string content;
  if (cfg.format == "json") {
    json results = json::object();
    for (const auto& [k, v] : fields) results[k] = v;
    content = envelope(command, config, results).dump(2) + "\n";
  } else if (cfg.format == "csv") {
    std::string header, row;
    for (const auto& [k, v] : fields) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += k;
      row += v.is_number_float() ? format_shortest(v.get<double>()) : v.dump();
    }
    content = header + "\n" + row + "\n";
  } else {
    content = primary + "\n";
  }
  emit(cfg, content);
}

std::string fixed(const RunConfig& cfg, double v) { return format_fixed(v, cfg.digits); }

DickmanTable load_table(const RunConfig& cfg, double u_max, double step) {
  return cached_rho_table(resolve_cache_dir(cfg.cache_dir), u_max, step);
}

PrimeSieve sieve_to(std::uint64_t limit) { return build_sieve(std::max<std::uint64_t>(limit, 2)); }

json box_json(const RunConfig& cfg, const std::string& method, std::uint64_t n,
              const BoxSpec& box, std::uint64_t samples) {
  if (method == "mc") {
    const auto sieve = sieve_to(n);
    const auto est = sample_box_probability(sieve, n, box, samples, cfg.seed, cfg.threads);
    return {{"count", est.hits}, {"total", est.total}, {"p_hat", est.p_hat},
            {"std_err", est.std_err}};
  }
  BoxCount c;
  if (method == "exact") {
    c = box_probability_exact(sieve_to(n), n, box);
  } else {
    std::uint64_t top = 2;
    for (const auto& r : box_prime_ranges(n, box)) {
      if (!r.empty()) top = std::max(top, std::min(r.hi, n));
    }
    c = box_probability_via_psi(sieve_to(top), n, box);
  }
  return {{"count", c.count}, {"total", c.total}, {"p_hat", c.ratio()}};
}

json criterion_json(const ConvergenceReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json row{{"n", e.n}, {"method", e.method}, {"p", e.p}};
    if (e.std_err) row["std_err"] = *e.std_err;
    row["verdict"] = e.verdict;
    entries.push_back(std::move(row));
  }
  return {{"box", r.box.to_string()}, {"epsilon", r.criterion.epsilon},
          {"R", r.criterion.R}, {"admissible", r.admissible},
          {"lower_bound", r.lower_bound}, {"limit_probability", r.limit_probability},
          {"entries", std::move(entries)}, {"trend", r.trend}};
}

int run(int argc, char** argv) {
  CLI::App app{"Dickman function, smooth numbers, prime-factor statistics and the "
               "Poisson-Dirichlet limit"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string seed_text = std::to_string(kDefaultSeed);
  app.add_option("--cache-dir", cfg.cache_dir,
                 "rho table cache directory (default $BILLINGSLEY_CACHE)");
  app.add_option("--seed", seed_text, "RNG seed")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_option("--digits", cfg.digits, "decimals for human-readable numbers")
      ->check(CLI::Range(0, 30))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "scalar output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "also write output to FILE");

  double u = 0.0, step = kDefaultRhoStep, u_max = kDefaultRhoUMax;
  auto* rho_cmd = app.add_subcommand("rho", "Dickman rho(u)");
  rho_cmd->add_option("--u", u, "argument")->required();
  rho_cmd->add_option("--step", step, "table step")->capture_default_str();
  rho_cmd->add_option("--umax", u_max, "table range")->capture_default_str();

  auto* table_cmd = app.add_subcommand("rho-table", "tabulate rho as CSV u,rho");
  table_cmd->add_option("--umax", u_max, "table range")->capture_default_str();
  table_cmd->add_option("--step", step, "table step")->capture_default_str();

  std::string x_text, y_text;
  std::vector<std::string> range_text;
  auto* mertens_cmd = app.add_subcommand("mertens", "prime reciprocal sums");
  auto* mx = mertens_cmd->add_option("--x", x_text, "estimate c0 = sum_{p<=x} 1/p - log log x");
  auto* mr = mertens_cmd->add_option("--range", range_text, "sum 1/p over A <= p <= B")
                 ->expected(2);
  mx->excludes(mr);
  mertens_cmd->require_option(1);

  std::string method = "exact";
  auto* psi_cmd = app.add_subcommand("psi", "count y-smooth integers up to x");
  psi_cmd->add_option("--x", x_text, "bound")->required();
  psi_cmd->add_option("--y", y_text, "smoothness bound")->required();
  psi_cmd->add_option("--method", method, "brute, exact or dickman")
      ->check(CLI::IsMember({"brute", "exact", "dickman"}))
      ->capture_default_str();

  double t = 2.0;
  std::string nmax_text = "1e7";
  auto* ladder_cmd = app.add_subcommand("psi-ladder", "Psi(n, n^(1/t)) / n against rho(t)");
  ladder_cmd->add_option("--t", t, "u = t")->capture_default_str();
  ladder_cmd->add_option("--nmax", nmax_text, "largest power of ten")->capture_default_str();

  std::string n_text, box_text, samples_text = "100000";
  std::string box_method = "exact";
  auto* box_cmd = app.add_subcommand("box", "P(X_n in B) as JSON {count,total,p_hat,std_err?}");
  box_cmd->add_option("--n", n_text, "n")->required();
  box_cmd->add_option("--box", box_text, "\"t1,dt1;t2,dt2;...\"")->required();
  box_cmd->add_option("--method", box_method, "exact, psi or mc")
      ->check(CLI::IsMember({"exact", "psi", "mc"}))
      ->capture_default_str();
  box_cmd->add_option("--samples", samples_text, "Monte-Carlo samples")->capture_default_str();

  std::string count_text = "1000";
  std::size_t k = 3;
  auto* factors_cmd = app.add_subcommand("sample-factors", "CSV of N, p1..pk, L1..Lk");
  factors_cmd->add_option("--n", n_text, "n")->required();
  factors_cmd->add_option("--count", count_text, "draws")->capture_default_str();
  factors_cmd->add_option("--k", k, "factors per row")->check(CLI::Range(1, 64))->capture_default_str();

  int trunc = kDefaultTruncation;
  auto* pd_sample_cmd = app.add_subcommand("pd-sample", "CSV of ranked Poisson-Dirichlet samples");
  pd_sample_cmd->add_option("--count", count_text, "samples")->capture_default_str();
  pd_sample_cmd->add_option("--trunc", trunc, "sticks per sample")->capture_default_str();
  pd_sample_cmd->add_option("--k", k, "components per row")->capture_default_str();

  std::string point_text;
  auto* pd_density_cmd = app.add_subcommand("pd-density", "density of the first k coordinates");
  pd_density_cmd->add_option("--point", point_text, "\"t1,t2,...\"")->required();
  pd_density_cmd->add_option("--umax", u_max, "table range")->capture_default_str();

  int grid = 200;
  auto* pd_box_cmd = app.add_subcommand("pd-box", "integral of the density over a box");
  pd_box_cmd->add_option("--box", box_text, "\"t1,dt1;...\"")->required();
  pd_box_cmd->add_option("--grid", grid, "midpoints per axis")->capture_default_str();

  double epsilon = 0.25;
  std::string ladder_text = "1e4,1e5,1e6";
  std::string threshold_text = "1e6";
  std::optional<std::string> report_path;
  samples_text = "100000";
  auto* verify_cmd = app.add_subcommand("verify", "box criterion along an n-ladder");
  verify_cmd->add_option("--box", box_text, "\"t1,dt1;...\"")->required();
  verify_cmd->add_option("--epsilon", epsilon, "epsilon in (0,1)")->capture_default_str();
  verify_cmd->add_option("--ladder", ladder_text, "comma-separated n values")->capture_default_str();
  verify_cmd->add_option("--samples", samples_text, "Monte-Carlo samples per sampled n")
      ->capture_default_str();
  verify_cmd->add_option("--exact-threshold", threshold_text,
                         "largest n computed exactly")->capture_default_str();
  verify_cmd->add_option("--report", report_path, "JSON report file");

  std::string suite_name;
  auto* suite_cmd = app.add_subcommand("suite", "run an acceptance bundle");
  suite_cmd->add_option("--name", suite_name, "identities, convergence or all")->required();
  suite_cmd->add_option("--report", report_path, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.seed = parse_count(seed_text);

  if (*rho_cmd) {
    const auto table = load_table(cfg, u_max, step);
    const double value = rho(table, u);
    emit_scalar(cfg, "rho", {{"u", u}, {"step", table.step()}, {"umax", u_max}},
                {{"u", u}, {"rho", value}}, fixed(cfg, value));
  } else if (*table_cmd) {
    const auto table = load_table(cfg, u_max, step);
    std::ostringstream csv;
    write_rho_csv(csv, table);
    emit(cfg, csv.str());
  } else if (*mertens_cmd) {
    if (!x_text.empty()) {
      const std::uint64_t x = parse_count(x_text);
      const auto sieve = sieve_to(x);
      const double c0 = mertens_constant_estimate(sieve, x);
      emit_scalar(cfg, "mertens", {{"x", x}},
                  {{"x", x}, {"prime_sum", mertens_sum(sieve, 2, x)}, {"estimate", c0}},
                  fixed(cfg, c0));
    } else {
      const std::uint64_t a = parse_count(range_text[0]);
      const std::uint64_t b = parse_count(range_text[1]);
      const auto sieve = sieve_to(b);
      const double s = mertens_sum(sieve, a, b);
      emit_scalar(cfg, "mertens", {{"a", a}, {"b", b}}, {{"a", a}, {"b", b}, {"sum", s}},
                  fixed(cfg, s));
    }
  } else if (*psi_cmd) {
    const std::uint64_t x = parse_count(x_text);
    const std::uint64_t y = parse_count(y_text);
    const json config{{"x", x}, {"y", y}, {"method", method}};
    if (method == "dickman") {
      const auto table = load_table(cfg, kDefaultRhoUMax, kDefaultRhoStep);
      const double est = psi_dickman(table, static_cast<double>(x), static_cast<double>(y));
      emit_scalar(cfg, "psi", config, {{"x", x}, {"y", y}, {"psi", est}}, fixed(cfg, est));
    } else {
      const std::uint64_t c =
          method == "brute" ? psi_bruteforce(sieve_to(x), x, y) : psi_exact(x, y);
      emit_scalar(cfg, "psi", config, {{"x", x}, {"y", y}, {"psi", c}}, std::to_string(c));
    }
  } else if (*ladder_cmd) {
    if (!(t >= 1.0)) throw UsageError("--t must be at least 1");
    const std::uint64_t nmax = parse_count(nmax_text);
    if (nmax < 100) throw UsageError("--nmax must be at least 100");
    const auto table = load_table(cfg, std::max(kDefaultRhoUMax, std::ceil(t)), kDefaultRhoStep);
    const auto sieve = sieve_to(floor_power(nmax, 1.0 / t));
    PsiCounter counter(sieve);
    const double target = rho(table, t);
    std::string csv = "n,psi,psi_over_n,rho,abs_err\n";
    for (std::uint64_t n = 100; n <= nmax; n *= 10) {
      const std::uint64_t y = std::max<std::uint64_t>(1, floor_power(n, 1.0 / t));
      const std::uint64_t c = counter.count(n, y);
      const double ratio = static_cast<double>(c) / static_cast<double>(n);
      csv += std::to_string(n) + ',' + std::to_string(c) + ',' + format_shortest(ratio) + ',' +
             format_shortest(target) + ',' + format_shortest(std::abs(ratio - target)) + '\n';
      if (n > nmax / 10) break;
    }
    emit(cfg, csv);
  } else if (*box_cmd) {
    const std::uint64_t n = parse_count(n_text);
    const auto box = parse_box(box_text);
    emit(cfg, box_json(cfg, box_method, n, box, parse_count(samples_text)).dump() + "\n");
  } else if (*factors_cmd) {
    const std::uint64_t n = parse_count(n_text);
    const auto rows = sample_factors(sieve_to(n), n, parse_count(count_text), k, cfg.seed);
    std::string csv = "N";
    for (std::size_t i = 1; i <= k; ++i) csv += ",p" + std::to_string(i);
    for (std::size_t i = 1; i <= k; ++i) csv += ",L" + std::to_string(i);
    csv += '\n';
    for (const auto& r : rows) {
      csv += std::to_string(r.N);
      for (auto p : r.p) csv += ',' + std::to_string(p);
      for (double l : r.L) csv += ',' + format_shortest(l);
      csv += '\n';
    }
    emit(cfg, csv);
  } else if (*pd_sample_cmd) {
    if (k < 1 || static_cast<int>(k) > trunc) throw UsageError("--k must lie in [1, --trunc]");
    const std::uint64_t count = parse_count(count_text);
    std::string csv;
    for (std::size_t i = 1; i <= k; ++i) csv += (i > 1 ? ",L" : "L") + std::to_string(i);
    csv += ",tail_mass\n";
    for (std::uint64_t s = 0; s < count; ++s) {
      const PDSample sample = pd_sample(cfg.seed, trunc, s);
      for (std::size_t i = 0; i < k; ++i) {
        csv += (i ? "," : "") + format_shortest(sample.components[i]);
      }
      csv += ',' + format_shortest(sample.tail_mass) + '\n';
    }
    emit(cfg, csv);
  } else if (*pd_density_cmd) {
    const auto point = parse_point(point_text);
    const auto table = load_table(cfg, u_max, kDefaultRhoStep);
    const double f = pd_density(table, point);
    emit_scalar(cfg, "pd-density", {{"point", point}}, {{"density", f}}, fixed(cfg, f));
  } else if (*pd_box_cmd) {
    const auto box = parse_box(box_text);
    const auto table = load_table(cfg, kDefaultRhoUMax, kDefaultRhoStep);
    const auto r = pd_box_probability(table, box, grid);
    emit_scalar(cfg, "pd-box", {{"box", box.to_string()}, {"grid", grid}},
                {{"probability", r.value}, {"error_estimate", r.error_estimate}},
                fixed(cfg, r.value));
  } else if (*verify_cmd) {
    const auto box = parse_box(box_text);
    const auto ladder = parse_ladder(ladder_text);
    const auto crit = BoxCriterion::for_dimension(box.k(), epsilon);
    CriterionOptions opts;
    opts.seed = cfg.seed;
    opts.threads = cfg.threads;
    opts.samples = parse_count(samples_text);
    opts.exact_threshold = parse_count(threshold_text);
    const auto table = load_table(cfg, kDefaultRhoUMax, kDefaultRhoStep);
    const auto sieve = sieve_to(*std::max_element(ladder.begin(), ladder.end()));
    const auto report = run_criterion(sieve, table, ladder, box, crit, opts);
    if (report_path) cfg.out = report_path;
    const json config{{"box", box.to_string()}, {"epsilon", epsilon}, {"ladder", ladder},
                      {"samples", opts.samples}, {"seed", cfg.seed},
                      {"exact_threshold", opts.exact_threshold}};
    emit(cfg, envelope("verify", config, criterion_json(report)).dump(2) + "\n");
    return report.all_verdicts() ? 0 : kExitDomain;
  } else if (*suite_cmd) {
    SuiteConfig sc;
    sc.seed = cfg.seed;
    sc.threads = cfg.threads;
    sc.cache_dir = resolve_cache_dir(cfg.cache_dir);
    const auto result = run_suite(suite_name, sc);
    if (report_path) cfg.out = report_path;
    emit(cfg, suite_report(result, sc).dump(2) + "\n");
    if (const SuiteCheck* failed = result.first_failure()) {
      std::cerr << "suite " << suite_name << ": check '" << failed->name << "' failed\n";
      return kExitDomain;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const billingsley::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const billingsley::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << " (partial estimate "
              << e.partial_estimate() << ")\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
