#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "billingsley/box.hpp"
#include "billingsley/dickman.hpp"
#include "billingsley/primes.hpp"

namespace billingsley {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char* kReportVersion = "1";

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
};

struct SuiteCheck {
  std::string name;
  bool passed = false;
  nlohmann::ordered_json detail;
};

/// Shared inputs for the checks: a default rho table and a sieve to 10^7,
/// built on first use.
class SuiteContext {
 public:
  explicit SuiteContext(SuiteConfig config);

  const SuiteConfig& config() const noexcept { return config_; }
  const DickmanTable& table();
  const PrimeSieve& sieve();

 private:
  SuiteConfig config_;
  std::optional<DickmanTable> table_;
  std::optional<PrimeSieve> sieve_;
};

struct NamedCheck {
  std::string name;
  std::function<SuiteCheck(SuiteContext&)> run;
};

/// Exact identities and oracle equivalences.
std::vector<NamedCheck> identity_checks();
/// Finite-n convergence ladders, sampler checks and the box criterion.
std::vector<NamedCheck> convergence_checks();

/// Checks for "identities", "convergence" or "all". Throws ParameterError
/// for any other name.
std::vector<NamedCheck> suite_checks(std::string_view name);

struct SuiteResult {
  std::string name;
  std::vector<SuiteCheck> checks;

  bool passed() const noexcept;
  /// First failing check, if any.
  const SuiteCheck* first_failure() const noexcept;
};

SuiteResult run_suite(std::string_view name, const SuiteConfig& config);

/// Report envelope {version, command, config, results}. Contains no timing
/// or thread information, so equal seeds give byte-identical reports.
nlohmann::ordered_json suite_report(const SuiteResult& result,
                                    const SuiteConfig& config);

/// Fixed boxes inside U used by the identity and criterion checks.
std::vector<BoxSpec> identity_boxes(std::size_t k);
std::vector<BoxSpec> criterion_boxes();

}  // namespace billingsley
