#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "billingsley/dickman.hpp"

namespace billingsley {

/// CSV with header `u,rho` and one row per grid point, shortest round-trip
/// numbers.
void write_rho_csv(std::ostream& out, const DickmanTable& table);

/// Cache directory from an explicit flag, else $BILLINGSLEY_CACHE, else none.
std::optional<std::filesystem::path> resolve_cache_dir(
    const std::optional<std::string>& flag);

/// Reads a cached table written by store_rho_cache. Returns nullopt when the
/// file is missing, unreadable, or its header names a different
/// (u_max, step) pair.
std::optional<DickmanTable> load_rho_cache(const std::filesystem::path& file,
                                           double u_max, double step);

/// Writes `# rho-table u_max=<u_max> step=<step>` followed by the CSV.
void store_rho_cache(const std::filesystem::path& file,
                     const DickmanTable& table);

/// Cached table if `cache_dir` holds a matching one; otherwise builds it and,
/// with a cache directory, stores it for the next run.
DickmanTable cached_rho_table(const std::optional<std::filesystem::path>& cache_dir,
                              double u_max, double step);

inline constexpr const char* kRhoCacheFile = "rho_table.csv";

}  // namespace billingsley
