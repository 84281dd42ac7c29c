#include "billingsley/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <vector>

#include "billingsley/format.hpp"

namespace billingsley {

namespace {

std::string cache_header(double u_max, double step) {
  return "# rho-table u_max=" + format_shortest(u_max) +
         " step=" + format_shortest(step);
}

}  // namespace

void write_rho_csv(std::ostream& out, const DickmanTable& table) {
  out << "u,rho\n";
  const auto& v = table.values();
  for (std::size_t j = 0; j < v.size(); ++j) {
    out << format_shortest(table.grid_point(j)) << ',' << format_shortest(v[j])
        << '\n';
  }
}

std::optional<std::filesystem::path> resolve_cache_dir(
    const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("BILLINGSLEY_CACHE"); env && *env) {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::optional<DickmanTable> load_rho_cache(const std::filesystem::path& file,
                                           double u_max, double step) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != cache_header(u_max, step)) return std::nullopt;
  if (!std::getline(in, line) || line != "u,rho") return std::nullopt;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) return std::nullopt;
    double v = 0.0;
    const char* first = line.data() + comma + 1;
    const char* last = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    values.push_back(v);
  }
  try {
    return DickmanTable::from_values(u_max, step, std::move(values));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_rho_cache(const std::filesystem::path& file,
                     const DickmanTable& table) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  // Write then rename so a concurrent reader never sees a partial file.
  const auto tmp = std::filesystem::path(file.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << cache_header(table.u_max(), table.step()) << '\n';
    write_rho_csv(out, table);
  }
  std::filesystem::rename(tmp, file);
}

DickmanTable cached_rho_table(const std::optional<std::filesystem::path>& cache_dir,
                              double u_max, double step) {
  if (!cache_dir) return build_rho_table(u_max, step);
  const auto file = *cache_dir / kRhoCacheFile;
  if (step > 0.0 && step <= 0.01) {
    // Tables store the normalized step 1 / round(1 / step).
    const double normalized = 1.0 / std::round(1.0 / step);
    if (auto cached = load_rho_cache(file, u_max, normalized)) return std::move(*cached);
  }
  DickmanTable table = build_rho_table(u_max, step);
  store_rho_cache(file, table);
  return table;
}

}  // namespace billingsley
