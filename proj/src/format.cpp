#include "billingsley/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace billingsley {

std::string format_shortest(double v) {
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), r.ptr);
}

std::string format_fixed(double v, int digits) {
  std::array<char, 512> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                               std::chars_format::fixed, digits);
  if (r.ec != std::errc()) return format_shortest(v);
  return std::string(buf.data(), r.ptr);
}

}  // namespace billingsley
