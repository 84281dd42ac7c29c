#pragma once

#include <string>

namespace billingsley {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_shortest(double v);

/// Fixed notation with `digits` places after the point.
std::string format_fixed(double v, int digits);

}  // namespace billingsley
