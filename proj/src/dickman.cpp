#include "billingsley/dickman.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "billingsley/errors.hpp"

namespace billingsley {

namespace {

// Relative slack allowed when a query lands just past the grid end.
constexpr double kEndSlack = 1e-12;

std::size_t intervals_per_unit(double step) {
  if (!(step > 0.0) || step > 0.01 || !std::isfinite(step)) {
    throw ParameterError("rho table step must lie in (0, 0.01]");
  }
  const double inv = 1.0 / step;
  const double rounded = std::round(inv);
  if (std::abs(inv - rounded) > 1e-6 * rounded) {
    throw ParameterError("rho table step must divide 1 exactly (1/step integer)");
  }
  return static_cast<std::size_t>(rounded);
}

// Lagrange cubic through four consecutive grid values starting at index lo,
// evaluated at fractional index x.
template <class T>
T lagrange4(const std::vector<T>& v, std::size_t lo, T x) {
  const T s = x - static_cast<T>(lo);
  const T y0 = v[lo], y1 = v[lo + 1], y2 = v[lo + 2], y3 = v[lo + 3];
  const T l0 = -(s - 1) * (s - 2) * (s - 3) / 6;
  const T l1 = s * (s - 2) * (s - 3) / 2;
  const T l2 = -s * (s - 1) * (s - 3) / 2;
  const T l3 = s * (s - 1) * (s - 2) / 6;
  return l0 * y0 + l1 * y1 + l2 * y2 + l3 * y3;
}

// Reads rho at fractional grid index x using values [0, available). The
// stencil stays inside the unit interval containing x.
template <class T>
T read_grid(const std::vector<T>& v, std::size_t available,
            std::size_t per_unit, T x) {
  const T fl = std::floor(x);
  if (fl == x) return v[static_cast<std::size_t>(fl)];
  if (x <= static_cast<T>(per_unit)) return 1;
  const auto cell = static_cast<std::size_t>(fl);
  const std::size_t unit_lo = (cell / per_unit) * per_unit;
  const std::size_t unit_hi = std::min(unit_lo + per_unit, available - 1);
  std::size_t lo = cell >= 1 ? cell - 1 : 0;
  lo = std::max(lo, unit_lo);
  if (lo + 3 > unit_hi) lo = unit_hi >= 3 ? unit_hi - 3 : 0;
  lo = std::max(lo, unit_lo);
  if (lo + 3 >= available) {
    // Not enough points yet on this unit interval; fall back to linear.
    const T s = x - fl;
    return (1 - s) * v[cell] + s * v[cell + 1];
  }
  return lagrange4(v, lo, x);
}

}  // namespace

DickmanTable::DickmanTable(double u_max, double step, std::vector<double> values)
    : u_max_(u_max),
      step_(step),
      per_unit_(intervals_per_unit(step)),
      values_(std::move(values)) {}

DickmanTable DickmanTable::from_values(double u_max, double step,
                                       std::vector<double> values) {
  const std::size_t per_unit = intervals_per_unit(step);
  if (!(u_max >= 1.0)) throw ParameterError("rho table u_max must be >= 1");
  const auto intervals =
      static_cast<std::size_t>(std::ceil(u_max * static_cast<double>(per_unit) - 1e-9));
  if (values.size() != intervals + 1) {
    throw ParameterError("rho table has " + std::to_string(values.size()) +
                         " values, expected " + std::to_string(intervals + 1));
  }
  for (std::size_t j = 0; j <= per_unit; ++j) {
    if (values[j] != 1.0) throw ParameterError("rho table must equal 1 on [0,1]");
  }
  return DickmanTable(u_max, 1.0 / static_cast<double>(per_unit), std::move(values));
}

double DickmanTable::interpolate(double u) const {
  return read_grid(values_, values_.size(), per_unit_,
                   u * static_cast<double>(per_unit_));
}

double DickmanTable::operator()(double u) const {
  if (!(u >= 0.0)) {
    throw DomainError("rho: argument " + std::to_string(u) + " is negative");
  }
  if (u <= 1.0) return 1.0;
  const double end = grid_point(values_.size() - 1);
  if (u > u_max_ || u > end) {
    const double limit = std::min(u_max_, end);
    if (u <= limit * (1.0 + kEndSlack)) return interpolate(limit);
    std::ostringstream msg;
    msg << "rho: argument " << u << " exceeds table u_max " << u_max_;
    throw DomainError(msg.str());
  }
  return interpolate(u);
}

DickmanTable build_rho_table(double u_max, double step) {
  const std::size_t per_unit = intervals_per_unit(step);
  if (!(u_max >= 1.0) || !std::isfinite(u_max)) {
    throw ParameterError("rho table u_max must be a finite value >= 1");
  }
  const auto intervals = static_cast<std::size_t>(
      std::ceil(u_max * static_cast<double>(per_unit) - 1e-9));

  // The recurrence has a homogeneous solution decaying only like 1/u, so
  // rounding in early values becomes an absolute error floor downstream.
  // Extended precision lowers that floor to ~1e-19.
  using Wide = long double;
  const Wide h = Wide{1} / static_cast<Wide>(per_unit);
  std::vector<Wide> v(intervals + 1, Wide{1});
  for (std::size_t j = per_unit; j < intervals; ++j) {
    const Wide u = static_cast<Wide>(j) * h;
    const Wide un = static_cast<Wide>(j + 1) * h;
    const Wide um = (static_cast<Wide>(j) + Wide{0.5}) * h;
    // Delayed midpoint rho(um - 1), as a fractional grid index.
    const Wide xm = static_cast<Wide>(j - per_unit) + Wide{0.5};
    const Wide g0 = v[j - per_unit] / u;
    const Wide gm = read_grid(v, j + 1, per_unit, xm) / um;
    const Wide g1 = v[j + 1 - per_unit] / un;
    v[j + 1] = v[j] - h / 6 * (g0 + 4 * gm + g1);
  }
  return DickmanTable(u_max, static_cast<double>(h),
                      std::vector<double>(v.begin(), v.end()));
}

double rho(const DickmanTable& table, double u) { return table(u); }

double recursion_residual(const DickmanTable& table, double u, double v,
                          const QuadratureConfig& cfg) {
  if (!(v >= 1.0 && v <= u)) {
    throw DomainError("recursion residual needs 1 <= v <= u");
  }
  const auto integrand = [&](double t) { return table(t - 1.0) / t; };
  // rho(t - 1) has kinks at integer t; integrate piecewise between them.
  double integral = 0.0;
  double a = v;
  while (a < u) {
    const double b = std::min(u, std::floor(a) + 1.0);
    const auto r = adaptive_simpson(integrand, a, b, cfg);
    integral += r.value;
    a = b;
  }
  return table(u) - table(v) + integral;
}

namespace {

class HIntegrator {
 public:
  HIntegrator(double u, const QuadratureConfig& cfg) : u_(u), cfg_(cfg) {}

  // Integral over lo < t_1 < ... < t_r < u with sum 1/t_k < budget.
  double nested(int r, double lo, double budget) {
    const double room = budget - static_cast<double>(r - 1) / u_;
    if (room <= 0.0) return 0.0;
    const double a = std::max(lo, 1.0 / room);
    if (a >= u_) return 0.0;
    if (r == 1) return std::log(u_ / a);

    const auto integrand = [&](double t) {
      return nested(r - 1, t, budget - 1.0 / t) / t;
    };
    // The next variable's lower limit switches from t to the budget bound at
    // t = 2 / (budget - (r - 2) / u); split there so each piece is smooth.
    const double inner_room = budget - static_cast<double>(r - 2) / u_;
    const double kink = inner_room > 0.0 ? 2.0 / inner_room : u_;
    double total = 0.0;
    if (kink > a && kink < u_) {
      total += integrate(integrand, a, kink);
      total += integrate(integrand, kink, u_);
    } else {
      total += integrate(integrand, a, u_);
    }
    return total;
  }

  bool converged() const noexcept { return converged_; }

 private:
  double integrate(const std::function<double(double)>& f, double a, double b) {
    const auto r = adaptive_simpson(f, a, b, cfg_);
    converged_ = converged_ && r.converged;
    return r.value;
  }

  double u_;
  const QuadratureConfig& cfg_;
  bool converged_ = true;
};

}  // namespace

double h_function(int i, double u, const QuadratureConfig& cfg) {
  cfg.validate();
  if (i < 0) throw DomainError("h_function: index must be non-negative");
  if (!(u > 0.0) || !std::isfinite(u)) {
    throw DomainError("h_function: argument must be positive and finite");
  }
  if (i == 0) return 1.0;
  if (u <= static_cast<double>(i)) return 0.0;
  HIntegrator integrator(u, cfg);
  const double value = integrator.nested(i, 1.0, 1.0);
  if (!integrator.converged()) {
    throw NumericalError("h_function: quadrature did not converge for H_" +
                             std::to_string(i),
                         value);
  }
  return value;
}

double rho_via_alternating_sum(double u, const QuadratureConfig& cfg) {
  if (!(u > 0.0) || !std::isfinite(u)) {
    throw DomainError("rho_via_alternating_sum: argument must be positive");
  }
  double sum = 1.0;
  for (int i = 1; static_cast<double>(i) < u; ++i) {
    const double term = h_function(i, u, cfg);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace billingsley
