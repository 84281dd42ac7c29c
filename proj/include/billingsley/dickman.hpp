#pragma once

#include <cstddef>
#include <vector>

#include "billingsley/quadrature.hpp"

namespace billingsley {

/// Tabulated Dickman function on a uniform grid 0, h, 2h, ..., u_max.
///
/// Values for u <= 1 are exactly 1. Between grid points the table is read
/// with cubic Lagrange interpolation whose stencil never crosses an integer,
/// since rho loses one order of smoothness at each integer.
/// Immutable once built; safe to share between threads.
class DickmanTable {
 public:
  double u_max() const noexcept { return u_max_; }
  double step() const noexcept { return step_; }
  int interpolation_order() const noexcept { return 3; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Grid abscissa of values()[j].
  double grid_point(std::size_t j) const noexcept {
    return static_cast<double>(j) * step_;
  }

  double operator()(double u) const;

  /// Rebuilds a table from stored grid values (cache files). Validates the
  /// grid shape and the rho == 1 prefix but does not re-run the recursion.
  static DickmanTable from_values(double u_max, double step,
                                  std::vector<double> values);

 private:
  friend DickmanTable build_rho_table(double u_max, double step);

  DickmanTable(double u_max, double step, std::vector<double> values);

  double interpolate(double u) const;

  double u_max_;
  double step_;
  std::size_t per_unit_;  // grid intervals per unit length, 1/step
  std::vector<double> values_;
};

inline constexpr double kDefaultRhoStep = 1e-4;
inline constexpr double kDefaultRhoUMax = 20.0;

/// Integrates u rho'(u) = -rho(u - 1) forward from u = 1. Each step is a
/// Simpson panel of the delayed term, whose midpoint is read from the part of
/// the table already built. 1/step must be an integer.
DickmanTable build_rho_table(double u_max = kDefaultRhoUMax,
                             double step = kDefaultRhoStep);

/// rho(u) for 0 <= u <= table.u_max(). Throws DomainError outside.
double rho(const DickmanTable& table, double u);

/// rho(u) - rho(v) + int_v^u rho(t - 1) dt / t, with the integral taken by
/// adaptive quadrature over the table itself. Zero for an exact table.
double recursion_residual(const DickmanTable& table, double u, double v,
                          const QuadratureConfig& cfg = {});

/// Billingsley's H_i(u): the integral of prod dt_k / t_k over
/// 1 < t_1 < ... < t_i < u with sum 1/t_k < 1. Zero when u <= i.
double h_function(int i, double u, const QuadratureConfig& cfg = {});

/// 1 + sum_{1 <= i < u} (-1)^i H_i(u).
double rho_via_alternating_sum(double u, const QuadratureConfig& cfg = {});

}  // namespace billingsley
