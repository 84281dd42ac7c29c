#pragma once

#include <functional>

namespace billingsley {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_depth = 40;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

/// Adaptive Simpson quadrature of f over [a, b].
///
/// Panels are bisected until the Richardson-corrected difference meets
/// max(abs_tol, rel_tol * |estimate|) scaled to the panel width, or until
/// max_depth is reached. On reaching max_depth the result is still returned
/// with converged = false; callers decide whether that is fatal.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureConfig& cfg);

}  // namespace billingsley
