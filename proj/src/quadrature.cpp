#include "billingsley/quadrature.hpp"

#include <cmath>
#include <string>

#include "billingsley/errors.hpp"

namespace billingsley {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw ParameterError("quadrature tolerances must be positive");
  }
  if (max_depth < 1) {
    throw ParameterError("quadrature max_depth must be at least 1");
  }
}

namespace {

struct Panel {
  double a, b, fa, fm, fb, whole;
};

class SimpsonIntegrator {
 public:
  SimpsonIntegrator(const std::function<double(double)>& f,
                    const QuadratureConfig& cfg)
      : f_(f), cfg_(cfg) {}

  QuadratureResult run(double a, double b) {
    QuadratureResult out;
    if (a == b) return out;
    const double m = 0.5 * (a + b);
    const double fa = f_(a), fm = f_(m), fb = f_(b);
    const Panel p{a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)};
    // Initial tolerance scaled from a crude magnitude; refined per panel.
    const double tol =
        std::max(cfg_.abs_tol, cfg_.rel_tol * std::abs(p.whole));
    out.value = recurse(p, tol, cfg_.max_depth);
    out.error_estimate = err_;
    out.converged = converged_;
    return out;
  }

 private:
  static double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double recurse(const Panel& p, double tol, int depth) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m), rm = 0.5 * (m + p.b);
    const double flm = f_(lm), frm = f_(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (std::abs(delta) <= 15.0 * tol || m <= p.a || m >= p.b) {
      err_ += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth <= 0) {
      converged_ = false;
      err_ += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return recurse({p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1) +
           recurse({m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1);
  }

  const std::function<double(double)>& f_;
  const QuadratureConfig& cfg_;
  double err_ = 0.0;
  bool converged_ = true;
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureConfig& cfg) {
  cfg.validate();
  if (b < a) {
    auto r = adaptive_simpson(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }
  return SimpsonIntegrator(f, cfg).run(a, b);
}

}  // namespace billingsley
