#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace billingsley {

/// Closed coordinate box prod_i [t_i, t_i + dt_i] in k dimensions.
///
/// Any finite corners with dt_i >= 0 are representable; whether the box sits
/// inside the open region U = {t_1 > ... > t_k > 0, sum t_i < 1} is a query,
/// since several operations are defined (and return 0) outside it.
class BoxSpec {
 public:
  BoxSpec(std::vector<double> t, std::vector<double> dt);

  /// Parses "t1,dt1;t2,dt2;...".
  static BoxSpec parse(std::string_view text);

  std::size_t k() const noexcept { return t_.size(); }
  const std::vector<double>& t() const noexcept { return t_; }
  const std::vector<double>& dt() const noexcept { return dt_; }
  double lower(std::size_t i) const { return t_.at(i); }
  double upper(std::size_t i) const { return t_.at(i) + dt_.at(i); }

  double volume() const noexcept;
  double diameter() const noexcept;

  /// 1 - sum (t_i + dt_i): slack of the simplex constraint at the far corner.
  double alpha() const noexcept;
  /// (1 - sum t_i) / t_k: the largest rho argument over the box.
  double u0() const noexcept;

  /// True iff the closed box lies in the open region U.
  bool inside_region() const noexcept;
  /// Empty when inside_region(); otherwise the first violated constraint.
  std::string region_violation() const;

  /// Same center, every side scaled by `factor` in [0, 1].
  BoxSpec shrunk(double factor) const;

  std::string to_string() const;

 private:
  std::vector<double> t_;
  std::vector<double> dt_;
};

}  // namespace billingsley
