#include "billingsley/box.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "billingsley/errors.hpp"
#include "billingsley/format.hpp"

namespace billingsley {

BoxSpec::BoxSpec(std::vector<double> t, std::vector<double> dt)
    : t_(std::move(t)), dt_(std::move(dt)) {
  if (t_.empty()) throw ParameterError("box needs at least one coordinate");
  if (t_.size() != dt_.size()) {
    throw ParameterError("box corner and width arrays differ in length");
  }
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!std::isfinite(t_[i]) || !std::isfinite(dt_[i]) || dt_[i] < 0.0) {
      throw ParameterError("box coordinate " + std::to_string(i + 1) +
                           " needs finite t and dt >= 0");
    }
  }
}

namespace {

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParameterError("cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

BoxSpec BoxSpec::parse(std::string_view text) {
  std::vector<double> t, dt;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const std::string_view item = text.substr(0, semi);
    const auto comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw ParameterError("box entry '" + std::string(item) +
                           "' is not of the form t,dt");
    }
    t.push_back(parse_double(item.substr(0, comma)));
    dt.push_back(parse_double(item.substr(comma + 1)));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return BoxSpec(std::move(t), std::move(dt));
}

double BoxSpec::volume() const noexcept {
  double v = 1.0;
  for (double w : dt_) v *= w;
  return v;
}

double BoxSpec::diameter() const noexcept {
  double s = 0.0;
  for (double w : dt_) s += w * w;
  return std::sqrt(s);
}

double BoxSpec::alpha() const noexcept {
  double s = 1.0;
  for (std::size_t i = 0; i < k(); ++i) s -= t_[i] + dt_[i];
  return s;
}

double BoxSpec::u0() const noexcept {
  double s = 1.0;
  for (double v : t_) s -= v;
  return s / t_.back();
}

std::string BoxSpec::region_violation() const {
  std::ostringstream msg;
  if (!(t_.back() > 0.0)) {
    msg << "t_" << k() << " = " << t_.back() << " is not positive";
    return msg.str();
  }
  for (std::size_t i = 1; i < k(); ++i) {
    if (!(upper(i) < t_[i - 1])) {
      msg << "t_" << i + 1 << " + dt_" << i + 1 << " = " << upper(i)
          << " is not below t_" << i << " = " << t_[i - 1];
      return msg.str();
    }
  }
  if (!(alpha() > 0.0)) {
    msg << "sum of upper corners " << 1.0 - alpha() << " is not below 1";
    return msg.str();
  }
  return {};
}

bool BoxSpec::inside_region() const noexcept {
  if (!(t_.back() > 0.0)) return false;
  for (std::size_t i = 1; i < k(); ++i) {
    if (!(t_[i] + dt_[i] < t_[i - 1])) return false;
  }
  return alpha() > 0.0;
}

BoxSpec BoxSpec::shrunk(double factor) const {
  if (!(factor >= 0.0 && factor <= 1.0)) {
    throw ParameterError("shrink factor must lie in [0, 1]");
  }
  std::vector<double> t(k()), dt(k());
  for (std::size_t i = 0; i < k(); ++i) {
    const double center = t_[i] + 0.5 * dt_[i];
    dt[i] = dt_[i] * factor;
    t[i] = center - 0.5 * dt[i];
  }
  return BoxSpec(std::move(t), std::move(dt));
}

std::string BoxSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < k(); ++i) {
    if (i) out += ';';
    out += format_shortest(t_[i]) + ',' + format_shortest(dt_[i]);
  }
  return out;
}

}  // namespace billingsley
