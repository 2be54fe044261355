#include "hardy/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {
namespace {

constexpr std::size_t kSineFitPoints = 4096;
constexpr double kFitLowerFraction = 1e-8;

std::vector<double> sample_grid(double a, std::size_t points) {
  return quad::geometric_edges(a * kFitLowerFraction, a, points - 1);
}

}  // namespace

double Weight::phi(double t) const {
  switch (kind_) {
    case WeightKind::Power:
      return std::pow(t, growth_exponent());
    case WeightKind::Sine:
      return std::pow(std::sin(t), n_ - 1);
  }
  return 0.0;
}

double Weight::dphi(double t) const {
  switch (kind_) {
    case WeightKind::Power: {
      const double e = growth_exponent();
      return e * std::pow(t, e - 1.0);
    }
    case WeightKind::Sine:
      return (n_ - 1) * std::pow(std::sin(t), n_ - 2) * std::cos(t);
  }
  return 0.0;
}

double Weight::log_derivative(double t) const {
  switch (kind_) {
    case WeightKind::Power:
      return growth_exponent() / t;
    case WeightKind::Sine:
      return (n_ - 1) * std::cos(t) / std::sin(t);
  }
  return 0.0;
}

double Weight::log_second_derivative(double t) const {
  switch (kind_) {
    case WeightKind::Power:
      return -growth_exponent() / (t * t);
    case WeightKind::Sine: {
      const double s = std::sin(t);
      return -(n_ - 1) / (s * s);
    }
  }
  return 0.0;
}

double Weight::inverse_root(double t) const {
  switch (kind_) {
    case WeightKind::Power:
      return std::pow(t, -growth_exponent() / (p_ - 1.0));
    case WeightKind::Sine:
      return std::pow(std::sin(t), -(n_ - 1) / (p_ - 1.0));
  }
  return 0.0;
}

std::string Weight::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (kind_ == WeightKind::Power) {
    os << "power(p=" << p_ << ", delta=" << delta_ << ", a=" << a_ << ")";
  } else {
    os << "sine(n=" << n_ << ", p=" << p_ << ", a=" << a_ << ")";
  }
  return os.str();
}

Weight make_power_weight(double p, double delta, double a) {
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidParameter("power weight: p must be > 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidParameter("power weight: delta must be > 0");
  }
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidParameter("power weight: a must be > 0");
  return Weight(WeightKind::Power, p, a, delta, 0, 1.0, 1.0);
}

Weight make_sine_weight(int n, double p, double a) {
  if (n < 2) throw InvalidParameter("sine weight: n must be >= 2");
  if (!(p > 1.0 && p < n)) throw InvalidParameter("sine weight: need 1 < p < n");
  if (!(a > 0.0 && a < std::numbers::pi)) throw InvalidParameter("sine weight: need 0 < a < pi");
  double c1 = std::numeric_limits<double>::infinity();
  double c2 = 0.0;
  for (double t : sample_grid(a, kSineFitPoints)) {
    const double ratio = std::pow(std::sin(t) / t, n - 1);
    c1 = std::min(c1, ratio);
    c2 = std::max(c2, ratio);
  }
  return Weight(WeightKind::Sine, p, a, static_cast<double>(n) - p, n, c1, c2);
}

WeightEvaluators evaluators_of(const Weight& w) {
  WeightEvaluators ev;
  ev.phi = [w](double t) { return w.phi(t); };
  ev.log_second_derivative = [w](double t) { return w.log_second_derivative(t); };
  ev.p = w.p();
  ev.a = w.a();
  ev.growth_exponent = w.growth_exponent();
  ev.c1 = w.c1();
  ev.c2 = w.c2();
  return ev;
}

ValidationReport validate_weight(const Weight& w, std::size_t grid_size) {
  return validate_weight(evaluators_of(w), grid_size);
}

ValidationReport validate_weight(const WeightEvaluators& w, std::size_t grid_size) {
  if (grid_size < 16) throw InvalidParameter("validate_weight: grid_size must be >= 16");
  ValidationReport r;
  r.grid = sample_grid(w.a, grid_size);

  // Boundary: phi(0) itself and the trend of samples approaching 0.
  r.phi_at_zero = w.phi(0.0);
  const double t1 = w.a * 1e-12;
  const double t2 = w.a * 1e-11;
  const double f1 = w.phi(t1);
  const double f2 = w.phi(t2);
  r.boundary_slope = (std::log(f2) - std::log(f1)) / (std::log(t2) - std::log(t1));
  r.boundary_ok = r.phi_at_zero == 0.0 && f1 < f2 && r.boundary_slope > 0.0;

  r.min_phi = std::numeric_limits<double>::infinity();
  r.fitted_c1 = std::numeric_limits<double>::infinity();
  r.fitted_c2 = 0.0;
  r.max_log_second_derivative = -std::numeric_limits<double>::infinity();
  bool within_declared = w.c1 <= w.c2;
  for (double t : r.grid) {
    const double f = w.phi(t);
    r.min_phi = std::min(r.min_phi, f);
    const double ratio = f / std::pow(t, w.growth_exponent);
    r.fitted_c1 = std::min(r.fitted_c1, ratio);
    r.fitted_c2 = std::max(r.fitted_c2, ratio);
    if (ratio < w.c1 * (1.0 - 1e-12) || ratio > w.c2 * (1.0 + 1e-12)) within_declared = false;
    if (t < w.a) {
      r.max_log_second_derivative = std::max(r.max_log_second_derivative, w.log_second_derivative(t));
    }
  }
  r.positivity_ok = r.min_phi > 0.0;
  r.growth_ok = within_declared && r.fitted_c1 > 0.0;
  r.log_concave_ok = r.max_log_second_derivative < 0.0;
  return r;
}

}  // namespace hardy
