#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hardy {

enum class WeightKind { Power, Sine };

// An admissible weight phi on [0, a]: phi(0) = 0, phi > 0 on (0, a] and
// c1 t^{p-1+delta} <= phi(t) <= c2 t^{p-1+delta}. Two closed-form families are built in:
//   Power: phi(t) = t^{p-1+delta}
//   Sine:  phi(t) = sin^{n-1}(t), 1 < p < n, 0 < a < pi, delta = n - p.
// Immutable after construction.
class Weight {
 public:
  WeightKind kind() const { return kind_; }
  double p() const { return p_; }
  double a() const { return a_; }
  double delta() const { return delta_; }
  // Sphere dimension for Sine weights, 0 for Power weights.
  int n() const { return n_; }
  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double growth_exponent() const { return p_ - 1.0 + delta_; }

  double phi(double t) const;
  double dphi(double t) const;
  // phi'/phi
  double log_derivative(double t) const;
  // (log phi)''
  double log_second_derivative(double t) const;
  // phi(t)^{-1/(p-1)}, the integrand of the tail integral.
  double inverse_root(double t) const;

  std::string describe() const;

  bool operator==(const Weight&) const = default;

 private:
  Weight(WeightKind kind, double p, double a, double delta, int n, double c1, double c2)
      : kind_(kind), p_(p), a_(a), delta_(delta), n_(n), c1_(c1), c2_(c2) {}

  friend Weight make_power_weight(double p, double delta, double a);
  friend Weight make_sine_weight(int n, double p, double a);

  WeightKind kind_;
  double p_;
  double a_;
  double delta_;
  int n_;
  double c1_;
  double c2_;
};

// phi(t) = t^{p-1+delta}; c1 = c2 = 1. Throws InvalidParameter unless p > 1, delta > 0, a > 0.
Weight make_power_weight(double p, double delta, double a);

// phi(t) = sin^{n-1} t with delta = n - p. c1, c2 are the extrema of phi(t)/t^{n-1}
// over a 4096-point geometric grid on [a 1e-8, a].
// Throws InvalidParameter unless n >= 2, 1 < p < n, 0 < a < pi.
Weight make_sine_weight(int n, double p, double a);

// Pointwise evaluators of a candidate weight, for validation of weights that are
// not (yet) one of the built-in families.
struct WeightEvaluators {
  std::function<double(double)> phi;
  std::function<double(double)> log_second_derivative;
  double p = 2.0;
  double a = 1.0;
  double growth_exponent = 1.0;
  // Declared growth constants; checked against the samples.
  double c1 = 1.0;
  double c2 = 1.0;
};

WeightEvaluators evaluators_of(const Weight& w);

struct ValidationReport {
  // Geometric sample grid on [a 1e-8, a].
  std::vector<double> grid;

  double phi_at_zero = 0.0;
  // d log(phi) / d log(t) estimated from the two samples closest to 0.
  double boundary_slope = 0.0;
  bool boundary_ok = false;

  double min_phi = 0.0;
  bool positivity_ok = false;

  // Extrema of phi(t) / t^{p-1+delta} on the grid.
  double fitted_c1 = 0.0;
  double fitted_c2 = 0.0;
  // Declared c1 <= c2 bracket every sample to relative tolerance 1e-12.
  bool growth_ok = false;

  double max_log_second_derivative = 0.0;
  bool log_concave_ok = false;

  bool passed() const { return boundary_ok && positivity_ok && growth_ok && log_concave_ok; }
};

// Throws InvalidParameter if grid_size < 16. Never throws on a failed check.
ValidationReport validate_weight(const Weight& w, std::size_t grid_size);
ValidationReport validate_weight(const WeightEvaluators& w, std::size_t grid_size);

}  // namespace hardy
