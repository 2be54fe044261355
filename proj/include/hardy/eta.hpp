#pragma once

#include <span>
#include <vector>

#include "hardy/weights.hpp"

namespace hardy {

// Relative distance from 0 and from a inside which eta is never evaluated.
inline constexpr double kEndpointGuard = 1e-12;

// I(t) = int_t^a phi(s)^{-1/(p-1)} ds for 0 < t <= a; I(a) = 0.
// Adaptive Gauss-Kronrod with geometric panels toward t when t < 0.01 a.
double tail_integral(const Weight& w, double t);

// I at every point of an ascending list in (0, a]. Integrates only between
// consecutive points and accumulates from the right, so the cost is one short
// integral per point.
std::vector<double> tail_integrals(const Weight& w, std::span<const double> ascending);

// eta_a(t) = phi(t)^{-1/(p-1)} / I(t). DomainError outside [a 1e-12, a (1 - 1e-12)].
double eta(const Weight& w, double t);
std::vector<double> eta_values(const Weight& w, std::span<const double> ascending);

// Exact derivative of eta by the quotient rule (I' = -phi^{-1/(p-1)}):
// eta' = eta * (eta - (phi'/phi) / (p-1)).
double eta_derivative(const Weight& w, double t);

struct EtaBounds {
  double lo;
  double hi;
};

// Two-sided estimate (c1/c2)^{1/(p-1)} K(t) <= eta(t) <= (c2/c1)^{1/(p-1)} K(t),
// K(t) = d a^d / (t (a^d - t^d)), d = delta/(p-1).
EtaBounds eta_bounds(const Weight& w, double t);

// |eta phi'/phi + (p-1) D_h eta - (p-1) eta^2| with D_h the central difference
// of step h. Requires t - h > 0 and t + h < a.
double riccati_residual(const Weight& w, double t, double h);
// Default step h = 1e-5 a.
double riccati_residual(const Weight& w, double t);

// eta together with its unique interior minimiser T and the plateau eta(T).
class EtaProfile {
 public:
  EtaProfile(Weight weight, double truncation_point, double eta_at_truncation);

  const Weight& weight() const { return weight_; }
  double T() const { return T_; }
  double eta_at_T() const { return eta_at_T_; }

  double eta(double t) const { return hardy::eta(weight_, t); }
  // eta(t) for t <= T, eta(T) beyond.
  double truncated(double t) const;
  // Batched variants over ascending points.
  std::vector<double> eta_values(std::span<const double> ascending) const;
  std::vector<double> truncated_values(std::span<const double> ascending) const;

 private:
  Weight weight_;
  double T_;
  double eta_at_T_;
};

// Locates T: the sign change of eta' is bracketed on a 256-point geometric grid,
// then bisected on the sign of eta' to 1e-13 a. Throws PreconditionError if phi
// fails the log-concavity check and NumericalError if no bracket is found.
EtaProfile find_truncation_point(const Weight& w);

double eta_truncated(const EtaProfile& profile, double t);

}  // namespace hardy
