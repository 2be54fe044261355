#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hardy/eta.hpp"
#include "hardy/grid_function.hpp"
#include "hardy/hardy1d.hpp"

namespace hardy {

// Geodesic cap B(a*) = {0 <= theta < a*} around the north pole of S^n.
struct CapGeometry {
  int n = 2;
  double a_star = 0.0;
};

// Throws InvalidParameter unless n >= 2 and 0 < a_star < pi.
CapGeometry make_cap_geometry(int n, double a_star);
// Cap with |B(a*)| = volume.
CapGeometry cap_geometry_for_volume(int n, double volume);

// Volume of the unit m-sphere S^m: 2 pi^{(m+1)/2} / Gamma((m+1)/2).
double sphere_surface_volume(int m);

// A(alpha) = omega_{n-1} int_0^alpha sin^{n-1}; A(pi) = |S^n|.
double cap_volume(int n, double alpha);

// alpha with |A(alpha) - volume| < 1e-12 A(pi); safeguarded Newton on [0, pi].
double inverse_cap_volume(int n, double volume);

// A radial function theta -> u(theta) on the cap, vanishing at a*.
struct SphericalProfile {
  CapGeometry geometry;
  GridFunction profile;
};

// Throws InputError unless profile.a() == geometry.a_star.
SphericalProfile make_spherical_profile(const CapGeometry& geometry, GridFunction profile);

// int_{B(a*)} |u|^q dV. Exact on plateaus for step profiles, 16-point Gauss per
// cell for linear ones.
double cap_integral(const SphericalProfile& u, double q);

// The weight rho_{a*}: ((p-1)/(n-p)) eta_T(theta) on (0, a*) for the sine weight
// sin^{n-1} on [0, a*], and the constant ((p-1)/(n-p)) eta(T) on [a*, pi].
// Building one locates T once; evaluation is then cheap.
class RhoStar {
 public:
  // Throws DomainError unless 1 < p < n.
  RhoStar(const CapGeometry& geometry, double p);

  const CapGeometry& geometry() const { return geometry_; }
  double p() const { return p_; }
  const Weight& weight() const { return profile_.weight(); }
  const EtaProfile& eta_profile() const { return profile_; }
  // (p-1)/(n-p)
  double scale() const { return scale_; }
  double plateau() const { return scale_ * profile_.eta_at_T(); }

  // SingularityError at theta = 0, DomainError outside [0, pi].
  double operator()(double theta) const;
  std::vector<double> values(std::span<const double> ascending) const;

 private:
  CapGeometry geometry_;
  double p_;
  double scale_;
  EtaProfile profile_;
};

double rho_star(const CapGeometry& geometry, double p, double theta);

// t * rho(t); tends to 1 as t -> 0. Requires 0 < t < a*/10.
double rho_asymptotic_check(const CapGeometry& geometry, double p, double t);
double rho_asymptotic_check(const RhoStar& rho, double t);

// ((n-p)/p)^p
double sphere_sharp_constant(int n, double p);

// Quotient omega int |du/dtheta|^p sin^{n-1} / omega int |u|^p rho^p sin^{n-1} for a
// radial u on the cap. Throws AssertionFailure if it falls below
// ((n-p)/p)^p - 1e-9.
QuotientReport verify_sphere_theorem(const CapGeometry& geometry, double p, const SphericalProfile& u);
QuotientReport verify_sphere_theorem(const RhoStar& rho, const SphericalProfile& u);

// The truncated extremal sequence for the sine weight on [0, a*].
SphericalProfile extremal_V_hat_k(const CapGeometry& geometry, double p, std::int64_t k,
                                  std::size_t grid_size = kDefaultExtremalGrid);
SphericalProfile extremal_V_hat_k(const RhoStar& rho, std::int64_t k,
                                  std::size_t grid_size = kDefaultExtremalGrid);

}  // namespace hardy
