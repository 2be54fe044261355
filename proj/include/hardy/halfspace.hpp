#pragma once

#include <cstdint>

#include "hardy/grid_function.hpp"
#include "hardy/hardy1d.hpp"
#include "hardy/sphere.hpp"

namespace hardy {

// The angular singularity zeta = rho_{pi/2} on the upper hemisphere.
// Throws DomainError unless 1 < p < n.
RhoStar zeta_profile(int n, double p);

// zeta(theta) for 0 < theta <= pi/2; SingularityError at theta = 0.
double zeta(int n, double p, double theta);

// u(r, theta) = R(r) Theta(theta) on the upper half-space.
struct SeparableField {
  GridFunction radial;       // R on [r_min, r_max], zero at both ends
  SphericalProfile angular;  // Theta on the hemisphere cap, zero at pi/2
};

// Throws InputError unless R starts at r_min > 0 with R(r_min) = 0 and the angular
// profile lives on a cap with a* = pi/2.
SeparableField make_separable_field(GridFunction radial, SphericalProfile angular);

// int R^p r^m dr over the support of R.
double radial_moment(const GridFunction& radial, double p, double m);

// Quotient int |D_Theta u|^p / int |u|^p zeta^p |x|^{-p}. Both integrals carry the
// factor omega int R^p r^{n-p} dr, so the quotient equals the angular one. Throws
// AssertionFailure below ((n-p)/p)^p - 1e-9 and DegenerateInput for Theta == 0 or
// R == 0.
QuotientReport verify_halfspace(int n, double p, const SeparableField& f);
QuotientReport verify_halfspace(const RhoStar& zeta, const SeparableField& f);

struct HalfspaceSharpness {
  double ratio = 0.0;             // full quotient of u_k = Theta_k R_k
  double moment_n = 0.0;          // int R_k^p r^n dr (normalised to 1)
  double moment_n_minus_p = 0.0;  // int R_k^p r^{n-p} dr
  double moment_ratio = 0.0;      // moment_n_minus_p / moment_n
  double sharp_constant = 0.0;
};

// Theta_k = V_hat_k on the hemisphere, R_k a triangular bump of half-width eps
// centred at r = 1 scaled so that int R_k^p r^n dr = 1.
HalfspaceSharpness sharpness_sequence_halfspace(int n, double p, std::int64_t k, double eps,
                                                std::size_t grid_size = kDefaultExtremalGrid);

// int over B_R of the half-space of zeta^p |x|^{-p} dx
//   = omega_{n-1} R^{n+1-p}/(n+1-p) int_0^{pi/2} zeta^p sin^{n-1}.
double zeta_integrability_check(int n, double p, double R);
// The angular factor int_0^{pi/2} zeta^p sin^{n-1} alone.
double zeta_angular_integral(int n, double p);

}  // namespace hardy
