#include "hardy/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {
namespace {

constexpr double kHemisphere = std::numbers::pi / 2;

void check_exponents(int n, double p) {
  if (n < 2) throw DomainError("halfspace: n must be >= 2");
  if (!(p > 1.0 && p < n)) throw DomainError("halfspace: need 1 < p < n");
}

}  // namespace

RhoStar zeta_profile(int n, double p) {
  check_exponents(n, p);
  return RhoStar(make_cap_geometry(n, kHemisphere), p);
}

double zeta(int n, double p, double theta) {
  if (theta == 0.0) throw SingularityError("zeta: singular at theta = 0");
  if (!(theta > 0.0 && theta <= kHemisphere)) throw DomainError("zeta: theta must lie in (0, pi/2]");
  return zeta_profile(n, p)(theta);
}

SeparableField make_separable_field(GridFunction radial, SphericalProfile angular) {
  if (!(radial.nodes().front() > 0.0)) throw InputError("separable field: radial support must start at r > 0");
  if (radial.values().front() != 0.0) throw InputError("separable field: R must vanish at r_min");
  if (radial.interpolation() != Interpolation::Linear) {
    throw InputError("separable field: R must be piecewise linear");
  }
  if (std::fabs(angular.geometry.a_star - kHemisphere) > 1e-14) {
    throw InputError("separable field: angular profile must live on the hemisphere");
  }
  return {std::move(radial), std::move(angular)};
}

double radial_moment(const GridFunction& radial, double p, double m) {
  const auto nodes = radial.nodes();
  const quad::Rule& rule = quad::cell_rule();
  std::vector<double> x;
  std::vector<double> w;
  quad::append_composite(nodes, rule, x, w);
  std::vector<double> values(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    values[i] = radial(x[i]);
    w[i] *= std::pow(x[i], m);
  }
  return kernels::weighted_abs_pow_sum(w, values, p);
}

QuotientReport verify_halfspace(const RhoStar& zeta, const SeparableField& f) {
  if (f.radial.is_zero()) throw DegenerateInput("verify_halfspace: R is identically zero");
  if (f.angular.profile.is_zero()) throw DegenerateInput("verify_halfspace: Theta is identically zero");
  const int n = zeta.geometry().n;
  const double p = zeta.p();
  const double radial = radial_moment(f.radial, p, n - p);
  const QuotientReport angular = verify_sphere_theorem(zeta, f.angular);
  QuotientReport r;
  r.numerator = radial * angular.numerator;
  r.denominator = radial * angular.denominator;
  r.quotient = angular.quotient;
  r.sharp_constant = angular.sharp_constant;
  r.margin = angular.margin;
  return r;
}

QuotientReport verify_halfspace(int n, double p, const SeparableField& f) {
  return verify_halfspace(zeta_profile(n, p), f);
}

HalfspaceSharpness sharpness_sequence_halfspace(int n, double p, std::int64_t k, double eps,
                                                std::size_t grid_size) {
  check_exponents(n, p);
  if (!(eps > 0.0 && eps < 0.5)) throw InvalidParameter("sharpness_sequence_halfspace: eps must lie in (0, 1/2)");
  const RhoStar z = zeta_profile(n, p);
  const GridFunction unit({1.0 - eps, 1.0, 1.0 + eps}, {0.0, 1.0, 0.0}, 1.0 + eps);
  const double scale = std::pow(radial_moment(unit, p, n), -1.0 / p);
  SeparableField field = make_separable_field(unit.scaled(scale), extremal_V_hat_k(z, k, grid_size));
  const QuotientReport q = verify_halfspace(z, field);

  HalfspaceSharpness s;
  s.ratio = q.quotient;
  s.moment_n = radial_moment(field.radial, p, n);
  s.moment_n_minus_p = radial_moment(field.radial, p, n - p);
  s.moment_ratio = s.moment_n_minus_p / s.moment_n;
  s.sharp_constant = q.sharp_constant;
  return s;
}

double zeta_angular_integral(int n, double p) {
  check_exponents(n, p);
  const RhoStar z = zeta_profile(n, p);
  const double T = z.eta_profile().T();
  const quad::Rule& rule = quad::cell_rule();

  // Geometric panels from s up to T, where zeta^p sin^{n-1} ~ theta^{n-1-p}; uniform
  // panels on the plateau.
  const double s = 4.0 * kEndpointGuard * kHemisphere;
  std::vector<double> edges = quad::geometric_edges(s, T, 96);
  for (int i = 1; i <= 16; ++i) edges.push_back(T + (kHemisphere - T) * i / 16.0);
  std::vector<double> x;
  std::vector<double> w;
  quad::append_composite(edges, rule, x, w);
  const std::vector<double> zx = z.values(x);
  std::vector<double> density(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) density[i] = w[i] * std::pow(std::sin(x[i]), n - 1);
  double total = kernels::weighted_abs_pow_sum(density, zx, p);
  // theta^{n-1-p} remainder on (0, s)
  total += s * std::pow(z(s), p) * std::pow(std::sin(s), n - 1) / (n - p);
  if (!std::isfinite(total) || !(total > 0.0)) {
    throw NumericalError("zeta_angular_integral: non-finite or non-positive result");
  }
  return total;
}

double zeta_integrability_check(int n, double p, double R) {
  check_exponents(n, p);
  if (!(R > 0.0)) throw InvalidParameter("zeta_integrability_check: R must be positive");
  const double radial = std::pow(R, n + 1 - p) / (n + 1 - p);
  const double value = sphere_surface_volume(n - 1) * radial * zeta_angular_integral(n, p);
  if (!std::isfinite(value)) throw NumericalError("zeta_integrability_check: non-finite result");
  return value;
}

}  // namespace hardy
