#include "hardy/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {
namespace {

constexpr quad::Tolerance kCapTol{1e-14};
constexpr double kBoundSlack = 1e-9;

double checked_scale(int n, double p) {
  if (!(p > 1.0 && p < n)) throw DomainError("rho_star: need 1 < p < n");
  return (p - 1.0) / (n - p);
}

double sine_power_integral(int n, double lo, double hi) {
  const int m = n - 1;
  return quad::integrate([m](double t) { return std::pow(std::sin(t), m); }, lo, hi, kCapTol).value;
}

}  // namespace

CapGeometry make_cap_geometry(int n, double a_star) {
  if (n < 2) throw InvalidParameter("cap geometry: n must be >= 2");
  if (!(a_star > 0.0 && a_star < std::numbers::pi)) {
    throw InvalidParameter("cap geometry: a_star must lie in (0, pi)");
  }
  return {n, a_star};
}

CapGeometry cap_geometry_for_volume(int n, double volume) {
  return make_cap_geometry(n, inverse_cap_volume(n, volume));
}

double sphere_surface_volume(int m) {
  if (m < 1) throw DomainError("sphere_surface_volume: m must be >= 1");
  const double h = 0.5 * (m + 1);
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

double cap_volume(int n, double alpha) {
  if (n < 2) throw DomainError("cap_volume: n must be >= 2");
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi)) {
    throw DomainError("cap_volume: alpha must lie in [0, pi]");
  }
  return sphere_surface_volume(n - 1) * sine_power_integral(n, 0.0, alpha);
}

double inverse_cap_volume(int n, double volume) {
  if (n < 2) throw DomainError("inverse_cap_volume: n must be >= 2");
  const double omega = sphere_surface_volume(n - 1);
  const double total = cap_volume(n, std::numbers::pi);
  if (!(volume > 0.0 && volume < total)) {
    throw DomainError("inverse_cap_volume: volume must lie in (0, |S^n|)");
  }
  const double tol = 4 * std::numeric_limits<double>::epsilon() * total;
  double lo = 0.0;
  double hi = std::numbers::pi;
  // Start from the small-cap asymptotics A ~ omega alpha^n / n, clipped into the bracket.
  double x = std::clamp(std::pow(volume * n / omega, 1.0 / n), 1e-3, std::numbers::pi - 1e-3);
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = cap_volume(n, x) - volume;
    if (std::fabs(fx) < tol) return x;
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double deriv = omega * std::pow(std::sin(x), n - 1);
    double next = deriv > 0.0 ? x - fx / deriv : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-16 || std::fabs(next - x) < 1e-15) return next;
    x = next;
  }
  throw NumericalError("inverse_cap_volume: no convergence");
}

SphericalProfile make_spherical_profile(const CapGeometry& geometry, GridFunction profile) {
  if (std::fabs(profile.a() - geometry.a_star) > 1e-14 * std::max(1.0, geometry.a_star)) {
    throw InputError("spherical profile: grid must end at a_star");
  }
  return {geometry, std::move(profile)};
}

double cap_integral(const SphericalProfile& u, double q) {
  const int n = u.geometry.n;
  const double omega = sphere_surface_volume(n - 1);
  const auto t = u.profile.nodes();
  const auto v = u.profile.values();
  if (u.profile.interpolation() == Interpolation::Step) {
    std::vector<double> measures(t.size());
    std::vector<double> levels(t.size());
    measures[0] = v[0] != 0.0 ? cap_volume(n, t[0]) : 0.0;  // constant head [0, t_0]
    levels[0] = v[0];
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      measures[i + 1] = omega * sine_power_integral(n, t[i], t[i + 1]);
      levels[i + 1] = v[i];
    }
    return kernels::weighted_abs_pow_sum(measures, levels, q);
  }
  const quad::Rule& rule = quad::cell_rule();
  std::vector<double> x;
  std::vector<double> w;
  std::vector<double> edges;
  if (t[0] > 0.0) edges.push_back(0.0);
  edges.insert(edges.end(), t.begin(), t.end());
  quad::append_composite(edges, rule, x, w);
  std::vector<double> values(x.size());
  std::vector<double> density(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    values[i] = u.profile(x[i]);
    density[i] = w[i] * std::pow(std::sin(x[i]), n - 1);
  }
  return omega * kernels::weighted_abs_pow_sum(density, values, q);
}

RhoStar::RhoStar(const CapGeometry& geometry, double p)
    : geometry_(make_cap_geometry(geometry.n, geometry.a_star)),
      p_(p),
      scale_(checked_scale(geometry.n, p)),
      profile_(find_truncation_point(make_sine_weight(geometry.n, p, geometry.a_star))) {}

double RhoStar::operator()(double theta) const {
  if (theta == 0.0) throw SingularityError("rho_star: singular at theta = 0");
  if (!(theta > 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("rho_star: theta must lie in (0, pi]");
  }
  if (theta >= geometry_.a_star) return plateau();
  return scale_ * profile_.truncated(theta);
}

std::vector<double> RhoStar::values(std::span<const double> ascending) const {
  for (double t : ascending) {
    if (t == 0.0) throw SingularityError("rho_star: singular at theta = 0");
    if (!(t > 0.0 && t <= std::numbers::pi)) throw DomainError("rho_star: theta must lie in (0, pi]");
  }
  std::size_t inside = 0;
  while (inside < ascending.size() && ascending[inside] < geometry_.a_star) ++inside;
  std::vector<double> out = profile_.truncated_values(ascending.first(inside));
  for (double& x : out) x *= scale_;
  out.resize(ascending.size(), plateau());
  return out;
}

double rho_star(const CapGeometry& geometry, double p, double theta) {
  return RhoStar(geometry, p)(theta);
}

double rho_asymptotic_check(const RhoStar& rho, double t) {
  if (!(t > 0.0 && t < rho.geometry().a_star / 10.0)) {
    throw DomainError("rho_asymptotic_check: need 0 < t < a*/10");
  }
  return t * rho(t);
}

double rho_asymptotic_check(const CapGeometry& geometry, double p, double t) {
  if (!(t > 0.0 && t < geometry.a_star / 10.0)) {
    throw DomainError("rho_asymptotic_check: need 0 < t < a*/10");
  }
  return rho_asymptotic_check(RhoStar(geometry, p), t);
}

double sphere_sharp_constant(int n, double p) {
  if (!(p > 1.0 && p < n)) throw InvalidParameter("sphere_sharp_constant: need 1 < p < n");
  return std::pow((n - p) / p, p);
}

QuotientReport verify_sphere_theorem(const RhoStar& rho, const SphericalProfile& u) {
  const CapGeometry& g = rho.geometry();
  if (u.geometry.n != g.n || u.geometry.a_star != g.a_star) {
    throw InputError("verify_sphere_theorem: profile lives on a different cap");
  }
  const double p = rho.p();
  // rho^p = ((p-1)/(n-p))^p eta_T^p, so the 1D machinery supplies both integrals.
  const QuotientReport one_d = hardy_quotient(rho.weight(), rho.eta_profile(), u.profile, true);
  const double omega = sphere_surface_volume(g.n - 1);
  QuotientReport r;
  r.numerator = omega * one_d.numerator;
  r.denominator = omega * std::pow(rho.scale(), p) * one_d.denominator;
  r.quotient = r.numerator / r.denominator;
  r.sharp_constant = sphere_sharp_constant(g.n, p);
  r.margin = r.quotient - r.sharp_constant;
  if (r.quotient < r.sharp_constant - kBoundSlack) {
    throw AssertionFailure("verify_sphere_theorem: quotient " + std::to_string(r.quotient) +
                           " below sharp constant " + std::to_string(r.sharp_constant));
  }
  return r;
}

QuotientReport verify_sphere_theorem(const CapGeometry& geometry, double p, const SphericalProfile& u) {
  return verify_sphere_theorem(RhoStar(geometry, p), u);
}

SphericalProfile extremal_V_hat_k(const RhoStar& rho, std::int64_t k, std::size_t grid_size) {
  return {rho.geometry(), extremal_V_k(rho.weight(), rho.eta_profile(), k, grid_size)};
}

SphericalProfile extremal_V_hat_k(const CapGeometry& geometry, double p, std::int64_t k,
                                  std::size_t grid_size) {
  return extremal_V_hat_k(RhoStar(geometry, p), k, grid_size);
}

}  // namespace hardy
