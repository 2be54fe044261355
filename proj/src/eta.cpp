#include "hardy/eta.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "hardy/errors.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {
namespace {

constexpr quad::Tolerance kTailTol{1e-13};
constexpr std::size_t kBracketPoints = 256;

double piece(const Weight& w, double lo, double hi) {
  if (hi <= lo) return 0.0;
  return quad::integrate_graded([&w](double s) { return w.inverse_root(s); }, lo, hi, kTailTol)
      .value;
}

void check_guard(const Weight& w, double t, const char* what) {
  const double a = w.a();
  if (!(t >= a * kEndpointGuard && t <= a * (1.0 - kEndpointGuard))) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": t = " << t << " outside [a*1e-12, a*(1-1e-12)] for a = " << a;
    throw DomainError(os.str());
  }
}

void check_ascending(const Weight& w, std::span<const double> ts, const char* what) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] > 0.0 && ts[i] <= w.a())) {
      throw DomainError(std::string(what) + ": point outside (0, a]");
    }
    if (i > 0 && ts[i] < ts[i - 1]) throw InputError(std::string(what) + ": points not ascending");
  }
}

}  // namespace

double tail_integral(const Weight& w, double t) {
  if (!(t > 0.0 && t <= w.a())) throw DomainError("tail_integral: t must lie in (0, a]");
  return piece(w, t, w.a());
}

std::vector<double> tail_integrals(const Weight& w, std::span<const double> ascending) {
  check_ascending(w, ascending, "tail_integrals");
  std::vector<double> out(ascending.size());
  double acc = 0.0;
  double right = w.a();
  for (std::size_t i = ascending.size(); i-- > 0;) {
    acc += piece(w, ascending[i], right);
    right = ascending[i];
    out[i] = acc;
  }
  return out;
}

double eta(const Weight& w, double t) {
  check_guard(w, t, "eta");
  return w.inverse_root(t) / tail_integral(w, t);
}

std::vector<double> eta_values(const Weight& w, std::span<const double> ascending) {
  for (double t : ascending) check_guard(w, t, "eta_values");
  std::vector<double> out = tail_integrals(w, ascending);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = w.inverse_root(ascending[i]) / out[i];
  return out;
}

double eta_derivative(const Weight& w, double t) {
  const double e = eta(w, t);
  return e * (e - w.log_derivative(t) / (w.p() - 1.0));
}

EtaBounds eta_bounds(const Weight& w, double t) {
  if (!(t > 0.0 && t < w.a())) throw DomainError("eta_bounds: t must lie in (0, a)");
  const double q = 1.0 / (w.p() - 1.0);
  const double d = w.delta() * q;
  const double ad = std::pow(w.a(), d);
  const double k = d * ad / (t * (ad - std::pow(t, d)));
  const double ratio = std::pow(w.c2() / w.c1(), q);
  return {k / ratio, k * ratio};
}

double riccati_residual(const Weight& w, double t, double h) {
  if (!(h > 0.0) || !(t - h > 0.0) || !(t + h < w.a())) {
    throw DomainError("riccati_residual: need h > 0 and 0 < t - h < t + h < a");
  }
  check_guard(w, t - h, "riccati_residual");
  check_guard(w, t + h, "riccati_residual");
  // Neighbouring tail integrals are obtained from I(t) by short integrals, so the
  // difference quotient sees no independent quadrature noise.
  const double it = tail_integral(w, t);
  const double iplus = it - piece(w, t, t + h);
  const double iminus = it + piece(w, t - h, t);
  const double e = w.inverse_root(t) / it;
  const double eplus = w.inverse_root(t + h) / iplus;
  const double eminus = w.inverse_root(t - h) / iminus;
  const double deriv = (eplus - eminus) / (2.0 * h);
  const double pm1 = w.p() - 1.0;
  return std::fabs(e * w.log_derivative(t) + pm1 * deriv - pm1 * e * e);
}

double riccati_residual(const Weight& w, double t) { return riccati_residual(w, t, 1e-5 * w.a()); }

EtaProfile::EtaProfile(Weight weight, double truncation_point, double eta_at_truncation)
    : weight_(std::move(weight)), T_(truncation_point), eta_at_T_(eta_at_truncation) {
  if (!(T_ > 0.0 && T_ < weight_.a())) throw InvalidParameter("EtaProfile: T must lie in (0, a)");
  if (!(eta_at_T_ > 0.0)) throw InvalidParameter("EtaProfile: eta(T) must be positive");
}

double EtaProfile::truncated(double t) const {
  check_guard(weight_, t, "eta_truncated");
  return t <= T_ ? hardy::eta(weight_, t) : eta_at_T_;
}

std::vector<double> EtaProfile::eta_values(std::span<const double> ascending) const {
  return hardy::eta_values(weight_, ascending);
}

std::vector<double> EtaProfile::truncated_values(std::span<const double> ascending) const {
  for (double t : ascending) check_guard(weight_, t, "truncated_values");
  std::size_t below = 0;
  while (below < ascending.size() && ascending[below] <= T_) ++below;
  std::vector<double> out = hardy::eta_values(weight_, ascending.first(below));
  out.resize(ascending.size(), eta_at_T_);
  return out;
}

EtaProfile find_truncation_point(const Weight& w) {
  const ValidationReport report = validate_weight(w, kBracketPoints);
  if (!report.log_concave_ok) {
    throw PreconditionError("find_truncation_point: (log phi)'' is not negative on the sample grid");
  }
  const double a = w.a();
  const double pm1 = w.p() - 1.0;
  const std::vector<double> grid = quad::geometric_edges(a * 1e-6, a * (1.0 - 1e-6), kBracketPoints - 1);
  const std::vector<double> etas = eta_values(w, grid);
  auto slope_sign = [&](double t, double e) { return e - w.log_derivative(t) / pm1; };

  std::size_t bracket = grid.size();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (slope_sign(grid[i], etas[i]) < 0.0 && slope_sign(grid[i + 1], etas[i + 1]) >= 0.0) {
      bracket = i;
      break;
    }
  }
  if (bracket == grid.size()) {
    std::ostringstream os;
    os.precision(17);
    os << "find_truncation_point: no sign change of eta' on " << kBracketPoints
       << " points for " << w.describe() << "; eta'(first) sign term = "
       << slope_sign(grid.front(), etas.front())
       << ", eta'(last) sign term = " << slope_sign(grid.back(), etas.back());
    throw NumericalError(os.str());
  }

  double lo = grid[bracket];
  double hi = grid[bracket + 1];
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * a; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (slope_sign(mid, eta(w, mid)) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double T = 0.5 * (lo + hi);
  return EtaProfile(w, T, eta(w, T));
}

double eta_truncated(const EtaProfile& profile, double t) { return profile.truncated(t); }

}  // namespace hardy
