#include <doctest.h>

#include <cmath>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/halfspace.hpp"
#include "hardy/random.hpp"
#include "oracles.hpp"

using namespace hardy;
using oracle::kHalfPi;
using oracle::kPi;

namespace {

GridFunction bump(double lo, double peak, double hi, double height) {
  return GridFunction({lo, peak, hi}, {0.0, height, 0.0}, hi);
}

}  // namespace

TEST_CASE("zeta") {
  for (double t : {1e-5, 0.2, 0.7}) CHECK(oracle::rel_close(zeta(3, 2.0, t), oracle::sine3_eta(t), 1e-10));
  for (double t : {kPi / 4 + 1e-9, 1.0, kHalfPi}) CHECK(zeta(3, 2.0, t) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(std::fabs(1e-5 * zeta(3, 2.0, 1e-5) - 1.0) < 1e-6);
  const RhoStar rho(make_cap_geometry(4, kHalfPi), 3.0);
  for (double t : {0.01, 0.5, 1.2}) CHECK(zeta(4, 3.0, t) == rho(t));
  CHECK_THROWS_AS(zeta(3, 2.0, 0.0), SingularityError);
  CHECK_THROWS_AS(zeta(3, 2.0, 1.6), DomainError);
  CHECK_THROWS_AS(zeta(3, 3.0, 0.5), DomainError);
}

TEST_CASE("separable field validation") {
  const RhoStar z = zeta_profile(3, 2.0);
  const SphericalProfile theta = extremal_V_hat_k(z, 64);
  CHECK_NOTHROW(make_separable_field(bump(0.5, 1.0, 2.0, 1.0), theta));
  CHECK_THROWS_AS(make_separable_field(GridFunction({0.0, 1.0}, {0.0, 0.0}, 1.0), theta), InputError);
  CHECK_THROWS_AS(make_separable_field(GridFunction({0.5, 1.0, 2.0}, {1.0, 1.0, 0.0}, 2.0), theta), InputError);
  const RhoStar other(make_cap_geometry(3, 1.0), 2.0);
  CHECK_THROWS_AS(make_separable_field(bump(0.5, 1.0, 2.0, 1.0), extremal_V_hat_k(other, 64)), InputError);
}

TEST_CASE("quotient does not depend on the radial factor") {
  const RhoStar z = zeta_profile(3, 2.0);
  const SphericalProfile theta = extremal_V_hat_k(z, 1024);
  const QuotientReport a = verify_halfspace(z, make_separable_field(bump(0.5, 1.0, 2.0, 1.0), theta));
  const QuotientReport b = verify_halfspace(
      z, make_separable_field(GridFunction({0.1, 0.3, 0.9, 4.0}, {0.0, 2.0, -1.0, 0.0}, 4.0), theta));
  CHECK(std::fabs(a.quotient - b.quotient) <= 1e-12 * a.quotient);
  CHECK(a.numerator != b.numerator);
  CHECK(a.quotient == doctest::Approx(oracle::sine3_V_k_quotient(1024)).epsilon(1e-6));
  CHECK(verify_halfspace(3, 2.0, make_separable_field(bump(0.5, 1.0, 2.0, 1.0), theta)).quotient == a.quotient);

  const SphericalProfile zero{theta.geometry, GridFunction({0.0, kHalfPi}, {0.0, 0.0}, kHalfPi)};
  CHECK_THROWS_AS(verify_halfspace(z, make_separable_field(bump(0.5, 1.0, 2.0, 1.0), zero)), DegenerateInput);
  CHECK_THROWS_AS(verify_halfspace(z, make_separable_field(bump(0.5, 1.0, 2.0, 0.0), theta)), DegenerateInput);
}

TEST_CASE("Theorem 2 lower bound on seeded angular profiles") {
  struct Case {
    int n;
    double p;
  };
  std::uint64_t stream = 400;
  for (const Case c : {Case{3, 2.0}, Case{4, 3.0}}) {
    const RhoStar z = zeta_profile(c.n, c.p);
    Rng rng(derive_seed(kDefaultSeed, stream++));
    int violations = 0;
    for (int i = 0; i < 100; ++i) {
      const SphericalProfile theta{z.geometry(), random_radial_profile(kHalfPi, rng)};
      const QuotientReport r = verify_halfspace(z, make_separable_field(bump(0.5, 1.0, 2.0, 1.0), theta));
      if (r.quotient < r.sharp_constant - 1e-9) ++violations;
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("radial moments of the triangular bump") {
  // int b^2 r^m for the unit bump around 1 with half-width e, by Simpson.
  auto simpson_moment = [](double e, int m) {
    auto f = [e, m](long double r) {
      const long double b = 1 - std::fabs(r - 1) / e;
      return b * b * std::pow(r, m);
    };
    return oracle::simpson(f, 1 - e, 1) + oracle::simpson(f, 1, 1 + e);
  };
  const GridFunction unit = bump(0.9, 1.0, 1.1, 1.0);
  CHECK(radial_moment(unit, 2.0, 3) == doctest::Approx(simpson_moment(0.1, 3)).epsilon(1e-12));
  CHECK(radial_moment(unit, 2.0, 1) == doctest::Approx(simpson_moment(0.1, 1)).epsilon(1e-12));
}

TEST_CASE("Dirac-bump sharpness sequence") {
  const HalfspaceSharpness s = sharpness_sequence_halfspace(3, 2.0, 256, 1e-3);
  CHECK(s.moment_n == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(s.moment_ratio - 1.0) < 1e-4);
  CHECK(s.ratio >= 0.25 - 1e-9);
  CHECK(s.ratio == doctest::Approx(oracle::sine3_V_k_quotient(256)).epsilon(1e-6));
  CHECK(s.sharp_constant == 0.25);

  double prev = 1.0;
  for (double eps : {0.1, 0.05, 0.025, 0.0125}) {
    const HalfspaceSharpness t = sharpness_sequence_halfspace(3, 2.0, 64, eps);
    const double err = std::fabs(t.moment_n_minus_p - 1.0);
    CHECK(err < prev);
    prev = err;
  }
  CHECK_THROWS_AS(sharpness_sequence_halfspace(3, 2.0, 64, 0.5), InvalidParameter);
  CHECK_THROWS_AS(sharpness_sequence_halfspace(3, 2.0, 64, 0.0), InvalidParameter);
  CHECK_THROWS_AS(sharpness_sequence_halfspace(3, 3.0, 64, 0.1), DomainError);
}

TEST_CASE("integrability of zeta^p / |x|^p") {
  // Below pi/4 the angular integrand is 1/cos^2 with antiderivative tan; on the
  // plateau it is 4 sin^2.
  const double angular = 1.0 + (kPi / 2 + 1.0);
  CHECK(zeta_angular_integral(3, 2.0) == doctest::Approx(angular).epsilon(1e-12));
  const double v = zeta_integrability_check(3, 2.0, 1.0);
  CHECK(v == doctest::Approx(4 * kPi * 0.5 * angular).epsilon(1e-12));
  CHECK(v > 0.0);
  for (const auto& [n, p] : std::vector<std::pair<int, double>>{{3, 2.0}, {4, 3.0}, {5, 2.5}}) {
    const double r1 = zeta_integrability_check(n, p, 1.3);
    const double r2 = zeta_integrability_check(n, p, 2.6);
    CHECK(r2 / r1 == doctest::Approx(std::pow(2.0, n + 1 - p)).epsilon(1e-13));
    CHECK(std::isfinite(r1));
  }
  CHECK_THROWS_AS(zeta_integrability_check(3, 3.0, 1.0), DomainError);
  CHECK_THROWS_AS(zeta_integrability_check(3, 2.0, 0.0), InvalidParameter);
}
