#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/hardy1d.hpp"
#include "hardy/random.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

struct Config {
  Weight w;
  EtaProfile prof;
};

Config power_config() {
  Weight w = make_power_weight(2.0, 1.0, 1.0);
  return {w, find_truncation_point(w)};
}

Config sine3_config() {
  Weight w = make_sine_weight(3, 2.0, oracle::kHalfPi);
  return {w, find_truncation_point(w)};
}

GridFunction hat() { return GridFunction({0.0, 0.5, 1.0}, {0.0, 1.0, 0.0}, 1.0); }

}  // namespace

TEST_CASE("sharp constant") {
  CHECK(sharp_constant(2.0) == 0.25);
  CHECK(sharp_constant(3.0) == doctest::Approx(8.0 / 27.0).epsilon(1e-15));
  CHECK(sharp_constant(1.5) == doctest::Approx(std::pow(1.0 / 3.0, 1.5)).epsilon(1e-15));
  CHECK(sharp_constant(1.5) == doctest::Approx(0.19245008972987526));
  CHECK_THROWS_AS(sharp_constant(1.0), DomainError);
}

TEST_CASE("hat function against exact piecewise integrals") {
  const Config c = power_config();
  const QuotientReport r = hardy_quotient(c.w, c.prof, hat(), false);
  CHECK(r.numerator == doctest::Approx(oracle::power_hat_numerator()).epsilon(1e-13));
  CHECK(r.denominator == doctest::Approx(oracle::power_hat_denominator()).epsilon(1e-10));
  CHECK(r.quotient >= 0.25);
  CHECK(r.sharp_constant == 0.25);
  CHECK(r.margin == doctest::Approx(r.quotient - 0.25));

  const QuotientReport t = hardy_quotient(c.w, c.prof, hat(), true);
  CHECK(t.denominator == doctest::Approx(oracle::power_hat_denominator_truncated()).epsilon(1e-10));
  CHECK(t.quotient >= r.quotient);
}

TEST_CASE("homogeneity and domination") {
  const Config c = sine3_config();
  Rng rng(derive_seed(kDefaultSeed, 17));
  for (int i = 0; i < 20; ++i) {
    const GridFunction u = random_grid_function(c.w.a(), rng);
    const QuotientReport base = hardy_quotient(c.w, c.prof, u, false);
    const QuotientReport trunc = hardy_quotient(c.w, c.prof, u, true);
    CHECK(base.denominator >= trunc.denominator);
    for (double s : {1e-6, 3.0, 1e6}) {
      CHECK(hardy_quotient(c.w, c.prof, u.scaled(s), false).quotient ==
            doctest::Approx(base.quotient).epsilon(1e-12));
    }
  }
}

TEST_CASE("input errors") {
  const Config c = power_config();
  const GridFunction zero({0.0, 0.5, 1.0}, {0.0, 0.0, 0.0}, 1.0);
  CHECK_THROWS_AS(hardy_quotient(c.w, c.prof, zero, false), DegenerateInput);
  const GridFunction step({0.0, 0.5, 1.0}, {1.0, 1.0, 0.0}, 1.0, Interpolation::Step);
  CHECK_THROWS_AS(hardy_quotient(c.w, c.prof, step, false), InputError);
  const GridFunction other({0.0, 1.0, 2.0}, {1.0, 1.0, 0.0}, 2.0);
  CHECK_THROWS_AS(hardy_quotient(c.w, c.prof, other, false), InputError);
  const Config s = sine3_config();
  CHECK_THROWS_AS(hardy_quotient(c.w, s.prof, hat(), false), InvalidParameter);
  CHECK_THROWS_AS(GridFunction({0.0, 0.5, 1.0}, {0.0, 1.0, 0.5}, 1.0), InputError);
  CHECK_THROWS_AS(GridFunction({0.0, 0.5, 0.5, 1.0}, {0.0, 1.0, 1.0, 0.0}, 1.0), InputError);
}

TEST_CASE("lower bound on seeded random grid functions") {
  const std::vector<Weight> weights = {make_power_weight(2.0, 1.0, 1.0), make_sine_weight(3, 2.0, oracle::kHalfPi),
                                       make_sine_weight(4, 3.0, 1.0)};
  std::uint64_t stream = 0;
  for (const Weight& w : weights) {
    const EtaProfile prof = find_truncation_point(w);
    for (bool truncated : {false, true}) {
      Rng rng(derive_seed(kDefaultSeed, stream++));
      int violations = 0;
      for (int i = 0; i < 200; ++i) {
        const QuotientReport r = hardy_quotient(w, prof, random_grid_function(w.a(), rng), truncated);
        if (r.quotient < r.sharp_constant - 1e-9) ++violations;
      }
      CAPTURE(w.describe());
      CAPTURE(truncated);
      CHECK(violations == 0);
    }
  }
}

TEST_CASE("U_k") {
  const Config c = power_config();
  const GridFunction u = extremal_U_k(c.w, 2);
  CHECK(u(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(u(0.0) == u(0.25));
  CHECK(u(0.1) == u(0.5));
  CHECK(u(1.0) == 0.0);
  CHECK(u.size() == kDefaultExtremalGrid);
  CHECK_THROWS_AS(extremal_U_k(c.w, 1), DomainError);
  CHECK_THROWS_AS(extremal_U_k(make_power_weight(2.0, 1.0, 0.4), 2), DomainError);

  const Config s = sine3_config();
  const QuotientReport r = hardy_quotient(s.w, s.prof, extremal_U_k(s.w, 1024), false);
  CHECK(std::fabs(r.quotient - 0.25) < 0.025);
}

TEST_CASE("V_k") {
  const Config s = sine3_config();
  const GridFunction v = extremal_V_k(s.w, s.prof, 16);
  const double T = s.prof.T();
  CHECK(v(T) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(v(oracle::kPi / 4) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(v(0.5 * (s.w.a() + T)) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(v(1.5) == 0.0);
  CHECK(v(T - 1e-7) == doctest::Approx(v(T + 1e-7)).epsilon(1e-5));
  CHECK(v(1.0 / 16) == doctest::Approx(std::sqrt(oracle::sine3_tail(1.0 / 16))).epsilon(1e-12));
  CHECK_THROWS_AS(extremal_V_k(s.w, s.prof, 1), DomainError);
  // 1/k must stay below T = pi/4
  CHECK_THROWS_AS(extremal_V_k(make_sine_weight(3, 2.0, 0.5), find_truncation_point(make_sine_weight(3, 2.0, 0.5)), 2),
                  DomainError);
}

TEST_CASE("V_k quotient against the closed-form oracle") {
  const Config s = sine3_config();
  for (std::int64_t k : {16, 256, 1024, 4096, 16384}) {
    CAPTURE(k);
    const QuotientReport r = hardy_quotient(s.w, s.prof, extremal_V_k(s.w, s.prof, k), true);
    CHECK(r.quotient == doctest::Approx(oracle::sine3_V_k_quotient(k)).epsilon(1e-6));
  }
}

TEST_CASE("A_k and B_k") {
  const Weight s3 = make_sine_weight(3, 2.0, oracle::kHalfPi);
  double prev_b = 0.0;
  for (std::int64_t k = 16; k <= 16384; k *= 2) {
    const AkBk ab = A_k_B_k(s3, k);
    CHECK(ab.A_k == doctest::Approx(1.0).epsilon(1e-10));
    // int csc^2/cot = ln tan, cut at the endpoint guard
    const double gap = oracle::kHalfPi * 1e-12;
    const double exact = -std::log(std::tan(gap)) - std::log(std::tan(1.0 / k));
    CHECK(ab.B_k == doctest::Approx(exact).epsilon(1e-8));
    CHECK(ab.B_k > prev_b);
    prev_b = ab.B_k;
  }
  const AkBk p3 = A_k_B_k(make_sine_weight(4, 3.0, oracle::kHalfPi), 16384);
  CHECK(std::fabs(p3.A_k - 0.5) < 0.025);
  CHECK_THROWS_AS(A_k_B_k(s3, 1), DomainError);
}

TEST_CASE("convergence study") {
  const Config s = sine3_config();
  const std::vector<std::int64_t> ks = {1024, 16, 256, 64};
  const ConvergenceTable t = convergence_study(s.w, s.prof, ks, true);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows.front().k == 16);
  CHECK(t.rows.back().k == 1024);
  CHECK(t.trend_ok);
  CHECK(t.lower_bound_ok);
  CHECK(t.sharp_constant == 0.25);
  for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].margin < t.rows[i - 1].margin);

  std::vector<std::int64_t> sorted = ks;
  std::sort(sorted.begin(), sorted.end());
  const ConvergenceTable again = convergence_study(s.w, s.prof, sorted, true);
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(again.rows[i].quotient == t.rows[i].quotient);

  const Config p = power_config();
  const std::vector<std::int64_t> pk = {16, 256, 4096, 16384};
  const ConvergenceTable u = convergence_study(p.w, p.prof, pk, false);
  CHECK(u.lower_bound_ok);
  CHECK(u.trend_ok);
  for (const ConvergenceRow& r : u.rows) CHECK(r.quotient > 0.25);
  CHECK(u.rows.back().margin < 0.02);
}
