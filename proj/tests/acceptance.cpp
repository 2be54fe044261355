// One PASS/FAIL line per acceptance criterion. A criterion also fails when it
// exceeds its runtime budget.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hardy/eta.hpp"
#include "hardy/halfspace.hpp"
#include "hardy/hardy1d.hpp"
#include "hardy/random.hpp"
#include "hardy/rearrangement.hpp"
#include "hardy/sphere.hpp"
#include "oracles.hpp"

using namespace hardy;
using oracle::kHalfPi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [violated]");
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome sharp_constant_convergence() {
  Outcome o;
  const Weight w = make_sine_weight(3, 2.0, kHalfPi);
  const EtaProfile prof = find_truncation_point(w);
  std::vector<std::int64_t> ks;
  for (int e = 4; e <= 14; ++e) ks.push_back(std::int64_t{1} << e);
  const ConvergenceTable t = convergence_study(w, prof, ks, true);
  o.require(t.lower_bound_ok, "all quotients >= 0.25 - 1e-9");
  const double first = t.rows.front().margin;
  const double last = t.rows.back().margin;
  o.require(last < first / 3, "margin(2^4) / margin(2^14) = " + fmt("%.4f", first / last) + " > 3");
  o.detail += " (margins " + fmt("%.5f", first) + " -> " + fmt("%.5f", last) + ")";
  return o;
}

Outcome a_k_limit() {
  Outcome o;
  const AkBk ab = A_k_B_k(make_sine_weight(3, 2.0, kHalfPi), 16384);
  o.require(std::fabs(ab.A_k - 1.0) < 0.05, "|A_{2^14} - 1| = " + fmt("%.3e", std::fabs(ab.A_k - 1.0)) + " < 0.05");
  return o;
}

Outcome closed_form_oracles() {
  Outcome o;
  const Weight pw = make_power_weight(2.0, 1.0, 1.0);
  const Weight sw = make_sine_weight(3, 2.0, kHalfPi);
  std::vector<double> tp(1000), ts(1000);
  for (int i = 0; i < 1000; ++i) {
    tp[i] = 1e-6 + (1.0 - 2e-6) * (i + 0.5) / 1000;
    ts[i] = 1e-6 + (kHalfPi - 2e-6) * (i + 0.5) / 1000;
  }
  const auto ep = eta_values(pw, tp);
  const auto es = eta_values(sw, ts);
  double worst_p = 0.0, worst_s = 0.0;
  for (int i = 0; i < 1000; ++i) {
    worst_p = std::max(worst_p, std::fabs(ep[i] / oracle::power_eta(tp[i]) - 1.0));
    worst_s = std::max(worst_s, std::fabs(es[i] / oracle::sine3_eta(ts[i]) - 1.0));
  }
  o.require(worst_p < 1e-10, "power eta rel err " + fmt("%.2e", worst_p));
  o.require(worst_s < 1e-10, "sine eta rel err " + fmt("%.2e", worst_s));
  const double T = find_truncation_point(sw).T();
  o.require(std::fabs(T - oracle::kPi / 4) < 1e-8, "|T - pi/4| = " + fmt("%.2e", std::fabs(T - oracle::kPi / 4)));
  return o;
}

Outcome riccati_identity() {
  Outcome o;
  for (const Weight& w : {make_power_weight(2.0, 1.0, 1.0), make_sine_weight(3, 2.0, kHalfPi)}) {
    double worst = 0.0, coarse = 0.0, fine = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double t = w.a() * (0.12 + 0.76 * (i + 0.5) / 100);
      const double r = riccati_residual(w, t, 1e-5 * w.a());
      worst = std::max(worst, r);
      coarse += r;
      fine += riccati_residual(w, t, 0.5e-5 * w.a());
    }
    const std::string name = w.kind() == WeightKind::Power ? "power" : "sine";
    o.require(worst < 1e-6, name + " max residual " + fmt("%.2e", worst));
    o.require(std::fabs(coarse / fine - 4.0) <= 0.5, name + " h/2 ratio " + fmt("%.3f", coarse / fine));
  }
  return o;
}

Outcome hardy_lower_bound_suite() {
  Outcome o;
  const std::vector<Weight> weights = {make_power_weight(2.0, 1.0, 1.0), make_sine_weight(3, 2.0, kHalfPi),
                                       make_sine_weight(4, 3.0, 1.0)};
  int violations = 0, total = 0;
  std::uint64_t stream = 0;
  for (const Weight& w : weights) {
    const EtaProfile prof = find_truncation_point(w);
    for (bool truncated : {false, true}) {
      Rng rng(derive_seed(kDefaultSeed, 5000 + stream++));
      for (int i = 0; i < 200; ++i) {
        const QuotientReport r = hardy_quotient(w, prof, random_grid_function(w.a(), rng), truncated);
        ++total;
        if (r.quotient < r.sharp_constant - 1e-9) ++violations;
      }
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations in " + std::to_string(total));
  return o;
}

Outcome rearrangement_suite() {
  Outcome o;
  const CapGeometry g = make_cap_geometry(3, kHalfPi);
  const double volume = cap_volume(3, kHalfPi);
  Rng rng(derive_seed(kDefaultSeed, 6000));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> size_dist(1, 200);

  auto random_set = [&](std::size_t m, bool nonnegative, const std::vector<double>* weights) {
    std::vector<double> v(m), w(m);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = nonnegative ? unit(rng) : 2 * unit(rng) - 1;
      w[i] = weights ? (*weights)[i] : unit(rng);
      total += w[i];
    }
    if (!weights) {
      for (double& x : w) x *= volume / total;
    }
    return SampleSet(v, w);
  };

  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const SampleSet s = random_set(size_dist(rng), false, nullptr);
    const DecreasingRearrangement d(s);
    const SphericalProfile sharp = spherical_rearrangement(s, g);
    for (double q : {1.0, 2.0, 3.0}) {
      double direct = 0.0;
      for (std::size_t j = 0; j < s.size(); ++j) direct += s.weights()[j] * std::pow(std::fabs(s.values()[j]), q);
      worst = std::max({worst, std::fabs(d.moment(q) / direct - 1), std::fabs(cap_integral(sharp, q) / direct - 1)});
    }
  }
  o.require(worst < 1e-8, "equimeasurability worst rel err " + fmt("%.2e", worst));

  int hl = 0;
  for (int i = 0; i < 200; ++i) {
    const SampleSet u = random_set(size_dist(rng), true, nullptr);
    const std::vector<double> w(u.weights().begin(), u.weights().end());
    const SampleSet v = random_set(u.size(), true, &w);
    const InequalitySides s = check_hardy_littlewood(u, v, g);
    if (s.lhs > s.rhs + 1e-9) ++hl;
  }
  o.require(hl == 0, "Hardy-Littlewood violations " + std::to_string(hl) + "/200");

  int ps = 0;
  for (int i = 0; i < 100; ++i) {
    const SphericalProfile u{g, random_bump_profile(kHalfPi, rng)};
    const PolyaSzegoSides s = check_polya_szego_radial(g, 2.0, u);
    if (s.lhs < s.rhs - 1e-6) ++ps;
  }
  o.require(ps == 0, "Polya-Szego violations " + std::to_string(ps) + "/100");
  return o;
}

Outcome cap_inequality() {
  Outcome o;
  const RhoStar rho(make_cap_geometry(3, kHalfPi), 2.0);
  const double q = verify_sphere_theorem(rho, extremal_V_hat_k(rho, 4096)).quotient;
  o.require(std::fabs(q - 0.25) <= 0.025, "V_hat_{2^12} quotient " + fmt("%.6f", q) + " within 10% of 0.25");
  Rng rng(derive_seed(kDefaultSeed, 7000));
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    const SphericalProfile u{rho.geometry(), random_radial_profile(kHalfPi, rng)};
    if (verify_sphere_theorem(rho, u).quotient < 0.25 - 1e-9) ++violations;
  }
  o.require(violations == 0, "random profile violations " + std::to_string(violations) + "/100");
  return o;
}

Outcome halfspace_inequality() {
  Outcome o;
  const RhoStar z = zeta_profile(3, 2.0);
  const SphericalProfile theta = extremal_V_hat_k(z, 1024);
  const QuotientReport a = verify_halfspace(
      z, make_separable_field(GridFunction({0.5, 1.0, 2.0}, {0.0, 1.0, 0.0}, 2.0), theta));
  const QuotientReport b = verify_halfspace(
      z, make_separable_field(GridFunction({0.1, 0.3, 0.9, 4.0}, {0.0, 2.0, -1.0, 0.0}, 4.0), theta));
  const double spread = std::fabs(a.quotient - b.quotient) / a.quotient;
  o.require(spread <= 1e-12, "R-independence " + fmt("%.1e", spread));
  const HalfspaceSharpness s = sharpness_sequence_halfspace(3, 2.0, 4096, 1e-3);
  o.require(std::fabs(s.moment_ratio - 1.0) < 1e-4, "moment ratio - 1 = " + fmt("%.2e", s.moment_ratio - 1.0));
  o.require(std::fabs(s.ratio - 0.25) <= 0.025, "full ratio " + fmt("%.6f", s.ratio) + " within 10% of 0.25");
  return o;
}

Outcome asymptotic_singularity() {
  Outcome o;
  const double a = rho_asymptotic_check(make_cap_geometry(3, kHalfPi), 2.0, 1e-4);
  const double b = rho_asymptotic_check(make_cap_geometry(4, 1.0), 2.0, 1e-4);
  o.require(std::fabs(a - 1) < 1e-2, "(3,2,pi/2) |t rho - 1| = " + fmt("%.2e", std::fabs(a - 1)));
  o.require(std::fabs(b - 1) < 1e-2, "(4,2,1) |t rho - 1| = " + fmt("%.2e", std::fabs(b - 1)));
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "hardy_acceptance";
  std::filesystem::create_directories(dir);
  const std::string args =
      " sharpness-1d --weight sine --n 3 --p 2 --a 1.5707963267948966 --ks 16,64,256,1024,4096 --truncated"
      " --seed 12345 --format csv --out ";
  std::string out[2];
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / ("run" + std::to_string(i) + ".csv");
    const int status = std::system((std::string(HARDY_CLI_PATH) + args + path.string()).c_str());
    o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "run " + std::to_string(i + 1) + " exit code 0");
    std::ifstream in(path, std::ios::binary);
    out[i].assign(std::istreambuf_iterator<char>(in), {});
  }
  o.require(!out[0].empty() && out[0] == out[1], "byte-identical CSV (" + std::to_string(out[0].size()) + " bytes)");
  std::filesystem::remove_all(dir);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sharp-constant convergence (1D, truncated)", 30, sharp_constant_convergence},
      {2, "A_k limit", 5, a_k_limit},
      {3, "closed-form oracles", 5, closed_form_oracles},
      {4, "Riccati identity", 5, riccati_identity},
      {5, "Hardy lower-bound property suite", 60, hardy_lower_bound_suite},
      {6, "rearrangement suite", 30, rearrangement_suite},
      {7, "cap inequality at desk scale", 30, cap_inequality},
      {8, "half-space inequality at desk scale", 30, halfspace_inequality},
      {9, "asymptotic singularity", 1, asymptotic_singularity},
      {10, "CLI determinism", 60, cli_determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= c.budget_s) o.require(false, "runtime budget " + fmt("%.0f s", c.budget_s));
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s | %s | %.2f s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                elapsed);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
