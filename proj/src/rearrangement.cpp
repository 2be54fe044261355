#include "hardy/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <utility>

#include "hardy/errors.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {
namespace {

constexpr double kHardyLittlewoodSlack = 1e-9;
constexpr double kPolyaSzegoSlack = 1e-6;
constexpr std::size_t kPolyaSzegoCells = 16384;
constexpr std::size_t kPolyaSzegoSamples = 8192;

// omega int_lo^hi sin^{n-1} by one 16-point Gauss panel; the panels used here are
// short enough for this to be exact to rounding.
double panel_measure(int n, double omega, double lo, double hi) {
  const quad::Rule& rule = quad::cell_rule();
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] * std::pow(std::sin(mid + half * rule.nodes[i]), n - 1);
  }
  return omega * half * s;
}

// Fine partition of [0, a*] with its cumulative cap measure.
struct MeasureGrid {
  int n;
  double omega;
  std::vector<double> edges;
  std::vector<double> cumulative;  // measure of [0, edges[i]]

  // theta in the grid with measure of [0, theta] equal to target.
  double inverse(double target) const {
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    std::size_t c = it == cumulative.begin() ? 0 : static_cast<std::size_t>(it - cumulative.begin()) - 1;
    if (c + 1 >= edges.size()) return edges.back();
    double lo = edges[c];
    double hi = edges[c + 1];
    const double base = cumulative[c];
    double x = lo + (hi - lo) * std::clamp((target - base) / (cumulative[c + 1] - base), 0.0, 1.0);
    for (int iter = 0; iter < 100; ++iter) {
      const double f = base + panel_measure(n, omega, edges[c], x) - target;
      if (f == 0.0) return x;
      if (f < 0.0) {
        lo = x;
      } else {
        hi = x;
      }
      const double d = omega * std::pow(std::sin(x), n - 1);
      double next = d > 0.0 ? x - f / d : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (next == x || hi - lo <= 4e-16 * hi) return next;
      x = next;
    }
    return x;
  }
};

MeasureGrid make_measure_grid(const CapGeometry& g, std::span<const double> input_nodes) {
  MeasureGrid grid{g.n, sphere_surface_volume(g.n - 1), {}, {}};
  const double max_width = g.a_star / static_cast<double>(kPolyaSzegoCells);
  std::vector<double> coarse;
  if (input_nodes.front() > 0.0) coarse.push_back(0.0);
  coarse.insert(coarse.end(), input_nodes.begin(), input_nodes.end());
  grid.edges.push_back(coarse.front());
  for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
    const double width = coarse[i + 1] - coarse[i];
    const auto m = static_cast<std::size_t>(std::max(1.0, std::ceil(width / max_width)));
    for (std::size_t j = 1; j < m; ++j) {
      grid.edges.push_back(coarse[i] + width * static_cast<double>(j) / static_cast<double>(m));
    }
    grid.edges.push_back(coarse[i + 1]);
  }
  grid.cumulative.assign(grid.edges.size(), 0.0);
  for (std::size_t i = 0; i + 1 < grid.edges.size(); ++i) {
    grid.cumulative[i + 1] =
        grid.cumulative[i] + panel_measure(grid.n, grid.omega, grid.edges[i], grid.edges[i + 1]);
  }
  return grid;
}

// Energy of the piecewise-linear profile through (0, v_0), (theta_i, v_i), (a*, 0).
double profile_energy(const MeasureGrid& grid, std::span<const double> theta, std::span<const double> levels,
                      double q) {
  std::vector<double> t{0.0};
  std::vector<double> v{levels.front()};
  t.insert(t.end(), theta.begin(), theta.end());
  v.insert(v.end(), levels.begin(), levels.end());
  t.push_back(grid.edges.back());
  v.push_back(0.0);
  double energy = 0.0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const double slope = (v[i + 1] - v[i]) / (t[i + 1] - t[i]);
    if (slope == 0.0) continue;
    energy += std::pow(std::fabs(slope), q) * panel_measure(grid.n, grid.omega, t[i], t[i + 1]);
  }
  return energy;
}

void check_measure(const CapGeometry& g, double measure, const char* who) {
  const double cap = cap_volume(g.n, g.a_star);
  if (std::fabs(cap - measure) > 1e-10 * measure) {
    throw InputError(std::string(who) + ": cap measure " + std::to_string(cap) +
                     " does not match |Omega| = " + std::to_string(measure));
  }
}

}  // namespace

SampleSet::SampleSet(std::vector<double> values, std::vector<double> weights)
    : values_(std::move(values)), weights_(std::move(weights)), measure_(0.0) {
  if (values_.size() != weights_.size()) throw InputError("sample set: size mismatch");
  if (values_.empty()) throw InputError("sample set: empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw InputError("sample set: non-finite value");
    if (!(weights_[i] >= 0.0) || !std::isfinite(weights_[i])) {
      throw InputError("sample set: weights must be finite and non-negative");
    }
    measure_ += weights_[i];
  }
  if (!(measure_ > 0.0)) throw InputError("sample set: zero total measure");
}

double distribution_function(const SampleSet& s, double t) {
  double mu = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::fabs(s.values()[i]) > t) mu += s.weights()[i];
  }
  return mu;
}

DecreasingRearrangement::DecreasingRearrangement(const SampleSet& s) {
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.weights()[i] > 0.0) pairs.emplace_back(std::fabs(s.values()[i]), s.weights()[i]);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  double running = 0.0;
  for (const auto& [level, weight] : pairs) {
    running += weight;
    if (!levels_.empty() && levels_.back() == level) {
      cumulative_.back() = running;
    } else {
      levels_.push_back(level);
      cumulative_.push_back(running);
    }
  }
}

double DecreasingRearrangement::operator()(double sigma) const {
  if (!(sigma >= 0.0 && sigma <= measure())) {
    throw DomainError("decreasing rearrangement: sigma must lie in [0, |Omega|]");
  }
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), sigma);
  if (it == cumulative_.end()) return 0.0;
  return levels_[static_cast<std::size_t>(it - cumulative_.begin())];
}

double DecreasingRearrangement::moment(double q) const {
  double total = 0.0;
  double prev = 0.0;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    total += std::pow(levels_[j], q) * (cumulative_[j] - prev);
    prev = cumulative_[j];
  }
  return total;
}

double decreasing_rearrangement(const SampleSet& s, double sigma) {
  return DecreasingRearrangement(s)(sigma);
}

SphericalProfile spherical_rearrangement(const SampleSet& s, const CapGeometry& geometry) {
  check_measure(geometry, s.measure(), "spherical_rearrangement");
  const DecreasingRearrangement r(s);
  const auto levels = r.levels();
  const auto cumulative = r.cumulative();
  std::vector<double> nodes{0.0};
  std::vector<double> values;
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    const double theta = inverse_cap_volume(geometry.n, cumulative[j]);
    if (theta <= nodes.back() || theta >= geometry.a_star) continue;
    values.push_back(levels[j]);
    nodes.push_back(theta);
  }
  values.push_back(levels.back());
  nodes.push_back(geometry.a_star);
  values.push_back(0.0);
  return {geometry, GridFunction(std::move(nodes), std::move(values), geometry.a_star, Interpolation::Step)};
}

InequalitySides check_hardy_littlewood(const SampleSet& u, const SampleSet& v, const CapGeometry& geometry) {
  if (u.size() != v.size()) throw InputError("check_hardy_littlewood: sample sets differ in size");
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double a = u.weights()[i];
    const double b = v.weights()[i];
    if (std::fabs(a - b) > 1e-14 * std::max(std::fabs(a), std::fabs(b))) {
      throw InputError("check_hardy_littlewood: sample sets live on different cells");
    }
  }
  check_measure(geometry, u.measure(), "check_hardy_littlewood");

  InequalitySides sides;
  for (std::size_t i = 0; i < u.size(); ++i) sides.lhs += u.weights()[i] * u.values()[i] * v.values()[i];

  const DecreasingRearrangement ru(u);
  const DecreasingRearrangement rv(v);
  std::size_t i = 0;
  std::size_t j = 0;
  double prev = 0.0;
  while (i < ru.levels().size() && j < rv.levels().size()) {
    const double next = std::min(ru.cumulative()[i], rv.cumulative()[j]);
    sides.rhs += ru.levels()[i] * rv.levels()[j] * (next - prev);
    prev = next;
    if (ru.cumulative()[i] == next) ++i;
    if (rv.cumulative()[j] == next) ++j;
  }
  if (sides.lhs > sides.rhs + kHardyLittlewoodSlack) {
    throw AssertionFailure("check_hardy_littlewood: " + std::to_string(sides.lhs) + " > " +
                           std::to_string(sides.rhs));
  }
  return sides;
}

PolyaSzegoSides check_polya_szego_radial(const CapGeometry& geometry, double q, const SphericalProfile& u) {
  if (!(q >= 1.0)) throw InvalidParameter("check_polya_szego_radial: q must be >= 1");
  if (u.profile.interpolation() != Interpolation::Linear) {
    throw InputError("check_polya_szego_radial: profile must be piecewise linear");
  }
  if (u.geometry.n != geometry.n || u.geometry.a_star != geometry.a_star) {
    throw InputError("check_polya_szego_radial: profile lives on a different cap");
  }
  // Samples at the midpoints of equal-measure cells; the sorted samples are then
  // quantiles of u* and both profiles share the same positions.
  const MeasureGrid grid = make_measure_grid(geometry, u.profile.nodes());
  const double total = grid.cumulative.back();
  std::vector<double> theta(kPolyaSzegoSamples);
  std::vector<double> levels(kPolyaSzegoSamples);
  for (std::size_t i = 0; i < kPolyaSzegoSamples; ++i) {
    theta[i] = grid.inverse(total * (static_cast<double>(i) + 0.5) / static_cast<double>(kPolyaSzegoSamples));
    levels[i] = std::fabs(u.profile(theta[i]));
  }
  PolyaSzegoSides sides;
  sides.lhs = profile_energy(grid, theta, levels, q);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  sides.rhs = profile_energy(grid, theta, levels, q);

  const auto t = u.profile.nodes();
  const auto v = u.profile.values();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const double slope = (v[i + 1] - v[i]) / (t[i + 1] - t[i]);
    if (slope == 0.0) continue;
    sides.lhs_exact += std::pow(std::fabs(slope), q) * grid.omega *
                       quad::integrate([n = geometry.n](double x) { return std::pow(std::sin(x), n - 1); },
                                       t[i], t[i + 1], {1e-14})
                           .value;
  }
  if (sides.lhs < sides.rhs - kPolyaSzegoSlack) {
    throw AssertionFailure("check_polya_szego_radial: " + std::to_string(sides.lhs) + " < " +
                           std::to_string(sides.rhs));
  }
  return sides;
}

std::vector<SphericalProfile> steiner_per_shell(std::span<const SampleSet> shells, const CapGeometry& geometry) {
  const std::size_t count = shells.size();
  std::vector<std::optional<SphericalProfile>> slots(count);
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) slots[i] = spherical_rearrangement(shells[i], geometry);
    }));
  }
  for (auto& t : tasks) t.get();
  std::vector<SphericalProfile> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace hardy
