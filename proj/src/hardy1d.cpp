#include "hardy/hardy1d.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {
namespace {

constexpr quad::Tolerance kCellTol{1e-13};
constexpr double kDenominatorFloor = 1e-300;
constexpr double kLowerBoundSlack = 1e-9;
constexpr double kTrendSlack = 1e-4;

// Composite nodes for the denominator together with the sliver [0, s] that is
// closed analytically.
struct DenominatorNodes {
  std::vector<double> x;
  std::vector<double> w;
  double sliver = 0.0;  // s, or 0 if none
};

DenominatorNodes denominator_nodes(const GridFunction& u) {
  const auto t = u.nodes();
  const auto v = u.values();
  const double a = u.a();
  const quad::Rule& rule = quad::cell_rule();
  DenominatorNodes out;

  // Region touching the origin: the constant head [0, t_0] or the first cell.
  const bool head = t[0] > 0.0;
  const double x1 = head ? t[0] : t[1];
  const bool origin_active = head ? v[0] != 0.0 : (v[0] != 0.0 || v[1] != 0.0);
  if (origin_active) {
    const double s = std::min(std::max(x1 * 0x1p-45, 4.0 * a * kEndpointGuard), x1);
    if (x1 > s) {
      const auto cells = static_cast<std::size_t>(std::ceil(std::log2(x1 / s)));
      const std::vector<double> edges = quad::geometric_edges(s, x1, cells);
      quad::append_composite(edges, rule, out.x, out.w);
    }
    out.sliver = s;
  }
  for (std::size_t i = head ? 0 : 1; i + 1 < t.size(); ++i) {
    if (v[i] == 0.0 && v[i + 1] == 0.0) continue;
    const double edges[2] = {t[i], t[i + 1]};
    quad::append_composite(edges, rule, out.x, out.w);
  }
  return out;
}

double numerator_integral(const Weight& w, const GridFunction& u) {
  const auto t = u.nodes();
  std::vector<double> slopes;
  std::vector<double> cell_phi;
  slopes.reserve(t.size());
  cell_phi.reserve(t.size());
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const double s = u.slope(i);
    if (s == 0.0) continue;
    slopes.push_back(s);
    cell_phi.push_back(
        quad::integrate([&w](double x) { return w.phi(x); }, t[i], t[i + 1], kCellTol).value);
  }
  return kernels::weighted_abs_pow_sum(cell_phi, slopes, w.p());
}

double denominator_integral(const EtaProfile& profile, const GridFunction& u, bool truncated) {
  const Weight& w = profile.weight();
  const double p = w.p();
  const DenominatorNodes nodes = denominator_nodes(u);

  std::vector<double> etas =
      truncated ? profile.truncated_values(nodes.x) : profile.eta_values(nodes.x);
  std::vector<double> uvals(nodes.x.size());
  std::vector<double> phis(nodes.x.size());
  for (std::size_t i = 0; i < nodes.x.size(); ++i) {
    uvals[i] = u(nodes.x[i]);
    phis[i] = w.phi(nodes.x[i]);
  }
  std::vector<double> product(nodes.x.size());
  kernels::mul(uvals, etas, product);
  kernels::abs_pow(product, p, product);
  double total = kernels::dot3(nodes.w, phis, product);

  if (nodes.sliver > 0.0) {
    // int_0^s eta^p phi = int_0^s -I'/I^p = I(s)^{1-p}/(p-1); s lies below T.
    const double s = nodes.sliver;
    total += std::pow(std::fabs(u(s)), p) * std::pow(tail_integral(w, s), 1.0 - p) / (p - 1.0);
  }
  return total;
}

void check_k(const Weight& w, std::int64_t k, double limit, const char* what, const char* name) {
  if (k < 2) throw DomainError(std::string(what) + ": k must be >= 2");
  if (!(1.0 / static_cast<double>(k) < limit)) {
    throw DomainError(std::string(what) + ": need 1/k < " + name + " (" + std::to_string(limit) +
                      ") for " + w.describe());
  }
}

std::size_t share(double weight, double total, std::size_t budget) {
  return static_cast<std::size_t>(std::llround(static_cast<double>(budget) * weight / total));
}

}  // namespace

double sharp_constant(double p) {
  if (!(p > 1.0)) throw DomainError("sharp_constant: p must be > 1");
  return std::pow((p - 1.0) / p, p);
}

QuotientReport hardy_quotient(const Weight& w, const EtaProfile& profile, const GridFunction& u,
                              bool truncated) {
  if (!(profile.weight() == w)) {
    throw InvalidParameter("hardy_quotient: profile was built from a different weight");
  }
  if (u.interpolation() != Interpolation::Linear) {
    throw InputError("hardy_quotient: step functions have no weak derivative");
  }
  if (std::fabs(u.a() - w.a()) > 1e-14 * std::max(1.0, w.a())) {
    throw InputError("hardy_quotient: grid function lives on a different interval");
  }
  if (u.is_zero()) throw DegenerateInput("hardy_quotient: u is identically zero");

  QuotientReport r;
  r.numerator = numerator_integral(w, u);
  r.denominator = denominator_integral(profile, u, truncated);
  if (!(r.denominator >= kDenominatorFloor)) {
    throw DegenerateInput("hardy_quotient: denominator below 1e-300");
  }
  r.quotient = r.numerator / r.denominator;
  r.sharp_constant = sharp_constant(w.p());
  r.margin = r.quotient - r.sharp_constant;
  return r;
}

GridFunction extremal_U_k(const Weight& w, std::int64_t k, std::size_t grid_size) {
  check_k(w, k, w.a(), "extremal_U_k", "a");
  if (grid_size < 16) throw InvalidParameter("extremal_U_k: grid_size must be >= 16");
  const double a = w.a();
  const double tk = 1.0 / static_cast<double>(k);
  const double mid = 0.5 * (tk + a);
  const double right_floor = 1e-8 * a;

  // Left: geometric in t from 1/k to mid. Right: geometric in a - t from a - mid
  // down to 1e-8 a, then a itself.
  const double left_span = std::log(mid / tk);
  const double right_span = std::log((a - mid) / right_floor);
  const std::size_t left_cells =
      std::clamp<std::size_t>(share(left_span, left_span + right_span, grid_size - 2), 4, grid_size - 6);
  const std::size_t right_cells = grid_size - 2 - left_cells;

  std::vector<double> nodes = quad::geometric_edges(tk, mid, left_cells);
  const std::vector<double> gaps = quad::geometric_edges(right_floor, a - mid, right_cells);
  for (std::size_t i = gaps.size() - 1; i-- > 0;) nodes.push_back(a - gaps[i]);
  nodes.push_back(a);

  const double power = (w.p() - 1.0) / w.p();
  std::vector<double> values = tail_integrals(w, nodes);
  for (double& v : values) v = std::pow(v, power);
  values.back() = 0.0;
  return GridFunction(std::move(nodes), std::move(values), a);
}

GridFunction extremal_V_k(const Weight& w, const EtaProfile& profile, std::int64_t k,
                          std::size_t grid_size) {
  if (!(profile.weight() == w)) {
    throw InvalidParameter("extremal_V_k: profile was built from a different weight");
  }
  const double T = profile.T();
  check_k(w, k, T, "extremal_V_k", "T");
  if (grid_size < 32) throw InvalidParameter("extremal_V_k: grid_size must be >= 32");
  const double a = w.a();
  const double tk = 1.0 / static_cast<double>(k);
  const double ramp_end = 0.5 * (a + T);
  constexpr std::size_t kRampCells = 16;

  std::vector<double> nodes = quad::geometric_edges(tk, T, grid_size - kRampCells - 2);
  const double power = (w.p() - 1.0) / w.p();
  std::vector<double> values = tail_integrals(w, nodes);
  for (double& v : values) v = std::pow(v, power);
  const double plateau = values.back();  // I(T)^{(p-1)/p}

  for (std::size_t j = 1; j <= kRampCells; ++j) {
    const double t = T + (ramp_end - T) * static_cast<double>(j) / kRampCells;
    nodes.push_back(j == kRampCells ? ramp_end : t);
    values.push_back(j == kRampCells ? 0.0 : plateau * (2.0 * t - a - T) / (T - a));
  }
  nodes.push_back(a);
  values.push_back(0.0);
  return GridFunction(std::move(nodes), std::move(values), a);
}

AkBk A_k_B_k(const Weight& w, std::int64_t k) {
  check_k(w, k, w.a(), "A_k_B_k", "a");
  const double a = w.a();
  const double p = w.p();
  const double tk = 1.0 / static_cast<double>(k);
  const quad::Rule& rule = quad::cell_rule();

  // A_k: geometric panels (ratio <= 2) from s up to 1/k.
  const double s = std::max(tk * 0x1p-60, 4.0 * a * kEndpointGuard);
  std::vector<double> ax;
  std::vector<double> aw;
  const auto a_cells = static_cast<std::size_t>(std::ceil(std::log2(tk / s)));
  quad::append_composite(quad::geometric_edges(s, tk, a_cells), rule, ax, aw);
  ax.push_back(tk);  // I(1/k) rides along in the same sweep
  const std::vector<double> ia = tail_integrals(w, ax);
  const double itk = ia.back();
  ax.pop_back();
  std::vector<double> ga(ax.size());
  for (std::size_t i = 0; i < ax.size(); ++i) ga[i] = w.inverse_root(ax[i]) / std::pow(ia[i], p);
  double head = kernels::dot(aw, ga);
  // Sliver [0, s]: the integrand behaves like t^{delta-1}.
  const double gs = w.inverse_root(s) / std::pow(tail_integral(w, s), p);
  head += s * gs / w.delta();

  // B_k: geometric in t from 1/k to the midpoint, geometric in a - t beyond.
  const double mid = 0.5 * (tk + a);
  const double floor_gap = a * kEndpointGuard;
  std::vector<double> bx;
  std::vector<double> bw;
  const auto left_cells = static_cast<std::size_t>(std::ceil(std::log2(mid / tk))) * 4 + 8;
  quad::append_composite(quad::geometric_edges(tk, mid, left_cells), rule, bx, bw);
  const auto right_cells = static_cast<std::size_t>(std::ceil(std::log2((a - mid) / floor_gap))) * 2;
  const std::vector<double> ib = tail_integrals(w, bx);
  std::vector<double> gb(bx.size());
  for (std::size_t i = 0; i < bx.size(); ++i) gb[i] = w.inverse_root(bx[i]) / ib[i];
  double b_k = kernels::dot(bw, gb);

  // Near a, integrate in the gap g = a - t with the tail accumulated in g as well.
  std::vector<double> gx;
  std::vector<double> gw;
  quad::append_composite(quad::geometric_edges(floor_gap, a - mid, right_cells), rule, gx, gw);
  auto root_at_gap = [&](double g) { return w.inverse_root(a - g); };
  std::vector<double> tail(gx.size());
  double running = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    const double lo = prev;
    const double hi = gx[i];
    double piece = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double g = lo + 0.5 * (hi - lo) * (rule.nodes[j] + 1.0);
      piece += 0.5 * (hi - lo) * rule.weights[j] * root_at_gap(g);
    }
    running += piece;
    tail[i] = running;
    prev = hi;
  }
  for (std::size_t i = 0; i < gx.size(); ++i) b_k += gw[i] * root_at_gap(gx[i]) / tail[i];

  return {std::pow(itk, p - 1.0) * head, b_k};
}

ConvergenceTable convergence_study(const Weight& w, const EtaProfile& profile,
                                   std::span<const std::int64_t> ks, bool truncated,
                                   std::size_t grid_size) {
  std::vector<std::int64_t> sorted(ks.begin(), ks.end());
  std::sort(sorted.begin(), sorted.end());
  // Validate every k before launching any work.
  for (std::int64_t k : sorted) {
    if (truncated) {
      check_k(w, k, profile.T(), "convergence_study", "T");
    } else {
      check_k(w, k, w.a(), "convergence_study", "a");
    }
  }

  std::vector<std::future<ConvergenceRow>> jobs;
  jobs.reserve(sorted.size());
  for (std::int64_t k : sorted) {
    jobs.push_back(std::async(std::launch::async, [&, k] {
      const GridFunction u =
          truncated ? extremal_V_k(w, profile, k, grid_size) : extremal_U_k(w, k, grid_size);
      const QuotientReport r = hardy_quotient(w, profile, u, truncated);
      return ConvergenceRow{k, r.quotient, r.margin};
    }));
  }

  ConvergenceTable table;
  table.sharp_constant = sharp_constant(w.p());
  for (auto& job : jobs) table.rows.push_back(job.get());
  table.trend_ok = true;
  table.lower_bound_ok = true;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (table.rows[i].quotient < table.sharp_constant - kLowerBoundSlack) table.lower_bound_ok = false;
    if (i > 0 && table.rows[i].margin > table.rows[i - 1].margin + kTrendSlack) table.trend_ok = false;
  }
  return table;
}

}  // namespace hardy
