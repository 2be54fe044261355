#include "hardy/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy::quad {

const Rule& cell_rule() {
  static const Rule rule = [] {
    using G = boost::math::quadrature::gauss<double, kCellPoints>;
    // Boost stores the non-negative half of a symmetric even rule.
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    Rule r;
    for (std::size_t i = x.size(); i-- > 0;) {
      r.nodes.push_back(-x[i]);
      r.weights.push_back(w[i]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      r.nodes.push_back(x[i]);
      r.weights.push_back(w[i]);
    }
    return r;
  }();
  return rule;
}

namespace {

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

// Kronrod 15 / Gauss 7 pair on [lo, hi]; error estimate |K - G|.
Panel kronrod_panel(const std::function<double(double)>& f, double lo, double hi) {
  using K = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G = boost::math::quadrature::gauss<double, 7>;
  // Kronrod abscissae (non-negative half, ascending from 0); the odd positions are
  // the Gauss-7 nodes.
  const auto& xk = K::abscissa();
  const auto& wk = K::weights();
  const auto& wg = G::weights();
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double f0 = f(c);
  double kron = wk[0] * f0;
  double gauss = wg[0] * f0;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double pair = f(c - h * xk[i]) + f(c + h * xk[i]);
    kron += wk[i] * pair;
    if (i % 2 == 0) gauss += wg[i / 2] * pair;
  }
  return {lo, hi, h * kron, std::fabs(h * (kron - gauss))};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double lo, double hi, const Tolerance& tol) {
  if (!(hi >= lo)) throw DomainError("integrate: hi < lo");
  if (hi == lo) return {};
  auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);
  std::vector<Panel> done;
  const Panel first = kronrod_panel(f, lo, hi);
  heap.push(first);
  double value = first.value;
  double error = first.error;
  std::size_t count = 1;
  while (!heap.empty() && error > tol.rel * std::fabs(value)) {
    if (count >= tol.max_intervals) {
      throw NumericalError("integrate: no convergence on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "], error estimate " + std::to_string(error));
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      done.push_back(worst);  // too narrow to split further
      continue;
    }
    const Panel left = kronrod_panel(f, worst.lo, mid);
    const Panel right = kronrod_panel(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  if (!std::isfinite(value)) throw NumericalError("integrate: non-finite result");
  // Re-sum panel by panel from the left so the result does not carry the running
  // update's cancellation error.
  std::vector<Panel> panels = std::move(done);
  for (; !heap.empty(); heap.pop()) panels.push_back(heap.top());
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  Result out;
  for (const Panel& p : panels) {
    out.value += p.value;
    out.error += p.error;
  }
  return out;
}

Result integrate_graded(const std::function<double(double)>& f, double lo, double hi,
                        const Tolerance& tol) {
  if (!(hi >= lo)) throw DomainError("integrate_graded: hi < lo");
  if (lo <= 0.0 || lo >= 0.01 * hi) return integrate(f, lo, hi, tol);
  Result out;
  double left = lo;
  while (left < 0.01 * hi) {
    const double right = 2.0 * left;
    const Result r = integrate(f, left, right, tol);
    out.value += r.value;
    out.error += r.error;
    left = right;
  }
  const Result r = integrate(f, left, hi, tol);
  out.value += r.value;
  out.error += r.error;
  return out;
}

void append_composite(std::span<const double> edges, const Rule& rule,
                      std::vector<double>& nodes, std::vector<double>& weights) {
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double c = 0.5 * (edges[i] + edges[i + 1]);
    const double h = 0.5 * (edges[i + 1] - edges[i]);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      nodes.push_back(c + h * rule.nodes[j]);
      weights.push_back(h * rule.weights[j]);
    }
  }
}

std::vector<double> geometric_edges(double lo, double hi, std::size_t cells) {
  if (!(lo > 0.0 && hi > lo) || cells == 0) {
    throw InvalidParameter("geometric_edges: need 0 < lo < hi and cells > 0");
  }
  std::vector<double> edges(cells + 1);
  const double ratio = std::log(hi / lo);
  for (std::size_t i = 0; i <= cells; ++i) {
    edges[i] = lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(cells));
  }
  edges.front() = lo;
  edges.back() = hi;
  return edges;
}

}  // namespace hardy::quad
