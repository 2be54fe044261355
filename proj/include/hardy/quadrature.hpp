#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hardy::quad {

// Nodes and weights of a Gauss-Legendre rule on [-1, 1], nodes ascending.
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// 16-point rule used for per-cell integration of the quotient integrals.
inline constexpr std::size_t kCellPoints = 16;
const Rule& cell_rule();

struct Result {
  double value = 0.0;
  double error = 0.0;
};

struct Tolerance {
  double rel = 1e-12;
  std::size_t max_intervals = 4000;
};

// Globally adaptive Gauss-Kronrod (7/15) integration on [lo, hi]: the subinterval
// with the largest error estimate is bisected until the total estimate is below
// rel * |value|. Throws NumericalError when max_intervals is hit.
Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol = {});

// Like integrate(), but when lo < 0.01 * hi the range is first split into
// geometric panels [lo, 2 lo], [2 lo, 4 lo], ... so that integrands growing like a
// power of 1/t at the left end are resolved panel by panel.
Result integrate_graded(const std::function<double(double)>& f, double lo, double hi,
                        const Tolerance& tol = {});

// Maps the reference rule onto each cell [edges[i], edges[i+1]] and appends the
// physical nodes and weights. Output nodes are ascending when edges are.
void append_composite(std::span<const double> edges, const Rule& rule,
                      std::vector<double>& nodes, std::vector<double>& weights);

// Edges of a geometric grid from lo to hi (both > 0) with the given number of cells.
std::vector<double> geometric_edges(double lo, double hi, std::size_t cells);

}  // namespace hardy::quad
