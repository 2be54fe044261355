#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hardy {

enum class Interpolation {
  // Piecewise linear between nodes.
  Linear,
  // values[i] on [nodes[i], nodes[i+1]); right-continuous plateaus.
  Step,
};

// A function on [0, a] sampled on strictly increasing nodes t_0 < ... < t_M = a with
// u(t_M) = 0. It is extended by the constant u(t_0) on [0, t_0].
class GridFunction {
 public:
  // Throws InputError on size mismatch, fewer than two nodes, non-increasing or
  // negative nodes, last node not within 1e-14 of a, or nonzero last value.
  GridFunction(std::vector<double> nodes, std::vector<double> values, double a,
               Interpolation interpolation = Interpolation::Linear);

  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> values() const { return values_; }
  double a() const { return nodes_.back(); }
  std::size_t size() const { return nodes_.size(); }
  Interpolation interpolation() const { return interpolation_; }

  double operator()(double t) const;
  // Slope of the linear piece on [t_i, t_{i+1}].
  double slope(std::size_t cell) const;
  bool is_zero() const;
  GridFunction scaled(double factor) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
  Interpolation interpolation_;
};

}  // namespace hardy
