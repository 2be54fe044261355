#include "hardy/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "hardy/errors.hpp"

namespace hardy {

GridFunction::GridFunction(std::vector<double> nodes, std::vector<double> values, double a,
                           Interpolation interpolation)
    : nodes_(std::move(nodes)), values_(std::move(values)), interpolation_(interpolation) {
  if (nodes_.size() != values_.size()) throw InputError("GridFunction: nodes/values size mismatch");
  if (nodes_.size() < 2) throw InputError("GridFunction: need at least two nodes");
  if (!(nodes_.front() >= 0.0)) throw InputError("GridFunction: nodes must be non-negative");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > nodes_[i - 1])) {
      throw InputError("GridFunction: nodes not strictly increasing at index " + std::to_string(i));
    }
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InputError("GridFunction: non-finite value");
  }
  if (std::fabs(nodes_.back() - a) > 1e-14 * std::max(1.0, std::fabs(a))) {
    throw InputError("GridFunction: last node must equal a");
  }
  nodes_.back() = a;
  if (values_.back() != 0.0) throw InputError("GridFunction: value at a must be exactly 0");
}

double GridFunction::operator()(double t) const {
  if (t <= nodes_.front()) return values_.front();
  if (t >= nodes_.back()) return 0.0;
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (interpolation_ == Interpolation::Step) return values_[i];
  const double s = (t - nodes_[i]) / (nodes_[i + 1] - nodes_[i]);
  return values_[i] + s * (values_[i + 1] - values_[i]);
}

double GridFunction::slope(std::size_t cell) const {
  return (values_[cell + 1] - values_[cell]) / (nodes_[cell + 1] - nodes_[cell]);
}

bool GridFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

GridFunction GridFunction::scaled(double factor) const {
  std::vector<double> v(values_);
  for (double& x : v) x *= factor;
  return GridFunction(nodes_, std::move(v), a(), interpolation_);
}

}  // namespace hardy
