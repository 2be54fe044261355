#include "hardy/random.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace hardy {
namespace {

std::vector<double> random_nodes(double a, Rng& rng, bool allow_zero_start) {
  std::uniform_int_distribution<int> count(8, 64);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int m = count(rng);
  const bool start_at_zero = allow_zero_start && unit(rng) < 0.5;
  for (;;) {
    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(m));
    if (start_at_zero) nodes.push_back(0.0);
    while (nodes.size() + 1 < static_cast<std::size_t>(m)) nodes.push_back(a * unit(rng));
    nodes.push_back(a);
    std::sort(nodes.begin(), nodes.end());
    bool spaced = true;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      if (nodes[i] - nodes[i - 1] < 1e-4 * a) spaced = false;
    }
    if (spaced) return nodes;
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finaliser
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

GridFunction random_grid_function(double a, Rng& rng) {
  std::vector<double> nodes = random_nodes(a, rng, true);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::vector<double> values(nodes.size());
  for (double& v : values) v = value(rng);
  values.back() = 0.0;
  return GridFunction(std::move(nodes), std::move(values), a);
}

GridFunction random_radial_profile(double a, Rng& rng) {
  std::vector<double> nodes = random_nodes(a, rng, true);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::vector<double> values(nodes.size());
  for (double& v : values) v = value(rng);
  values.back() = 0.0;
  return GridFunction(std::move(nodes), std::move(values), a);
}

GridFunction random_bump_profile(double a, Rng& rng, std::size_t nodes) {
  std::uniform_real_distribution<double> centre_dist(0.2 * a, 0.8 * a);
  std::uniform_real_distribution<double> width_dist(0.05 * a, 0.15 * a);
  std::uniform_real_distribution<double> height_dist(0.3, 1.0);
  std::uniform_real_distribution<double> base_dist(0.0, 0.5);
  const double centre = centre_dist(rng);
  const double width = width_dist(rng);
  const double height = height_dist(rng);
  const double base = base_dist(rng);
  std::vector<double> t(nodes);
  std::vector<double> v(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double x = a * static_cast<double>(i) / static_cast<double>(nodes - 1);
    const double z = (x - centre) / width;
    t[i] = x;
    v[i] = base * (1.0 - x / a) + height * std::exp(-z * z) * (1.0 - x / a);
  }
  t.back() = a;
  v.back() = 0.0;
  return GridFunction(std::move(t), std::move(v), a);
}

}  // namespace hardy
