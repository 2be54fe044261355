#pragma once

#include <cstdint>
#include <random>

#include "hardy/grid_function.hpp"

namespace hardy {

// All random suites draw from a 64-bit Mersenne Twister seeded explicitly, so a
// (seed, call sequence) pair reproduces the same functions on a given platform.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5EEDF00D2024ULL;

// Derives an independent per-test seed from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Piecewise-linear function on [0, a] with 8..64 nodes, values in [-1, 1] and
// final value 0. The first node is 0 about half of the time; otherwise the
// function has a constant head on [0, t_0]. Adjacent nodes are at least 1e-4 a apart.
GridFunction random_grid_function(double a, Rng& rng);

// Non-negative radial profile on [0, a] (8..64 nodes, values in [0, 1], last value 0).
GridFunction random_radial_profile(double a, Rng& rng);

// Profile vanishing at a that is non-monotone: a decreasing background plus one
// interior bump of height >= 0.3 centred in (0.2 a, 0.8 a).
GridFunction random_bump_profile(double a, Rng& rng, std::size_t nodes = 257);

}  // namespace hardy
