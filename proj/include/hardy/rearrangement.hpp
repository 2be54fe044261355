#pragma once

#include <span>
#include <vector>

#include "hardy/sphere.hpp"

namespace hardy {

// A measurable function on a set Omega given by values on cells of known measure.
class SampleSet {
 public:
  // Throws InputError on size mismatch, an empty set, a negative or non-finite
  // weight, a non-finite value, or zero total measure.
  SampleSet(std::vector<double> values, std::vector<double> weights);

  std::span<const double> values() const { return values_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return values_.size(); }
  double measure() const { return measure_; }

 private:
  std::vector<double> values_;
  std::vector<double> weights_;
  double measure_;
};

// mu(t) = |{ |u| > t }|
double distribution_function(const SampleSet& s, double t);

// u* as a step function on [0, |Omega|): level j on [W_{j-1}, W_j), levels strictly
// decreasing, ties merged by summing their measure, zero-measure samples dropped.
class DecreasingRearrangement {
 public:
  explicit DecreasingRearrangement(const SampleSet& s);

  std::span<const double> levels() const { return levels_; }
  // W_1 < W_2 < ... < W_J = |Omega|
  std::span<const double> cumulative() const { return cumulative_; }
  double measure() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }

  // u*(sigma) = v_j for the smallest j with W_j > sigma; 0 at sigma = |Omega|.
  // DomainError outside [0, |Omega|].
  double operator()(double sigma) const;
  // int_0^|Omega| |u*|^q
  double moment(double q) const;

 private:
  std::vector<double> levels_;
  std::vector<double> cumulative_;
};

double decreasing_rearrangement(const SampleSet& s, double sigma);

// u^sharp(theta) = u*(A(theta)) on the cap with |B(a*)| = |Omega|, as a step profile
// with nodes at A^{-1}(W_j). Throws InputError if A(a*) differs from |Omega| by more
// than 1e-10 relative.
SphericalProfile spherical_rearrangement(const SampleSet& s, const CapGeometry& geometry);

struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

// lhs = sum w u v, rhs = int_0^|Omega| u* v*. Both sets must live on the same
// cells (InputError otherwise). Throws AssertionFailure if lhs > rhs + 1e-9.
InequalitySides check_hardy_littlewood(const SampleSet& u, const SampleSet& v,
                                       const CapGeometry& geometry);

struct PolyaSzegoSides {
  double lhs = 0.0;  // int |grad u|^q of the reconstructed profile
  double rhs = 0.0;  // int |grad u^sharp|^q of the reconstructed rearrangement
  double lhs_exact = 0.0;  // int |grad u|^q of the input profile itself
};

// Radial Polya-Szego check. u is sampled at the midpoints of 8192 cells of equal
// cap measure; the samples and their decreasing rearrangement are rebuilt as
// piecewise-linear profiles through those same points, held constant down to
// theta = 0 and pinned to 0 at a*, and their energies compared. For non-increasing
// u both sides coincide. Throws InputError for step profiles and AssertionFailure
// if lhs < rhs - 1e-6.
PolyaSzegoSides check_polya_szego_radial(const CapGeometry& geometry, double q,
                                         const SphericalProfile& u);

// Spherical rearrangement of every radial shell, evaluated concurrently.
std::vector<SphericalProfile> steiner_per_shell(std::span<const SampleSet> shells,
                                                const CapGeometry& geometry);

}  // namespace hardy
