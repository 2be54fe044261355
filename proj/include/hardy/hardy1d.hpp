#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hardy/eta.hpp"
#include "hardy/grid_function.hpp"
#include "hardy/weights.hpp"

namespace hardy {

// ((p-1)/p)^p. DomainError for p <= 1.
double sharp_constant(double p);

struct QuotientReport {
  double numerator = 0.0;    // int |u'|^p phi
  double denominator = 0.0;  // int |u|^p eta^p phi (eta or eta_T)
  double quotient = 0.0;
  double sharp_constant = 0.0;
  double margin = 0.0;  // quotient - sharp_constant
};

// Numerator: exact per cell (|u'| is constant, int phi by adaptive quadrature).
// Denominator: 16-point Gauss per cell; on the cell touching t = 0 the range is
// split geometrically down to ~1e-12 of its length and the remaining sliver is
// closed with the antiderivative int_0^s eta^p phi = I(s)^{1-p}/(p-1).
// Throws DegenerateInput for u == 0 or a denominator below 1e-300, InputError for
// step-interpolated u or a grid on a different interval, InvalidParameter when the
// profile was built from another weight.
QuotientReport hardy_quotient(const Weight& w, const EtaProfile& profile, const GridFunction& u,
                              bool truncated);

inline constexpr std::size_t kDefaultExtremalGrid = 4096;

// U_k: constant I(1/k)^{(p-1)/p} on [0, 1/k], I(t)^{(p-1)/p} on [1/k, a]. Sampled on
// nodes geometric in t from 1/k and geometric in a - t toward a (down to 1e-8 a).
GridFunction extremal_U_k(const Weight& w, std::int64_t k,
                          std::size_t grid_size = kDefaultExtremalGrid);

// V_k: U_k on [0, T), linear ramp from I(T)^{(p-1)/p} to 0 on [T, (a+T)/2), zero after.
GridFunction extremal_V_k(const Weight& w, const EtaProfile& profile, std::int64_t k,
                          std::size_t grid_size = kDefaultExtremalGrid);

struct AkBk {
  double A_k = 0.0;
  double B_k = 0.0;
};

// A_k = I(1/k)^{p-1} int_0^{1/k} phi^{-1/(p-1)} / I^p dt and
// B_k = int_{1/k}^{b} phi^{-1/(p-1)} / I dt with b = a (1 - 1e-12). The integrand of
// B_k behaves like 1/(a - t) at the right end, so the integral is cut at the
// endpoint guard of eta.
AkBk A_k_B_k(const Weight& w, std::int64_t k);

struct ConvergenceRow {
  std::int64_t k = 0;
  double quotient = 0.0;
  double margin = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;  // sorted by k
  double sharp_constant = 0.0;
  // margin[i+1] <= margin[i] + 1e-4 for consecutive rows.
  bool trend_ok = false;
  // Every quotient >= sharp_constant - 1e-9.
  bool lower_bound_ok = false;
};

// Quotients of V_k (truncated) or U_k (untruncated) for each k. Values of k are
// evaluated concurrently; the table does not depend on evaluation order.
ConvergenceTable convergence_study(const Weight& w, const EtaProfile& profile,
                                   std::span<const std::int64_t> ks, bool truncated,
                                   std::size_t grid_size = kDefaultExtremalGrid);

}  // namespace hardy
