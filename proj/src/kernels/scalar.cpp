#include <cmath>

#include "hardy/kernels.hpp"

namespace hardy::kernels {
namespace {

double sum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i] * c[i];
  return s;
}

void abs_ipow_scalar(const double* x, int m, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::fabs(x[i]);
    double r = v;
    for (int j = 1; j < m; ++j) r *= v;
    out[i] = r;
  }
}

void mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{sum_scalar, dot_scalar, dot3_scalar, abs_ipow_scalar, mul_scalar};
  return table;
}

}  // namespace hardy::kernels
