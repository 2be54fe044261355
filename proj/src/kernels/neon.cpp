#include <arm_neon.h>

#include <cmath>

#include "hardy/kernels.hpp"

namespace hardy::kernels {
namespace {

double sum_neon(const double* x, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vld1q_f64(x + i));
    acc1 = vaddq_f64(acc1, vld1q_f64(x + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += x[i];
  return s;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double dot3_neon(const double* a, const double* b, const double* c, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)), vld1q_f64(c + i));
    acc1 = vfmaq_f64(acc1, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)),
                     vld1q_f64(c + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i] * c[i];
  return s;
}

void abs_ipow_neon(const double* x, int m, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vabsq_f64(vld1q_f64(x + i));
    float64x2_t r = v;
    for (int j = 1; j < m; ++j) r = vmulq_f64(r, v);
    vst1q_f64(out + i, r);
  }
  for (; i < n; ++i) {
    const double v = std::fabs(x[i]);
    double r = v;
    for (int j = 1; j < m; ++j) r *= v;
    out[i] = r;
  }
}

void mul_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{sum_neon, dot_neon, dot3_neon, abs_ipow_neon, mul_neon};
  return table;
}

}  // namespace hardy::kernels
