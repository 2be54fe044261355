#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"

namespace hardy::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(HARDY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* env = std::getenv("HARDY_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return Backend::Scalar;
    if (want == "avx2" && backend_available(Backend::Avx2)) return Backend::Avx2;
    if (want == "neon" && backend_available(Backend::Neon)) return Backend::Neon;
  }
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return cpu_has_avx2();
    case Backend::Neon:
#if defined(HARDY_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw InvalidParameter("SIMD backend '" + std::string(backend_name(b)) +
                           "' is not available on this machine");
  }
  current().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
    if (backend_available(b)) out.push_back(b);
  }
  return out;
}

const KernelTable& active_table() {
  switch (active_backend()) {
#if defined(HARDY_HAVE_AVX2)
    case Backend::Avx2:
      return avx2_table();
#endif
#if defined(HARDY_HAVE_NEON)
    case Backend::Neon:
      return neon_table();
#endif
    default:
      return scalar_table();
  }
}

double sum(std::span<const double> x) { return active_table().sum(x.data(), x.size()); }

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  return active_table().dot(a.data(), b.data(), a.size());
}

double dot3(std::span<const double> a, std::span<const double> b, std::span<const double> c) {
  if (a.size() != b.size() || a.size() != c.size()) throw InputError("dot3: length mismatch");
  return active_table().dot3(a.data(), b.data(), c.data(), a.size());
}

void mul(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  if (a.size() != b.size() || a.size() != out.size()) throw InputError("mul: length mismatch");
  active_table().mul(a.data(), b.data(), out.data(), a.size());
}

void abs_pow(std::span<const double> x, double q, std::span<double> out) {
  if (x.size() != out.size()) throw InputError("abs_pow: length mismatch");
  const double r = std::round(q);
  if (r == q && r >= 1.0 && r <= 8.0) {
    active_table().abs_ipow(x.data(), static_cast<int>(r), out.data(), x.size());
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::pow(std::fabs(x[i]), q);
}

double weighted_abs_pow_sum(std::span<const double> w, std::span<const double> x, double q) {
  if (w.size() != x.size()) throw InputError("weighted_abs_pow_sum: length mismatch");
  std::vector<double> powered(x.size());
  abs_pow(x, q, powered);
  return dot(w, powered);
}

}  // namespace hardy::kernels
