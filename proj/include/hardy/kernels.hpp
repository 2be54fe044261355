#pragma once

// Reduction kernels shared by the quadrature-heavy modules.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, a vector implementation (AVX2+FMA on x86-64, NEON on AArch64).
// The active backend is chosen once at startup from the CPU feature flags; it can
// be pinned with the HARDY_SIMD environment variable ("scalar", "avx2", "neon")
// or programmatically with set_backend(). Vector backends reassociate sums, so
// results agree with the scalar reference to rounding, not bit-for-bit.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace hardy::kernels {

enum class Backend { Scalar, Avx2, Neon };

struct KernelTable {
  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*dot3)(const double* a, const double* b, const double* c, std::size_t n);
  // out[i] = |x[i]|^m for a small positive integer m.
  void (*abs_ipow)(const double* x, int m, double* out, std::size_t n);
  // out[i] = a[i] * b[i]
  void (*mul)(const double* a, const double* b, double* out, std::size_t n);
};

const KernelTable& scalar_table();
#if defined(HARDY_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(HARDY_HAVE_NEON)
const KernelTable& neon_table();
#endif

bool backend_available(Backend b);
Backend active_backend();
// Throws InvalidParameter if the backend is not available on this machine.
void set_backend(Backend b);
std::string_view backend_name(Backend b);
std::vector<Backend> available_backends();

const KernelTable& active_table();

// Convenience wrappers over the active table.
double sum(std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
double dot3(std::span<const double> a, std::span<const double> b, std::span<const double> c);
void mul(std::span<const double> a, std::span<const double> b, std::span<double> out);

// out[i] = |x[i]|^q. Integer exponents 1..8 go through the vector kernel;
// other exponents fall back to std::pow per element.
void abs_pow(std::span<const double> x, double q, std::span<double> out);

// sum_i w[i] * |x[i]|^q
double weighted_abs_pow_sum(std::span<const double> w, std::span<const double> x, double q);

}  // namespace hardy::kernels
