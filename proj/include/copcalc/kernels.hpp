#pragma once

// Data-parallel inner loops, stored split (separate real and imaginary
// arrays). Each kernel has a scalar reference and, on x86-64, an AVX2+FMA
// variant; the active table is picked once at first use from CPUID and the
// COPCALC_SIMD environment variable ("scalar" or "avx2").

#include <cstddef>
#include <string_view>

namespace copcalc::kernels {

struct KernelTable {
  const char* name;

  /// y += alpha * x over n complex entries.
  void (*caxpy)(std::size_t n, double alpha_re, double alpha_im, const double* x_re, const double* x_im,
                double* y_re, double* y_im);

  /// sum_i conj(x_i) * y_i; result written to (*out_re, *out_im).
  void (*cdotc)(std::size_t n, const double* x_re, const double* x_im, const double* y_re, const double* y_im,
                double* out_re, double* out_im);

  /// Largest squared singular value of the 2x2 complex matrices
  /// [[e11, e12], [e21, e22]]_i, i < n:
  /// (|F|_F^2 + sqrt(|F|_F^4 - 4 |det F|^2)) / 2.
  void (*sigma_max_sq)(std::size_t n, const double* e11_re, const double* e11_im, const double* e12_re,
                       const double* e12_im, const double* e21_re, const double* e21_im, const double* e22_re,
                       const double* e22_im, double* out);
};

const KernelTable& scalar_table();

/// AVX2 table, or nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_table();

/// The table used by the library.
const KernelTable& active();

/// Force a backend by name ("scalar", "avx2"); returns false if unavailable.
bool select(std::string_view name);

}  // namespace copcalc::kernels
