// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "copcalc/kernels.hpp"

namespace copcalc::kernels {

namespace {

void caxpy_avx2(std::size_t n, double ar, double ai, const double* xr, const double* xi, double* yr, double* yi) {
  const __m256d vr = _mm256_set1_pd(ar);
  const __m256d vi = _mm256_set1_pd(ai);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d x_r = _mm256_loadu_pd(xr + k);
    const __m256d x_i = _mm256_loadu_pd(xi + k);
    __m256d y_r = _mm256_loadu_pd(yr + k);
    __m256d y_i = _mm256_loadu_pd(yi + k);
    y_r = _mm256_fmadd_pd(vr, x_r, y_r);
    y_r = _mm256_fnmadd_pd(vi, x_i, y_r);
    y_i = _mm256_fmadd_pd(vr, x_i, y_i);
    y_i = _mm256_fmadd_pd(vi, x_r, y_i);
    _mm256_storeu_pd(yr + k, y_r);
    _mm256_storeu_pd(yi + k, y_i);
  }
  for (; k < n; ++k) {
    yr[k] += ar * xr[k] - ai * xi[k];
    yi[k] += ar * xi[k] + ai * xr[k];
  }
}

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void cdotc_avx2(std::size_t n, const double* xr, const double* xi, const double* yr, const double* yi, double* out_re,
                double* out_im) {
  __m256d sr = _mm256_setzero_pd();
  __m256d si = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d x_r = _mm256_loadu_pd(xr + k);
    const __m256d x_i = _mm256_loadu_pd(xi + k);
    const __m256d y_r = _mm256_loadu_pd(yr + k);
    const __m256d y_i = _mm256_loadu_pd(yi + k);
    sr = _mm256_fmadd_pd(x_r, y_r, sr);
    sr = _mm256_fmadd_pd(x_i, y_i, sr);
    si = _mm256_fmadd_pd(x_r, y_i, si);
    si = _mm256_fnmadd_pd(x_i, y_r, si);
  }
  double tr = hsum(sr);
  double ti = hsum(si);
  for (; k < n; ++k) {
    tr += xr[k] * yr[k] + xi[k] * yi[k];
    ti += xr[k] * yi[k] - xi[k] * yr[k];
  }
  *out_re = tr;
  *out_im = ti;
}

void sigma_max_sq_avx2(std::size_t n, const double* ar, const double* ai, const double* br, const double* bi,
                       const double* cr, const double* ci, const double* dr, const double* di, double* out) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d four = _mm256_set1_pd(4.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a_r = _mm256_loadu_pd(ar + k), a_i = _mm256_loadu_pd(ai + k);
    const __m256d b_r = _mm256_loadu_pd(br + k), b_i = _mm256_loadu_pd(bi + k);
    const __m256d c_r = _mm256_loadu_pd(cr + k), c_i = _mm256_loadu_pd(ci + k);
    const __m256d d_r = _mm256_loadu_pd(dr + k), d_i = _mm256_loadu_pd(di + k);

    __m256d fro = _mm256_mul_pd(a_r, a_r);
    fro = _mm256_fmadd_pd(a_i, a_i, fro);
    fro = _mm256_fmadd_pd(b_r, b_r, fro);
    fro = _mm256_fmadd_pd(b_i, b_i, fro);
    fro = _mm256_fmadd_pd(c_r, c_r, fro);
    fro = _mm256_fmadd_pd(c_i, c_i, fro);
    fro = _mm256_fmadd_pd(d_r, d_r, fro);
    fro = _mm256_fmadd_pd(d_i, d_i, fro);

    // det = a d - b c
    __m256d det_r = _mm256_fmsub_pd(a_r, d_r, _mm256_mul_pd(a_i, d_i));
    det_r = _mm256_sub_pd(det_r, _mm256_fmsub_pd(b_r, c_r, _mm256_mul_pd(b_i, c_i)));
    __m256d det_i = _mm256_fmadd_pd(a_r, d_i, _mm256_mul_pd(a_i, d_r));
    det_i = _mm256_sub_pd(det_i, _mm256_fmadd_pd(b_r, c_i, _mm256_mul_pd(b_i, c_r)));

    __m256d det2 = _mm256_fmadd_pd(det_r, det_r, _mm256_mul_pd(det_i, det_i));
    __m256d disc = _mm256_fnmadd_pd(four, det2, _mm256_mul_pd(fro, fro));
    disc = _mm256_max_pd(disc, zero);
    const __m256d res = _mm256_mul_pd(half, _mm256_add_pd(fro, _mm256_sqrt_pd(disc)));
    _mm256_storeu_pd(out + k, res);
  }
  for (; k < n; ++k) {
    const double fro = ar[k] * ar[k] + ai[k] * ai[k] + br[k] * br[k] + bi[k] * bi[k] + cr[k] * cr[k] +
                       ci[k] * ci[k] + dr[k] * dr[k] + di[k] * di[k];
    const double det_re = (ar[k] * dr[k] - ai[k] * di[k]) - (br[k] * cr[k] - bi[k] * ci[k]);
    const double det_im = (ar[k] * di[k] + ai[k] * dr[k]) - (br[k] * ci[k] + bi[k] * cr[k]);
    const double disc = std::max(0.0, fro * fro - 4.0 * (det_re * det_re + det_im * det_im));
    out[k] = 0.5 * (fro + std::sqrt(disc));
  }
}

}  // namespace

const KernelTable& avx2_table_impl() {
  static const KernelTable table{"avx2", caxpy_avx2, cdotc_avx2, sigma_max_sq_avx2};
  return table;
}

}  // namespace copcalc::kernels
