#include <algorithm>
#include <cmath>

#include "copcalc/kernels.hpp"

namespace copcalc::kernels {

namespace {

void caxpy_scalar(std::size_t n, double ar, double ai, const double* xr, const double* xi, double* yr, double* yi) {
  for (std::size_t k = 0; k < n; ++k) {
    yr[k] += ar * xr[k] - ai * xi[k];
    yi[k] += ar * xi[k] + ai * xr[k];
  }
}

void cdotc_scalar(std::size_t n, const double* xr, const double* xi, const double* yr, const double* yi, double* out_re,
                  double* out_im) {
  double sr = 0.0;
  double si = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sr += xr[k] * yr[k] + xi[k] * yi[k];
    si += xr[k] * yi[k] - xi[k] * yr[k];
  }
  *out_re = sr;
  *out_im = si;
}

void sigma_max_sq_scalar(std::size_t n, const double* ar, const double* ai, const double* br, const double* bi,
                         const double* cr, const double* ci, const double* dr, const double* di, double* out) {
  for (std::size_t k = 0; k < n; ++k) {
    const double fro = ar[k] * ar[k] + ai[k] * ai[k] + br[k] * br[k] + bi[k] * bi[k] + cr[k] * cr[k] +
                       ci[k] * ci[k] + dr[k] * dr[k] + di[k] * di[k];
    // det = a d - b c
    const double det_re = (ar[k] * dr[k] - ai[k] * di[k]) - (br[k] * cr[k] - bi[k] * ci[k]);
    const double det_im = (ar[k] * di[k] + ai[k] * dr[k]) - (br[k] * ci[k] + bi[k] * cr[k]);
    const double disc = std::max(0.0, fro * fro - 4.0 * (det_re * det_re + det_im * det_im));
    out[k] = 0.5 * (fro + std::sqrt(disc));
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", caxpy_scalar, cdotc_scalar, sigma_max_sq_scalar};
  return table;
}

}  // namespace copcalc::kernels
