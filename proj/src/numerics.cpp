#include "copcalc/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "copcalc/kernels.hpp"

namespace copcalc {

TruncatedOperator TruncatedOperator::zeros(int n) {
  TruncatedOperator T;
  T.n = n;
  const auto size = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  T.re.assign(size, 0.0);
  T.im.assign(size, 0.0);
  return T;
}

void TruncatedOperator::set(int row, int col, cplx v) {
  const auto k = static_cast<std::size_t>(col) * static_cast<std::size_t>(n) + static_cast<std::size_t>(row);
  re[k] = v.real();
  im[k] = v.imag();
}

TruncatedOperator composition_matrix(const Chain& chain, int N, std::string descriptor) {
  const Series psi = taylor_coeffs(chain, N);
  const auto n = static_cast<std::size_t>(N);
  TruncatedOperator T = TruncatedOperator::zeros(N);
  T.symbol_map = std::move(descriptor);
  std::vector<double> pr(n), pi(n);
  for (std::size_t k = 0; k < n; ++k) {
    pr[k] = psi[k].real();
    pi[k] = psi[k].imag();
  }
  T.re[0] = 1.0;
  const auto& kt = kernels::active();
  // column j = column (j - 1) * psi, truncated
  for (std::size_t j = 1; j < n; ++j) {
    const double* prev_r = T.re.data() + (j - 1) * n;
    const double* prev_i = T.im.data() + (j - 1) * n;
    double* col_r = T.re.data() + j * n;
    double* col_i = T.im.data() + j * n;
    for (std::size_t k = 0; k < n; ++k) {
      if (prev_r[k] == 0.0 && prev_i[k] == 0.0) continue;
      kt.caxpy(n - k, prev_r[k], prev_i[k], pr.data(), pi.data(), col_r + k, col_i + k);
    }
  }
  return T;
}

TruncatedOperator composition_matrix(const Mobius& f, int N) { return composition_matrix(Chain{f}, N, "moebius"); }

TruncatedOperator adjoint_minus(const TruncatedOperator& T) {
  TruncatedOperator out = TruncatedOperator::zeros(T.n);
  out.symbol_map = "adjoint minus " + T.symbol_map;
  for (int i = 0; i < T.n; ++i) {
    for (int j = 0; j < T.n; ++j) out.set(i, j, std::conj(T.at(j, i)) - T.at(i, j));
  }
  return out;
}

double operator_norm(const TruncatedOperator& T, int row_begin, PowerIterationOptions opts) {
  if (row_begin < 0 || row_begin >= T.n) throw ValidationError("row range out of bounds");
  const auto n = static_cast<std::size_t>(T.n);
  const auto r0 = static_cast<std::size_t>(row_begin);
  const std::size_t rows = n - r0;
  const auto& kt = kernels::active();

  std::vector<double> vr(n), vi(n, 0.0), yr(rows), yi(rows);
  for (std::size_t j = 0; j < n; ++j) vr[j] = 1.0 / std::sqrt(static_cast<double>(j) + 1.0);
  auto normalize = [&]() {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += vr[j] * vr[j] + vi[j] * vi[j];
    s = std::sqrt(s);
    if (s == 0.0) return false;
    for (std::size_t j = 0; j < n; ++j) {
      vr[j] /= s;
      vi[j] /= s;
    }
    return true;
  };
  normalize();

  double lambda = 0.0;
  for (int step = 0; step < opts.max_steps; ++step) {
    // y = T v on the selected rows
    std::fill(yr.begin(), yr.end(), 0.0);
    std::fill(yi.begin(), yi.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      kt.caxpy(rows, vr[j], vi[j], T.re.data() + j * n + r0, T.im.data() + j * n + r0, yr.data(), yi.data());
    }
    double next = 0.0;
    for (std::size_t i = 0; i < rows; ++i) next += yr[i] * yr[i] + yi[i] * yi[i];
    // v = T* y
    for (std::size_t j = 0; j < n; ++j) {
      kt.cdotc(rows, T.re.data() + j * n + r0, T.im.data() + j * n + r0, yr.data(), yi.data(), &vr[j], &vi[j]);
    }
    const bool done = std::abs(next - lambda) <= opts.tol * next;
    lambda = next;
    if (done || !normalize()) break;
  }
  return std::sqrt(lambda);
}

double tail_norm(const TruncatedOperator& T, int N0, PowerIterationOptions opts) {
  if (N0 <= 0 || N0 >= T.n) throw ValidationError("tail_norm needs 0 < N0 < N");
  return operator_norm(T, N0, opts);
}

double kernel_gram(const Combination& combo, cplx z) {
  if (!(std::abs(z) < 1.0)) throw ValidationError("kernel point must lie in the open disk");
  std::vector<cplx> w;
  w.reserve(combo.size());
  for (const auto& [c, psi] : combo) {
    const cplx v = psi(z);
    if (!(std::abs(v) < 1.0)) throw DomainError("psi(z) on or outside the unit circle");
    w.push_back(v);
  }
  cplx sum = 0.0;
  for (std::size_t i = 0; i < combo.size(); ++i) {
    for (std::size_t j = 0; j < combo.size(); ++j) {
      sum += std::conj(combo[i].first) * combo[j].first / (1.0 - std::conj(w[i]) * w[j]);
    }
  }
  return (1.0 - std::norm(z)) * sum.real();
}

cplx gamma_circle(cplx alpha, double D, double theta) {
  if (!(D > 0.0)) throw ValidationError("D must be positive");
  if (!is_unimodular(alpha)) throw ValidationError("alpha must be unimodular");
  const double c0 = 4.0 * D / (4.0 * D + 1.0);
  const double r = 1.0 / (4.0 * D + 1.0);
  return alpha / std::abs(alpha) * (c0 + r * std::polar(1.0, theta));
}

double gamma_angle_for_distance(double D, double delta) {
  if (!(D > 0.0)) throw ValidationError("D must be positive");
  const double c0 = 4.0 * D / (4.0 * D + 1.0);
  const double r = 1.0 / (4.0 * D + 1.0);
  const double lo = c0 - r;
  if (!(delta > 0.0) || 1.0 - delta < std::abs(lo)) throw ValidationError("distance not reached on this circle");
  const double target = (1.0 - delta) * (1.0 - delta);
  return std::acos(std::clamp((target - c0 * c0 - r * r) / (2.0 * c0 * r), -1.0, 1.0));
}

SelfAdjointReport mod_compact_selfadjoint_check(double a, cplx gamma, int N) {
  if (!(a >= 0.0)) throw ValidationError("a must be non-negative");
  if (N < 16) throw ValidationError("N must be at least 16");
  const TruncatedOperator M = composition_matrix(parabolic(gamma, a), N);
  const TruncatedOperator D = adjoint_minus(M);
  SelfAdjointReport out;
  for (int n0 : {N / 8, N / 4, N / 2}) {
    out.n0.push_back(n0);
    out.tails.push_back(tail_norm(D, n0));
  }
  out.decreasing = out.tails[0] > out.tails[1] && out.tails[1] > out.tails[2];
  return out;
}

}  // namespace copcalc
