// Truncated power-series arithmetic and Taylor expansions of chains.

#include <cmath>

#include "copcalc/kernels.hpp"
#include "copcalc/numerics.hpp"

namespace copcalc {

namespace {

Series identity_series(int N) {
  Series s(static_cast<std::size_t>(N), 0.0);
  if (N > 1) s[1] = 1.0;
  return s;
}

void check_order(int N) {
  if (N < 1 || N > 4096) throw ValidationError("series order must lie in [1, 4096]");
}

void check_pole_outside(const Mobius& f) {
  if (!(std::abs(f.d()) > std::abs(f.c()) * (1.0 + tol::kDegenerate))) throw DomainError("pole inside disk");
}

// (a s + b) / (c s + d) for a series s with |s| < 1 on the disk.
Series apply(const Mobius& f, const Series& s, int N) {
  check_pole_outside(f);
  Series num(s.size()), den(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    num[k] = f.a() * s[k];
    den[k] = f.c() * s[k];
  }
  num[0] += f.b();
  den[0] += f.d();
  return series_div(num, den, N);
}

Series series_pow(Series base, std::uint64_t k, int N) {
  Series out(static_cast<std::size_t>(N), 0.0);
  out[0] = 1.0;
  while (k != 0) {
    if (k & 1u) out = series_mul(out, base, N);
    k >>= 1u;
    if (k != 0) base = series_mul(base, base, N);
  }
  return out;
}

Series apply(const BlaschkeProduct& B, const Series& s, int N) {
  Series out(static_cast<std::size_t>(N), 0.0);
  out[0] = B.front;
  for (const auto& zero : B.zeros) {
    out = series_mul(out, series_pow(apply(blaschke_factor(zero.a), s, N), zero.multiplicity, N), N);
  }
  return out;
}

}  // namespace

Series series_mul(const Series& x, const Series& y, int N) {
  const auto n = static_cast<std::size_t>(N);
  std::vector<double> xr(n, 0.0), xi(n, 0.0), yr(n, 0.0), yi(n, 0.0), out_r(n, 0.0), out_i(n, 0.0);
  for (std::size_t k = 0; k < std::min(n, x.size()); ++k) {
    xr[k] = x[k].real();
    xi[k] = x[k].imag();
  }
  for (std::size_t k = 0; k < std::min(n, y.size()); ++k) {
    yr[k] = y[k].real();
    yi[k] = y[k].imag();
  }
  const auto& kt = kernels::active();
  // out[k + j] += x[k] * y[j]
  for (std::size_t k = 0; k < n; ++k) {
    if (xr[k] == 0.0 && xi[k] == 0.0) continue;
    kt.caxpy(n - k, xr[k], xi[k], yr.data(), yi.data(), out_r.data() + k, out_i.data() + k);
  }
  Series out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = {out_r[k], out_i[k]};
  return out;
}

Series series_div(const Series& x, const Series& y, int N) {
  if (y.empty() || y[0] == cplx(0.0)) throw DomainError("series division by a series vanishing at 0");
  const auto n = static_cast<std::size_t>(N);
  Series q(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = k < x.size() ? x[k] : cplx(0.0);
    for (std::size_t j = 1; j <= k && j < y.size(); ++j) acc -= y[j] * q[k - j];
    q[k] = acc / y[0];
  }
  return q;
}

Series taylor_coeffs(const Mobius& f, int N) {
  check_order(N);
  check_pole_outside(f);
  // (a z + b) * (1/d) sum (-c z / d)^k
  Series out(static_cast<std::size_t>(N));
  const cplx r = -f.c() / f.d();
  cplx g = 1.0 / f.d();
  cplx prev = 0.0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = f.b() * g + f.a() * prev;
    prev = g;
    g *= r;
  }
  return out;
}

Series taylor_coeffs(const BlaschkeProduct& B, int N) {
  check_order(N);
  return apply(B, identity_series(N), N);
}

Series taylor_coeffs(const Chain& chain, int N) {
  check_order(N);
  Series s = identity_series(N);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    s = std::visit([&](const auto& m) { return apply(m, s, N); }, *it);
  }
  return s;
}

}  // namespace copcalc
