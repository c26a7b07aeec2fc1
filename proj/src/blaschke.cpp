#include "copcalc/blaschke.hpp"

#include <cmath>

namespace copcalc {

namespace {

constexpr int kMaxDoublings = 64;
constexpr std::uint64_t kMaxExpandDegree = 4096;

using Jet2 = std::array<cplx, 3>;

Jet2 jet_mul(const Jet2& u, const Jet2& v) {
  return {u[0] * v[0], u[1] * v[0] + u[0] * v[1], u[2] * v[0] + 2.0 * u[1] * v[1] + u[0] * v[2]};
}

// Jet of f^k from the jet of f.
Jet2 jet_pow(const Jet2& f, std::uint64_t k) {
  if (k == 0) return {1.0, 0.0, 0.0};
  const double kd = static_cast<double>(k);
  const cplx fk2 = (k >= 2) ? std::pow(f[0], kd - 2.0) : cplx(1.0);
  const cplx fk1 = (k >= 2) ? fk2 * f[0] : cplx(1.0);
  const cplx fk = fk1 * f[0];
  const cplx second = (k >= 2 ? kd * (kd - 1.0) * fk2 * f[1] * f[1] : cplx(0.0)) + kd * fk1 * f[2];
  return {fk, kd * fk1 * f[1], second};
}

std::vector<cplx> poly_mul(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  std::vector<cplx> out(x.size() + y.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

std::vector<cplx> poly_pow(std::vector<cplx> base, std::uint64_t k) {
  std::vector<cplx> out{1.0};
  while (k != 0) {
    if (k & 1u) out = poly_mul(out, base);
    k >>= 1u;
    if (k != 0) base = poly_mul(base, base);
  }
  return out;
}

// Two-point product with eta = 1, zeta = -1.
BlaschkeProduct normalized_two_point(double t1, double t2, int& m_out) {
  int m = 1;
  while (std::ldexp(1.0, 2 * m) < t1 * t2) {
    if (++m > kMaxDoublings) throw DomainError("construction overflow");
  }
  m_out = m;
  const double tau1 = std::ldexp(t1, -m);
  const double tau2 = std::ldexp(t2, -m);
  const double x1 = tau1 / (tau1 + 1.0), r1 = 1.0 / (tau1 + 1.0);
  const double x2 = -tau2 / (tau2 + 1.0), r2 = 1.0 / (tau2 + 1.0);
  const double x = 0.5 * (x1 + x2) + (r1 * r1 - r2 * r2) / (2.0 * (x2 - x1));
  // Tangent circles give a marginally negative y^2 from rounding.
  const double y2 = std::max(0.0, r1 * r1 - (x - x1) * (x - x1));
  const double y = std::sqrt(y2);
  const std::uint64_t half = std::uint64_t{1} << (m - 1);
  BlaschkeProduct B;
  if (y <= 1e-15) {
    B.zeros.push_back({cplx(x, 0.0), 2 * half});
  } else {
    B.zeros.push_back({cplx(x, y), half});
    B.zeros.push_back({cplx(x, -y), half});
  }
  return B;
}

}  // namespace

std::uint64_t BlaschkeProduct::degree() const {
  std::uint64_t d = 0;
  for (const auto& z : zeros) d += z.multiplicity;
  return d;
}

Mobius blaschke_factor(cplx a) {
  if (std::abs(a) >= 1.0) throw ValidationError("Blaschke zero must lie in the open disk");
  if (a == cplx(0.0)) return Mobius::identity();
  const cplx u = std::abs(a) / a;
  return {-u, u * a, -std::conj(a), 1.0};
}

std::array<cplx, 3> blaschke_jet(const BlaschkeProduct& B, cplx z) {
  if (std::abs(z) > 1.0 + 1e-12) throw ValidationError("Blaschke evaluation outside the closed disk");
  Jet2 acc{B.front, 0.0, 0.0};
  for (const auto& zero : B.zeros) {
    if (std::abs(1.0 - std::conj(zero.a) * z) < 1e-12) throw DomainError("evaluation at pole");
    const auto j = jet(blaschke_factor(zero.a), z, 2);
    acc = jet_mul(acc, jet_pow({j[0], j[1], j[2]}, zero.multiplicity));
  }
  return acc;
}

cplx evaluate(const BlaschkeProduct& B, cplx z) { return blaschke_jet(B, z)[0]; }

std::pair<cplx, cplx> evaluate_with_derivative(const BlaschkeProduct& B, cplx z) {
  const auto j = blaschke_jet(B, z);
  return {j[0], j[1]};
}

double boundary_derivative_sum(const BlaschkeProduct& B, double point) {
  double sum = 0.0;
  for (const auto& zero : B.zeros) {
    sum += static_cast<double>(zero.multiplicity) * (1.0 - std::norm(zero.a)) / std::norm(point - zero.a);
  }
  return sum;
}

TwoPointBlaschke construct_two_point(cplx zeta, cplx eta, double t1, double t2) {
  if (!is_unimodular(zeta) || !is_unimodular(eta)) throw ValidationError("zeta and eta must be unimodular");
  if (!(t1 > 0.0 && t2 > 0.0) || !std::isfinite(t1) || !std::isfinite(t2)) {
    throw ValidationError("t1 and t2 must be positive");
  }
  zeta /= std::abs(zeta);
  eta /= std::abs(eta);
  if (std::abs(zeta - eta) <= tol::kBoundary) throw ValidationError("zeta and eta must be distinct");

  TwoPointBlaschke out;
  const cplx zt = zeta * std::conj(eta);  // zeta after rotating eta to 1
  double t2n = t2;
  if (std::abs(zt + 1.0) > tol::kBoundary) {
    const cplx a = -(1.0 + zt) / (1.0 - zt);
    out.tau = parabolic(1.0, cplx(0.0, a.imag()), true);
    t2n = t2 / std::abs(jet(out.tau, zt, 1)[1]);
  }
  out.t2_normalized = t2n;
  out.normalized = normalized_two_point(t1, t2n, out.m);

  // Pull zeros back through tau, then rotate by eta; fix the unimodular
  // constant from B(eta) = eta.
  const Mobius tau_inv = out.tau.inverse();
  BlaschkeProduct& B = out.product;
  for (const auto& zero : out.normalized.zeros) {
    cplx c = eta * tau_inv(zero.a);
    if (std::abs(c) <= 1e-15) c = 0.0;
    B.zeros.push_back({c, zero.multiplicity});
  }
  B.front = 1.0;
  const cplx raw = evaluate(B, eta);
  B.front = eta / raw;
  B.front /= std::abs(B.front);
  return out;
}

ExpandedRational expand(const BlaschkeProduct& B) {
  if (B.degree() > kMaxExpandDegree) throw DomainError("product too large to expand");
  std::vector<cplx> num{B.front};
  std::vector<cplx> den{1.0};
  for (const auto& zero : B.zeros) {
    if (zero.a == cplx(0.0)) {
      num = poly_mul(num, poly_pow({0.0, 1.0}, zero.multiplicity));
      continue;
    }
    const cplx u = std::abs(zero.a) / zero.a;
    num = poly_mul(num, poly_pow({u * zero.a, -u}, zero.multiplicity));
    den = poly_mul(den, poly_pow({1.0, -std::conj(zero.a)}, zero.multiplicity));
  }
  return {num, den};
}

}  // namespace copcalc
