#pragma once
// Brute-force references used only by the tests.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "copcalc/core.hpp"

namespace oracle {

using copcalc::cplx;
using Fn = std::function<cplx(cplx)>;

// k-th derivative at z0 by the trapezoid rule on |z - z0| = r.
inline cplx cauchy_derivative(const Fn& f, cplx z0, int k, double r = 1e-2, int n = 256) {
  cplx sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const cplx e = std::polar(1.0, 2.0 * copcalc::kPi * j / n);
    sum += f(z0 + r * e) / std::pow(r * e, k);
  }
  return std::tgamma(k + 1.0) * sum / static_cast<double>(n);
}

// Taylor coefficients at 0 from samples on |z| = r.
inline std::vector<cplx> cauchy_coeffs(const Fn& f, int N, double r = 0.9, int n = 4096) {
  std::vector<cplx> out(static_cast<std::size_t>(N), 0.0);
  for (int j = 0; j < n; ++j) {
    const cplx e = std::polar(1.0, 2.0 * copcalc::kPi * j / n);
    const cplx v = f(r * e);
    for (int k = 0; k < N; ++k) out[static_cast<std::size_t>(k)] += v * std::pow(std::conj(e), k);
  }
  for (int k = 0; k < N; ++k) out[static_cast<std::size_t>(k)] /= static_cast<double>(n) * std::pow(r, k);
  return out;
}

// Circle through three points: center and radius.
inline std::pair<cplx, double> circumcircle(cplx a, cplx b, cplx c) {
  const cplx w = (c - a) / (b - a);
  const cplx center = a + (b - a) * (w - std::norm(w)) / (w - std::conj(w));
  return {center, std::abs(center - a)};
}

// max over a uniform theta grid of |f(e^{i theta})|.
inline std::pair<double, cplx> circle_max(const Fn& f, int n = 1 << 16) {
  double best = -1.0;
  cplx at = 1.0;
  for (int j = 0; j < n; ++j) {
    const cplx z = std::polar(1.0, 2.0 * copcalc::kPi * j / n);
    const double v = std::abs(f(z));
    if (v > best) {
      best = v;
      at = z;
    }
  }
  return {best, at};
}

struct Random {
  std::mt19937_64 gen;
  explicit Random(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  cplx unimodular() { return std::polar(1.0, uniform(-copcalc::kPi, copcalc::kPi)); }
  cplx disk(double r = 1.0) { return std::polar(r * std::sqrt(uniform(0.0, 1.0)), uniform(-copcalc::kPi, copcalc::kPi)); }
  cplx plane(double r = 2.0) { return {uniform(-r, r), uniform(-r, r)}; }
};

}  // namespace oracle
