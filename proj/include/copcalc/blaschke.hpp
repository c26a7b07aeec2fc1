#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "copcalc/moebius.hpp"

namespace copcalc {

struct BlaschkeZero {
  cplx a;
  std::uint64_t multiplicity = 1;
};

/// front * prod_n [ (|a_n|/a_n) (a_n - z) / (1 - conj(a_n) z) ]^{m_n},
/// with the factor z for a zero at the origin.
struct BlaschkeProduct {
  std::vector<BlaschkeZero> zeros;
  cplx front = 1.0;

  std::uint64_t degree() const;
};

struct TwoPointBlaschke {
  BlaschkeProduct product;
  /// Parabolic automorphism fixing 1 that carries the rotated zeta to -1
  /// (identity when zeta = -eta).
  Mobius tau = Mobius::identity();
  /// The product before tau and the rotation: zeros a, conj(a) with B0(1) = B0(-1) = 1.
  BlaschkeProduct normalized;
  int m = 0;
  double t2_normalized = 0.0;  // |B0'(-1)| used for the normalized construction
};

/// Finite Blaschke product with B(eta) = B(zeta) = eta, B'(eta) = t1,
/// |B'(zeta)| = t2.
TwoPointBlaschke construct_two_point(cplx zeta, cplx eta, double t1, double t2);

cplx evaluate(const BlaschkeProduct& B, cplx z);
std::pair<cplx, cplx> evaluate_with_derivative(const BlaschkeProduct& B, cplx z);

/// (B(z), B'(z), B''(z)).
std::array<cplx, 3> blaschke_jet(const BlaschkeProduct& B, cplx z);

/// sum over zeros (with multiplicity) of (1 - |a|^2) / |p - a|^2, p = +-1.
double boundary_derivative_sum(const BlaschkeProduct& B, double point);

/// Numerator and denominator in ascending powers, denominator(0) = 1.
struct ExpandedRational {
  std::vector<cplx> numerator;
  std::vector<cplx> denominator;
};

ExpandedRational expand(const BlaschkeProduct& B);

/// Factor (|a|/a)(a - z)/(1 - conj(a) z) as a Moebius map (z itself for a = 0).
Mobius blaschke_factor(cplx a);

}  // namespace copcalc
