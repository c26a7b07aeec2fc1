#pragma once

#include <climits>
#include <string>
#include <variant>
#include <vector>

#include "copcalc/blaschke.hpp"
#include "copcalc/boundary.hpp"
#include "copcalc/moebius.hpp"

namespace copcalc {

using Series = std::vector<cplx>;

/// A factor of a composition chain.
using MapSpec = std::variant<Mobius, BlaschkeProduct>;

/// chain[0] o chain[1] o ... o chain.back(); the last map acts first.
using Chain = std::vector<MapSpec>;

/// First N Taylor coefficients at 0. Moebius factors need their pole
/// outside the closed disk ("pole inside disk" otherwise).
Series taylor_coeffs(const Mobius& f, int N);
Series taylor_coeffs(const BlaschkeProduct& B, int N);
Series taylor_coeffs(const Chain& chain, int N);

/// Truncated product of two series.
Series series_mul(const Series& x, const Series& y, int N);
/// x / y, y(0) != 0.
Series series_div(const Series& x, const Series& y, int N);

/// N x N finite section of C_psi in the monomial basis; column j holds the
/// coefficients of psi^j. Stored column-major as split real/imaginary parts.
struct TruncatedOperator {
  int n = 0;
  std::vector<double> re, im;
  std::string symbol_map;

  cplx at(int row, int col) const {
    const auto k = static_cast<std::size_t>(col) * static_cast<std::size_t>(n) + static_cast<std::size_t>(row);
    return {re[k], im[k]};
  }
  static TruncatedOperator zeros(int n);
  void set(int row, int col, cplx v);
};

TruncatedOperator composition_matrix(const Chain& chain, int N, std::string descriptor = {});
TruncatedOperator composition_matrix(const Mobius& f, int N);

/// T* - T.
TruncatedOperator adjoint_minus(const TruncatedOperator& T);

struct PowerIterationOptions {
  double tol = 1e-10;
  int max_steps = 10'000;
};

/// Largest singular value of rows [row_begin, n) of T (power iteration on T*T).
double operator_norm(const TruncatedOperator& T, int row_begin = 0, PowerIterationOptions opts = {});

/// Norm of the block of rows >= N0.
double tail_norm(const TruncatedOperator& T, int N0, PowerIterationOptions opts = {});

/// (1 - |z|^2) sum_{i,j} conj(c_i) c_j / (1 - conj(psi_i(z)) psi_j(z)).
double kernel_gram(const Combination& combo, cplx z);

/// Point of the circle {(1 - |z|^2) / |alpha - z|^2 = 4D} at angle theta.
cplx gamma_circle(cplx alpha, double D, double theta);

/// Angle in (0, pi] at which the circle reaches distance delta from the unit circle.
double gamma_angle_for_distance(double D, double delta);

struct LowerBound {
  double value = 0.0;
  std::string warning;
};

/// sum over first-order data vectors d at alpha of |sum c_j|^2 / |d_1|.
LowerBound lb1(const Combination& combo, cplx alpha);

/// A map known through a jet at alpha and its order of contact there
/// (INT_MAX for automorphisms, whose image curve is the circle itself).
struct JetTerm {
  cplx coeff;
  DataVector jet;
  int contact_order = 2;
};

/// JetTerms at alpha for the maps of a Moebius combination with alpha in F.
std::vector<JetTerm> jet_terms(const Combination& combo, cplx alpha, int order);

/// k in {2, 3}: groups terms with contact >= k by D_{k-1}.
double lb2(const std::vector<JetTerm>& terms, int k);

/// Equal maps merged, then sum of |c_j|^2 over automorphisms.
double lbext(const Combination& combo);

/// sum over first-order groups of sum conj(c_i) c_j / (conj(w_i) + w_j),
/// w = u'(0)/2 - i D u''(0).
double lb3_rhs(const Combination& combo, cplx alpha, double D);

struct LimitSample {
  double distance;
  double lhs;
  double error;
};

struct LimitReport {
  double rhs = 0.0;
  std::vector<LimitSample> samples;
  bool converged = false;
};

/// kernel_gram vs lb3_rhs at the given boundary distances, along the circle
/// (1 - |z|^2) / |alpha - z|^2 = 1/(4D) on which the w formula holds.
LimitReport lb3_limit_check(const Combination& combo, cplx alpha, double D,
                            const std::vector<double>& distances = {1e-2, 1e-3, 1e-4, 1e-5});

struct SelfAdjointReport {
  std::vector<int> n0;
  std::vector<double> tails;
  bool decreasing = false;
};

/// Tails of M* - M for M the section of C_{rho_{gamma,a}}, N0 in {N/8, N/4, N/2}.
SelfAdjointReport mod_compact_selfadjoint_check(double a, cplx gamma, int N);

}  // namespace copcalc
