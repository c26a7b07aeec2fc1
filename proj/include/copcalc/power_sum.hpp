#pragma once

#include <array>
#include <vector>

#include "copcalc/core.hpp"

namespace copcalc {

/// coeff * t^beta
struct PowerTerm {
  cplx coeff;
  cplx beta;
};

/// Finite sum of complex powers of t, kept in canonical form: sorted by
/// exponent (real part, then imaginary), exponents within tol::kExponentMerge
/// merged, negligible coefficients dropped.
///
/// Exponents must have Re >= 0, and purely imaginary nonzero exponents are
/// rejected so that the value at t = 0 is defined (t^0 = 1, t^beta = 0 else).
class PowerSum {
 public:
  PowerSum() = default;
  explicit PowerSum(std::vector<PowerTerm> terms);

  static PowerSum constant(cplx c) { return PowerSum({{c, 0.0}}); }
  static PowerSum monomial(cplx c, cplx beta) { return PowerSum({{c, beta}}); }

  const std::vector<PowerTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  cplx operator()(double t) const;

  /// Pointwise complex conjugate: c t^beta -> conj(c) t^conj(beta).
  PowerSum conj() const;

  PowerSum& operator+=(const PowerSum& o);
  PowerSum& operator*=(cplx k);

  friend PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
  friend PowerSum operator-(PowerSum a, const PowerSum& b) { return a += b * cplx(-1.0); }
  friend PowerSum operator*(PowerSum a, cplx k) { return a *= k; }
  friend PowerSum operator*(cplx k, PowerSum a) { return a *= k; }
  friend PowerSum operator*(const PowerSum& a, const PowerSum& b);

 private:
  std::vector<PowerTerm> terms_;
};

/// t^beta for t >= 0 with the conventions above. Real exponents go through
/// std::pow so that half-integer powers stay exact where possible.
cplx tpow(double t, cplx beta);

/// s^(-k beta) style scalings: real-exponent fast path as in tpow.
cplx real_pow(double base, cplx exponent);

/// Same exponents (within merge tolerance) and coefficients within eps.
bool approx_equal(const PowerSum& a, const PowerSum& b, double eps);

/// Bitwise-identical canonical forms.
bool exactly_equal(const PowerSum& a, const PowerSum& b);

using Mat2 = std::array<cplx, 4>;  // row-major e11, e12, e21, e22

/// 2x2 matrix of power sums on [0, s_end].
struct SymbolMatrix {
  PowerSum e11, e12, e21, e22;
  double s_end = 1.0;

  static SymbolMatrix zero(double s_end);
  static SymbolMatrix scalar(cplx c, double s_end);

  Mat2 operator()(double t) const;

  /// e12(0) = e21(0) = 0 and e11(0) = e22(0).
  bool in_D(double eps = 1e-12) const;
  bool is_zero() const { return e11.is_zero() && e12.is_zero() && e21.is_zero() && e22.is_zero(); }
};

SymbolMatrix add(const SymbolMatrix& x, const SymbolMatrix& y);
SymbolMatrix sub(const SymbolMatrix& x, const SymbolMatrix& y);
SymbolMatrix mul(const SymbolMatrix& x, const SymbolMatrix& y);
SymbolMatrix adjoint(const SymbolMatrix& x);
SymbolMatrix scale(const SymbolMatrix& x, cplx k);

bool approx_equal(const SymbolMatrix& a, const SymbolMatrix& b, double eps);
bool exactly_equal(const SymbolMatrix& a, const SymbolMatrix& b);

}  // namespace copcalc
