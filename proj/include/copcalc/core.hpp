#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace copcalc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

namespace tol {
// Relative threshold below which ad - bc counts as zero.
inline constexpr double kDegenerate = 1e-14;
// Default projective-equality threshold.
inline constexpr double kEqual = 1e-12;
// Boundary membership |f(alpha)| = 1 and jet matching.
inline constexpr double kBoundary = 1e-10;
// Exponents closer than this are merged in a power sum.
inline constexpr double kExponentMerge = 1e-12;
// Coefficients below this magnitude are dropped from a power sum.
inline constexpr double kCoefficientDrop = 1e-15;
}  // namespace tol

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shape, bad schema, out-of-range option.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (pole, non-self-map, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

inline bool is_unimodular(cplx z, double eps = tol::kBoundary) {
  return std::abs(std::abs(z) - 1.0) <= eps;
}

inline bool near(cplx a, cplx b, double eps) { return std::abs(a - b) <= eps; }

}  // namespace copcalc
