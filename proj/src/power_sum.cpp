#include "copcalc/power_sum.hpp"

#include <algorithm>
#include <cmath>

namespace copcalc {

namespace {

bool exponent_less(const PowerTerm& x, const PowerTerm& y) {
  if (x.beta.real() != y.beta.real()) return x.beta.real() < y.beta.real();
  return x.beta.imag() < y.beta.imag();
}

void validate_exponent(cplx beta) {
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) throw ValidationError("non-finite exponent");
  if (beta.real() < -tol::kExponentMerge) throw ValidationError("power sum exponent with negative real part");
  if (std::abs(beta.real()) <= tol::kExponentMerge && std::abs(beta.imag()) > tol::kExponentMerge) {
    throw ValidationError("purely imaginary exponent: value at t = 0 undefined");
  }
}

std::vector<PowerTerm> canonical(std::vector<PowerTerm> terms) {
  for (auto& term : terms) {
    validate_exponent(term.beta);
    if (std::abs(term.beta) <= tol::kExponentMerge) term.beta = 0.0;
  }
  std::sort(terms.begin(), terms.end(), exponent_less);
  std::vector<PowerTerm> out;
  out.reserve(terms.size());
  for (const auto& term : terms) {
    if (!out.empty() && std::abs(out.back().beta - term.beta) <= tol::kExponentMerge) {
      out.back().coeff += term.coeff;
    } else {
      out.push_back(term);
    }
  }
  std::erase_if(out, [](const PowerTerm& x) { return std::abs(x.coeff) <= tol::kCoefficientDrop; });
  return out;
}

}  // namespace

cplx real_pow(double base, cplx exponent) {
  if (exponent.imag() == 0.0) return std::pow(base, exponent.real());
  return std::exp(exponent * std::log(base));
}

cplx tpow(double t, cplx beta) {
  if (beta == cplx(0.0)) return 1.0;
  if (t <= 0.0) return 0.0;
  return real_pow(t, beta);
}

PowerSum::PowerSum(std::vector<PowerTerm> terms) : terms_(canonical(std::move(terms))) {}

cplx PowerSum::operator()(double t) const {
  cplx sum = 0.0;
  for (const auto& term : terms_) sum += term.coeff * tpow(t, term.beta);
  return sum;
}

PowerSum PowerSum::conj() const {
  std::vector<PowerTerm> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back({std::conj(term.coeff), std::conj(term.beta)});
  return PowerSum(std::move(out));
}

PowerSum& PowerSum::operator+=(const PowerSum& o) {
  std::vector<PowerTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  terms_ = canonical(std::move(all));
  return *this;
}

PowerSum& PowerSum::operator*=(cplx k) {
  for (auto& term : terms_) term.coeff *= k;
  terms_ = canonical(std::move(terms_));
  return *this;
}

PowerSum operator*(const PowerSum& a, const PowerSum& b) {
  std::vector<PowerTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.push_back({x.coeff * y.coeff, x.beta + y.beta});
  }
  return PowerSum(std::move(out));
}

bool approx_equal(const PowerSum& a, const PowerSum& b, double eps) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i].beta - y[i].beta) > tol::kExponentMerge) return false;
    if (std::abs(x[i].coeff - y[i].coeff) > eps) return false;
  }
  return true;
}

bool exactly_equal(const PowerSum& a, const PowerSum& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].beta != y[i].beta || x[i].coeff != y[i].coeff) return false;
  }
  return true;
}

SymbolMatrix SymbolMatrix::zero(double s_end) { return {{}, {}, {}, {}, s_end}; }

SymbolMatrix SymbolMatrix::scalar(cplx c, double s_end) {
  return {PowerSum::constant(c), {}, {}, PowerSum::constant(c), s_end};
}

Mat2 SymbolMatrix::operator()(double t) const { return {e11(t), e12(t), e21(t), e22(t)}; }

bool SymbolMatrix::in_D(double eps) const {
  const Mat2 m = (*this)(0.0);
  return std::abs(m[1]) <= eps && std::abs(m[2]) <= eps && std::abs(m[0] - m[3]) <= eps;
}

namespace {

void check_same_domain(const SymbolMatrix& x, const SymbolMatrix& y) {
  if (std::abs(x.s_end - y.s_end) > tol::kEqual * std::max(x.s_end, y.s_end)) {
    throw ValidationError("symbol matrices live on different intervals");
  }
}

}  // namespace

SymbolMatrix add(const SymbolMatrix& x, const SymbolMatrix& y) {
  check_same_domain(x, y);
  return {x.e11 + y.e11, x.e12 + y.e12, x.e21 + y.e21, x.e22 + y.e22, x.s_end};
}

SymbolMatrix sub(const SymbolMatrix& x, const SymbolMatrix& y) {
  check_same_domain(x, y);
  return {x.e11 - y.e11, x.e12 - y.e12, x.e21 - y.e21, x.e22 - y.e22, x.s_end};
}

SymbolMatrix mul(const SymbolMatrix& x, const SymbolMatrix& y) {
  check_same_domain(x, y);
  return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22, x.e21 * y.e11 + x.e22 * y.e21,
          x.e21 * y.e12 + x.e22 * y.e22, x.s_end};
}

SymbolMatrix adjoint(const SymbolMatrix& x) { return {x.e11.conj(), x.e21.conj(), x.e12.conj(), x.e22.conj(), x.s_end}; }

SymbolMatrix scale(const SymbolMatrix& x, cplx k) { return {x.e11 * k, x.e12 * k, x.e21 * k, x.e22 * k, x.s_end}; }

bool approx_equal(const SymbolMatrix& a, const SymbolMatrix& b, double eps) {
  return std::abs(a.s_end - b.s_end) <= tol::kEqual * std::max(a.s_end, b.s_end) && approx_equal(a.e11, b.e11, eps) &&
         approx_equal(a.e12, b.e12, eps) && approx_equal(a.e21, b.e21, eps) && approx_equal(a.e22, b.e22, eps);
}

bool exactly_equal(const SymbolMatrix& a, const SymbolMatrix& b) {
  return a.s_end == b.s_end && exactly_equal(a.e11, b.e11) && exactly_equal(a.e12, b.e12) &&
         exactly_equal(a.e21, b.e21) && exactly_equal(a.e22, b.e22);
}

}  // namespace copcalc
