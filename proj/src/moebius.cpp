#include "copcalc/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace copcalc {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kParabolicTol = 1e-9;

std::array<cplx, 4> canonicalize(std::array<cplx, 4> c) {
  double max_mod = 0.0;
  for (const auto& x : c) max_mod = std::max(max_mod, std::abs(x));
  // First coefficient within rounding of the maximum wins, so that a second
  // pass picks the same pivot.
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(c[i]) >= max_mod * (1.0 - 1e-12)) {
      pivot = i;
      break;
    }
  }
  const cplx scale = c[pivot];
  for (auto& x : c) x /= scale;
  c[pivot] = 1.0;
  return c;
}

double max_modulus(const std::array<cplx, 4>& c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

Mobius::Mobius(cplx a, cplx b, cplx c, cplx d) : coef_{a, b, c, d} {
  const double m = max_modulus(coef_);
  if (!(m > 0.0) || !std::isfinite(m)) throw ValidationError("degenerate map: coefficients vanish or are not finite");
  if (std::abs(a * d - b * c) <= tol::kDegenerate * m * m) {
    throw ValidationError("degenerate map: ad - bc = 0");
  }
  coef_ = canonicalize(coef_);
}

cplx Mobius::operator()(cplx z) const {
  const cplx den = c() * z + d();
  if (std::abs(den) <= tol::kDegenerate * (std::abs(c()) * std::abs(z) + std::abs(d()))) {
    throw DomainError("evaluation at pole");
  }
  return (a() * z + b()) / den;
}

std::optional<cplx> Mobius::pole() const {
  if (std::abs(c()) <= tol::kDegenerate) return std::nullopt;
  return -d() / c();
}

Mobius Mobius::inverse() const { return {d(), -b(), -c(), a()}; }

const char* to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Identity: return "identity";
    case MapKind::Parabolic: return "parabolic";
    case MapKind::Elliptic: return "elliptic";
    case MapKind::Hyperbolic: return "hyperbolic";
    case MapKind::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

bool Circle::is_line() const { return std::isinf(radius); }

Mobius compose(const Mobius& f, const Mobius& g) {
  const cplx a = f.a() * g.a() + f.b() * g.c();
  const cplx b = f.a() * g.b() + f.b() * g.d();
  const cplx c = f.c() * g.a() + f.d() * g.c();
  const cplx d = f.c() * g.b() + f.d() * g.d();
  const double m = max_modulus({a, b, c, d});
  if (std::abs(a * d - b * c) <= tol::kDegenerate * m * m) throw DomainError("degenerate composition");
  return {a, b, c, d};
}

Mobius iterate(const Mobius& f, int n) {
  if (n < 0) return iterate(f.inverse(), -n);
  Mobius result = Mobius::identity();
  Mobius base = f;
  unsigned k = static_cast<unsigned>(n);
  while (k != 0) {
    if (k & 1u) result = compose(result, base);
    k >>= 1u;
    if (k != 0) base = compose(base, base);
  }
  return result;
}

std::vector<cplx> jet(const Mobius& f, cplx z0, int k) {
  if (k < 0) throw ValidationError("jet order must be non-negative");
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  out.push_back(f(z0));
  const cplx w = f.c() * z0 + f.d();
  const cplx det = f.det();
  // f^(n) = (-1)^(n+1) n! c^(n-1) det / w^(n+1)
  cplx term = det / (w * w);
  for (int n = 1; n <= k; ++n) {
    out.push_back(term);
    term *= -static_cast<double>(n + 1) * f.c() / w;
  }
  return out;
}

Circle image_circle(const Mobius& f) {
  const double dd = std::norm(f.d());
  const double cc = std::norm(f.c());
  const double denom = dd - cc;
  if (std::abs(denom) <= tol::kDegenerate * (dd + cc)) {
    return {0.0, std::numeric_limits<double>::infinity()};
  }
  const cplx center = (f.b() * std::conj(f.d()) - f.a() * std::conj(f.c())) / denom;
  return {center, std::abs(f.det()) / std::abs(denom)};
}

MapClassification classify(const Mobius& f) {
  MapClassification out;
  if (projective_eq(f, Mobius::identity())) {
    out.kind = MapKind::Identity;
    out.is_disk_automorphism = out.is_disk_self_map = out.sup_norm_one = true;
    return out;
  }

  const cplx tr = f.a() + f.d();
  const cplx ratio = tr * tr / f.det();
  if (std::abs(ratio - 4.0) <= kParabolicTol) {
    out.kind = MapKind::Parabolic;
  } else if (std::abs(ratio.imag()) <= kParabolicTol && ratio.real() >= 0.0 && ratio.real() < 4.0) {
    out.kind = MapKind::Elliptic;
  } else if (std::abs(ratio.imag()) <= kParabolicTol && ratio.real() > 4.0) {
    out.kind = MapKind::Hyperbolic;
  } else {
    out.kind = MapKind::Loxodromic;
  }

  // Fixed points: c z^2 + (d - a) z - b = 0.
  if (std::abs(f.c()) <= tol::kDegenerate) {
    const cplx lin = f.d() - f.a();
    if (std::abs(lin) > tol::kDegenerate && out.kind != MapKind::Parabolic) {
      out.fixed_points.push_back({f.b() / lin, false});
    }
    out.fixed_points.push_back({0.0, true});
  } else if (out.kind == MapKind::Parabolic) {
    out.fixed_points.push_back({(f.a() - f.d()) / (2.0 * f.c()), false});
  } else {
    const cplx disc = std::sqrt((f.d() - f.a()) * (f.d() - f.a()) + 4.0 * f.b() * f.c());
    const cplx p = f.a() - f.d();
    // Stable pairing: avoid cancellation in the larger root.
    const cplx q = (std::abs(p + disc) >= std::abs(p - disc)) ? p + disc : p - disc;
    const cplx z1 = q / (2.0 * f.c());
    const cplx z2 = (std::abs(q) > 0.0) ? -2.0 * f.b() / q : (p - disc) / (2.0 * f.c());
    out.fixed_points.push_back({z1, false});
    out.fixed_points.push_back({z2, false});
  }

  // Self-map: no pole in the closed disk and f(D) inside the closed disk.
  const bool pole_outside = std::abs(f.d()) > std::abs(f.c()) * (1.0 + tol::kDegenerate);
  if (pole_outside) {
    const Circle img = image_circle(f);
    const bool contained = !img.is_line() && std::abs(img.center) + img.radius <= 1.0 + tol::kEqual;
    const bool origin_inside = std::abs(f(0.0)) <= 1.0 + tol::kEqual;
    out.is_disk_self_map = contained && origin_inside;
    if (out.is_disk_self_map) {
      out.sup_norm_one = std::abs(std::abs(img.center) + img.radius - 1.0) <= tol::kBoundary;
      out.is_disk_automorphism = is_unimodular(f(1.0)) && is_unimodular(f(kI)) && is_unimodular(f(-1.0));
    }
  }
  return out;
}

Mobius krein_adjoint(const Mobius& f) {
  return {std::conj(f.a()), -std::conj(f.c()), -std::conj(f.b()), std::conj(f.d())};
}

Mobius parabolic(cplx gamma, cplx a, bool allow_negative) {
  if (!is_unimodular(gamma)) throw ValidationError("parabolic: gamma must be unimodular");
  if (a.real() < 0.0 && !allow_negative) throw DomainError("not a self-map");
  gamma /= std::abs(gamma);
  return {2.0 - a, a * gamma, -a * std::conj(gamma), 2.0 + a};
}

Mobius tau(cplx gamma) { return {-kI, kI * gamma, 1.0, gamma}; }

TranslationData translation_number(const Mobius& f) {
  const MapClassification cls = classify(f);
  if (cls.kind != MapKind::Parabolic) throw DomainError("not parabolic");
  const SpherePoint fp = cls.fixed_points.front();
  if (fp.infinite || !is_unimodular(fp.value, 1e-9)) throw DomainError("fixed point off the unit circle");
  const cplx gamma = fp.value / std::abs(fp.value);
  const Mobius t = tau(gamma);
  const Mobius u = compose(t, compose(f, t.inverse()));
  const auto j = jet(u, 0.0, 2);
  return {gamma, j[2] / (2.0 * kI)};
}

HalfPlaneTransplant conjugate_to_halfplane(const Mobius& f, cplx alpha, cplx beta) {
  if (!is_unimodular(alpha) || !is_unimodular(beta)) throw ValidationError("boundary points must be unimodular");
  if (std::abs(f(alpha) - beta) > tol::kBoundary) throw DomainError("boundary value mismatch");
  const Mobius u = compose(tau(beta), compose(f, tau(alpha).inverse()));
  const auto j = jet(u, 0.0, 2);
  return {u, {j[0], j[1], j[2]}};
}

double curvature_at(const Mobius& f, cplx alpha) {
  if (!is_unimodular(alpha)) throw ValidationError("curvature_at: alpha must be unimodular");
  const auto j = jet(f, alpha, 2);
  if (!is_unimodular(j[0])) throw DomainError("curvature_at: |f(alpha)| != 1");
  if (image_circle(f).is_line()) return 0.0;
  return (1.0 + alpha * j[2] / j[1]).real() / std::abs(j[1]);
}

bool projective_eq(const Mobius& f, const Mobius& g, double eps) {
  const auto& x = f.coefficients();
  const auto& y = g.coefficients();
  const double scale = max_modulus(x) * max_modulus(y);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (std::abs(x[i] * y[j] - x[j] * y[i]) > eps * scale) return false;
    }
  }
  return true;
}

}  // namespace copcalc
