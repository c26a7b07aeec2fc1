#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "copcalc/core.hpp"

namespace copcalc {

/// Linear-fractional map z -> (az + b) / (cz + d), kept as a projective class.
///
/// Coefficients are stored in canonical scaling: the coefficient of largest
/// modulus (first one on ties, in the order a, b, c, d) is exactly 1.
class Mobius {
 public:
  /// Throws ValidationError when ad - bc vanishes relative to the coefficients.
  Mobius(cplx a, cplx b, cplx c, cplx d);

  static Mobius identity() { return {1.0, 0.0, 0.0, 1.0}; }

  cplx a() const { return coef_[0]; }
  cplx b() const { return coef_[1]; }
  cplx c() const { return coef_[2]; }
  cplx d() const { return coef_[3]; }
  const std::array<cplx, 4>& coefficients() const { return coef_; }

  cplx det() const { return coef_[0] * coef_[3] - coef_[1] * coef_[2]; }

  /// Value at z; throws DomainError("evaluation at pole") on cz + d = 0.
  cplx operator()(cplx z) const;

  /// Pole -d/c, or nullopt when c = 0.
  std::optional<cplx> pole() const;

  Mobius inverse() const;

 private:
  std::array<cplx, 4> coef_;
};

/// A point of the Riemann sphere.
struct SpherePoint {
  cplx value{};
  bool infinite = false;
};

enum class MapKind { Identity, Parabolic, Elliptic, Hyperbolic, Loxodromic };

const char* to_string(MapKind kind);

struct MapClassification {
  std::vector<SpherePoint> fixed_points;
  MapKind kind = MapKind::Identity;
  bool is_disk_automorphism = false;
  bool is_disk_self_map = false;
  bool sup_norm_one = false;
};

/// Image of the unit circle; radius is +inf when the image is a line.
struct Circle {
  cplx center{};
  double radius = 0.0;
  bool is_line() const;
};

/// Right-half-plane style transplant u = tau_beta o f o tau_alpha^{-1}.
struct HalfPlaneTransplant {
  Mobius u;
  std::array<cplx, 3> jet;  // u(0), u'(0), u''(0)
};

struct TranslationData {
  cplx gamma;
  cplx a;
};

/// sum c_j C_{psi_j}
using Combination = std::vector<std::pair<cplx, Mobius>>;

Mobius compose(const Mobius& f, const Mobius& g);
Mobius iterate(const Mobius& f, int n);

/// (f(z0), f'(z0), ..., f^(k)(z0)).
std::vector<cplx> jet(const Mobius& f, cplx z0, int k);

MapClassification classify(const Mobius& f);

/// (conj(a) z - conj(c)) / (-conj(b) z + conj(d)).
Mobius krein_adjoint(const Mobius& f);

/// rho_{gamma,a}(z) = gamma * rho_{1,a}(z / gamma),
/// rho_{1,a}(z) = ((2 - a) z + a) / (-a z + 2 + a).
Mobius parabolic(cplx gamma, cplx a, bool allow_negative = false);

/// Recovers (gamma, a) with f = rho_{gamma,a}; a = u''(0) / 2i.
TranslationData translation_number(const Mobius& f);

/// Cayley-type map tau_gamma(z) = i (gamma - z) / (gamma + z).
Mobius tau(cplx gamma);

HalfPlaneTransplant conjugate_to_halfplane(const Mobius& f, cplx alpha, cplx beta);

Circle image_circle(const Mobius& f);

/// Curvature of theta -> f(e^{i theta}) at alpha:
/// Re(1 + alpha f''(alpha) / f'(alpha)) / |f'(alpha)|.
double curvature_at(const Mobius& f, cplx alpha);

bool projective_eq(const Mobius& f, const Mobius& g, double eps = tol::kEqual);

}  // namespace copcalc
