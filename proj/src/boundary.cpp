#include "copcalc/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace copcalc {

namespace {

struct ModulusProfile {
  double g;    // |F|^2
  double dg;   // d/dtheta
  double d2g;  // d^2/dtheta^2
};

ModulusProfile modulus_profile(const Mobius& f, double theta) {
  const cplx z = std::polar(1.0, theta);
  const auto j = jet(f, z, 2);
  const cplx F = j[0];
  const cplx Ft = cplx(0.0, 1.0) * z * j[1];
  const cplx Ftt = -z * j[1] - z * z * j[2];
  return {std::norm(F), 2.0 * (std::conj(F) * Ft).real(), 2.0 * (std::norm(Ft) + (std::conj(F) * Ftt).real())};
}

}  // namespace

cplx boundary_maximizer(const Mobius& f) {
  constexpr int kSeeds = 16;
  constexpr int kMaxIter = 100;
  double best_theta = 0.0;
  double best_g = -1.0;
  for (int k = 0; k < kSeeds; ++k) {
    double theta = 2.0 * kPi * k / kSeeds;
    for (int it = 0; it < kMaxIter; ++it) {
      const ModulusProfile p = modulus_profile(f, theta);
      double step;
      if (p.d2g < 0.0) {
        step = -p.dg / p.d2g;
      } else {
        step = (p.dg >= 0.0 ? 0.1 : -0.1);
      }
      step = std::clamp(step, -0.5, 0.5);
      theta += step;
      if (std::abs(step) < 1e-13) break;
    }
    const double g = modulus_profile(f, theta).g;
    if (g > best_g) {
      best_g = g;
      best_theta = theta;
    }
  }
  return std::polar(1.0, best_theta);
}

BoundaryProfile tangency_set(const Mobius& f) {
  const MapClassification cls = classify(f);
  if (!cls.is_disk_self_map) throw DomainError("not a self-map of the disk");
  BoundaryProfile profile;
  if (cls.is_disk_automorphism) {
    profile.whole_circle = true;
    profile.identity = cls.kind == MapKind::Identity;
    return profile;
  }
  if (!cls.sup_norm_one) return profile;
  const cplx alpha = boundary_maximizer(f);
  profile.entries.push_back(data_vector(f, alpha, 2));
  profile.contact_orders.push_back(2);
  return profile;
}

DataVector data_vector(const Mobius& f, cplx alpha, int k) {
  if (!is_unimodular(alpha)) throw ValidationError("data_vector: alpha must be unimodular");
  if (k < 1) throw ValidationError("data_vector: order must be at least 1");
  alpha /= std::abs(alpha);
  auto values = jet(f, alpha, k);
  if (!is_unimodular(values[0])) throw DomainError("alpha not in F");
  return {alpha, std::move(values)};
}

double jet_curvature(const DataVector& jet2) {
  if (jet2.order() < 2) throw ValidationError("curvature needs a second-order jet");
  const cplx v1 = jet2.values[1];
  if (std::abs(v1) == 0.0) throw ValidationError("degenerate jet");
  return (1.0 + jet2.alpha * jet2.values[2] / v1).real() / std::abs(v1);
}

ContactOrder contact_order_from_jet(const DataVector& jet2, double eps) {
  if (!is_unimodular(jet2.alpha) || jet2.values.empty() || !is_unimodular(jet2.values[0])) {
    throw ValidationError("contact order needs boundary-to-boundary data");
  }
  const double kappa = jet_curvature(jet2);
  if (kappa > 1.0 + eps) return ContactOrder::Two;
  if (kappa >= 1.0 - eps) return ContactOrder::Higher;
  throw DomainError("not a self-map jet");
}

Mobius lft_from_jet2(cplx alpha, cplx v0, cplx v1, cplx v2) {
  if (std::abs(v1) == 0.0) throw ValidationError("degenerate jet");
  // beta(z) = v0 + v1 h / (1 - k h),  h = z - alpha,  k = v2 / (2 v1)
  const cplx k = v2 / (2.0 * v1);
  return {v1 - k * v0, v0 + k * v0 * alpha - v1 * alpha, -k, 1.0 + k * alpha};
}

bool phi_family_is_boundary_case(double sPrime, cplx d) {
  return std::abs(((d - 1.0) / (d + 1.0)).real() - sPrime) <= tol::kEqual;
}

Mobius phi_family(cplx eta, double sPrime, cplx d) {
  if (!is_unimodular(eta)) throw ValidationError("phi_family: eta must be unimodular");
  if (!(sPrime > 0.0 && sPrime < 1.0)) throw ValidationError("phi_family: sPrime must lie in (0, 1)");
  if (std::abs(d + 1.0) <= tol::kDegenerate) throw ValidationError("phi_family: d = -1 is degenerate");
  if (((d - 1.0) / (d + 1.0)).real() < sPrime - tol::kEqual) throw DomainError("not a self-map of the disk");
  eta /= std::abs(eta);
  const double s = sPrime;
  return {eta * (1.0 + s + s * d), eta * (d - s - s * d), 1.0, d};
}

Mobius phi_family_at(cplx zeta, cplx eta, double sPrime, cplx d) {
  if (!is_unimodular(zeta)) throw ValidationError("phi_family: zeta must be unimodular");
  const Mobius base = phi_family(eta, sPrime, d);
  const cplx rot = std::conj(zeta / std::abs(zeta));
  return {base.a() * rot, base.b(), base.c() * rot, base.d()};
}

DataVector compose_jets(const std::vector<cplx>& outer, const DataVector& inner) {
  if (outer.size() < 3 || inner.order() < 2) throw ValidationError("compose_jets needs second-order jets");
  const cplx g1 = inner.values[1];
  const cplx g2 = inner.values[2];
  return {inner.alpha, {outer[0], outer[1] * g1, outer[2] * g1 * g1 + outer[1] * g2}};
}

}  // namespace copcalc
