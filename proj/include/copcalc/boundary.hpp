#pragma once

#include <vector>

#include "copcalc/moebius.hpp"

namespace copcalc {

/// Boundary point alpha together with the jet (psi(alpha), psi'(alpha), ...).
struct DataVector {
  cplx alpha;
  std::vector<cplx> values;

  int order() const { return static_cast<int>(values.size()) - 1; }
  cplx value() const { return values.at(0); }
  cplx derivative() const { return values.at(1); }
};

/// Angular-derivative set F(psi) with per-point jets and orders of contact.
struct BoundaryProfile {
  std::vector<DataVector> entries;
  std::vector<int> contact_orders;
  bool whole_circle = false;  // automorphism: F = unit circle, no jets carried
  bool identity = false;      // only meaningful with whole_circle

  bool empty() const { return entries.empty() && !whole_circle; }
};

enum class ContactOrder { Two, Higher };

/// F(f) for a linear-fractional self-map. Tangent non-automorphisms get a
/// single entry with a second-order jet and contact order 2.
BoundaryProfile tangency_set(const Mobius& f);

/// Maximizer of |f(e^{i theta})|^2 on the circle (Newton from 16 seeds).
cplx boundary_maximizer(const Mobius& f);

DataVector data_vector(const Mobius& f, cplx alpha, int k);

/// Curvature of the image curve read off a second-order boundary jet.
double jet_curvature(const DataVector& jet2);

ContactOrder contact_order_from_jet(const DataVector& jet2, double eps = 1e-9);

/// Unique Moebius map with prescribed (value, first, second) derivative at alpha.
Mobius lft_from_jet2(cplx alpha, cplx v0, cplx v1, cplx v2);

/// eta * [(1 + s + s d) z + (d - s - s d)] / (z + d), s = sPrime = |phi'(1)|.
/// Requires Re((d - 1)/(d + 1)) >= sPrime.
Mobius phi_family(cplx eta, double sPrime, cplx d);

/// phi_family pre-rotated so that zeta plays the role of 1.
Mobius phi_family_at(cplx zeta, cplx eta, double sPrime, cplx d);

/// True when Re((d - 1)/(d + 1)) equals sPrime; the map is then an automorphism.
bool phi_family_is_boundary_case(double sPrime, cplx d);

/// Second-order jet of outer o inner at alpha, from the jets of both factors.
DataVector compose_jets(const std::vector<cplx>& outer_at_inner_value, const DataVector& inner);

}  // namespace copcalc
