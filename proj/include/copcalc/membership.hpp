#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "copcalc/boundary.hpp"
#include "copcalc/symbols.hpp"

namespace copcalc {

/// phi with its Krein adjoint sigma, tangency data and translation numbers.
struct PhiContext {
  Mobius phi = Mobius::identity();
  Mobius sigma = Mobius::identity();
  cplx zeta;
  cplx eta;
  double s = 0.0;  // 1 / |phi'(zeta)|
  double b = 0.0;  // rho_{eta,b}(D) = phi(D)
  double c = 0.0;  // rho_{zeta,c}(D) = sigma(D)
};

/// Throws DomainError("phi not admissible") for automorphisms, maps with
/// sup norm < 1 and maps fixing their tangency point.
PhiContext make_context(const Mobius& phi);

enum class Condition { A, B, C, D, E, F, Identity, None, Compact };

const char* to_string(Condition c);

struct MembershipVerdict {
  bool member = false;
  Condition condition = Condition::None;
  std::optional<cplx> family_parameter;
  std::optional<Table2Row> table2_row;
  std::optional<SymbolMatrix> symbol;
  std::optional<std::string> representative;
  Combination decomposition;
  std::string reason;
};

MembershipVerdict linfrac_membership(const PhiContext& ctx, const Mobius& psi);

/// Matches first-order boundary data against the necessary conditions.
/// Returns Identity / Compact / A..F / None; malformed profiles throw.
Condition necessity_check(const PhiContext& ctx, const BoundaryProfile& profile);

/// Verdict for a map known through its boundary jets (order >= 2) and
/// declared orders of contact.
MembershipVerdict general_membership(const PhiContext& ctx, const BoundaryProfile& profile);

/// c I + f(C*C) + g(CC*) + C p(C*C) + C* q(CC*) as a combination of
/// composition operators modulo compacts.
Combination coset_decompose(const PhiContext& ctx, const AlgebraElement& elem);

/// Sum of the symbols of the maps (each must be a member).
SymbolMatrix combination_symbol(const PhiContext& ctx, const Combination& combo);

/// Boundary profile of a two-point self-map built from a Blaschke product
/// and Moebius germs, realizing case E (or F) with contact order 2 at both points.
BoundaryProfile two_point_profile(const PhiContext& ctx, Condition which);

}  // namespace copcalc
