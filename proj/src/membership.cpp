#include "copcalc/membership.hpp"

#include <algorithm>
#include <cmath>

#include "copcalc/blaschke.hpp"

namespace copcalc {

namespace {

constexpr double kJetTol = tol::kBoundary;
constexpr double kContextTol = 1e-9;

bool matches(cplx value, cplx deriv, cplx want_value, cplx want_deriv) {
  return std::abs(value - want_value) <= kJetTol && std::abs(deriv - want_deriv) <= kJetTol;
}

cplx phi_derivative(const PhiContext& ctx) { return jet(ctx.phi, ctx.zeta, 1)[1]; }

// First-order condition of a single boundary entry, or None.
Condition match_entry(const PhiContext& ctx, cplx alpha, cplx value, cplx deriv) {
  const cplx dphi = phi_derivative(ctx);
  if (std::abs(alpha - ctx.zeta) <= kJetTol) {
    if (matches(value, deriv, ctx.eta, dphi)) return Condition::A;
    if (matches(value, deriv, ctx.zeta, 1.0)) return Condition::B;
  }
  if (std::abs(alpha - ctx.eta) <= kJetTol) {
    if (matches(value, deriv, ctx.zeta, 1.0 / dphi)) return Condition::C;
    if (matches(value, deriv, ctx.eta, 1.0)) return Condition::D;
  }
  return Condition::None;
}

// Tries the jets of psi at zeta and at eta; pole or off-circle values give None.
Condition match_map(const PhiContext& ctx, const Mobius& psi) {
  for (cplx alpha : {ctx.zeta, ctx.eta}) {
    try {
      const auto j = jet(psi, alpha, 1);
      if (!is_unimodular(j[0])) continue;
      const Condition c = match_entry(ctx, alpha, j[0], j[1]);
      if (c != Condition::None) return c;
    } catch (const DomainError&) {
    }
  }
  return Condition::None;
}

Table2Row row_of(Condition c) {
  switch (c) {
    case Condition::A: return Table2Row::A;
    case Condition::B: return Table2Row::B;
    case Condition::C: return Table2Row::C;
    default: return Table2Row::D;
  }
}

// Translation number of the parabolic part: psi itself for (b)/(d),
// psi o phi^{-1} for (a), psi o sigma^{-1} for (c).
cplx family_parameter(const PhiContext& ctx, const Mobius& psi, Condition c) {
  Mobius chi = psi;
  if (c == Condition::A) chi = compose(psi, ctx.phi.inverse());
  if (c == Condition::C) chi = compose(psi, ctx.sigma.inverse());
  if (projective_eq(chi, Mobius::identity(), kContextTol)) return 0.0;
  return translation_number(chi).a;
}

MembershipVerdict compact_verdict(const PhiContext& ctx) {
  MembershipVerdict v;
  v.member = true;
  v.condition = Condition::Compact;
  v.symbol = SymbolMatrix::zero(ctx.s);
  return v;
}

MembershipVerdict identity_verdict(const PhiContext& ctx) {
  MembershipVerdict v;
  v.member = true;
  v.condition = Condition::Identity;
  v.symbol = SymbolMatrix::scalar(1.0, ctx.s);
  v.decomposition = {{1.0, Mobius::identity()}};
  return v;
}

void validate_profile(const BoundaryProfile& profile) {
  if (profile.whole_circle) {
    if (!profile.entries.empty()) throw ValidationError("whole-circle profile carries no jets");
    return;
  }
  if (profile.identity) throw ValidationError("identity flag requires whole_circle");
  if (!profile.contact_orders.empty() && profile.contact_orders.size() != profile.entries.size()) {
    throw ValidationError("contact_orders must match entries");
  }
  for (int k : profile.contact_orders) {
    if (k < 2 || k % 2 != 0) throw ValidationError("orders of contact are even integers >= 2");
  }
  for (std::size_t i = 0; i < profile.entries.size(); ++i) {
    const DataVector& e = profile.entries[i];
    if (!is_unimodular(e.alpha)) throw ValidationError("profile point must be unimodular");
    if (e.values.size() < 2) throw ValidationError("profile entries need a first-order jet");
    if (!is_unimodular(e.values[0])) throw ValidationError("profile entry does not map to the circle");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(profile.entries[j].alpha - e.alpha) <= kJetTol) throw ValidationError("duplicate profile point");
    }
  }
}

}  // namespace

const char* to_string(Condition c) {
  switch (c) {
    case Condition::A: return "a";
    case Condition::B: return "b";
    case Condition::C: return "c";
    case Condition::D: return "d";
    case Condition::E: return "e";
    case Condition::F: return "f";
    case Condition::Identity: return "identity";
    case Condition::None: return "none";
    case Condition::Compact: return "compact";
  }
  return "?";
}

PhiContext make_context(const Mobius& phi) {
  const MapClassification cls = classify(phi);
  if (!cls.is_disk_self_map || !cls.sup_norm_one || cls.is_disk_automorphism) {
    throw DomainError("phi not admissible");
  }
  PhiContext ctx;
  ctx.phi = phi;
  ctx.sigma = krein_adjoint(phi);

  // The image circle touches the unit circle at center/|center|; pulling
  // that point back is more accurate than the numerical maximizer.
  const Circle img = image_circle(phi);
  cplx zeta = tangency_set(phi).entries.front().alpha;
  if (std::abs(img.center) > tol::kBoundary) {
    const cplx exact = phi.inverse()(img.center / std::abs(img.center));
    if (is_unimodular(exact, 1e-8)) zeta = exact / std::abs(exact);
  }
  ctx.zeta = zeta;
  ctx.eta = phi(zeta);
  ctx.eta /= std::abs(ctx.eta);
  if (std::abs(ctx.zeta - ctx.eta) <= tol::kBoundary) throw DomainError("phi not admissible");

  ctx.s = 1.0 / std::abs(jet(phi, zeta, 1)[1]);
  ctx.b = curvature_at(phi, zeta) - 1.0;
  ctx.c = ctx.b / ctx.s;
  if (!(ctx.b > 0.0)) throw DomainError("phi not admissible");

  if (!projective_eq(compose(ctx.phi, ctx.sigma), parabolic(ctx.eta, 2.0 * ctx.b), kContextTol) ||
      !projective_eq(compose(ctx.sigma, ctx.phi), parabolic(ctx.zeta, 2.0 * ctx.c), kContextTol)) {
    throw Error("internal consistency: translation identities failed");
  }
  return ctx;
}

MembershipVerdict linfrac_membership(const PhiContext& ctx, const Mobius& psi) {
  const MapClassification cls = classify(psi);
  if (!cls.is_disk_self_map) {
    MembershipVerdict v;
    const Condition c = match_map(ctx, psi);
    if (c == Condition::A || c == Condition::C) {
      v.reason = "outside admissible translation range";
      try {
        v.family_parameter = family_parameter(ctx, psi, c);
      } catch (const Error&) {
      }
    } else {
      v.reason = "not a self-map of the disk";
    }
    return v;
  }
  if (!cls.sup_norm_one) return compact_verdict(ctx);
  if (cls.kind == MapKind::Identity) return identity_verdict(ctx);
  if (cls.is_disk_automorphism) {
    MembershipVerdict v;
    v.reason = "automorphism";
    return v;
  }

  MembershipVerdict v;
  const Condition c = match_map(ctx, psi);
  if (c == Condition::None) {
    v.reason = "first-order data matches none of (a)-(d)";
    return v;
  }
  const cplx a = family_parameter(ctx, psi, c);
  const Table2Row row = row_of(c);
  v.condition = c;
  v.family_parameter = a;
  try {
    v.symbol = table2_symbol(row, a, ctx.s, ctx.b, ctx.c);
  } catch (const DomainError& e) {
    v.reason = e.what();
    return v;
  }
  v.member = true;
  v.table2_row = row;
  v.representative = table2_representative(row, a, ctx.s, ctx.b, ctx.c);
  v.decomposition = {{1.0, psi}};
  return v;
}

Condition necessity_check(const PhiContext& ctx, const BoundaryProfile& profile) {
  validate_profile(profile);
  if (profile.whole_circle) return profile.identity ? Condition::Identity : Condition::None;
  if (profile.entries.empty()) return Condition::Compact;

  std::vector<Condition> tags;
  for (const auto& e : profile.entries) {
    const Condition c = match_entry(ctx, e.alpha, e.values[0], e.values[1]);
    if (c == Condition::None) return Condition::None;
    tags.push_back(c);
  }
  if (tags.size() == 1) return tags.front();
  if (tags.size() == 2) {
    auto has = [&](Condition c) { return std::find(tags.begin(), tags.end(), c) != tags.end(); };
    if (has(Condition::A) && has(Condition::D)) return Condition::E;
    if (has(Condition::B) && has(Condition::C)) return Condition::F;
  }
  return Condition::None;
}

MembershipVerdict general_membership(const PhiContext& ctx, const BoundaryProfile& profile) {
  if (!profile.whole_circle && profile.contact_orders.size() != profile.entries.size()) {
    throw ValidationError("general membership needs an order of contact for every profile point");
  }
  const Condition tag = necessity_check(ctx, profile);
  if (tag == Condition::Compact) return compact_verdict(ctx);
  if (tag == Condition::Identity) return identity_verdict(ctx);

  MembershipVerdict v;
  v.condition = tag;
  if (tag == Condition::None) {
    v.reason = "first-order data matches none of the necessary conditions";
    return v;
  }
  for (int k : profile.contact_orders) {
    if (k > 2) {
      v.reason = "order of contact exceeds two";
      return v;
    }
  }

  SymbolMatrix symbol = SymbolMatrix::zero(ctx.s);
  for (const auto& e : profile.entries) {
    if (e.order() < 2) throw ValidationError("general membership needs second-order jets");
    const Mobius beta = lft_from_jet2(e.alpha, e.values[0], e.values[1], e.values[2]);
    const MembershipVerdict part = linfrac_membership(ctx, beta);
    if (!part.member) {
      v.reason = "jet-matched map is not admissible: " + part.reason;
      v.decomposition.clear();
      return v;
    }
    symbol = add(symbol, *part.symbol);
    v.decomposition.push_back({1.0, beta});
    if (profile.entries.size() == 1) {
      v.family_parameter = part.family_parameter;
      v.table2_row = part.table2_row;
      v.representative = part.representative;
    }
  }
  v.member = true;
  v.symbol = symbol;
  return v;
}

Combination coset_decompose(const PhiContext& ctx, const AlgebraElement& elem) {
  if (!elem.f.empty() && std::abs(elem.f[0]) > 0.0) throw ValidationError("not in canonical form: f(0), g(0) must vanish");
  if (!elem.g.empty() && std::abs(elem.g[0]) > 0.0) throw ValidationError("not in canonical form: f(0), g(0) must vanish");
  const Mobius ps = compose(ctx.phi, ctx.sigma);
  const Mobius sp = compose(ctx.sigma, ctx.phi);
  Combination out;
  if (elem.c != cplx(0.0)) out.push_back({elem.c, Mobius::identity()});
  auto emit = [&](const std::vector<cplx>& poly, std::size_t from, int s_shift, auto make_map) {
    for (std::size_t k = from; k < poly.size(); ++k) {
      if (poly[k] == cplx(0.0)) continue;
      const double sk = std::pow(ctx.s, static_cast<double>(k) + s_shift);
      out.push_back({poly[k] * sk, make_map(static_cast<int>(k))});
    }
  };
  emit(elem.f, 1, 0, [&](int k) { return iterate(ps, k); });
  emit(elem.g, 1, 0, [&](int k) { return iterate(sp, k); });
  emit(elem.p, 0, 0, [&](int k) { return compose(iterate(ps, k), ctx.phi); });
  emit(elem.q, 0, 1, [&](int k) { return compose(iterate(sp, k), ctx.sigma); });
  return out;
}

SymbolMatrix combination_symbol(const PhiContext& ctx, const Combination& combo) {
  SymbolMatrix out = SymbolMatrix::zero(ctx.s);
  for (const auto& [coeff, map] : combo) {
    const MembershipVerdict v = linfrac_membership(ctx, map);
    if (!v.member) throw DomainError("combination contains a map outside the algebra: " + v.reason);
    out = add(out, scale(*v.symbol, coeff));
  }
  return out;
}

BoundaryProfile two_point_profile(const PhiContext& ctx, Condition which) {
  if (which != Condition::E && which != Condition::F) throw ValidationError("two_point_profile builds case e or f");
  // Case f is case e for sigma, whose tangency runs eta -> zeta.
  const bool e = which == Condition::E;
  const cplx zeta = e ? ctx.zeta : ctx.eta;
  const cplx eta = e ? ctx.eta : ctx.zeta;
  const double target = e ? 1.0 / ctx.s : ctx.s;

  // Normalized picture: eta -> 1. psi~ = B o rho o tau with tau a parabolic
  // automorphism fixing 1 and sending zt to -1, rho a germ with rho(+-1) = +-1.
  const cplx zt = zeta * std::conj(eta);
  Mobius tau_map = Mobius::identity();
  if (std::abs(zt + 1.0) > tol::kBoundary) {
    const cplx a = -(1.0 + zt) / (1.0 - zt);
    tau_map = parabolic(1.0, cplx(0.0, a.imag()), true);
  }
  const Mobius germ = phi_family(1.0, 0.5, 4.0);
  const auto g1 = jet(germ, 1.0, 2);
  const std::vector<cplx> rho_at_1{g1[0], g1[1], g1[2]};
  const std::vector<cplx> rho_at_m1{-g1[0], g1[1], -g1[2]};  // z -> -germ(-z)

  const double tau_slope = std::abs(jet(tau_map, zt, 1)[1]);
  const double t2 = target / (std::abs(g1[1]) * tau_slope);
  const BlaschkeProduct B = construct_two_point(-1.0, 1.0, 2.0, t2).product;
  auto to_vec = [](const std::array<cplx, 3>& a) { return std::vector<cplx>(a.begin(), a.end()); };

  DataVector at_one = compose_jets(rho_at_1, {1.0, jet(tau_map, 1.0, 2)});
  at_one = compose_jets(to_vec(blaschke_jet(B, 1.0)), at_one);
  DataVector at_zt = compose_jets(rho_at_m1, {zt, jet(tau_map, zt, 2)});
  at_zt = compose_jets(to_vec(blaschke_jet(B, -1.0)), at_zt);

  // psi(z) = eta psi~(conj(eta) z)
  auto rotate = [&](const DataVector& d) {
    return DataVector{eta * d.alpha, {eta * d.values[0], d.values[1], std::conj(eta) * d.values[2]}};
  };
  BoundaryProfile profile;
  profile.entries = {rotate(at_one), rotate(at_zt)};
  profile.contact_orders = {2, 2};
  return profile;
}

}  // namespace copcalc
