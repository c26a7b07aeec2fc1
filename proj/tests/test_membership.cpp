#include <doctest.h>

#include "copcalc/membership.hpp"
#include "oracles.hpp"

using namespace copcalc;

namespace {

const PhiContext& ctx() {
  static const PhiContext c = make_context(Mobius(-7.0, -3.0, 2.0, 8.0));
  return c;
}

AlgebraElement random_element(oracle::Random& rng) {
  AlgebraElement e;
  auto poly = [&](bool zero_constant) {
    std::vector<cplx> p(static_cast<std::size_t>(rng.uniform(0.0, 3.99)));
    for (auto& x : p) x = rng.disk();
    if (zero_constant && !p.empty()) p[0] = 0.0;
    return p;
  };
  e.c = rng.disk();
  e.f = poly(true);
  e.g = poly(true);
  e.p = poly(false);
  e.q = poly(false);
  return e;
}

}  // namespace

TEST_CASE("running context") {
  const PhiContext& c = ctx();
  CHECK(std::abs(c.zeta - 1.0) <= 1e-12);
  CHECK(std::abs(c.eta + 1.0) <= 1e-12);
  CHECK(std::abs(c.s - 2.0) <= 1e-12);
  CHECK(std::abs(c.b - 0.2) <= 1e-12);
  CHECK(std::abs(c.c - 0.1) <= 1e-12);
  CHECK(projective_eq(c.sigma, krein_adjoint(c.phi)));
}

TEST_CASE("context consistency over the phi family") {
  oracle::Random rng(31);
  int made = 0;
  while (made < 50) {
    const cplx zeta = rng.unimodular(), eta = rng.unimodular();
    const double sp = rng.uniform(0.05, 0.95);
    const cplx d(rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0));
    if (((d - 1.0) / (d + 1.0)).real() <= sp + 1e-6) continue;
    if (std::abs(zeta - eta) < 1e-3) continue;
    const PhiContext c = make_context(phi_family_at(zeta, eta, sp, d));
    CHECK(std::abs(c.zeta - zeta) <= 1e-10);
    CHECK(std::abs(c.eta - eta) <= 1e-10);
    CHECK(std::abs(c.s - 1.0 / sp) <= 1e-9 * c.s);
    CHECK(std::abs(c.c * c.s - c.b) <= 1e-12);
    CHECK(projective_eq(compose(c.sigma, c.phi), parabolic(c.zeta, 2.0 * c.c), 1e-10));
    CHECK(projective_eq(compose(c.phi, c.sigma), parabolic(c.eta, 2.0 * c.b), 1e-10));
    ++made;
  }
}

TEST_CASE("inadmissible phi") {
  CHECK_THROWS_AS(make_context(Mobius::identity()), DomainError);
  CHECK_THROWS_AS(make_context(Mobius(1.0, 0.0, 0.0, 3.0)), DomainError);
  CHECK_THROWS_AS(make_context(parabolic(1.0, 1.0)), DomainError);
}

TEST_CASE("linear-fractional members, one per row") {
  const PhiContext& c = ctx();
  struct Case {
    Mobius psi;
    Condition cond;
    cplx a;
  };
  const Case cases[] = {
      {compose(parabolic(c.eta, 0.3, true), c.phi), Condition::A, 0.3},
      {parabolic(c.zeta, cplx(0.5, 1.0)), Condition::B, cplx(0.5, 1.0)},
      {compose(parabolic(c.zeta, -0.05, true), c.sigma), Condition::C, -0.05},
      {parabolic(c.eta, 2.0), Condition::D, 2.0},
  };
  for (const auto& cs : cases) {
    const MembershipVerdict v = linfrac_membership(c, cs.psi);
    REQUIRE(v.member);
    CHECK(v.condition == cs.cond);
    REQUIRE(v.family_parameter.has_value());
    CHECK(std::abs(*v.family_parameter - cs.a) <= 1e-9);
    REQUIRE(v.symbol.has_value());
    CHECK(v.representative.has_value());
  }
  CHECK(linfrac_membership(c, c.phi).condition == Condition::A);
  CHECK(linfrac_membership(c, c.sigma).condition == Condition::C);
}

TEST_CASE("linear-fractional non-members") {
  const PhiContext& c = ctx();
  const auto out = linfrac_membership(c, compose(parabolic(c.eta, -0.25, true), c.phi));
  CHECK_FALSE(out.member);
  CHECK(out.reason == "outside admissible translation range");
  CHECK(linfrac_membership(c, compose(parabolic(c.eta, -0.2, true), c.phi)).member == false);
  CHECK_FALSE(linfrac_membership(c, parabolic(c.zeta, cplx(0.0, 1.0), true)).member);
  CHECK_FALSE(linfrac_membership(c, Mobius(cplx(0.0, 1.0), 0.0, 0.0, 1.0)).member);
  const auto off = linfrac_membership(c, parabolic(cplx(0.0, 1.0), 0.5));
  CHECK_FALSE(off.member);
  CHECK(off.condition == Condition::None);
  const auto compact = linfrac_membership(c, Mobius(1.0, 0.0, 0.0, 3.0));
  CHECK(compact.member);
  CHECK(compact.condition == Condition::Compact);
  CHECK(compact.symbol->is_zero());
  const auto id = linfrac_membership(c, Mobius::identity());
  CHECK(id.member);
  CHECK(approx_equal(*id.symbol, SymbolMatrix::scalar(1.0, c.s), 1e-15));
}

TEST_CASE("symbols of linear-fractional members match the words they come from") {
  const PhiContext& c = ctx();
  CHECK(approx_equal(*linfrac_membership(c, c.phi).symbol, psi_of_word(parse_word("x"), c.s), 1e-12));
  CHECK(approx_equal(*linfrac_membership(c, c.sigma).symbol, scale(psi_of_word(parse_word("x*"), c.s), 1.0 / c.s), 1e-12));
  // C_{phi o sigma} = C_sigma C_phi
  const SymbolMatrix ps = *linfrac_membership(c, compose(c.phi, c.sigma)).symbol;
  CHECK(approx_equal(ps, mul(*linfrac_membership(c, c.sigma).symbol, *linfrac_membership(c, c.phi).symbol), 1e-12));
}

TEST_CASE("coset decomposition reproduces the element's symbol") {
  oracle::Random rng(32);
  for (int i = 0; i < 50; ++i) {
    const AlgebraElement e = random_element(rng);
    const SymbolMatrix direct = psi_of_element(e, ctx().s);
    const SymbolMatrix via = combination_symbol(ctx(), coset_decompose(ctx(), e));
    CHECK(approx_equal(direct, via, 1e-9));
  }
}

TEST_CASE("necessity check on first-order profiles") {
  const PhiContext& c = ctx();
  auto entry = [](cplx alpha, cplx v, cplx d) { return DataVector{alpha, {v, d}}; };
  BoundaryProfile a;
  a.entries = {entry(c.zeta, c.eta, -0.5)};
  CHECK(necessity_check(c, a) == Condition::A);
  BoundaryProfile e;
  e.entries = {entry(c.zeta, c.eta, -0.5), entry(c.eta, c.eta, 1.0)};
  CHECK(necessity_check(c, e) == Condition::E);
  BoundaryProfile f;
  f.entries = {entry(c.zeta, c.zeta, 1.0), entry(c.eta, c.zeta, -2.0)};
  CHECK(necessity_check(c, f) == Condition::F);
  BoundaryProfile off;
  off.entries = {entry(cplx(0.0, 1.0), cplx(0.0, 1.0), 1.0)};
  CHECK(necessity_check(c, off) == Condition::None);
  CHECK(necessity_check(c, BoundaryProfile{}) == Condition::Compact);
  BoundaryProfile id;
  id.whole_circle = true;
  id.identity = true;
  CHECK(necessity_check(c, id) == Condition::Identity);
}

TEST_CASE("two-point members of cases e and f") {
  const PhiContext& c = ctx();
  for (Condition w : {Condition::E, Condition::F}) {
    const BoundaryProfile p = two_point_profile(c, w);
    REQUIRE(p.entries.size() == 2);
    CHECK(p.contact_orders == std::vector<int>{2, 2});
    for (const auto& e : p.entries) CHECK(contact_order_from_jet(e) == ContactOrder::Two);
    CHECK(necessity_check(c, p) == w);
    const MembershipVerdict v = general_membership(c, p);
    CHECK(v.member);
    CHECK(v.condition == w);
    REQUIRE(v.decomposition.size() == 2);
    SymbolMatrix sum = SymbolMatrix::zero(c.s);
    for (const auto& [coeff, beta] : v.decomposition) sum = add(sum, scale(*linfrac_membership(c, beta).symbol, coeff));
    CHECK(approx_equal(sum, *v.symbol, 1e-12));
  }
}

TEST_CASE("general membership of a single jet and of higher contact") {
  const PhiContext& c = ctx();
  const BoundaryProfile p = tangency_set(c.phi);
  const MembershipVerdict v = general_membership(c, p);
  CHECK(v.member);
  CHECK(v.condition == Condition::A);
  REQUIRE(v.decomposition.size() == 1);
  CHECK(projective_eq(v.decomposition[0].second, c.phi, 1e-9));
  BoundaryProfile high = p;
  high.contact_orders = {4};
  const MembershipVerdict h = general_membership(c, high);
  CHECK_FALSE(h.member);
  CHECK(h.reason == "order of contact exceeds two");
  BoundaryProfile missing = p;
  missing.contact_orders.clear();
  CHECK_THROWS_AS(general_membership(c, missing), ValidationError);
}
