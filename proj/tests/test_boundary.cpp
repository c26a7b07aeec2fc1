#include <doctest.h>

#include "copcalc/boundary.hpp"
#include "oracles.hpp"

using namespace copcalc;

namespace {

const Mobius kPhi(-7.0, -3.0, 2.0, 8.0);

}  // namespace

TEST_CASE("tangency set of phi") {
  const BoundaryProfile p = tangency_set(kPhi);
  REQUIRE(p.entries.size() == 1);
  CHECK_FALSE(p.whole_circle);
  CHECK(p.contact_orders == std::vector<int>{2});
  const DataVector& d = p.entries[0];
  CHECK(std::abs(d.alpha - 1.0) <= 1e-12);
  CHECK(std::abs(d.value() + 1.0) <= 1e-12);
  CHECK(std::abs(d.derivative() + 0.5) <= 1e-12);
}

TEST_CASE("tangency set of compacts and automorphisms") {
  CHECK(tangency_set(Mobius(1.0, 0.0, 0.0, 3.0)).empty());
  const BoundaryProfile rot = tangency_set(Mobius(cplx(0.0, 1.0), 0.0, 0.0, 1.0));
  CHECK(rot.whole_circle);
  CHECK_FALSE(rot.identity);
  CHECK(tangency_set(Mobius::identity()).identity);
  CHECK_THROWS_AS(tangency_set(Mobius(2.0, 0.0, 0.0, 1.0)), DomainError);
}

TEST_CASE("boundary maximizer against a dense theta grid") {
  oracle::Random rng(11);
  for (int i = 0; i < 20; ++i) {
    const Mobius f(rng.plane(), rng.plane(), rng.plane(), rng.plane());
    const cplx pole = f.pole().value_or(100.0);
    if (std::abs(std::abs(pole) - 1.0) < 0.3) continue;
    const cplx z = boundary_maximizer(f);
    const auto [best, at] = oracle::circle_max([&](cplx w) { return f(w); });
    CHECK(std::abs(f(z)) >= best - 1e-9 * best);
    CHECK(std::abs(z - at) <= 1e-3);
  }
}

TEST_CASE("first-order data vectors of phi, sigma and their products") {
  const Mobius sigma = krein_adjoint(kPhi);
  const Mobius ps = compose(kPhi, sigma);
  const Mobius sp = compose(sigma, kPhi);
  const cplx zeta = 1.0, eta = -1.0, dphi = -0.5;
  auto check = [](const DataVector& d, cplx v, cplx dv) {
    CHECK(std::abs(d.value() - v) <= 1e-10);
    CHECK(std::abs(d.derivative() - dv) <= 1e-10);
  };
  check(data_vector(kPhi, zeta, 1), eta, dphi);
  check(data_vector(compose(ps, kPhi), zeta, 1), eta, dphi);
  check(data_vector(ps, eta, 1), eta, 1.0);
  check(data_vector(sp, zeta, 1), zeta, 1.0);
  // sigma maps eta to zeta with angular derivative s = 1/|phi'(zeta)|
  const DataVector ds = data_vector(sigma, eta, 1);
  CHECK(std::abs(ds.value() - zeta) <= 1e-10);
  CHECK(std::abs(std::abs(ds.derivative()) - 2.0) <= 1e-10);
  CHECK_THROWS_AS(data_vector(kPhi, cplx(0.0, 1.0), 1), DomainError);
}

TEST_CASE("derivative phase is forced at a boundary contact") {
  oracle::Random rng(12);
  for (int i = 0; i < 20; ++i) {
    const cplx zeta = rng.unimodular(), eta = rng.unimodular();
    const double s = rng.uniform(0.05, 0.95);
    const cplx d(rng.uniform(1.0, 20.0), rng.uniform(-2.0, 2.0));
    if (((d - 1.0) / (d + 1.0)).real() < s + 1e-6) continue;
    const DataVector v = data_vector(phi_family_at(zeta, eta, s, d), zeta, 1);
    CHECK(std::abs(v.derivative() - v.value() * std::conj(zeta) * std::abs(v.derivative())) <= 1e-10);
  }
}

TEST_CASE("phi family") {
  oracle::Random rng(13);
  int made = 0;
  for (int i = 0; i < 100; ++i) {
    const cplx eta = rng.unimodular();
    const double s = rng.uniform(0.05, 0.95);
    const cplx d(rng.uniform(-30.0, 30.0), rng.uniform(-30.0, 30.0));
    if (((d - 1.0) / (d + 1.0)).real() <= s + 1e-9) {
      if (((d - 1.0) / (d + 1.0)).real() < s - 1e-9) CHECK_THROWS_AS(phi_family(eta, s, d), DomainError);
      continue;
    }
    const Mobius f = phi_family(eta, s, d);
    const auto cls = classify(f);
    CHECK(cls.sup_norm_one);
    CHECK(cls.is_disk_self_map);
    CHECK_FALSE(cls.is_disk_automorphism);
    CHECK(std::abs(f(1.0) - eta) <= 1e-10);
    CHECK(std::abs(std::abs(jet(f, 1.0, 1)[1]) - s) <= 1e-10);
    ++made;
  }
  CHECK(made > 10);
  // phi itself: eta = -1, sPrime = 1/2, d = 4
  CHECK(projective_eq(phi_family(-1.0, 0.5, 4.0), kPhi));
  CHECK(phi_family_is_boundary_case(0.5, 3.0));
  CHECK_FALSE(phi_family_is_boundary_case(0.5, 4.0));
}

TEST_CASE("contact order and curvature from jets") {
  const DataVector j = data_vector(kPhi, 1.0, 2);
  CHECK(contact_order_from_jet(j) == ContactOrder::Two);
  CHECK(std::abs(jet_curvature(j) - 1.2) <= 1e-12);
  const DataVector rot = data_vector(Mobius(cplx(0.0, 1.0), 0.0, 0.0, 1.0), 1.0, 2);
  CHECK(contact_order_from_jet(rot) == ContactOrder::Higher);
}

TEST_CASE("lft_from_jet2 inverts the jet") {
  oracle::Random rng(14);
  for (int i = 0; i < 30; ++i) {
    const Mobius f(rng.plane(), rng.plane(), rng.plane(), rng.plane());
    const cplx z0 = rng.unimodular();
    if (f.pole() && std::abs(*f.pole() - z0) < 0.2) continue;
    const auto j = jet(f, z0, 2);
    if (std::abs(j[1]) < 1e-3) continue;
    CHECK(projective_eq(lft_from_jet2(z0, j[0], j[1], j[2]), f, 1e-8));
  }
}

TEST_CASE("compose_jets against the jet of the composition") {
  oracle::Random rng(15);
  for (int i = 0; i < 30; ++i) {
    const Mobius f(rng.plane(), rng.plane(), rng.plane(), rng.plane());
    const Mobius g(rng.plane(), rng.plane(), rng.plane(), rng.plane());
    const cplx z0 = rng.disk(0.9);
    if ((g.pole() && std::abs(*g.pole() - z0) < 0.2) || (f.pole() && std::abs(*f.pole() - g(z0)) < 0.2)) continue;
    const DataVector inner{z0, jet(g, z0, 2)};
    const DataVector out = compose_jets(jet(f, g(z0), 2), inner);
    const auto ref = jet(compose(f, g), z0, 2);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(out.values[k] - ref[k]) <= 1e-8 * std::max(1.0, std::abs(ref[k])));
  }
}
