#include <doctest.h>

#include "copcalc/blaschke.hpp"
#include "oracles.hpp"

using namespace copcalc;

namespace {

cplx poly(const std::vector<cplx>& c, cplx z) {
  cplx out = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * z + *it;
  return out;
}

}  // namespace

TEST_CASE("symmetric cases give monomials") {
  const TwoPointBlaschke b2 = construct_two_point(-1.0, 1.0, 2.0, 2.0);
  CHECK(b2.m == 1);
  REQUIRE(b2.product.zeros.size() == 1);
  CHECK(b2.product.zeros[0].a == cplx(0.0));
  CHECK(b2.product.zeros[0].multiplicity == 2);
  const ExpandedRational e4 = expand(construct_two_point(-1.0, 1.0, 4.0, 4.0).product);
  CHECK(e4.numerator == std::vector<cplx>{0.0, 0.0, 0.0, 0.0, 1.0});
  CHECK(e4.denominator == std::vector<cplx>{1.0});
}

TEST_CASE("(1,1) gives (3z^2+1)/(z^2+3)") {
  const BlaschkeProduct B = construct_two_point(-1.0, 1.0, 1.0, 1.0).product;
  oracle::Random rng(41);
  for (int i = 0; i < 20; ++i) {
    const cplx z = rng.disk();
    CHECK(std::abs(evaluate(B, z) - (3.0 * z * z + 1.0) / (z * z + 3.0)) <= 1e-12);
  }
}

TEST_CASE("endpoint conditions for random data") {
  oracle::Random rng(42);
  for (int i = 0; i < 200; ++i) {
    const cplx zeta = rng.unimodular();
    cplx eta = rng.unimodular();
    while (std::abs(zeta - eta) < 1e-2) eta = rng.unimodular();
    const double t1 = std::exp(rng.uniform(-2.0, 3.0)), t2 = std::exp(rng.uniform(-2.0, 3.0));
    const TwoPointBlaschke T = construct_two_point(zeta, eta, t1, t2);
    const auto [be, de] = evaluate_with_derivative(T.product, eta);
    const auto [bz, dz] = evaluate_with_derivative(T.product, zeta);
    CHECK(std::abs(be - eta) <= 1e-9);
    CHECK(std::abs(de - t1) <= 1e-9 * std::max(1.0, t1));
    CHECK(std::abs(bz - eta) <= 1e-9);
    CHECK(std::abs(dz - eta * std::conj(zeta) * t2) <= 1e-9 * std::max(1.0, t2));
    // degree is the minimal power of two allowed by Julia's inequality
    CHECK(T.product.degree() == (std::uint64_t{1} << T.m));
    CHECK(std::pow(4.0, T.m) >= t1 * T.t2_normalized * (1.0 - 1e-12));
  }
}

TEST_CASE("normalized product satisfies the boundary-derivative identity") {
  const TwoPointBlaschke T = construct_two_point(cplx(0.0, 1.0), 1.0, 3.0, 0.5);
  CHECK(std::abs(evaluate(T.normalized, 1.0) - 1.0) <= 1e-12);
  CHECK(std::abs(evaluate(T.normalized, -1.0) - 1.0) <= 1e-12);
  CHECK(std::abs(boundary_derivative_sum(T.normalized, 1.0) - 3.0) <= 1e-9);
  CHECK(std::abs(boundary_derivative_sum(T.normalized, -1.0) - T.t2_normalized) <= 1e-9);
}

TEST_CASE("expanded form agrees with the product") {
  oracle::Random rng(43);
  for (int i = 0; i < 20; ++i) {
    const BlaschkeProduct B = construct_two_point(rng.unimodular(), rng.unimodular(), rng.uniform(0.5, 6.0),
                                                  rng.uniform(0.5, 6.0))
                                  .product;
    const ExpandedRational e = expand(B);
    CHECK(e.denominator[0] == cplx(1.0));
    const cplx z = rng.disk();
    CHECK(std::abs(poly(e.numerator, z) / poly(e.denominator, z) - evaluate(B, z)) <= 1e-9);
  }
}

TEST_CASE("jets against Cauchy derivatives") {
  BlaschkeProduct B;
  B.zeros = {{cplx(0.3, 0.2), 2}, {cplx(-0.5, 0.1), 1}, {0.0, 1}};
  B.front = std::polar(1.0, 0.4);
  CHECK(B.degree() == 4);
  for (cplx z0 : {cplx(0.1, 0.1), cplx(-0.4, 0.5)}) {
    const auto j = blaschke_jet(B, z0);
    for (int k = 0; k < 3; ++k) {
      const cplx ref = oracle::cauchy_derivative([&](cplx z) { return evaluate(B, z); }, z0, k, 1e-2);
      CHECK(std::abs(j[k] - ref) <= 1e-7 * std::max(1.0, std::abs(ref)));
    }
  }
  for (double th : {0.3, 2.0, -1.0}) CHECK(std::abs(std::abs(evaluate(B, std::polar(1.0, th))) - 1.0) <= 1e-12);
}

TEST_CASE("factor maps and errors") {
  const cplx a(0.3, -0.4);
  const Mobius f = blaschke_factor(a);
  CHECK(std::abs(f(a)) <= 1e-15);
  CHECK(std::abs(std::abs(f(std::polar(1.0, 1.1))) - 1.0) <= 1e-14);
  CHECK(projective_eq(blaschke_factor(0.0), Mobius::identity()));
  CHECK_THROWS_AS(blaschke_factor(1.0), ValidationError);
  CHECK_THROWS_AS(construct_two_point(1.0, 1.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(construct_two_point(1.0, -1.0, 0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(evaluate(BlaschkeProduct{}, 2.0), ValidationError);
}
