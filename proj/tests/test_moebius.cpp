#include <doctest.h>

#include "copcalc/moebius.hpp"
#include "oracles.hpp"

using namespace copcalc;

namespace {

Mobius random_map(oracle::Random& rng) {
  for (;;) {
    const cplx a = rng.plane(), b = rng.plane(), c = rng.plane(), d = rng.plane();
    if (std::abs(a * d - b * c) > 0.1) return {a, b, c, d};
  }
}

const Mobius kPhi(-7.0, -3.0, 2.0, 8.0);

}  // namespace

TEST_CASE("canonical scaling puts 1 on the largest coefficient") {
  const Mobius f(2.0, 4.0, -8.0, 1.0);
  CHECK(f.c() == cplx(1.0));
  CHECK(f.a() == cplx(-0.25));
  CHECK(projective_eq(f, Mobius(-1.0, -2.0, 4.0, -0.5)));
  CHECK_THROWS_AS(Mobius(1.0, 2.0, 2.0, 4.0), ValidationError);
}

TEST_CASE("composition agrees with pointwise evaluation") {
  oracle::Random rng(1);
  for (int i = 0; i < 100; ++i) {
    const Mobius f = random_map(rng), g = random_map(rng);
    const cplx z = rng.disk(0.5);
    const cplx gz = g(z);
    if (std::abs(g.c() * gz + g.d()) < 1e-3 || std::abs(f.c() * gz + f.d()) < 1e-3) continue;
    CHECK(std::abs(compose(f, g)(z) - f(gz)) <= 1e-9 * std::max(1.0, std::abs(f(gz))));
  }
}

TEST_CASE("iterate and inverse") {
  CHECK(projective_eq(iterate(kPhi, 3), compose(kPhi, compose(kPhi, kPhi))));
  CHECK(projective_eq(compose(kPhi, kPhi.inverse()), Mobius::identity()));
  CHECK(projective_eq(iterate(kPhi, 0), Mobius::identity()));
}

TEST_CASE("jets match Cauchy-integral derivatives") {
  oracle::Random rng(2);
  for (int i = 0; i < 20; ++i) {
    const Mobius f = random_map(rng);
    const cplx z0 = rng.disk(0.8);
    if (f.pole() && std::abs(*f.pole() - z0) < 0.2) continue;
    const auto j = jet(f, z0, 3);
    for (int k = 0; k <= 3; ++k) {
      const cplx ref = oracle::cauchy_derivative([&](cplx z) { return f(z); }, z0, k);
      CHECK(std::abs(j[k] - ref) <= 1e-6 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("classification of standard maps") {
  CHECK(classify(Mobius::identity()).kind == MapKind::Identity);
  const auto rho = classify(parabolic(1.0, 0.5));
  CHECK(rho.kind == MapKind::Parabolic);
  CHECK(rho.is_disk_self_map);
  CHECK(rho.sup_norm_one);
  CHECK_FALSE(rho.is_disk_automorphism);
  const auto rot = classify(Mobius(cplx(0.0, 1.0), 0.0, 0.0, 1.0));
  CHECK(rot.kind == MapKind::Elliptic);
  CHECK(rot.is_disk_automorphism);
  CHECK(classify(Mobius(2.0, 0.0, 0.0, 1.0)).kind == MapKind::Hyperbolic);
  CHECK(classify(Mobius(cplx(2.0, 1.0), 0.0, 0.0, 1.0)).kind == MapKind::Loxodromic);
  const auto small = classify(Mobius(1.0, 0.0, 0.0, 3.0));
  CHECK(small.is_disk_self_map);
  CHECK_FALSE(small.sup_norm_one);
  const auto phi = classify(kPhi);
  CHECK(phi.is_disk_self_map);
  CHECK(phi.sup_norm_one);
}

TEST_CASE("fixed points are fixed") {
  oracle::Random rng(3);
  for (int i = 0; i < 50; ++i) {
    const Mobius f = random_map(rng);
    for (const auto& p : classify(f).fixed_points) {
      if (p.infinite) {
        CHECK(std::abs(f.c()) <= 1e-12);
      } else if (std::abs(p.value) < 1e6) {
        CHECK(std::abs(f(p.value) - p.value) <= 1e-8 * std::max(1.0, std::abs(p.value)));
      }
    }
  }
}

TEST_CASE("Krein adjoint") {
  const Mobius sigma = krein_adjoint(kPhi);
  CHECK(projective_eq(sigma, Mobius(-7.0, -2.0, 3.0, 8.0)));
  oracle::Random rng(4);
  for (int i = 0; i < 30; ++i) {
    const Mobius f = random_map(rng);
    CHECK(projective_eq(krein_adjoint(krein_adjoint(f)), f, 1e-10));
    const Mobius g = random_map(rng);
    CHECK(projective_eq(krein_adjoint(compose(f, g)), compose(krein_adjoint(g), krein_adjoint(f)), 1e-10));
  }
}

TEST_CASE("parabolic maps: semigroup, fixed point, translation number") {
  oracle::Random rng(5);
  for (int i = 0; i < 30; ++i) {
    const cplx gamma = rng.unimodular();
    const cplx a(rng.uniform(0.01, 2.0), rng.uniform(-2.0, 2.0));
    const cplx b(rng.uniform(0.01, 2.0), rng.uniform(-2.0, 2.0));
    const Mobius r = parabolic(gamma, a);
    CHECK(std::abs(r(gamma) - gamma) <= 1e-12);
    CHECK(projective_eq(compose(r, parabolic(gamma, b)), parabolic(gamma, a + b)));
    const auto t = translation_number(r);
    CHECK(std::abs(t.gamma - gamma) <= 1e-9);
    CHECK(std::abs(t.a - a) <= 1e-9);
  }
  CHECK_THROWS_AS(parabolic(1.0, -0.5), DomainError);
  CHECK_NOTHROW(parabolic(1.0, -0.5, true));
  CHECK_THROWS(translation_number(Mobius::identity()));
}

TEST_CASE("tau sends the circle to the real line and gamma to 0") {
  const cplx gamma = std::polar(1.0, 0.7);
  const Mobius t = tau(gamma);
  CHECK(std::abs(t(gamma)) <= 1e-14);
  for (double th : {0.1, 1.0, 2.5, -2.0}) CHECK(std::abs(t(std::polar(1.0, th)).imag()) <= 1e-12);
  CHECK(t(0.0).imag() > 0.0);
}

TEST_CASE("half-plane transplant of rho_{1,1}") {
  const auto u = conjugate_to_halfplane(parabolic(1.0, 1.0), 1.0, 1.0);
  CHECK(std::abs(u.jet[0]) <= 1e-14);
  CHECK(std::abs(u.jet[1] - 1.0) <= 1e-12);
  CHECK(std::abs(u.jet[2] - cplx(0.0, 2.0)) <= 1e-12);
  const auto v = conjugate_to_halfplane(parabolic(1.0, cplx(0.3, 0.4)), 1.0, 1.0);
  CHECK(std::abs(v.jet[2] - 2.0 * cplx(0.0, 1.0) * cplx(0.3, 0.4)) <= 1e-12);
}

TEST_CASE("image circle against three-point circumcircle") {
  const Circle c = image_circle(kPhi);
  CHECK(std::abs(c.center - (-1.0 / 6.0)) <= 1e-12);
  CHECK(std::abs(c.radius - 5.0 / 6.0) <= 1e-12);
  oracle::Random rng(6);
  for (int i = 0; i < 30; ++i) {
    const Mobius f = random_map(rng);
    const Circle ic = image_circle(f);
    if (ic.is_line() || ic.radius > 1e4) continue;
    const auto [center, radius] = oracle::circumcircle(f(1.0), f(cplx(0.0, 1.0)), f(-1.0));
    CHECK(std::abs(center - ic.center) <= 1e-8 * std::max(1.0, radius));
    CHECK(std::abs(radius - ic.radius) <= 1e-8 * std::max(1.0, radius));
  }
}

TEST_CASE("curvature of the image curve") {
  // Image of the circle under phi is a circle of radius 5/6, traversed once.
  CHECK(std::abs(curvature_at(kPhi, 1.0) - 6.0 / 5.0) <= 1e-12);
  CHECK(std::abs(curvature_at(Mobius::identity(), cplx(0.0, 1.0)) - 1.0) <= 1e-12);
}

TEST_CASE("projective equality uses every minor") {
  CHECK(projective_eq(kPhi, Mobius(7.0, 3.0, -2.0, -8.0)));
  CHECK_FALSE(projective_eq(kPhi, Mobius(-7.0, -3.0, 2.0, 8.0 + 1e-6)));
  CHECK_FALSE(projective_eq(Mobius(1.0, 0.0, 0.0, 2.0), Mobius(1.0, 0.0, 1e-9, 2.0)));
}
