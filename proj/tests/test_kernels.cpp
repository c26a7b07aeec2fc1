#include <doctest.h>

#include <vector>

#include "copcalc/kernels.hpp"
#include "copcalc/numerics.hpp"
#include "copcalc/symbols.hpp"
#include "oracles.hpp"

using namespace copcalc;

namespace {

std::vector<double> randv(oracle::Random& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-2.0, 2.0);
  return v;
}

}  // namespace

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const kernels::KernelTable* simd = kernels::avx2_table();
  if (simd == nullptr) {
    MESSAGE("AVX2 not available, skipping");
    return;
  }
  const kernels::KernelTable& ref = kernels::scalar_table();
  oracle::Random rng(61);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 1001u}) {
    const auto xr = randv(rng, n), xi = randv(rng, n), yr = randv(rng, n), yi = randv(rng, n);
    auto ar = yr, ai = yi, br = yr, bi = yi;
    ref.caxpy(n, 0.7, -1.3, xr.data(), xi.data(), ar.data(), ai.data());
    simd->caxpy(n, 0.7, -1.3, xr.data(), xi.data(), br.data(), bi.data());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(ar[i] - br[i]) <= 1e-14);
      CHECK(std::abs(ai[i] - bi[i]) <= 1e-14);
    }
    double r1, i1, r2, i2;
    ref.cdotc(n, xr.data(), xi.data(), yr.data(), yi.data(), &r1, &i1);
    simd->cdotc(n, xr.data(), xi.data(), yr.data(), yi.data(), &r2, &i2);
    CHECK(std::abs(r1 - r2) <= 1e-12 * std::max(1.0, static_cast<double>(n)));
    CHECK(std::abs(i1 - i2) <= 1e-12 * std::max(1.0, static_cast<double>(n)));
    std::vector<std::vector<double>> e(8);
    for (auto& v : e) v = randv(rng, n);
    std::vector<double> o1(n), o2(n);
    ref.sigma_max_sq(n, e[0].data(), e[1].data(), e[2].data(), e[3].data(), e[4].data(), e[5].data(), e[6].data(),
                     e[7].data(), o1.data());
    simd->sigma_max_sq(n, e[0].data(), e[1].data(), e[2].data(), e[3].data(), e[4].data(), e[5].data(), e[6].data(),
                       e[7].data(), o2.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(o1[i] - o2[i]) <= 1e-12 * std::max(1.0, o1[i]));
  }
}

TEST_CASE("scalar sigma_max_sq on known matrices") {
  const double one = 1.0, zero = 0.0, two = 2.0;
  double out = 0.0;
  // diag(1, 2)
  kernels::scalar_table().sigma_max_sq(1, &one, &zero, &zero, &zero, &zero, &zero, &two, &zero, &out);
  CHECK(std::abs(out - 4.0) <= 1e-15);
  // rank one [[1, 1], [1, 1]]
  kernels::scalar_table().sigma_max_sq(1, &one, &zero, &one, &zero, &one, &zero, &one, &zero, &out);
  CHECK(std::abs(out - 4.0) <= 1e-15);
}

TEST_CASE("library results do not depend on the backend") {
  if (kernels::avx2_table() == nullptr) return;
  const Mobius phi(-7.0, -3.0, 2.0, 8.0);
  REQUIRE(kernels::select("scalar"));
  const double n1 = operator_norm(composition_matrix(compose(phi, phi), 96));
  const double e1 = essential_norm(psi_of_word(parse_word("xx*x"), 2.0));
  REQUIRE(kernels::select("avx2"));
  const double n2 = operator_norm(composition_matrix(compose(phi, phi), 96));
  const double e2 = essential_norm(psi_of_word(parse_word("xx*x"), 2.0));
  CHECK(std::abs(n1 - n2) <= 1e-10 * n1);
  CHECK(std::abs(e1 - e2) <= 1e-12);
  CHECK_FALSE(kernels::select("neon"));
}
