#include <doctest.h>

#include "copcalc/json_io.hpp"
#include "oracles.hpp"

using namespace copcalc;

TEST_CASE("complex numbers") {
  CHECK(complex_from_json(json(2.5)) == cplx(2.5));
  CHECK(complex_from_json(json::array({1.0, -2.0})) == cplx(1.0, -2.0));
  CHECK(complex_to_json(cplx(-0.0, -0.0)).dump() == "[0.0,0.0]");
  CHECK_THROWS_AS(complex_from_json(json("x")), ValidationError);
  CHECK_THROWS_AS(complex_from_json(json::array({1.0})), ValidationError);
}

TEST_CASE("round trips") {
  oracle::Random rng(71);
  const Mobius f(rng.plane(), rng.plane(), rng.plane(), rng.plane());
  CHECK(projective_eq(mobius_from_json(to_json(f)), f));
  CHECK_THROWS_AS(mobius_from_json(json::parse(R"({"a":1,"b":0,"c":0})")), ValidationError);

  const BoundaryProfile p = tangency_set(Mobius(-7.0, -3.0, 2.0, 8.0));
  const BoundaryProfile q = profile_from_json(to_json(p));
  REQUIRE(q.entries.size() == 1);
  CHECK(q.entries[0].values == p.entries[0].values);
  CHECK(q.contact_orders == p.contact_orders);

  const PowerSum ps({{cplx(1.0, 2.0), 0.5}, {3.0, cplx(1.0, 1.0)}});
  CHECK(exactly_equal(power_sum_from_json(to_json(ps)), ps));

  const SymbolMatrix F = psi_of_word(parse_word("xx*x"), 2.0);
  CHECK(approx_equal(symbol_from_json(to_json(F)), F, 0.0));
  CHECK_THROWS_AS(symbol_from_json(json::parse(R"({"e11":{"terms":[]}})")), ValidationError);

  AlgebraElement e;
  e.c = 1.0;
  e.f = {0.0, 2.0};
  e.q = {cplx(0.0, 1.0)};
  const AlgebraElement e2 = element_from_json(to_json(e));
  CHECK(e2.c == e.c);
  CHECK(e2.f == e.f);
  CHECK(e2.q == e.q);

  const PhiContext ctx = make_context(Mobius(-7.0, -3.0, 2.0, 8.0));
  const PhiContext c2 = context_from_json(to_json(ctx));
  CHECK(std::abs(c2.s - ctx.s) <= 1e-12);
  json bad = to_json(ctx);
  bad["s"] = 3.0;
  CHECK_THROWS_AS(context_from_json(bad), ValidationError);

  const BlaschkeProduct B = construct_two_point(-1.0, 1.0, 1.0, 1.0).product;
  const BlaschkeProduct B2 = blaschke_from_json(to_json(B));
  CHECK(std::abs(evaluate(B2, 0.3) - evaluate(B, 0.3)) <= 1e-15);

  const Combination combo = {{2.0, f}, {cplx(0.0, 1.0), Mobius::identity()}};
  const Combination c3 = combination_from_json(to_json(combo));
  REQUIRE(c3.size() == 2);
  CHECK(c3[1].first == cplx(0.0, 1.0));
}

TEST_CASE("membership verdicts use nulls for missing fields") {
  const PhiContext ctx = make_context(Mobius(-7.0, -3.0, 2.0, 8.0));
  const json j = to_json(linfrac_membership(ctx, Mobius(cplx(0.0, 1.0), 0.0, 0.0, 1.0)));
  CHECK(j["member"] == false);
  CHECK(j["symbol"].is_null());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_json("{", "--map"), ValidationError);
  CHECK(parse_json("[1, 2]", "--x").size() == 2);
}

TEST_CASE("matrix output") {
  const TruncatedOperator T = composition_matrix(Mobius(1.0, 0.0, 0.0, 2.0), 3);
  const json h = matrix_header(T);
  CHECK(h["n"] == 3);
  const json m = to_json(T);
  REQUIRE(m["rows"].size() == 3);
  CHECK(complex_from_json(m["rows"][1][1]) == cplx(0.5));
}
