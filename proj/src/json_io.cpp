#include "copcalc/json_io.hpp"

#include <string>

namespace copcalc {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json complex_list(const std::vector<cplx>& v) {
  json out = json::array();
  for (cplx z : v) out.push_back(complex_to_json(z));
  return out;
}

std::vector<cplx> complex_list_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<cplx> out;
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

std::vector<cplx> optional_list(const json& j, const char* key) {
  return j.contains(key) ? complex_list_from_json(j.at(key), key) : std::vector<cplx>{};
}

}  // namespace

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ValidationError("complex number must be a number or a [re, im] pair, got " + j.dump());
}

// + 0.0 folds negative zeros
json complex_to_json(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json to_json(const Mobius& f) {
  return {{"a", complex_to_json(f.a())},
          {"b", complex_to_json(f.b())},
          {"c", complex_to_json(f.c())},
          {"d", complex_to_json(f.d())}};
}

Mobius mobius_from_json(const json& j) {
  return Mobius(complex_from_json(field(j, "a")), complex_from_json(field(j, "b")), complex_from_json(field(j, "c")),
                complex_from_json(field(j, "d")));
}

json to_json(const DataVector& d) { return {{"alpha", complex_to_json(d.alpha)}, {"values", complex_list(d.values)}}; }

DataVector data_vector_from_json(const json& j) {
  DataVector d{complex_from_json(field(j, "alpha")), complex_list_from_json(field(j, "values"), "values")};
  if (d.values.empty()) throw ValidationError("data vector needs at least a value");
  return d;
}

json to_json(const BoundaryProfile& p) {
  json entries = json::array();
  for (const auto& e : p.entries) entries.push_back(to_json(e));
  return {{"entries", entries},
          {"contact_orders", p.contact_orders},
          {"whole_circle", p.whole_circle},
          {"identity", p.identity}};
}

BoundaryProfile profile_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("profile must be an object");
  BoundaryProfile p;
  if (j.contains("entries")) {
    for (const auto& e : j.at("entries")) p.entries.push_back(data_vector_from_json(e));
  }
  if (j.contains("contact_orders")) {
    for (const auto& k : j.at("contact_orders")) {
      if (!k.is_number_integer()) throw ValidationError("contact orders must be integers");
      p.contact_orders.push_back(k.get<int>());
    }
  }
  p.whole_circle = j.value("whole_circle", false);
  p.identity = j.value("identity", false);
  return p;
}

json to_json(const PowerSum& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"c", complex_to_json(t.coeff)}, {"beta", complex_to_json(t.beta)}});
  return {{"terms", terms}};
}

PowerSum power_sum_from_json(const json& j) {
  std::vector<PowerTerm> terms;
  for (const auto& t : field(j, "terms")) terms.push_back({complex_from_json(field(t, "c")), complex_from_json(field(t, "beta"))});
  return PowerSum(std::move(terms));
}

json to_json(const SymbolMatrix& F) {
  return {{"e11", to_json(F.e11)}, {"e12", to_json(F.e12)}, {"e21", to_json(F.e21)},
          {"e22", to_json(F.e22)}, {"s_end", F.s_end}};
}

SymbolMatrix symbol_from_json(const json& j) {
  SymbolMatrix F;
  F.e11 = j.contains("e11") ? power_sum_from_json(j.at("e11")) : PowerSum{};
  F.e12 = j.contains("e12") ? power_sum_from_json(j.at("e12")) : PowerSum{};
  F.e21 = j.contains("e21") ? power_sum_from_json(j.at("e21")) : PowerSum{};
  F.e22 = j.contains("e22") ? power_sum_from_json(j.at("e22")) : PowerSum{};
  const json& s = field(j, "s_end");
  if (!s.is_number() || !(s.get<double>() > 0.0)) throw ValidationError("s_end must be a positive number");
  F.s_end = s.get<double>();
  return F;
}

json to_json(const AlgebraElement& e) {
  return {{"c", complex_to_json(e.c)}, {"f", complex_list(e.f)}, {"g", complex_list(e.g)},
          {"p", complex_list(e.p)},    {"q", complex_list(e.q)}};
}

AlgebraElement element_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("element must be an object");
  AlgebraElement e;
  e.c = j.contains("c") ? complex_from_json(j.at("c")) : cplx(0.0);
  e.f = optional_list(j, "f");
  e.g = optional_list(j, "g");
  e.p = optional_list(j, "p");
  e.q = optional_list(j, "q");
  return e;
}

json to_json(const Combination& combo) {
  json out = json::array();
  for (const auto& [c, psi] : combo) out.push_back({{"coeff", complex_to_json(c)}, {"map", to_json(psi)}});
  return out;
}

Combination combination_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("combination must be an array of {coeff, map}");
  Combination out;
  for (const auto& x : j) out.push_back({complex_from_json(field(x, "coeff")), mobius_from_json(field(x, "map"))});
  return out;
}

json to_json(const MembershipVerdict& v) {
  json out = {{"member", v.member}, {"condition", to_string(v.condition)}};
  out["family_parameter"] = v.family_parameter ? complex_to_json(*v.family_parameter) : json(nullptr);
  out["table2_row"] = v.table2_row ? json(to_string(*v.table2_row)) : json(nullptr);
  out["symbol"] = v.symbol ? to_json(*v.symbol) : json(nullptr);
  out["representative"] = v.representative ? json(*v.representative) : json(nullptr);
  out["decomposition"] = to_json(v.decomposition);
  out["reason"] = v.reason;
  return out;
}

json to_json(const PhiContext& ctx) {
  return {{"phi", to_json(ctx.phi)},          {"sigma", to_json(ctx.sigma)}, {"zeta", complex_to_json(ctx.zeta)},
          {"eta", complex_to_json(ctx.eta)}, {"s", ctx.s},                   {"b", ctx.b},
          {"c", ctx.c}};
}

PhiContext context_from_json(const json& j) {
  PhiContext ctx = make_context(mobius_from_json(field(j, "phi")));
  auto check = [&](const char* key, cplx stored) {
    if (j.contains(key) && std::abs(complex_from_json(j.at(key)) - stored) > 1e-9) {
      throw ValidationError(std::string("stored context field \"") + key + "\" disagrees with phi");
    }
  };
  check("zeta", ctx.zeta);
  check("eta", ctx.eta);
  check("s", ctx.s);
  check("b", ctx.b);
  check("c", ctx.c);
  return ctx;
}

json to_json(const BlaschkeProduct& B) {
  json zeros = json::array();
  for (const auto& z : B.zeros) zeros.push_back({{"a", complex_to_json(z.a)}, {"multiplicity", z.multiplicity}});
  return {{"zeros", zeros}, {"front", complex_to_json(B.front)}, {"degree", B.degree()}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  BlaschkeProduct B;
  for (const auto& z : field(j, "zeros")) {
    const cplx a = complex_from_json(field(z, "a"));
    if (!(std::abs(a) < 1.0)) throw ValidationError("Blaschke zeros must lie in the open disk");
    const json& m = z.contains("multiplicity") ? z.at("multiplicity") : json(1);
    if (!m.is_number_integer() || m.get<long long>() < 1) throw ValidationError("multiplicity must be a positive integer");
    B.zeros.push_back({a, m.get<std::uint64_t>()});
  }
  B.front = j.contains("front") ? complex_from_json(j.at("front")) : cplx(1.0);
  if (!is_unimodular(B.front)) throw ValidationError("front factor must be unimodular");
  return B;
}

json matrix_header(const TruncatedOperator& T) {
  return {{"n", T.n}, {"map", T.symbol_map}, {"layout", "row-major little-endian float64 (re, im) pairs"}};
}

json to_json(const TruncatedOperator& T) {
  json rows = json::array();
  for (int i = 0; i < T.n; ++i) {
    json row = json::array();
    for (int k = 0; k < T.n; ++k) row.push_back(complex_to_json(T.at(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"n", T.n}, {"map", T.symbol_map}, {"rows", rows}};
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON for ") + what + ": " + e.what());
  }
}

}  // namespace copcalc
