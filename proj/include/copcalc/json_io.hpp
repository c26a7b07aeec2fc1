#pragma once
// JSON conversions for the CLI. Complex numbers are [re, im] pairs; plain
// numbers are accepted on input as real values.

#include <json.hpp>

#include "copcalc/blaschke.hpp"
#include "copcalc/membership.hpp"
#include "copcalc/numerics.hpp"

namespace copcalc {

using json = nlohmann::json;

/// Throws ValidationError on anything other than a number or a pair.
cplx complex_from_json(const json& j);
json complex_to_json(cplx z);

json to_json(const Mobius& f);
Mobius mobius_from_json(const json& j);

json to_json(const DataVector& d);
DataVector data_vector_from_json(const json& j);

json to_json(const BoundaryProfile& p);
BoundaryProfile profile_from_json(const json& j);

json to_json(const PowerSum& p);
PowerSum power_sum_from_json(const json& j);

json to_json(const SymbolMatrix& F);
SymbolMatrix symbol_from_json(const json& j);

json to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const json& j);

json to_json(const Combination& combo);
Combination combination_from_json(const json& j);

json to_json(const MembershipVerdict& v);

json to_json(const PhiContext& ctx);
/// Rebuilt from phi; stored derived fields are checked against it.
PhiContext context_from_json(const json& j);

json to_json(const BlaschkeProduct& B);
BlaschkeProduct blaschke_from_json(const json& j);

/// Header for the binary matrix export: {n, map}.
json matrix_header(const TruncatedOperator& T);
/// Full matrix, rows of [re, im] pairs.
json to_json(const TruncatedOperator& T);

/// Parses text, turning parse errors into ValidationError.
json parse_json(const std::string& text, const char* what);

}  // namespace copcalc
