#pragma once

#include <nlohmann/json.hpp>

#include "disep/classify.hpp"
#include "disep/mobius.hpp"
#include "disep/pencil.hpp"
#include "disep/poly.hpp"
#include "disep/quad.hpp"
#include "disep/report.hpp"
#include "disep/separability.hpp"

namespace disep::json {

using nlohmann::json;

/// "p/q", with "/q" omitted when q = 1. Integers are accepted on input.
json encode(const Rational& r);
Rational decode_rational(const json& j);

json encode(const ExtensionDescriptor& ext);
ExtensionDescriptor decode_ext(const json& j);

/// {"c": ["p/q", ...], "d": [d1, d2]}; plain rationals are accepted on input.
json encode(const FieldElement& x);
/// Decodes over the element's own descriptor, or lifts into `ext` when given.
FieldElement decode_field_element(const json& j);
FieldElement decode_field_element(const json& j, const ExtensionDescriptor& ext);

/// {"vars": [...], "ext": [...], "terms": [{"coeff": ..., "exps": [...]}]}, leading term first.
json encode(const MultiPoly& p);
MultiPoly decode_poly(const json& j);

json encode(const MobiusMap& m);
MobiusMap decode_mobius(const json& j);

/// {"tag": "A", "params": {"k": "2"}}
json encode(const CanonicalCase& c);
CanonicalCase decode_case(const json& j);

json encode(const Report& r);
Report decode_report(const json& j);

json encode(const RootStructure& r);
json encode(const SeparabilityCertificate& c);
json encode(const PencilModel& m);
json encode(const KowalevskiModel& m);
json encode(const MultiaffineQ& q);
json encode(const ConsistencyReport& r);

}  // namespace disep::json
