#include "disep/json_io.hpp"

#include "disep/errors.hpp"

namespace disep::json {

namespace {

template <typename T>
T get_or_throw(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for '") + key + "': " + e.what());
  }
}

json encode_coefficient(const FieldElement& c) {
  if (c.is_rational()) return encode(c.to_rational());
  return encode(c);
}

}  // namespace

json encode(const Rational& r) { return r.to_string(); }

Rational decode_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational \"p/q\", got " + j.dump());
}

json encode(const ExtensionDescriptor& ext) {
  json out = json::array();
  for (long d : ext.radicands()) out.push_back(d);
  return out;
}

ExtensionDescriptor decode_ext(const json& j) {
  if (j.is_null()) return {};
  if (!j.is_array()) throw ParseError("extension must be an array of radicands");
  std::vector<long> ds;
  for (const auto& d : j) {
    if (!d.is_number_integer()) throw ParseError("radicand must be an integer: " + d.dump());
    ds.push_back(d.get<long>());
  }
  try {
    return ExtensionDescriptor(std::span<const long>(ds));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json encode(const FieldElement& x) {
  json c = json::array();
  for (const auto& v : x.coords()) c.push_back(encode(v));
  return json{{"c", c}, {"d", encode(x.descriptor())}};
}

FieldElement decode_field_element(const json& j) {
  if (j.is_string() || j.is_number_integer()) return FieldElement(decode_rational(j));
  if (!j.is_object() || !j.contains("c")) throw ParseError("expected a field element, got " + j.dump());
  const ExtensionDescriptor own = decode_ext(j.value("d", json::array()));
  std::vector<Rational> coords;
  for (const auto& c : j.at("c")) coords.push_back(decode_rational(c));
  if (coords.size() != own.degree()) throw ParseError("coordinate count does not match the extension degree");
  return FieldElement(std::move(coords), own);
}

FieldElement decode_field_element(const json& j, const ExtensionDescriptor& ext) {
  const FieldElement x = decode_field_element(j);
  if (!ext.contains(x.descriptor())) {
    throw ParseError("field element over " + x.descriptor().to_string() + " outside " + ext.to_string());
  }
  return FieldElement::lift(x, ext);
}

json encode(const MultiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(json{{"coeff", encode_coefficient(it->second)}, {"exps", it->first}});
  }
  return json{{"vars", p.ring().names()}, {"ext", encode(p.ring().ext())}, {"terms", terms}};
}

MultiPoly decode_poly(const json& j) {
  const auto vars = get_or_throw<std::vector<std::string>>(j, "vars");
  const ExtensionDescriptor ext = decode_ext(j.value("ext", json::array()));
  Ring ring = [&] {
    try {
      return Ring(vars, ext);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }();
  MultiPoly p(ring);
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("missing 'terms' array");
  for (const auto& t : j.at("terms")) {
    const auto exps = get_or_throw<Exponents>(t, "exps");
    if (exps.size() != vars.size()) throw ParseError("exponent vector length does not match vars");
    if (!t.contains("coeff")) throw ParseError("term without 'coeff'");
    p.add_term(exps, decode_field_element(t.at("coeff"), ext));
  }
  return p;
}

json encode(const MobiusMap& m) {
  return json{{"a", encode(m.a())}, {"b", encode(m.b())}, {"c", encode(m.c())}, {"d", encode(m.d())}};
}

MobiusMap decode_mobius(const json& j) {
  for (const char* k : {"a", "b", "c", "d"}) {
    if (!j.contains(k)) throw ParseError(std::string("missing key '") + k + "'");
  }
  ExtensionDescriptor ext;
  std::array<FieldElement, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] = decode_field_element(j.at(std::string(1, static_cast<char>('a' + i))));
    ext = ExtensionDescriptor::join(ext, v[i].descriptor());
  }
  for (auto& x : v) x = FieldElement::lift(x, ext);
  return MobiusMap(v[0], v[1], v[2], v[3]);
}

json encode(const CanonicalCase& c) {
  json params = json::object();
  for (const auto& [k, v] : c.params()) params[k] = encode_coefficient(v);
  return json{{"tag", to_string(c.tag())}, {"params", params}};
}

CanonicalCase decode_case(const json& j) {
  const CaseTag tag = case_tag_from_string(get_or_throw<std::string>(j, "tag"));
  std::map<std::string, FieldElement> params;
  if (j.contains("params")) {
    for (const auto& [k, v] : j.at("params").items()) {
      params.emplace(k, decode_field_element(v));
    }
  }
  return CanonicalCase(tag, std::move(params));
}

json encode(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"witnesses", c.witnesses}});
  }
  json diffs = json::array();
  for (const auto& d : r.printed_diffs) {
    diffs.push_back(json{{"name", d.name},
                         {"printed", d.printed},
                         {"computed", d.computed},
                         {"difference", d.difference},
                         {"matches", d.matches}});
  }
  return json{{"checks", checks}, {"printed_diffs", diffs}};
}

Report decode_report(const json& j) {
  Report r;
  for (const auto& c : j.value("checks", json::array())) {
    r.add(Check{get_or_throw<std::string>(c, "name"), get_or_throw<bool>(c, "passed"), c.value("detail", ""),
                c.value("witnesses", std::vector<std::string>{})});
  }
  for (const auto& d : j.value("printed_diffs", json::array())) {
    r.printed_diffs.push_back(PrintedDiff{get_or_throw<std::string>(d, "name"), d.value("printed", ""),
                                          d.value("computed", ""), d.value("difference", ""),
                                          get_or_throw<bool>(d, "matches")});
  }
  return r;
}

json encode(const RootStructure& r) {
  return json{{"code", r.to_string()}, {"partition", r.partition}, {"at_infinity", r.at_infinity}};
}

json encode(const SeparabilityCertificate& c) {
  json discs = json::array();
  json scalars = json::array();
  const Ring& ring = c.splits[0].discriminant.ring();
  for (const auto& s : c.splits) {
    json d{{"eliminated", ring.name(s.eliminated)},
           {"variables", {ring.name(s.first), ring.name(s.second)}},
           {"discriminant", encode(s.discriminant)},
           {"factored", s.factored()}};
    if (s.first_factor) d["first_factor"] = encode(*s.first_factor);
    if (s.second_factor) d["second_factor"] = encode(*s.second_factor);
    discs.push_back(std::move(d));
    scalars.push_back(s.scalar ? encode(*s.scalar) : json(nullptr));
  }
  json out{{"kind", to_string(c.kind)}, {"scalars", scalars}, {"discriminants", discs}};
  out["P"] = c.P ? encode(*c.P) : json(nullptr);
  if (c.P_scale) out["P_scale"] = encode(*c.P_scale);
  if (c.distinguished) out["distinguished"] = ring.name(c.vars[*c.distinguished]);
  return out;
}

json encode(const PencilModel& m) {
  json scalars = json::object();
  for (const auto& [k, v] : m.scalars) scalars[k] = encode_coefficient(v);
  return json{{"provenance", m.provenance},
              {"F", encode(m.F)},
              {"L", encode(m.L)},
              {"K", encode(m.K)},
              {"H", encode(m.H)},
              {"P", encode(m.P)},
              {"J", encode(m.J)},
              {"P_text", m.P.to_string()},
              {"J_text", m.J.to_string()},
              {"scalars", scalars},
              {"printed_diffs", encode(m.report)["printed_diffs"]}};
}

json encode(const KowalevskiModel& m) {
  return json{{"Q", encode(m.Q)},
              {"P", encode(m.P)},
              {"J", encode(m.J)},
              {"P_text", m.P.to_string()},
              {"J_text", m.J.to_string()},
              {"printed_diffs", encode(m.report)["printed_diffs"]}};
}

json encode(const MultiaffineQ& q) {
  return json{{"Q", encode(q.Q)},
              {"Q_text", q.Q.to_string()},
              {"alpha", encode_coefficient(q.alpha)},
              {"beta", encode_coefficient(q.beta)},
              {"nullspace_dimension", q.nullspace_dimension}};
}

json encode(const ConsistencyReport& r) {
  return json{{"trials", r.trials},
              {"agreements", r.agreements},
              {"failures", r.failures},
              {"singular_resamples", r.singular_resamples},
              {"type", to_string(r.type)},
              {"edges_nondegenerate", r.edges_nondegenerate},
              {"seed", r.seed},
              {"convention", r.convention},
              {"witnesses", r.witnesses}};
}

}  // namespace disep::json
