#include "disep/classify.hpp"

#include <algorithm>
#include <sstream>

#include "disep/errors.hpp"

namespace disep {

namespace {

const std::vector<std::pair<CaseTag, const char*>> kTagNames = {
    {CaseTag::A, "A"},   {CaseTag::B, "B"},   {CaseTag::C1, "C1"}, {CaseTag::C2, "C2"}, {CaseTag::C3, "C3"},
    {CaseTag::C4, "C4"}, {CaseTag::D, "D"},   {CaseTag::E1, "E1"}, {CaseTag::E2, "E2"}, {CaseTag::E3, "E3"},
    {CaseTag::E4, "E4"}, {CaseTag::A1, "A1"}, {CaseTag::A2, "A2"}, {CaseTag::A3, "A3"}, {CaseTag::A4, "A4"},
};

}  // namespace

std::string to_string(CaseTag t) {
  for (const auto& [tag, name] : kTagNames) {
    if (tag == t) return name;
  }
  return "?";
}

CaseTag case_tag_from_string(const std::string& s) {
  for (const auto& [tag, name] : kTagNames) {
    if (s == name) return tag;
  }
  throw ParseError("unknown case tag '" + s + "'");
}

const std::vector<CaseTag>& theorem1_tags() {
  static const std::vector<CaseTag> tags = {CaseTag::A,  CaseTag::B,  CaseTag::C1, CaseTag::C2,
                                            CaseTag::C3, CaseTag::C4, CaseTag::D,  CaseTag::E1,
                                            CaseTag::E2, CaseTag::E3, CaseTag::E4};
  return tags;
}

char family_of(CaseTag t) { return to_string(t)[0]; }

std::vector<std::string> parameter_names(CaseTag t) {
  switch (family_of(t)) {
    case 'A': return {"k"};
    case 'B': return {"e"};
    case 'C':
    case 'E': return {"lambda", "mu", "nu"};
    default: return {};
  }
}

CanonicalCase::CanonicalCase(CaseTag tag, std::map<std::string, FieldElement> params)
    : tag_(tag), params_(std::move(params)) {
  const auto names = parameter_names(tag);
  for (const auto& n : names) {
    if (!params_.count(n)) throw ParameterError("case " + disep::to_string(tag) + " needs parameter '" + n + "'");
  }
  for (const auto& [n, v] : params_) {
    if (std::find(names.begin(), names.end(), n) == names.end())
      throw ParameterError("case " + disep::to_string(tag) + " has no parameter '" + n + "'");
  }
  for (const auto& [n, v] : params_) ext_ = ExtensionDescriptor::join(ext_, v.descriptor());
  for (auto& [n, v] : params_) v = FieldElement::lift(v, ext_);
  switch (family_of(tag)) {
    case 'A': {
      const FieldElement& k = params_.at("k");
      if (k.is_zero()) throw ParameterError("k must be nonzero");
      if ((k * k).is_one()) throw ParameterError("k^2 must differ from 1");
      break;
    }
    case 'B':
      if (params_.at("e").is_zero()) throw ParameterError("e must be nonzero");
      break;
    case 'C':
    case 'E': {
      const FieldElement& l = params_.at("lambda");
      const FieldElement& m = params_.at("mu");
      const FieldElement& n = params_.at("nu");
      if (!(m * m - FieldElement(4, ext_) * l * n).is_one())
        throw ParameterError("parameters must satisfy mu^2 - 4 lambda nu = 1");
      break;
    }
    default: break;
  }
}

const FieldElement& CanonicalCase::param(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) throw ParameterError("missing parameter '" + name + "'");
  return it->second;
}

std::string CanonicalCase::to_string() const {
  std::string out = disep::to_string(tag_);
  if (params_.empty()) return out;
  out += "(";
  bool first = true;
  for (const auto& n : parameter_names(tag_)) {
    if (!first) out += ", ";
    out += n + "=" + params_.at(n).to_string();
    first = false;
  }
  return out + ")";
}

CanonicalCase random_case(CaseTag tag, Rng& rng) {
  std::map<std::string, FieldElement> p;
  switch (family_of(tag)) {
    case 'A': {
      Rational k;
      do {
        k = rng.nonzero_rational();
      } while ((k * k).is_one());
      p.emplace("k", k);
      break;
    }
    case 'B': p.emplace("e", rng.nonzero_rational()); break;
    case 'C':
    case 'E': {
      const Rational lambda = rng.nonzero_rational();
      Rational mu;
      do {
        mu = rng.rational();
      } while ((mu * mu).is_one());
      p.emplace("lambda", lambda);
      p.emplace("mu", mu);
      p.emplace("nu", (mu * mu - 1) / (lambda * 4));
      break;
    }
    default: break;
  }
  return CanonicalCase(tag, std::move(p));
}

Ring trivariate_ring(const ExtensionDescriptor& ext) { return Ring({"x1", "x2", "x3"}, ext); }

MultiPoly univariate_in(const MultiPoly& p_of_x, const Ring& ring, VarId v) {
  MultiPoly out(ring);
  for (const auto& [e, c] : p_of_x.terms()) {
    Exponents d(ring.arity(), 0);
    d[v.index] = e[0];
    out.add_term(d, FieldElement::lift(c, ring.ext()));
  }
  return out;
}

MultiPoly canonical_P(const CanonicalCase& c) {
  const Ring r = univariate_ring(c.ext());
  const MultiPoly x = MultiPoly::variable(r, VarId{0});
  const MultiPoly one = MultiPoly::constant(r, Rational(1));
  auto k = [&](const FieldElement& v) { return MultiPoly::constant(r, v); };
  switch (family_of(c.tag())) {
    case 'A': {
      const FieldElement& kk = c.param("k");
      return (x * x * k(kk * kk) - one) * (x * x - one);
    }
    case 'B': {
      const FieldElement& e = c.param("e");
      return x * x - k(e * e);
    }
    case 'C': return x * x;
    case 'D': return x;
    default: return one;
  }
}

FamilyPolys canonical_family(const CanonicalCase& c) {
  const Ring r = trivariate_ring(c.ext());
  const MultiPoly x1 = MultiPoly::variable(r, VarId{0});
  const MultiPoly x2 = MultiPoly::variable(r, VarId{1});
  const MultiPoly x3 = MultiPoly::variable(r, VarId{2});
  const MultiPoly one = MultiPoly::constant(r, Rational(1));
  auto k = [&](const FieldElement& v) { return MultiPoly::constant(r, v); };
  auto q = [&](long n, long d) { return MultiPoly::constant(r, Rational(n, d)); };
  const MultiPoly x1s = x1 * x1;
  const MultiPoly x2s = x2 * x2;
  const MultiPoly x3s = x3 * x3;
  const MultiPoly x123 = x1 * x2 * x3;

  MultiPoly f(r);
  switch (c.tag()) {
    case CaseTag::A:
    case CaseTag::A1:
    case CaseTag::A2: {
      const MultiPoly k2 = k(c.param("k") * c.param("k"));
      const MultiPoly mid = (one - k2) * x123;
      f = q(1, 2) * (-k2 * x1s - k2 * x2s + one + k2 * x1s * x2s) * x3s +
          (c.tag() == CaseTag::A2 ? -mid : mid) + q(1, 2) * (x1s + x2s - k2 * x1s * x2s - one);
      break;
    }
    case CaseTag::A3:
    case CaseTag::A4: {
      const FieldElement& kv = c.param("k");
      const MultiPoly kk = k(kv);
      const MultiPoly k2 = k(kv * kv);
      const MultiPoly k3 = k(kv * kv * kv);
      const MultiPoly mid = (one - k2) * x123;
      f = q(1, 2) * (kk - kk * x1s - kk * x2s + k3 * x1s * x2s) * x3s + (c.tag() == CaseTag::A4 ? -mid : mid) +
          q(1, 2) * (kk * x1s + kk * x2s - kk * x1s * x2s) - k(kv.inverse()) * q(1, 2);
      break;
    }
    case CaseTag::B: {
      const FieldElement& e = c.param("e");
      f = x123 + q(1, 2) * k(e) * (x1s + x2s + x3s - k(e * e));
      break;
    }
    case CaseTag::C1:
    case CaseTag::C2:
    case CaseTag::C3:
    case CaseTag::C4: {
      const MultiPoly l = k(c.param("lambda"));
      const MultiPoly m = k(c.param("mu"));
      const MultiPoly n = k(c.param("nu"));
      if (c.tag() == CaseTag::C1) f = l * x1s * x2s + m * x123 + n * x3s;
      if (c.tag() == CaseTag::C2) f = l * x1s * x3s + m * x123 + n * x2s;
      if (c.tag() == CaseTag::C3) f = l * x2s * x3s + m * x123 + n * x1s;
      if (c.tag() == CaseTag::C4) f = l * x1s * x2s * x3s + m * x123 + n;
      break;
    }
    case CaseTag::D:
      f = q(-1, 2) * (x1 * x2 + x2 * x3 + x1 * x3) + q(1, 4) * (x1s + x2s + x3s);
      break;
    case CaseTag::E1:
    case CaseTag::E2:
    case CaseTag::E3:
    case CaseTag::E4: {
      MultiPoly t = x1 + x2 + x3;
      if (c.tag() == CaseTag::E2) t = x2 + x3 - x1;
      if (c.tag() == CaseTag::E3) t = x1 + x3 - x2;
      if (c.tag() == CaseTag::E4) t = x1 + x2 - x3;
      f = k(c.param("lambda")) * t * t + k(c.param("mu")) * t + k(c.param("nu"));
      break;
    }
  }
  return FamilyPolys{std::move(f), canonical_P(c)};
}

Report separability_system_check(const CanonicalCase& c) {
  Report rep;
  const auto fam = canonical_family(c);
  std::array<FieldElement, 5> coeffs;
  for (unsigned d = 0; d <= 4; ++d) coeffs[d] = fam.P.coefficient(Exponents{4 - d});
  for (auto& v : coeffs) v = FieldElement::lift(v, c.ext());
  const auto sys = generate_separability_system(coeffs);
  const auto res = system_residuals(sys, coefficient_vector(fam.F));
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (!res[i].is_zero()) bad.push_back(sys.labels[i] + " = " + res[i].to_string());
  }
  rep.add("system residuals", bad.empty() && res.size() == 75,
          std::to_string(res.size()) + " equations, " + std::to_string(bad.size()) + " nonzero", bad);
  return rep;
}

Report verify_theorem1_case(const CanonicalCase& c, DegreePolicy policy) {
  Report rep;
  const auto fam = canonical_family(c);
  const Ring& r = fam.F.ring();
  for (std::size_t i = 0; i < 3; ++i) {
    const VarId x{i};
    const VarId y{(i + 1) % 3};
    const VarId z{(i + 2) % 3};
    const std::string name = "D_" + r.name(x);
    try {
      const MultiPoly d = policy == DegreePolicy::strict ? discriminant_in_variable(fam.F, x)
                                                         : formal_discriminant(fam.F, x);
      const MultiPoly expect = univariate_in(fam.P, r, y) * univariate_in(fam.P, r, z);
      const bool ok = d == expect;
      rep.add(name, ok, ok ? "D = P(" + r.name(y) + ")P(" + r.name(z) + ")" : "mismatch",
              ok ? std::vector<std::string>{} : std::vector<std::string>{d.to_string(), expect.to_string()});
    } catch (const DegreeError& e) {
      rep.add(name, false, e.what());
    }
  }

  try {
    const auto cert = check_strong_separability(fam.F, policy);
    rep.add("kind", cert.kind == SeparabilityKind::strong, "kind " + to_string(cert.kind));
    rep.add("remultiplication", cert.remultiplication_exact());
    bool match = false;
    std::string detail = "no common P";
    if (cert.P) {
      auto s = proportionality(fam.P, *cert.P);
      // P is defined up to sign: P_canon = s * p with s^2 * scale = 1
      match = s && (*s * *s * *cert.P_scale).is_one();
      detail = "extracted P = " + cert.P->to_string();
    }
    rep.add("P up to sign", match, detail);
  } catch (const DegenerateInput& e) {
    rep.add("kind", false, e.what());
  }

  rep.merge(separability_system_check(c));
  return rep;
}

std::string RootStructure::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(partition[i]);
  }
  return out + ")";
}

RootStructure root_structure(const MultiPoly& p, unsigned projective_degree) {
  if (p.is_zero()) throw DomainError("root structure of the zero polynomial");
  if (p.ring().arity() != 1) throw DomainError("root structure needs a univariate polynomial");
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw DomainError("root structure works over Q only");
  }
  const Ring q_ring = univariate_ring({}, p.ring().names()[0]);
  MultiPoly f(q_ring);
  for (const auto& [e, c] : p.terms()) f.add_term(e, c.to_rational());
  const VarId x{0};
  const unsigned deg = f.degree_in(x);
  if (deg > projective_degree)
    throw DomainError("degree " + std::to_string(deg) + " exceeds projective degree " +
                      std::to_string(projective_degree));

  RootStructure rs;
  rs.at_infinity = projective_degree - deg;
  if (deg > 0) {
    // Yun's square-free decomposition
    const MultiPoly df = partial_derivative(f, x);
    const MultiPoly a0 = gcd(f, df);
    MultiPoly b = *divide_exact(f, a0);
    MultiPoly c = *divide_exact(df, a0);
    MultiPoly d = c - partial_derivative(b, x);
    for (unsigned mult = 1; b.degree_in(x) > 0; ++mult) {
      const MultiPoly a = gcd(b, d);
      for (unsigned i = 0; i < a.degree_in(x); ++i) rs.partition.push_back(mult);
      b = *divide_exact(b, a);
      c = *divide_exact(d, a);
      d = c - partial_derivative(b, x);
    }
  }
  if (rs.at_infinity > 0) rs.partition.push_back(rs.at_infinity);
  std::sort(rs.partition.begin(), rs.partition.end());
  return rs;
}

MultiPoly act_on_binary_form(const MultiPoly& p, const MobiusMap& m, unsigned n) {
  return act_on_polynomial(p, {{VarId{0}, m}}, {{VarId{0}, n}});
}

Report proof_gauge_equivalences(const std::vector<Rational>& ks) {
  Report rep;
  for (const auto& k : ks) {
    const std::string tag = "k=" + k.to_string() + " ";
    const std::map<std::string, FieldElement> params{{"k", k}};
    const MultiPoly a1 = canonical_family(CanonicalCase(CaseTag::A1, params)).F;
    const MultiPoly a2 = canonical_family(CanonicalCase(CaseTag::A2, params)).F;
    const MultiPoly a3 = canonical_family(CanonicalCase(CaseTag::A3, params)).F;
    const MultiPoly a4 = canonical_family(CanonicalCase(CaseTag::A4, params)).F;
    const std::vector<VarId> xs{VarId{0}, VarId{1}, VarId{2}};
    auto run = [&](const std::string& name, const MultiPoly& from, const MultiPoly& to, const MobiusMap& m) {
      std::map<VarId, MobiusMap> maps;
      std::map<VarId, unsigned> bounds;
      for (VarId v : xs) {
        maps.emplace(v, m);
        bounds.emplace(v, 2);
      }
      const auto g = check_gauge_equivalence(from, to, maps, bounds);
      rep.add(tag + name, g.equivalent, g.scalar ? "scalar " + g.scalar->to_string() : "not proportional",
              g.equivalent ? std::vector<std::string>{} : std::vector<std::string>{g.image.to_string()});
      return g;
    };
    const MobiusMap neg = MobiusMap::negation();
    const MobiusMap inv = MobiusMap::scaled_inversion(FieldElement(k));
    run("A1 ~ A2 under x -> -x", a1, a2, neg);
    run("A3 ~ A4 under x -> -x", a3, a4, neg);
    run("A3 -> A2 under x -> 1/(kx)", a3, a2, inv);
    run("A3 ~ A1 under x -> -1/(kx)", a3, a1, neg.compose(inv));

    // the image of A3 under 1/(kx) taken literally as A1
    std::map<VarId, MobiusMap> maps;
    std::map<VarId, unsigned> bounds;
    for (VarId v : xs) {
      maps.emplace(v, inv);
      bounds.emplace(v, 2);
    }
    const auto lit = check_gauge_equivalence(a3, a1, maps, bounds);
    PrintedDiff diff;
    diff.name = tag + "image of A3 under x -> 1/(kx)";
    diff.printed = "proportional to A1";
    diff.computed = lit.image.to_string();
    diff.matches = lit.equivalent;
    diff.difference = lit.equivalent ? "none"
                                     : "image is proportional to A2, not A1; A1 is reached by composing with x -> -x";
    rep.printed_diffs.push_back(std::move(diff));
  }
  return rep;
}

bool is_homography_form(const MultiPoly& h, VarId x1, VarId x2) {
  Exponents e11(h.ring().arity(), 0);
  Exponents e22 = e11;
  Exponents e12 = e11;
  e11[x1.index] = 2;
  e22[x2.index] = 2;
  e12[x1.index] = 1;
  e12[x2.index] = 1;
  for (const auto& [e, c] : h.terms()) {
    if (e != e11 && e != e22 && e != e12) return false;
  }
  return h.coefficient(e11) == h.coefficient(e22);
}

}  // namespace disep
