#include "disep/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "disep/errors.hpp"

namespace disep {

Ring::Ring(std::vector<std::string> names, ExtensionDescriptor ext)
    : data_(std::make_shared<const Data>(Data{std::move(names), ext})) {
  auto sorted = data_->names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("duplicate variable name in ring");
}

std::optional<VarId> Ring::find(std::string_view name) const {
  const auto& n = data_->names;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == name) return VarId{i};
  }
  return std::nullopt;
}

VarId Ring::var(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw DomainError("unknown variable '" + std::string(name) + "'");
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0U);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0U);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

FieldElement MultiPoly::coerce(const FieldElement& c) const {
  if (c.descriptor() == ring_.ext()) return c;
  if (c.descriptor().is_rational()) return FieldElement::lift(c, ring_.ext());
  throw DescriptorMismatch("coefficient over " + c.descriptor().to_string() + " in ring over " +
                           ring_.ext().to_string());
}

MultiPoly MultiPoly::constant(const Ring& ring, const FieldElement& c) {
  MultiPoly p(ring);
  p.add_term(Exponents(ring.arity(), 0), c);
  return p;
}

MultiPoly MultiPoly::constant(const Ring& ring, const Rational& c) { return constant(ring, FieldElement(c)); }

MultiPoly MultiPoly::variable(const Ring& ring, VarId v) {
  Exponents e(ring.arity(), 0);
  e.at(v.index) = 1;
  return monomial(ring, std::move(e), FieldElement(1));
}

MultiPoly MultiPoly::monomial(const Ring& ring, Exponents exps, const FieldElement& c) {
  if (exps.size() != ring.arity()) throw DomainError("exponent vector arity mismatch");
  MultiPoly p(ring);
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                              terms_.begin()->first.end(),
                                                              [](unsigned e) { return e == 0; }));
}

FieldElement MultiPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial " + to_string() + " is not constant");
  if (terms_.empty()) return FieldElement::zero(ring_.ext());
  return terms_.begin()->second;
}

unsigned MultiPoly::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v.index]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0U);
}

std::vector<VarId> MultiPoly::support() const {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < ring_.arity(); ++i) {
    if (degree_in(VarId{i}) > 0) out.push_back(VarId{i});
  }
  return out;
}

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const FieldElement& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

FieldElement MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? FieldElement::zero(ring_.ext()) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const FieldElement& c) {
  if (exps.size() != ring_.arity()) throw DomainError("exponent vector arity mismatch");
  FieldElement v = coerce(c);
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("polynomials live in different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b);
  MultiPoly out(a.ring_);
  const std::size_t n = a.ring_.arity();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
  const FieldElement k = coerce(c);
  if (k.is_zero()) return MultiPoly(ring_);
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v *= k;
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const { return scaled(FieldElement(c)); }

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b);
  return a.terms_ == b.terms_;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
  if (point.size() != ring_.arity()) throw DomainError("evaluation point arity mismatch");
  FieldElement sum = FieldElement::zero(ring_.ext());
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t *= coerce(point[i]).pow(e[i]);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.names()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      const Rational& r = c.to_rational();
      negative = r.sign() < 0;
      coeff = r.abs().to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly partial_derivative(const MultiPoly& p, VarId v) {
  MultiPoly out(p.ring());
  for (const auto& [e, c] : p.terms()) {
    if (e[v.index] == 0) continue;
    Exponents d = e;
    d[v.index] -= 1;
    out.add_term(d, c * FieldElement(Rational(static_cast<long>(e[v.index])), p.ring().ext()));
  }
  return out;
}

std::vector<MultiPoly> coeffs_in_variable(const MultiPoly& p, VarId v) {
  std::vector<MultiPoly> out(p.degree_in(v) + 1, MultiPoly(p.ring()));
  for (const auto& [e, c] : p.terms()) {
    Exponents d = e;
    d[v.index] = 0;
    out[e[v.index]].add_term(d, c);
  }
  return out;
}

MultiPoly from_coeffs(const std::vector<MultiPoly>& coeffs, VarId v) {
  if (coeffs.empty()) throw DomainError("empty coefficient list");
  MultiPoly out(coeffs.front().ring());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& [e, c] : coeffs[i].terms()) {
      if (e[v.index] != 0) throw DomainError("coefficient involves the main variable");
      Exponents d = e;
      d[v.index] = static_cast<unsigned>(i);
      out.add_term(d, c);
    }
  }
  return out;
}

MultiPoly formal_discriminant(const MultiPoly& p, VarId v) {
  const unsigned d = p.degree_in(v);
  if (d > 2) throw DegreeError("degree " + std::to_string(d) + " in " + p.ring().name(v) + " exceeds 2");
  auto c = coeffs_in_variable(p, v);
  c.resize(3, MultiPoly(p.ring()));
  return c[1] * c[1] - (c[2] * c[0]).scaled(Rational(4));
}

MultiPoly discriminant_in_variable(const MultiPoly& p, VarId v) {
  const unsigned d = p.degree_in(v);
  if (d != 2)
    throw DegreeError("discriminant needs degree 2 in " + p.ring().name(v) + ", found " + std::to_string(d));
  return formal_discriminant(p, v);
}

namespace {

class PowerCache {
 public:
  explicit PowerCache(MultiPoly base) : powers_{MultiPoly::constant(base.ring(), Rational(1)), base} {}
  const MultiPoly& get(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[e];
  }

 private:
  std::vector<MultiPoly> powers_;
};

}  // namespace

MultiPoly substitute_into(const MultiPoly& p, const Ring& target, const std::map<VarId, MultiPoly>& bindings) {
  const std::size_t n = p.ring().arity();
  std::vector<std::optional<PowerCache>> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto b = bindings.find(VarId{i});
    if (b != bindings.end()) {
      if (!(b->second.ring() == target)) throw RingMismatch("binding image is not in the target ring");
      images[i].emplace(b->second);
    } else if (p.degree_in(VarId{i}) > 0) {
      images[i].emplace(MultiPoly::variable(target, target.var(p.ring().names()[i])));
    }
  }
  MultiPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, FieldElement::lift(c, target.ext()));
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] > 0) t *= images[i]->get(e[i]);
    }
    out += t;
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& bindings) {
  return substitute_into(p, p.ring(), bindings);
}

MultiPoly change_ring(const MultiPoly& p, const Ring& target) {
  if (p.ring() == target) return p;
  std::vector<std::size_t> map(p.ring().arity(), SIZE_MAX);
  for (std::size_t i = 0; i < p.ring().arity(); ++i) {
    if (auto v = target.find(p.ring().names()[i])) map[i] = v->index;
  }
  MultiPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents d(target.arity(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] == SIZE_MAX)
        throw RingMismatch("variable '" + p.ring().names()[i] + "' is missing from the target ring");
      d[map[i]] = e[i];
    }
    out.add_term(d, FieldElement::lift(c, target.ext()));
  }
  return out;
}

MultiPoly permute_variables(const MultiPoly& p, const std::vector<std::size_t>& perm) {
  if (perm.size() != p.ring().arity()) throw DomainError("permutation arity mismatch");
  MultiPoly out(p.ring());
  for (const auto& [e, c] : p.terms()) {
    Exponents d(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) d[perm[i]] = e[i];
    out.add_term(d, c);
  }
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!(p.ring() == d.ring())) throw RingMismatch("polynomials live in different rings");
  const Exponents& ld = d.leading_exponents();
  const FieldElement inv = d.leading_coefficient().inverse();
  MultiPoly rem = p;
  MultiPoly quot(p.ring());
  while (!rem.is_zero()) {
    const Exponents& lr = rem.leading_exponents();
    Exponents q(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < ld[i]) return std::nullopt;
      q[i] = lr[i] - ld[i];
    }
    const MultiPoly t = MultiPoly::monomial(p.ring(), q, rem.leading_coefficient() * inv);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

std::optional<FieldElement> proportionality(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return FieldElement::one(a.ring().ext());
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (a.term_count() != b.term_count()) return std::nullopt;
  const FieldElement s = a.leading_coefficient() / b.leading_coefficient();
  if (a == b.scaled(s)) return s;
  return std::nullopt;
}

}  // namespace disep
