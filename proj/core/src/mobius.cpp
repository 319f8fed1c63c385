#include "disep/mobius.hpp"

#include "disep/errors.hpp"

namespace disep {

MobiusMap::MobiusMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const auto& e = a_.descriptor();
  if (!(b_.descriptor() == e) || !(c_.descriptor() == e) || !(d_.descriptor() == e))
    throw DescriptorMismatch("Mobius entries over different fields");
  if (determinant().is_zero()) throw DomainError("Mobius map with ad - bc = 0");
}

MobiusMap MobiusMap::identity(const ExtensionDescriptor& ext) {
  return MobiusMap(FieldElement::one(ext), FieldElement::zero(ext), FieldElement::zero(ext), FieldElement::one(ext));
}

MobiusMap MobiusMap::scaled_inversion(const FieldElement& k) {
  const auto& e = k.descriptor();
  return MobiusMap(FieldElement::zero(e), FieldElement::one(e), k, FieldElement::zero(e));
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
  return MobiusMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

std::optional<FieldElement> MobiusMap::apply(const FieldElement& x) const {
  const FieldElement den = c_ * x + d_;
  if (den.is_zero()) return std::nullopt;
  return (a_ * x + b_) / den;
}

bool MobiusMap::equivalent(const MobiusMap& o) const {
  // proportional 4-vectors
  const FieldElement* mine[] = {&a_, &b_, &c_, &d_};
  const FieldElement* theirs[] = {&o.a_, &o.b_, &o.c_, &o.d_};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!(*mine[i] * *theirs[j] == *mine[j] * *theirs[i])) return false;
    }
  }
  return true;
}

std::string MobiusMap::to_string() const {
  return "x -> (" + a_.to_string() + "*x + " + b_.to_string() + ")/(" + c_.to_string() + "*x + " + d_.to_string() +
         ")";
}

MultiPoly act_on_polynomial(const MultiPoly& f, const std::map<VarId, MobiusMap>& maps,
                            const std::map<VarId, unsigned>& bounds) {
  const Ring& ring = f.ring();
  struct Slot {
    VarId v;
    unsigned n;
    std::vector<MultiPoly> num_pows;
    std::vector<MultiPoly> den_pows;
  };
  std::vector<Slot> slots;
  for (const auto& [v, m] : maps) {
    auto b = bounds.find(v);
    if (b == bounds.end()) throw DomainError("missing degree bound for " + ring.name(v));
    const unsigned n = b->second;
    if (f.degree_in(v) > n)
      throw DegreeError("degree of " + ring.name(v) + " exceeds bound " + std::to_string(n));
    const MultiPoly x = MultiPoly::variable(ring, v);
    auto lift = [&](const FieldElement& e) { return MultiPoly::constant(ring, FieldElement::lift(e, ring.ext())); };
    const MultiPoly num = x * lift(m.a()) + lift(m.b());
    const MultiPoly den = x * lift(m.c()) + lift(m.d());
    Slot s{v, n, {MultiPoly::constant(ring, Rational(1))}, {MultiPoly::constant(ring, Rational(1))}};
    for (unsigned i = 1; i <= n; ++i) {
      s.num_pows.push_back(s.num_pows.back() * num);
      s.den_pows.push_back(s.den_pows.back() * den);
    }
    slots.push_back(std::move(s));
  }
  MultiPoly out(ring);
  for (const auto& [e, c] : f.terms()) {
    Exponents rest = e;
    for (const auto& s : slots) rest[s.v.index] = 0;
    MultiPoly t = MultiPoly::monomial(ring, rest, c);
    for (const auto& s : slots) {
      const unsigned k = e[s.v.index];
      t *= s.num_pows[k] * s.den_pows[s.n - k];
    }
    out += t;
  }
  return out;
}

MultiPoly act_uniform(const MultiPoly& f, const std::vector<VarId>& vars, const MobiusMap& m, unsigned bound) {
  std::map<VarId, MobiusMap> maps;
  std::map<VarId, unsigned> bounds;
  for (VarId v : vars) {
    maps.emplace(v, m);
    bounds.emplace(v, bound);
  }
  return act_on_polynomial(f, maps, bounds);
}

GaugeReport check_gauge_equivalence(const MultiPoly& f, const MultiPoly& g, const std::map<VarId, MobiusMap>& maps,
                                    const std::map<VarId, unsigned>& bounds) {
  GaugeReport r;
  r.image = act_on_polynomial(f, maps, bounds);
  if (r.image.is_zero() || g.is_zero()) return r;
  r.scalar = proportionality(r.image, g);
  r.equivalent = r.scalar.has_value();
  return r;
}

}  // namespace disep
