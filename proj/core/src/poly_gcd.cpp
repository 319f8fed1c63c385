#include <algorithm>

#include "disep/errors.hpp"
#include "disep/poly.hpp"

namespace disep {

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, VarId v) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  const unsigned db = b.degree_in(v);
  const auto bc = coeffs_in_variable(b, v);
  const MultiPoly& lb = bc.back();
  MultiPoly r = a;
  Exponents shift(a.ring().arity(), 0);
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const unsigned dr = r.degree_in(v);
    const MultiPoly lr = coeffs_in_variable(r, v).back();
    shift[v.index] = dr - db;
    const MultiPoly vpow = MultiPoly::monomial(a.ring(), shift, FieldElement(1));
    r = lb * r - lr * vpow * b;
  }
  return r;
}

namespace {

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_rec(const MultiPoly& p, VarId v) {
  MultiPoly g(p.ring());
  for (const auto& c : coeffs_in_variable(p, v)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

MultiPoly primitive_part(const MultiPoly& p, VarId v) {
  if (p.is_zero()) return p;
  return *divide_exact(p, content_rec(p, v));
}

std::optional<VarId> pick_variable(const MultiPoly& a, const MultiPoly& b) {
  std::optional<VarId> best;
  for (std::size_t i = 0; i < a.ring().arity(); ++i) {
    const VarId v{i};
    if (a.degree_in(v) == 0 && b.degree_in(v) == 0) continue;
    if (!best) best = v;
    // prefer a variable present in both
    if (a.degree_in(v) > 0 && b.degree_in(v) > 0) return v;
  }
  return best;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.ring(), Rational(1));
  const VarId v = *pick_variable(a, b);
  if (a.degree_in(v) == 0) return gcd_rec(a, content_rec(b, v));
  if (b.degree_in(v) == 0) return gcd_rec(content_rec(a, v), b);

  const MultiPoly ca = content_rec(a, v);
  const MultiPoly cb = content_rec(b, v);
  const MultiPoly g = gcd_rec(ca, cb);
  MultiPoly p = *divide_exact(a, ca);
  MultiPoly q = *divide_exact(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (true) {
    MultiPoly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return g.monic();
    p = std::move(q);
    q = primitive_part(r, v);
  }
  return (g * primitive_part(q, v)).monic();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("polynomials live in different rings");
  return gcd_rec(a, b);
}

MultiPoly content_in(const MultiPoly& p, VarId v) { return content_rec(p, v); }

}  // namespace disep
